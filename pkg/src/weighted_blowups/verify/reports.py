"""Report documents produced by the verification harness."""

from typing import Any

from pydantic import BaseModel, Field

from ..common.numbers import Float17
from ..enums import ReportStatus, SuiteKind
from ..versioning import VersionedSchema


class SmoothnessReport(BaseModel):
    """Richardson consistency of one-sided difference quotients."""

    name: str = ""
    point: tuple[str, ...] = ()
    direction: tuple[str, ...] = ()
    ratios: dict[int, list[Float17 | None]] = Field(default_factory=dict, description="order -> ratio per component")
    failures: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class CoherenceReport(BaseModel):
    coherent: bool
    witnesses: list[str] = Field(default_factory=list)
    pairs_checked: int = 0


class StratumViolation(BaseModel):
    sample: int
    sequence_controls: list[str]
    limit_controls: list[str]


class StratumReport(BaseModel):
    samples: int = 0
    violations: list[StratumViolation] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


class ConjectureTrial(BaseModel):
    control_set: list[str]
    is_nest: bool


class ConjectureReport(BaseModel):
    """Outcome of the control-set search over curves; recorded, never asserted."""

    building_set: str
    trials: list[ConjectureTrial] = Field(default_factory=list)

    @property
    def non_nests(self) -> int:
        return sum(not t.is_nest for t in self.trials)


class CheckResult(BaseModel):
    name: str
    status: ReportStatus
    detail: str = ""
    data: dict[str, Any] = Field(default_factory=dict)


class VerificationReport(VersionedSchema):
    """Results of one verification suite run."""

    kind: SuiteKind
    seed: int
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != ReportStatus.FAIL for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == ReportStatus.FAIL]
