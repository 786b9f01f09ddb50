"""Input and output documents of the command-line interface."""

from typing import Any

from pydantic import BaseModel, Field, model_validator

from .common.numbers import Exact, Rational
from .jets.curves import PolynomialCurve
from .jets.polynomials import Polynomial
from .versioning import VersionedSchema


class PointDocument(VersionedSchema):
    """{"coords": [exact, ...]} for corner-model and base points."""

    coords: list[Exact] = Field(..., min_length=1)


class ConfigurationDocument(VersionedSchema):
    """{"points": [[rational, ...], ...]}: s points of R^m."""

    points: list[list[Rational]] = Field(..., min_length=1)

    @model_validator(mode="after")
    def validate_points(self) -> "ConfigurationDocument":
        if len({len(p) for p in self.points}) != 1:
            raise ValueError("All points need the same number of coordinates.")
        return self


class CurvesDocument(VersionedSchema):
    """{"curves": [{"terms": [[[k, "c"], ...], ...]}, ...]}, one curve per point."""

    curves: list[PolynomialCurve] = Field(..., min_length=1)


class JetLimitDocument(VersionedSchema):
    function: Polynomial
    curves: list[PolynomialCurve] = Field(..., min_length=2, max_length=2)


class ForestDocument(VersionedSchema):
    """{"s": s, "parent": {"child": parent}}."""

    s: int = Field(..., ge=1)
    parent: dict[int, int] = Field(default_factory=dict)


class CommandOutput(VersionedSchema):
    """Envelope of every command result."""

    command: str
    input_hashes: dict[str, str] = Field(default_factory=dict)
    seed: int | None = None
    result: Any = None


class ErrorOutput(BaseModel):
    error: str
    message: str
    precondition: str | None = None
    details: list[dict[str, Any]] = Field(default_factory=list)
