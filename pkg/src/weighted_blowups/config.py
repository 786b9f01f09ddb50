"""Numerical tolerances, enumeration caps and defaults."""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .common.numbers import Rational


class Settings(BaseModel):
    """Tunable constants; override with ``DEFAULT_SETTINGS.model_copy(update=...)``."""

    model_config = ConfigDict(frozen=True)

    richardson_tolerance: float = Field(0.05, gt=0, description="Allowed relative deviation of a Richardson ratio")
    float_tolerance: float = Field(1e-10, gt=0, description="Equality tolerance for floating comparisons")
    fm_tolerance: float = Field(1e-12, gt=0, description="Round-trip tolerance of FM charts")
    normalization_tolerance: float = Field(1e-14, gt=0, description="Root tolerance of weighted-unit normalization")
    subset_cap: int = Field(12, ge=1, description="Max |G_{>=S}| enumerated by the max rule")
    nest_cap: int = Field(20, ge=1, description="Max building-set size for nest enumeration")
    arrangement_cap: int = Field(64, ge=1, description="Max arrangement size for flag search")
    degree_bound: int = Field(8, ge=1, description="Total degree bound for monomial checks")
    seed: int = 0
    holonomic_constant: Rational = Field(Fraction(1, 2), description="c in the derived relation dy = c dy'(dx)")
    fd_base_step: Rational = Field(Fraction(1, 256), description="Largest finite-difference step")

    @field_validator("fd_base_step")
    @classmethod
    def validate_step(cls, v: Fraction) -> Fraction:
        if v <= 0:
            raise ValueError(f"Finite-difference step must be positive, got {v}.")
        return v


DEFAULT_SETTINGS = Settings()
