"""Projective (Z/2-quotient) blow-up: canonical classes and orbifold points."""

from collections.abc import Sequence
from typing import Any

from pydantic import BaseModel, ConfigDict, model_validator

from ..common.numbers import Float17
from ..jets.weights import WeightVector, normalize_weighted, sign_normalized


class ProjectiveClass(BaseModel):
    """Canonical representative: unit norm over normal entries, sign fixed lexicographically."""

    model_config = ConfigDict(frozen=True)

    weight: WeightVector
    coords: tuple[Float17, ...]

    @model_validator(mode="after")
    def validate_dim(self) -> "ProjectiveClass":
        if len(self.coords) != self.weight.dim:
            raise ValueError(f"Expected {self.weight.dim} coordinates, got {len(self.coords)}.")
        return self


def canonical_unit_normal(w: WeightVector, n: Sequence[Any]) -> tuple[float, ...]:
    """Positive-ray representative with unit Euclidean norm over normal entries."""
    unit, _ = normalize_weighted([float(x) for x in n], w)
    return unit


def projective_canonicalize(w: WeightVector, n: Sequence[Any]) -> ProjectiveClass:
    return ProjectiveClass(weight=w, coords=sign_normalized(canonical_unit_normal(w, n), w))


def projective_is_singular(w: WeightVector, cls: ProjectiveClass | Sequence[Any]) -> bool:
    """Fixed by the sign action with non-trivial isotropy: odd entries vanish, an even normal index exists."""
    coords = cls.coords if isinstance(cls, ProjectiveClass) else tuple(float(x) for x in cls)
    odd_vanish = all(coords[i] == 0.0 for i in w.support if w[i] % 2 == 1)
    has_even = any(w[i] % 2 == 0 for i in w.support)
    return odd_vanish and has_even
