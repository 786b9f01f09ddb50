"""Weight vectors, the weighted scalar action and weighted-unit normalization."""

from collections.abc import Sequence
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.optimize import brentq

from ..config import DEFAULT_SETTINGS
from ..errors import DimensionMismatchError, DomainError


class WeightVector(BaseModel):
    """Per-coordinate non-negative integer weights of a standard weighting."""

    model_config = ConfigDict(frozen=True)

    weights: tuple[int, ...] = Field(..., description="Weight w_i of coordinate i")

    @field_validator("weights")
    @classmethod
    def validate_weights(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if len(v) == 0:
            raise ValueError("A weight vector needs at least one coordinate.")
        if any(w < 0 for w in v):
            raise ValueError(f"Weights must be non-negative: {v}.")
        return v

    @classmethod
    def of(cls, *weights: int) -> "WeightVector":
        return cls(weights=tuple(weights))

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def order(self) -> int:
        return max(self.weights)

    @property
    def support(self) -> tuple[int, ...]:
        """Indices of normal coordinates (positive weight)."""
        return tuple(i for i, w in enumerate(self.weights) if w > 0)

    def is_trivial(self) -> bool:
        """All normal weights equal 1."""
        return all(w in (0, 1) for w in self.weights)

    def __getitem__(self, i: int) -> int:
        return self.weights[i]

    def __len__(self) -> int:
        return len(self.weights)


def weighted_action(lam: Any, v: Sequence[Any], w: WeightVector) -> tuple[Any, ...]:
    """lam ._w v, componentwise lam**w_i * v_i; works for Fraction, sympy and float entries."""
    if len(v) != w.dim:
        raise DimensionMismatchError(f"Vector of length {len(v)} against weights of length {w.dim}.")
    return tuple(x if wi == 0 else lam**wi * x for x, wi in zip(v, w.weights))


def weighted_norm(v: Sequence[float], w: WeightVector) -> float:
    """Euclidean norm of the normal entries."""
    arr = np.asarray([float(v[i]) for i in w.support], dtype=float)
    return float(np.linalg.norm(arr))


def weighted_unit_scale(v: Sequence[float], w: WeightVector, xtol: float | None = None) -> float:
    """The unique mu > 0 with |mu^{-1} ._w v| = 1 over the normal entries."""
    support = w.support
    values = np.asarray([float(v[i]) for i in support], dtype=float)
    exps = np.asarray([w[i] for i in support], dtype=float)
    if values.size == 0 or not np.any(values):
        raise DomainError("Cannot normalize a vector with vanishing normal part.", "nonzero_normal_part")
    if np.all(exps == exps[0]):
        return float(np.linalg.norm(values) ** (1.0 / exps[0]))

    squares = values**2

    def excess(mu: float) -> float:
        return float(np.sum(squares * mu ** (-2.0 * exps)) - 1.0)

    lo, hi = 1.0, 1.0
    while excess(lo) <= 0:
        lo /= 2.0
    while excess(hi) >= 0:
        hi *= 2.0
    tol = xtol if xtol is not None else DEFAULT_SETTINGS.normalization_tolerance
    return float(brentq(excess, lo, hi, xtol=tol * min(1.0, lo), rtol=4 * np.finfo(float).eps))


def normalize_weighted(v: Sequence[float], w: WeightVector) -> tuple[tuple[float, ...], float]:
    """Split v into (unit representative, scale) with v = scale ._w unit."""
    mu = weighted_unit_scale(v, w)
    unit = tuple(float(x) if wi == 0 else float(x) / mu**wi for x, wi in zip(v, w.weights))
    return unit, mu


def sign_normalized(v: Sequence[float], w: WeightVector) -> tuple[float, ...]:
    """The lexicographically larger of v and (-1) ._w v."""
    for x, wi in zip(v, w.weights):
        if wi % 2 == 1 and x != 0:
            return tuple(v) if x > 0 else tuple(float(y) * (-1) ** wj for y, wj in zip(v, w.weights))
    return tuple(v)


def is_isotropic_under_sign(v: Sequence[float], w: WeightVector) -> bool:
    """True when (-1) ._w v equals v, i.e. all odd-weight entries vanish."""
    return all(float(x) == 0.0 for x, wi in zip(v, w.weights) if wi % 2 == 1)
