"""Weighted normal vectors and induced projections between standard weightings."""

from collections.abc import Sequence
from typing import Any

import sympy
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..common.numbers import Exact, is_zero, to_sympy
from ..errors import DimensionMismatchError, NotAMorphismError, OrderExceededError
from .curves import TruncatedCurve
from .weights import WeightVector, weighted_action


class NormalVector(BaseModel):
    """Point of the weighted normal bundle; entry i stands for x_i^{(w_i)}."""

    model_config = ConfigDict(frozen=True)

    weight: WeightVector
    coords: tuple[Exact, ...] = Field(..., description="Base coordinates where w_i = 0, normal data otherwise")

    @model_validator(mode="after")
    def validate_dim(self) -> "NormalVector":
        if len(self.coords) != self.weight.dim:
            raise ValueError(f"Expected {self.weight.dim} coordinates, got {len(self.coords)}.")
        return self

    @classmethod
    def of(cls, weight: WeightVector, coords: Sequence[Any]) -> "NormalVector":
        return cls(weight=weight, coords=tuple(to_sympy(c) for c in coords))

    def normal_part(self) -> tuple[sympy.Expr, ...]:
        return tuple(self.coords[i] for i in self.weight.support)

    def base_point(self) -> tuple[sympy.Expr, ...]:
        """The foot point: normal entries set to zero."""
        return tuple(c if w == 0 else sympy.Integer(0) for c, w in zip(self.coords, self.weight.weights))

    def is_zero_section(self) -> bool:
        return all(is_zero(c) for c in self.normal_part())

    def act(self, lam: Any) -> "NormalVector":
        return NormalVector(weight=self.weight, coords=weighted_action(to_sympy(lam), self.coords, self.weight))


def normal_induced(v: NormalVector, w_target: WeightVector) -> NormalVector:
    """Induced map for the identity from v.weight to a dominated weighting."""
    w_source = v.weight
    if w_source.dim != w_target.dim:
        raise DimensionMismatchError(f"Weightings of length {w_source.dim} and {w_target.dim}.")
    if any(a < b for a, b in zip(w_source.weights, w_target.weights)):
        raise NotAMorphismError(
            f"Identity is not a morphism from {w_source.weights} to {w_target.weights}.", "componentwise_dominance"
        )
    coords = tuple(
        c if a == b else sympy.Integer(0) for c, a, b in zip(v.coords, w_source.weights, w_target.weights)
    )
    return NormalVector(weight=w_target, coords=coords)


def normal_from_curve(q: TruncatedCurve, w: WeightVector) -> NormalVector:
    """Lift each coordinate to its degree: entry i is x_i^{(w_i)}."""
    if q.dim != w.dim:
        raise DimensionMismatchError(f"Curve of dimension {q.dim} against weights of length {w.dim}.")
    if q.order < w.order:
        raise OrderExceededError(f"Normal coordinates need order {w.order}, curve has {q.order}.")
    return NormalVector.of(w, [q.coeffs[i][wi] for i, wi in enumerate(w.weights)])
