"""Charts of the blow-up along a single standard weighting."""

from collections.abc import Sequence
from typing import Any, Literal

import sympy
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..common.numbers import is_zero, sign, to_sympy
from ..errors import ChartDomainError, DimensionMismatchError, NotAMorphismError
from ..jets.normal import NormalVector, normal_induced
from ..jets.weights import WeightVector, weighted_action
from .points import Bulk, Divisor


class SingleChart(BaseModel):
    """Chart of Bl_W(R^m) controlled by coordinate h with sign s."""

    model_config = ConfigDict(frozen=True)

    w: WeightVector
    h: int = Field(..., ge=0, description="Control coordinate, 0-based")
    s: Literal[1, -1] = 1

    @model_validator(mode="after")
    def validate_control(self) -> "SingleChart":
        if self.h >= self.w.dim:
            raise ValueError(f"Control coordinate {self.h} out of range for dimension {self.w.dim}.")
        if self.w[self.h] < 1:
            raise ValueError(f"Control coordinate {self.h} has weight 0.")
        return self


def _vector(y: Sequence[Any], dim: int) -> tuple[sympy.Expr, ...]:
    if len(y) != dim:
        raise DimensionMismatchError(f"Vector of length {len(y)} in dimension {dim}.")
    return tuple(to_sympy(v) for v in y)


def _rescale(c: SingleChart, v: tuple[sympy.Expr, ...], control: sympy.Expr) -> list[sympy.Expr]:
    w, h = c.w, c.h
    return [x if w[i] == 0 or i == h else x * control ** sympy.Rational(-w[i], w[h]) for i, x in enumerate(v)]


def single_chart_fwd(c: SingleChart, p: Bulk | Divisor) -> tuple[sympy.Expr, ...]:
    """Coordinates of a bulk point or divisor class in the chart (h, s)."""
    if isinstance(p, Bulk):
        x = _vector(p.coords, c.w.dim)
        control = c.s * x[c.h]
        if sign(control) <= 0:
            raise ChartDomainError(f"Bulk point has s*x_h = {control} <= 0.", "chart_domain")
        y = _rescale(c, x, control)
        y[c.h] = control ** sympy.Rational(1, c.w[c.h])
        return tuple(y)
    if p.normal.weight != c.w:
        raise DimensionMismatchError("Divisor carries a different weighting than the chart.")
    n = _vector(p.normal.coords, c.w.dim)
    control = c.s * n[c.h]
    if sign(control) <= 0:
        raise ChartDomainError(f"Divisor normal has s*n_h = {control} <= 0.", "chart_domain")
    y = _rescale(c, n, control)
    y[c.h] = sympy.Integer(0)
    return tuple(y)


def _with_sign(c: SingleChart, y: Sequence[Any]) -> tuple[sympy.Expr, tuple[sympy.Expr, ...]]:
    v = list(_vector(y, c.w.dim))
    if sign(v[c.h]) < 0:
        raise ChartDomainError(f"Control coordinate y_h = {v[c.h]} is negative.", "corner_model")
    control = v[c.h]
    v[c.h] = sympy.Integer(c.s)
    return control, tuple(v)


def single_chart_inv(c: SingleChart, y: Sequence[Any]) -> Bulk | Divisor:
    control, v = _with_sign(c, y)
    if is_zero(control):
        return Divisor(normal=NormalVector(weight=c.w, coords=v))
    return Bulk(coords=weighted_action(control, v, c.w))


def single_blow_down(c: SingleChart, y: Sequence[Any]) -> tuple[sympy.Expr, ...]:
    control, v = _with_sign(c, y)
    return weighted_action(control, v, c.w)


def single_transition(
    w: WeightVector, source: tuple[int, int], target: tuple[int, int], y: Sequence[Any]
) -> tuple[sympy.Expr, ...]:
    """Closed-form transition from chart (h, s) to chart (h~, s~)."""
    (h, s), (ht, st) = source, target
    v = list(_vector(y, w.dim))
    SingleChart(w=w, h=h, s=s)
    SingleChart(w=w, h=ht, s=st)
    if sign(v[h]) < 0:
        raise ChartDomainError("Source point is outside the corner model.", "corner_model")
    if h == ht:
        if s != st:
            raise ChartDomainError("Charts with the same control and opposite signs do not overlap.", "overlap")
        return tuple(v)
    control = st * v[ht]
    if sign(control) <= 0:
        raise ChartDomainError(f"Target control s~*y_h~ = {control} <= 0.", "overlap")
    out = []
    for i, x in enumerate(v):
        if i == ht:
            out.append(v[h] * control ** sympy.Rational(1, w[ht]))
        elif i == h:
            out.append(s * control ** sympy.Rational(-w[h], w[ht]))
        elif w[i] == 0:
            out.append(x)
        else:
            out.append(x * control ** sympy.Rational(-w[i], w[ht]))
    return tuple(out)


def induced_blowdown_nested(w_small: WeightVector, w_big: WeightVector, p: Bulk | Divisor) -> Bulk | Divisor:
    """Induced map Bl_{W_small} -> Bl_{W_big} for a dominated weighting, where defined."""
    if w_small.dim != w_big.dim:
        raise DimensionMismatchError("Weightings of different length.")
    if any(a < b for a, b in zip(w_small.weights, w_big.weights)):
        raise NotAMorphismError("Source weighting does not dominate the target.", "componentwise_dominance")
    if isinstance(p, Bulk):
        if all(is_zero(p.coords[i]) for i in w_big.support):
            raise ChartDomainError("Bulk point lies on the target support.", "induced_domain")
        return p
    induced = normal_induced(p.normal, w_big)
    if induced.is_zero_section():
        raise ChartDomainError("Induced normal vanishes.", "induced_domain")
    return Divisor(normal=induced)
