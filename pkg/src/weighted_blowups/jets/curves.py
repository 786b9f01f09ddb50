"""Truncated curves (points of higher tangent bundles) and polynomial curves."""

import logging
from fractions import Fraction
from typing import Any

import sympy
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..common.numbers import Rational
from ..errors import DimensionMismatchError, OrderExceededError
from .weights import WeightVector

logger: logging.Logger = logging.getLogger(__name__)


class TruncatedCurve(BaseModel):
    """Coefficients x_i^{(j)}, 0 <= j <= order, of a curve modulo t^{order+1}."""

    model_config = ConfigDict(frozen=True)

    order: int = Field(..., ge=0, description="Truncation order r")
    coeffs: tuple[tuple[Rational, ...], ...] = Field(..., description="Row i holds x_i^{(0)}..x_i^{(r)}")
    truncated: bool = Field(False, description="Set when produced by a mixed-order operation")

    @model_validator(mode="after")
    def validate_shape(self) -> "TruncatedCurve":
        if len(self.coeffs) == 0:
            raise ValueError("A curve needs at least one coordinate.")
        for row in self.coeffs:
            if len(row) != self.order + 1:
                raise ValueError(f"Each row needs {self.order + 1} coefficients, got {len(row)}.")
        return self

    @classmethod
    def from_rows(cls, rows: list[list[Any]]) -> "TruncatedCurve":
        return cls(order=len(rows[0]) - 1, coeffs=tuple(tuple(r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def coefficient(self, i: int, j: int) -> Fraction:
        if j > self.order:
            raise OrderExceededError(f"Coefficient of order {j} requested from a curve of order {self.order}.")
        return self.coeffs[i][j]

    def restrict(self, order: int) -> "TruncatedCurve":
        if order > self.order:
            raise OrderExceededError(f"Cannot raise order {self.order} to {order}.")
        return TruncatedCurve(order=order, coeffs=tuple(row[: order + 1] for row in self.coeffs))

    def dilate(self, lam: Fraction) -> "TruncatedCurve":
        """Reparametrize t -> lam*t: x_i^{(j)} -> lam^j x_i^{(j)}."""
        lam = Fraction(lam)
        return self.model_copy(
            update={"coeffs": tuple(tuple(c * lam**j for j, c in enumerate(row)) for row in self.coeffs)}
        )

    def add(self, other: "TruncatedCurve") -> "TruncatedCurve":
        """Coefficientwise sum; mixed orders truncate to the smaller one and set the flag."""
        if self.dim != other.dim:
            raise DimensionMismatchError(f"Curves in dimensions {self.dim} and {other.dim}.")
        order = min(self.order, other.order)
        mixed = self.order != other.order
        if mixed:
            logger.warning("Truncating mixed-order sum to order %d", order)
        coeffs = tuple(
            tuple(a + b for a, b in zip(ra[: order + 1], rb[: order + 1])) for ra, rb in zip(self.coeffs, other.coeffs)
        )
        return TruncatedCurve(order=order, coeffs=coeffs, truncated=mixed or self.truncated or other.truncated)


class PolynomialCurve(BaseModel):
    """A polynomial curve t -> R^m given per coordinate as (exponent, coefficient) terms."""

    model_config = ConfigDict(frozen=True)

    terms: tuple[tuple[tuple[int, Rational], ...], ...] = Field(..., description="Per coordinate: (k, c) for c*t^k")

    @model_validator(mode="after")
    def validate_terms(self) -> "PolynomialCurve":
        if len(self.terms) == 0:
            raise ValueError("A curve needs at least one coordinate.")
        for row in self.terms:
            if any(k < 0 for k, _ in row):
                raise ValueError("Exponents must be non-negative.")
        return self

    @classmethod
    def constant(cls, point: list[Any]) -> "PolynomialCurve":
        return cls(terms=tuple(((0, c),) for c in point))

    @property
    def dim(self) -> int:
        return len(self.terms)

    def coefficient(self, i: int, k: int) -> Fraction:
        return sum((c for e, c in self.terms[i] if e == k), Fraction(0))

    def coefficients(self, i: int) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for e, c in self.terms[i]:
            out[e] = out.get(e, Fraction(0)) + c
        return {e: c for e, c in sorted(out.items()) if c != 0}

    def degree(self) -> int:
        return max((e for row in self.terms for e, c in row if c != 0), default=0)

    def order_at_zero(self) -> int | None:
        """Lowest exponent with a non-zero coefficient; None for the zero curve."""
        orders = [min(c) for i in range(self.dim) if (c := self.coefficients(i))]
        return min(orders, default=None)

    def to_sympy(self, t: sympy.Symbol) -> tuple[sympy.Expr, ...]:
        return tuple(
            sympy.Add(*(sympy.Rational(c.numerator, c.denominator) * t**e for e, c in self.coefficients(i).items()))
            for i in range(self.dim)
        )

    def at(self, t: Fraction) -> tuple[Fraction, ...]:
        return tuple(sum((c * t**e for e, c in self.coefficients(i).items()), Fraction(0)) for i in range(self.dim))

    def truncate(self, order: int) -> TruncatedCurve:
        return TruncatedCurve(
            order=order,
            coeffs=tuple(tuple(self.coefficient(i, j) for j in range(order + 1)) for i in range(self.dim)),
        )

    def minus(self, other: "PolynomialCurve") -> "PolynomialCurve":
        if self.dim != other.dim:
            raise DimensionMismatchError(f"Curves in dimensions {self.dim} and {other.dim}.")
        rows = []
        for i in range(self.dim):
            diff = self.coefficients(i)
            for e, c in other.coefficients(i).items():
                diff[e] = diff.get(e, Fraction(0)) - c
            rows.append(tuple((e, c) for e, c in sorted(diff.items()) if c != 0))
        return PolynomialCurve(terms=tuple(rows))


def in_weighting(q: TruncatedCurve, w: WeightVector) -> bool:
    """True iff x_i^{(j)} = 0 for all j < w_i."""
    if q.dim != w.dim:
        raise DimensionMismatchError(f"Curve of dimension {q.dim} against weights of length {w.dim}.")
    if q.order < w.order - 1:
        raise OrderExceededError(f"Membership in a weighting of order {w.order} needs order >= {w.order - 1}.")
    return all(q.coeffs[i][j] == 0 for i, wi in enumerate(w.weights) for j in range(wi))
