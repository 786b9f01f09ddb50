"""Rational polynomials on R^m and their lifts to truncated curves."""

from collections.abc import Mapping, Sequence
from fractions import Fraction
from typing import Any

import sympy
from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_mul, rs_pow
from sympy.polys.rings import ring

from ..common.numbers import Rational
from ..errors import DimensionMismatchError, OrderExceededError
from .curves import TruncatedCurve


class Monomial(BaseModel):
    """A single term coefficient * x^exponents."""

    model_config = ConfigDict(frozen=True)

    exponents: tuple[int, ...]
    coefficient: Rational


class Polynomial(BaseModel):
    """Polynomial in nvars variables with rational coefficients; zero terms are never stored."""

    model_config = ConfigDict(frozen=True)

    nvars: int = Field(..., ge=1)
    terms: tuple[Monomial, ...] = ()

    @model_validator(mode="after")
    def validate_terms(self) -> "Polynomial":
        seen: set[tuple[int, ...]] = set()
        for term in self.terms:
            if len(term.exponents) != self.nvars:
                raise ValueError(f"Exponent {term.exponents} does not have {self.nvars} entries.")
            if any(e < 0 for e in term.exponents):
                raise ValueError(f"Negative exponent in {term.exponents}.")
            if term.coefficient == 0:
                raise ValueError("Zero coefficients are not stored.")
            if term.exponents in seen:
                raise ValueError(f"Duplicate exponent {term.exponents}.")
            seen.add(term.exponents)
        return self

    @classmethod
    def from_dict(cls, nvars: int, terms: Mapping[tuple[int, ...], Any]) -> "Polynomial":
        merged: dict[tuple[int, ...], Fraction] = {}
        for exps, c in terms.items():
            merged[tuple(exps)] = merged.get(tuple(exps), Fraction(0)) + Fraction(c)
        return cls(
            nvars=nvars,
            terms=tuple(Monomial(exponents=e, coefficient=c) for e, c in sorted(merged.items()) if c != 0),
        )

    @classmethod
    def variable(cls, k: int, nvars: int) -> "Polynomial":
        return cls.from_dict(nvars, {tuple(int(j == k) for j in range(nvars)): 1})

    @classmethod
    def constant(cls, value: Any, nvars: int) -> "Polynomial":
        return cls.from_dict(nvars, {(0,) * nvars: value})

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return {t.exponents: t.coefficient for t in self.terms}

    def degree(self) -> int:
        return max((sum(t.exponents) for t in self.terms), default=0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_same(other)
        merged = self.as_dict()
        for e, c in other.as_dict().items():
            merged[e] = merged.get(e, Fraction(0)) + c
        return Polynomial.from_dict(self.nvars, merged)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_same(other)
        product: dict[tuple[int, ...], Fraction] = {}
        for a in self.terms:
            for b in other.terms:
                e = tuple(x + y for x, y in zip(a.exponents, b.exponents))
                product[e] = product.get(e, Fraction(0)) + a.coefficient * b.coefficient
        return Polynomial.from_dict(self.nvars, product)

    def _check_same(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatchError(f"Polynomials in {self.nvars} and {other.nvars} variables.")

    def evaluate(self, point: Sequence[Any]) -> Any:
        """Evaluate at a point with Fraction or sympy entries."""
        if len(point) != self.nvars:
            raise DimensionMismatchError(f"Point of length {len(point)} for {self.nvars} variables.")
        total: Any = 0
        for t in self.terms:
            value: Any = t.coefficient
            for x, e in zip(point, t.exponents):
                value = value * x**e
            total = total + value
        return total

    def to_sympy(self, symbols: Sequence[sympy.Symbol]) -> sympy.Expr:
        return sympy.Add(
            *(
                sympy.Rational(t.coefficient.numerator, t.coefficient.denominator)
                * sympy.Mul(*(s**e for s, e in zip(symbols, t.exponents)))
                for t in self.terms
            )
        )

    @classmethod
    def from_sympy(cls, expr: sympy.Expr, symbols: Sequence[sympy.Symbol]) -> "Polynomial":
        poly = sympy.Poly(sympy.expand(expr), *symbols, domain="QQ")
        return cls.from_dict(
            len(symbols), {m: Fraction(int(c.p), int(c.q)) for m, c in poly.as_dict().items()}
        )


def lift(f: Polynomial, i: int, q: TruncatedCurve) -> Fraction:
    """The i-th Taylor coefficient of f along the curve with coefficients q."""
    if f.nvars != q.dim:
        raise DimensionMismatchError(f"Polynomial in {f.nvars} variables on a curve in R^{q.dim}.")
    if i > q.order:
        raise OrderExceededError(f"Lift of order {i} from a curve of order {q.order}.")
    R, t = ring("t", QQ)
    prec = i + 1
    series = [
        R.from_dict({(j,): QQ(c.numerator, c.denominator) for j, c in enumerate(row[:prec]) if c != 0})
        for row in q.coeffs
    ]
    total = R.zero
    for term in f.terms:
        value = R(QQ(term.coefficient.numerator, term.coefficient.denominator))
        for s, e in zip(series, term.exponents):
            if e == 0:
                continue
            if not s:
                value = R.zero
                break
            value = rs_mul(value, rs_pow(s, e, t, prec), t, prec)
        total += value
    coeff = QQ.to_sympy(total.get((i,), QQ.zero))
    return Fraction(int(coeff.p), int(coeff.q))
