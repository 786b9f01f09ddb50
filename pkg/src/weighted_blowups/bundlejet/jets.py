"""Pairs of 2-jets of functions R^m -> R, their offsets and the weighted blow-up along the diagonal."""

import logging
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

import sympy
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..common.numbers import Exact, exact_equal, format_rational, is_zero, sign, to_sympy
from ..config import DEFAULT_SETTINGS, Settings
from ..enums import HolonomicMode
from ..errors import ChartDomainError, DimensionMismatchError
from ..jets.curves import PolynomialCurve
from ..jets.polynomials import Polynomial

logger: logging.Logger = logging.getLogger(__name__)

THIRD = sympy.Rational(1, 3)
HALF = sympy.Rational(1, 2)


def sym_size(m: int) -> int:
    return m * (m + 1) // 2


def sym_matrix(flat: Sequence[Any], m: int) -> sympy.Matrix:
    """Symmetric m x m matrix from its upper triangle, row-major."""
    if len(flat) != sym_size(m):
        raise DimensionMismatchError(f"A symmetric form on R^{m} needs {sym_size(m)} entries, got {len(flat)}.")
    out = sympy.zeros(m, m)
    k = 0
    for i in range(m):
        for j in range(i, m):
            out[i, j] = out[j, i] = to_sympy(flat[k])
            k += 1
    return out


def sym_flat(matrix: sympy.Matrix) -> tuple[sympy.Expr, ...]:
    return tuple(matrix[i, j] for i in range(matrix.rows) for j in range(i, matrix.cols))


def _col(values: Sequence[Any]) -> sympy.Matrix:
    return sympy.Matrix([to_sympy(v) for v in values])


def _simplified(values: Any) -> tuple[sympy.Expr, ...]:
    return tuple(sympy.radsimp(sympy.expand(v)) for v in values)


class Jet2(BaseModel):
    """A 2-jet (x, y, y', y'') with y'' stored as its upper triangle."""

    model_config = ConfigDict(frozen=True)

    x: tuple[Exact, ...]
    y: Exact
    yp: tuple[Exact, ...] = Field(..., description="Covector y'")
    ypp: tuple[Exact, ...] = Field(..., description="Symmetric form y'', upper triangle row-major")

    @model_validator(mode="after")
    def validate_shape(self) -> "Jet2":
        m = len(self.x)
        if m == 0 or len(self.yp) != m or len(self.ypp) != sym_size(m):
            raise ValueError(f"Inconsistent jet dimensions for m={m}.")
        return self

    @property
    def m(self) -> int:
        return len(self.x)

    def hessian(self) -> sympy.Matrix:
        return sym_matrix(self.ypp, self.m)


class JetPair2(BaseModel):
    """Two 2-jets, a point of (J^2(R^m, R))^2."""

    model_config = ConfigDict(frozen=True)

    first: Jet2
    second: Jet2

    @model_validator(mode="after")
    def validate_dims(self) -> "JetPair2":
        if self.first.m != self.second.m:
            raise ValueError("Jets over spaces of different dimension.")
        return self

    @property
    def m(self) -> int:
        return self.first.m


class JetOffsets(BaseModel):
    """The first jet together with offsets (dx, dy, dy', dy'') of the second."""

    model_config = ConfigDict(frozen=True)

    base: Jet2
    dx: tuple[Exact, ...]
    dy: Exact
    dyp: tuple[Exact, ...]
    dypp: tuple[Exact, ...]

    def is_zero(self) -> bool:
        return all(is_zero(v) for v in (*self.dx, self.dy, *self.dyp, *self.dypp))


class JetBlown2(BaseModel):
    """A point of the blown-up pair space; only dx is normalized."""

    model_config = ConfigDict(frozen=True)

    base: Jet2
    lam: Exact = Field(..., description="lambda >= 0")
    dx: tuple[Exact, ...] = Field(..., description="Unit horizontal direction")
    dy: Exact
    dyp: tuple[Exact, ...]
    dypp: tuple[Exact, ...]

    @model_validator(mode="after")
    def validate_point(self) -> "JetBlown2":
        m = self.base.m
        if len(self.dx) != m or len(self.dyp) != m or len(self.dypp) != sym_size(m):
            raise ValueError(f"Inconsistent blown-up dimensions for m={m}.")
        if sign(self.lam) < 0:
            raise ValueError("lambda must be non-negative.")
        if not exact_equal(sum((d**2 for d in self.dx), sympy.Integer(0)), 1):
            raise ValueError("dx must be a unit vector.")
        return self


def jet_offsets(p: JetPair2) -> JetOffsets:
    a, b = p.first, p.second
    q1 = a.hessian()
    dx = _col(b.x) - _col(a.x)
    dy = b.y - a.y - (_col(a.yp).T * dx)[0] - HALF * (dx.T * q1 * dx)[0]
    dyp = _col(b.yp) - _col(a.yp) - q1 * dx
    dypp = b.hessian() - q1
    return JetOffsets(
        base=a, dx=_simplified(dx), dy=sympy.expand(dy), dyp=_simplified(dyp), dypp=_simplified(sym_flat(dypp))
    )


def jet_offsets_inverse(o: JetOffsets) -> JetPair2:
    a = o.base
    q1 = a.hessian()
    dx = _col(o.dx)
    x2 = _col(a.x) + dx
    y2 = a.y + (_col(a.yp).T * dx)[0] + HALF * (dx.T * q1 * dx)[0] + o.dy
    yp2 = _col(a.yp) + q1 * dx + _col(o.dyp)
    ypp2 = q1 + sym_matrix(o.dypp, a.m)
    second = Jet2(x=_simplified(x2), y=sympy.expand(y2), yp=_simplified(yp2), ypp=_simplified(sym_flat(ypp2)))
    return JetPair2(first=a, second=second)


def jet_blow_down(b: JetBlown2) -> JetPair2:
    """Weighted substitution (lam dx, lam^3 dy / 3, lam^2 dy' / 2, lam dy'') followed by the offset inverse."""
    lam = b.lam
    offsets = JetOffsets(
        base=b.base,
        dx=tuple(lam * d for d in b.dx),
        dy=THIRD * lam**3 * b.dy,
        dyp=tuple(HALF * lam**2 * d for d in b.dyp),
        dypp=tuple(lam * d for d in b.dypp),
    )
    return jet_offsets_inverse(offsets)


def jet_chart(p: JetPair2) -> JetBlown2:
    """Inverse of jet_blow_down away from the diagonal."""
    o = jet_offsets(p)
    if all(is_zero(d) for d in o.dx):
        raise ChartDomainError("The jets sit over the same base point.", "horizontal_separation")
    lam = sympy.sqrt(sum((d**2 for d in o.dx), sympy.Integer(0)))
    return JetBlown2(
        base=p.first,
        lam=lam,
        dx=_simplified(d / lam for d in o.dx),
        dy=sympy.radsimp(3 * o.dy / lam**3),
        dyp=_simplified(2 * d / lam**2 for d in o.dyp),
        dypp=_simplified(d / lam for d in o.dypp),
    )


def holonomic_predicate(
    b: JetBlown2, mode: HolonomicMode = HolonomicMode.LITERAL, settings: Settings = DEFAULT_SETTINGS
) -> bool:
    """Holonomicity of a blown-up pair; only constrains points with lambda = 0."""
    if not is_zero(b.lam):
        return True
    m = b.base.m
    dx = _col(b.dx)
    first_order = sym_matrix(b.dypp, m) * dx
    if not all(exact_equal(u, v) for u, v in zip(b.dyp, first_order)):
        return False
    pairing = (_col(b.dyp).T * dx)[0]
    c = 1 if mode == HolonomicMode.LITERAL else to_sympy(settings.holonomic_constant)
    return exact_equal(b.dy, c * pairing)


def jet_of(f: Polynomial, point: Sequence[Any]) -> Jet2:
    """The 2-jet j^2 f at a point."""
    symbols = sympy.symbols(f"x0:{f.nvars}")
    expr = f.to_sympy(symbols)
    subs = dict(zip(symbols, (to_sympy(v) if not isinstance(v, sympy.Basic) else v for v in point)))
    grad = [sympy.diff(expr, s) for s in symbols]
    hess = sympy.hessian(expr, symbols)
    return Jet2(
        x=tuple(subs[s] for s in symbols),
        y=sympy.expand(expr.subs(subs)),
        yp=tuple(sympy.expand(g.subs(subs)) for g in grad),
        ypp=tuple(sympy.expand(h.subs(subs)) for h in sym_flat(hess)),
    )


def jet_section_pair(f: Polynomial, x1: Sequence[Any], x2: Sequence[Any]) -> JetPair2:
    return JetPair2(first=jet_of(f, x1), second=jet_of(f, x2))


def _leading(expr: sympy.Expr, t: sympy.Symbol, order: int) -> sympy.Expr:
    """Coefficient of t^order, requiring all lower ones to vanish."""
    poly = sympy.Poly(sympy.expand(expr), t)
    for k in range(order):
        if not is_zero(poly.coeff_monomial(t**k)):
            raise ChartDomainError(f"Offset of order {k} below the weighted order {order}.", "bounded_limit")
    return poly.coeff_monomial(t**order)


def _point(curve: PolynomialCurve) -> str:
    return "(" + ", ".join(format_rational(v) for v in curve.at(Fraction(0))) + ")"


def jet_limit(f: Polynomial, x1: PolynomialCurve, x2: PolynomialCurve) -> JetBlown2:
    """Exact limit as t -> 0+ of jet_chart along (j^2 f(x1(t)), j^2 f(x2(t)))."""
    if x1.dim != f.nvars or x2.dim != f.nvars:
        raise DimensionMismatchError(f"Curves must lie in R^{f.nvars}.")
    k = x2.minus(x1).order_at_zero()
    if k is None:
        raise ChartDomainError("The base curves coincide identically.", "horizontal_separation")
    if k == 0:
        raise ChartDomainError(
            f"Base curves start at {_point(x1)} and {_point(x2)}; they have no common limit.", "common_limit"
        )
    t = sympy.Symbol("t")
    pair = JetPair2(first=jet_of(f, x1.to_sympy(t)), second=jet_of(f, x2.to_sympy(t)))
    o = jet_offsets(pair)
    a = [_leading(d, t, k) for d in o.dx]
    norm = sympy.sqrt(sum((c**2 for c in a), sympy.Integer(0)))
    base = jet_of(f, x1.at(0))
    blown = JetBlown2(
        base=base,
        lam=sympy.Integer(0),
        dx=_simplified(c / norm for c in a),
        dy=sympy.radsimp(3 * _leading(o.dy, t, 3 * k) / norm**3),
        dyp=_simplified(2 * _leading(d, t, 2 * k) / norm**2 for d in o.dyp),
        dypp=_simplified(_leading(d, t, k) / norm for d in o.dypp),
    )
    logger.debug("Jet limit at order %d: literal=%s", k, holonomic_predicate(blown, HolonomicMode.LITERAL))
    return blown
