"""Exact and floating number types used by schemas."""

import re
from fractions import Fraction
from typing import Annotated, Any

import sympy
from pydantic import PlainSerializer, PlainValidator
from sympy.parsing.sympy_parser import parse_expr

_RATIONAL_PATTERN = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$|^\s*[+-]?\d*\.\d+\s*$")

_EXACT_NAMESPACE: dict[str, Any] = {
    "sqrt": sympy.sqrt,
    "root": sympy.root,
    "Integer": sympy.Integer,
    "Rational": sympy.Rational,
}


def parse_rational(value: Any) -> Fraction:
    """Accept integers, Fractions, sympy rationals and 'p/q' strings; reject floats."""
    if isinstance(value, bool):
        raise ValueError(f"Invalid rational: {value!r}.")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str) and _RATIONAL_PATTERN.match(value):
        return Fraction(value.replace(" ", ""))
    raise ValueError(f"Invalid rational: {value!r}. Expected 'p/q' string or integer.")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_sympy(value: Any) -> sympy.Expr:
    """Convert an exact number to a sympy expression."""
    if isinstance(value, sympy.Basic):
        return value
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, int) and not isinstance(value, bool):
        return sympy.Integer(value)
    if isinstance(value, str):
        if _RATIONAL_PATTERN.match(value):
            return to_sympy(parse_rational(value))
        expr = parse_expr(value, local_dict={}, global_dict=dict(_EXACT_NAMESPACE))
        if not getattr(expr, "is_number", False) or expr.is_real is False:
            raise ValueError(f"Invalid exact number: {value!r}.")
        return expr
    raise ValueError(f"Invalid exact number: {value!r}. Floats are not exact.")


def format_exact(value: sympy.Expr) -> str:
    if value.is_Rational:
        return format_rational(Fraction(int(value.p), int(value.q)))
    return str(value)


def parse_float(value: Any) -> float:
    if isinstance(value, bool):
        raise ValueError(f"Invalid float: {value!r}.")
    if isinstance(value, (int, float, Fraction)):
        return float(value)
    if isinstance(value, str):
        return float(Fraction(value)) if "/" in value else float(value)
    if isinstance(value, sympy.Basic) and value.is_number:
        return float(value)
    raise ValueError(f"Invalid float: {value!r}.")


def format_float(value: float, digits: int = 17) -> str:
    return f"{value:.{digits}g}"


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
]

Exact = Annotated[
    sympy.Expr,
    PlainValidator(to_sympy),
    PlainSerializer(format_exact, return_type=str, when_used="json"),
]

Float17 = Annotated[
    float,
    PlainValidator(parse_float),
    PlainSerializer(format_float, return_type=str, when_used="json"),
]


def exact_equal(a: Any, b: Any) -> bool:
    """Decide equality of exact algebraic numbers."""
    a, b = to_sympy(a), to_sympy(b)
    if a == b:
        return True
    diff = sympy.radsimp(sympy.expand(a - b))
    if diff == 0:
        return True
    return sympy.simplify(diff) == 0


def is_zero(value: Any) -> bool:
    return exact_equal(value, 0)


def sign(value: Any) -> int:
    """Exact sign of a real algebraic number."""
    expr = to_sympy(value)
    if is_zero(expr):
        return 0
    return 1 if expr.is_positive or float(expr) > 0 else -1


def to_fraction(value: Any) -> Fraction:
    expr = to_sympy(value)
    if not expr.is_Rational:
        raise ValueError(f"Not rational: {value!r}.")
    return Fraction(int(expr.p), int(expr.q))
