"""Weighted linear subspaces stored by their exact RREF annihilator."""

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Any

import sympy
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..common.numbers import Rational, is_zero, to_sympy
from ..errors import DimensionMismatchError, DomainError
from ..jets.weights import WeightVector

Rows = tuple[tuple[Fraction, ...], ...]


@lru_cache(maxsize=65536)
def rref_rows(rows: Rows, dim: int) -> Rows:
    """Canonical row basis (reduced row echelon form, zero rows dropped)."""
    if not rows:
        return ()
    matrix = sympy.Matrix([[to_sympy(c) for c in row] for row in rows])
    reduced, _ = matrix.rref()
    out = []
    for r in range(reduced.rows):
        row = tuple(Fraction(int(reduced[r, c].p), int(reduced[r, c].q)) for c in range(dim))
        if any(row):
            out.append(row)
    return tuple(out)


def unit_row(i: int, dim: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(j == i)) for j in range(dim))


class WeightedSubspace(BaseModel):
    """A linear subspace of R^m with its weighting.

    Coordinate subspaces carry explicit weights on their zero set. Subspaces given by
    general equations are trivially weighted and have ``weights == ()``.
    """

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1)
    dim: int = Field(..., ge=1, description="Ambient dimension m")
    annihilator: tuple[tuple[Rational, ...], ...] = Field(..., description="RREF rows of the defining equations")
    weights: tuple[int, ...] = Field((), description="Per-coordinate weights, 0 off the zero set")

    @model_validator(mode="after")
    def validate_subspace(self) -> "WeightedSubspace":
        for row in self.annihilator:
            if len(row) != self.dim:
                raise ValueError(f"Equation of length {len(row)} in dimension {self.dim}.")
        if rref_rows(self.annihilator, self.dim) != self.annihilator:
            raise ValueError(f"Annihilator of {self.name} is not in reduced row echelon form.")
        if self.weights:
            if len(self.weights) != self.dim:
                raise ValueError(f"Weights of {self.name} need {self.dim} entries.")
            zeros = self.coordinate_zero_set()
            if zeros is None:
                raise ValueError(f"Explicit weights on non-coordinate subspace {self.name}.")
            for i, w in enumerate(self.weights):
                if (i in zeros) != (w > 0):
                    raise ValueError(f"Weights of {self.name} must be positive exactly on its zero set.")
        return self

    @classmethod
    def coordinate(cls, name: str, dim: int, weights: Mapping[int, int] | Sequence[int]) -> "WeightedSubspace":
        """Subspace {x_i = 0 : i in weights} with weights w_i."""
        if not isinstance(weights, Mapping):
            weights = {i: 1 for i in weights}
        for i in weights:
            if not 0 <= i < dim:
                raise DimensionMismatchError(f"Coordinate {i} out of range for dimension {dim}.")
        rows = tuple(unit_row(i, dim) for i in sorted(weights))
        full = tuple(int(weights.get(i, 0)) for i in range(dim))
        return cls(name=name, dim=dim, annihilator=rows, weights=full if rows else ())

    @classmethod
    def from_equations(cls, name: str, dim: int, equations: Iterable[Sequence[Any]]) -> "WeightedSubspace":
        """Trivially weighted subspace cut out by linear equations."""
        raw = tuple(tuple(Fraction(c) for c in row) for row in equations)
        for row in raw:
            if len(row) != dim:
                raise DimensionMismatchError(f"Equation of length {len(row)} in dimension {dim}.")
        rows = rref_rows(raw, dim)
        candidate = cls(name=name, dim=dim, annihilator=rows)
        zeros = candidate.coordinate_zero_set()
        if zeros is not None and zeros:
            return candidate.model_copy(update={"weights": tuple(int(i in zeros) for i in range(dim))})
        return candidate

    @classmethod
    def ambient(cls, dim: int) -> "WeightedSubspace":
        return cls(name="R^" + str(dim), dim=dim, annihilator=())

    @property
    def key(self) -> Rows:
        return self.annihilator

    @property
    def codim(self) -> int:
        return len(self.annihilator)

    def coordinate_zero_set(self) -> frozenset[int] | None:
        """Indices cut to zero when this is a coordinate subspace, else None."""
        zeros = set()
        for row in self.annihilator:
            support = [i for i, c in enumerate(row) if c != 0]
            if len(support) != 1:
                return None
            zeros.add(support[0])
        return frozenset(zeros)

    @property
    def is_coordinate(self) -> bool:
        return self.coordinate_zero_set() is not None

    @property
    def zero_set(self) -> frozenset[int]:
        zeros = self.coordinate_zero_set()
        if zeros is None:
            raise DomainError(f"{self.name} is not a coordinate subspace.", "coordinate_subspace")
        return zeros

    @property
    def weight_vector(self) -> WeightVector:
        zeros = self.zero_set
        if self.weights:
            return WeightVector(weights=self.weights)
        return WeightVector(weights=tuple(int(i in zeros) for i in range(self.dim)))

    def is_trivially_weighted(self) -> bool:
        return all(w <= 1 for w in self.weights)

    def weight(self, i: int) -> int:
        return self.weight_vector[i]

    def contains(self, other: "WeightedSubspace") -> bool:
        """self contains other as a submanifold."""
        return subspace_contains(self.key, other.key, self.dim)

    def contains_point(self, point: Sequence[Any]) -> bool:
        values = [to_sympy(x) for x in point]
        return all(
            is_zero(sum((to_sympy(c) * x for c, x in zip(row, values)), sympy.Integer(0))) for row in self.annihilator
        )

    def with_name(self, name: str) -> "WeightedSubspace":
        return self.model_copy(update={"name": name})


@lru_cache(maxsize=262144)
def subspace_contains(big: Rows, small: Rows, dim: int) -> bool:
    """Row space of big's annihilator lies in the row space of small's."""
    if not big:
        return True
    return len(rref_rows(small + big, dim)) == len(small)


def intersection_key(keys: Iterable[Rows], dim: int) -> Rows:
    rows: tuple[tuple[Fraction, ...], ...] = ()
    for k in keys:
        rows = rows + k
    return rref_rows(rows, dim)


def intersect(name: str, members: Sequence[WeightedSubspace], strict: bool = True) -> WeightedSubspace:
    """Intersection with the max rule on coordinate weights.

    Non-strict mode returns an unweighted subspace where no weighting is defined.
    """
    if not members:
        raise DomainError("Intersection of an empty family.", "nonempty_family")
    dim = members[0].dim
    if any(g.dim != dim for g in members):
        raise DimensionMismatchError("Subspaces of different ambient dimension.")
    key = intersection_key((g.key for g in members), dim)
    result = WeightedSubspace(name=name, dim=dim, annihilator=key)
    zeros = result.coordinate_zero_set()
    if all(g.is_coordinate for g in members) and zeros:
        weights = tuple(max(g.weight(i) for g in members) for i in range(dim))
        return result.model_copy(update={"weights": weights})
    if zeros and all(g.is_trivially_weighted() for g in members):
        return result.model_copy(update={"weights": tuple(int(i in zeros) for i in range(dim))})
    if strict and not all(g.is_trivially_weighted() for g in members):
        raise DomainError(
            f"Weighted intersection {name} mixes non-coordinate elements with non-trivial weights.",
            "coordinate_or_trivial_weights",
        )
    return result


def transverse(members: Sequence[WeightedSubspace]) -> bool:
    """Codimensions add up."""
    if len(members) < 2:
        return True
    dim = members[0].dim
    return len(intersection_key((g.key for g in members), dim)) == sum(g.codim for g in members)
