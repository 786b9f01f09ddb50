"""Building sets, their arrangement lattice and G-factors."""

import logging
from collections.abc import Iterable, Sequence
from functools import lru_cache

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import DomainError, NotInArrangementError
from .subspace import Rows, WeightedSubspace, intersect, intersection_key, subspace_contains

logger: logging.Logger = logging.getLogger(__name__)

MEET_SYMBOL = "∩"


class BuildingSet(BaseModel):
    """Finite family of weighted subspaces of R^m with unique names."""

    model_config = ConfigDict(frozen=True)

    dim: int = Field(..., ge=1)
    elements: tuple[WeightedSubspace, ...]

    @model_validator(mode="after")
    def validate_elements(self) -> "BuildingSet":
        names = [g.name for g in self.elements]
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate element names in {names}.")
        keys = set()
        for g in self.elements:
            if g.dim != self.dim:
                raise ValueError(f"Element {g.name} lives in dimension {g.dim}, expected {self.dim}.")
            if g.codim == 0:
                raise ValueError(f"Element {g.name} must have positive codimension.")
            if g.key in keys:
                raise ValueError(f"Element {g.name} duplicates another element.")
            keys.add(g.key)
        return self

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.elements)

    def get(self, name: str) -> WeightedSubspace:
        for g in self.elements:
            if g.name == name:
                return g
        raise NotInArrangementError(f"No element named {name!r}.", "known_element")

    def members(self, names: Iterable[str]) -> tuple[WeightedSubspace, ...]:
        wanted = set(names)
        unknown = wanted - set(self.names)
        if unknown:
            raise NotInArrangementError(f"Unknown elements {sorted(unknown)}.", "known_element")
        return tuple(g for g in self.elements if g.name in wanted)

    def sort_names(self, names: Iterable[str]) -> tuple[str, ...]:
        order = {n: i for i, n in enumerate(self.names)}
        return tuple(sorted(set(names), key=lambda n: order[n]))

    def element_keys(self) -> dict[Rows, str]:
        return {g.key: g.name for g in self.elements}

    def is_coordinate(self) -> bool:
        return all(g.is_coordinate for g in self.elements)

    def leq(self, a: str, b: str) -> bool:
        """Element a is contained in element b."""
        return subspace_contains(self.get(b).key, self.get(a).key, self.dim)

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)


class Arrangement(BaseModel):
    """The lattice Arr_G: all intersections of elements, ambient space first."""

    model_config = ConfigDict(frozen=True)

    dim: int
    elements: tuple[WeightedSubspace, ...]

    @property
    def proper(self) -> tuple[WeightedSubspace, ...]:
        return tuple(s for s in self.elements if s.codim > 0)

    def find(self, key: Rows) -> WeightedSubspace | None:
        for s in self.elements:
            if s.key == key:
                return s
        return None

    def get(self, name: str) -> WeightedSubspace:
        for s in self.elements:
            if s.name == name:
                return s
        raise NotInArrangementError(f"No arrangement element named {name!r}.", "in_arrangement")

    def meet(self, a: WeightedSubspace, b: WeightedSubspace) -> WeightedSubspace:
        found = self.find(intersection_key((a.key, b.key), self.dim))
        assert found is not None
        return found

    def join(self, a: WeightedSubspace, b: WeightedSubspace) -> WeightedSubspace:
        """Smallest lattice element containing both."""
        uppers = [s for s in self.elements if s.contains(a) and s.contains(b)]
        found = self.find(intersection_key((s.key for s in uppers), self.dim))
        assert found is not None
        return found


def _containing(bs: BuildingSet, key: Rows) -> list[WeightedSubspace]:
    return [g for g in bs.elements if subspace_contains(g.key, key, bs.dim)]


def _minimal(bs: BuildingSet, candidates: Sequence[WeightedSubspace]) -> list[WeightedSubspace]:
    return [
        g
        for g in candidates
        if not any(h.key != g.key and subspace_contains(g.key, h.key, bs.dim) for h in candidates)
    ]


@lru_cache(maxsize=256)
def arrangement(bs: BuildingSet) -> Arrangement:
    """Close the building set under intersection."""
    keys: set[Rows] = {()}
    frontier: set[Rows] = {()}
    while frontier:
        fresh: set[Rows] = set()
        for key in frontier:
            for g in bs.elements:
                meet = intersection_key((key, g.key), bs.dim)
                if meet not in keys:
                    fresh.add(meet)
        keys |= fresh
        frontier = fresh
    logger.debug("Arrangement of %d elements has %d members", len(bs.elements), len(keys))

    named = bs.element_keys()
    out: list[WeightedSubspace] = []
    for key in sorted(keys, key=lambda k: (len(k), k)):
        if not key:
            out.append(WeightedSubspace.ambient(bs.dim))
            continue
        if key in named:
            out.append(bs.get(named[key]))
            continue
        sup = _containing(bs, key)
        name = MEET_SYMBOL.join(g.name for g in _minimal(bs, sup))
        out.append(intersect(name, sup, strict=False))
    return Arrangement(dim=bs.dim, elements=tuple(out))


def factors_of_key(bs: BuildingSet, key: Rows) -> tuple[str, ...]:
    """min G_{>=S} by element names, in building-set order."""
    return tuple(g.name for g in _minimal(bs, _containing(bs, key)))


def factors(bs: BuildingSet, s: WeightedSubspace) -> tuple[str, ...]:
    """The G-factors of an arrangement element."""
    if arrangement(bs).find(s.key) is None:
        raise NotInArrangementError(f"{s.name} is not in the arrangement.", "in_arrangement")
    return factors_of_key(bs, s.key)


class SeparationResult(BaseModel):
    """Whether every arrangement element is a transverse intersection of its factors."""

    separated: bool
    witness: str | None = Field(None, description="Arrangement element whose factors are not transverse")


def check_separated(bs: BuildingSet) -> SeparationResult:
    for s in arrangement(bs).proper:
        members = bs.members(factors_of_key(bs, s.key))
        if len(intersection_key((g.key for g in members), bs.dim)) != sum(g.codim for g in members):
            return SeparationResult(separated=False, witness=s.name)
    return SeparationResult(separated=True)


@lru_cache(maxsize=256)
def is_separated(bs: BuildingSet) -> bool:
    return check_separated(bs).separated


def require_separated(bs: BuildingSet) -> None:
    result = check_separated(bs)
    if not result.separated:
        raise DomainError(f"Building set is not separated at {result.witness}.", "separated")
