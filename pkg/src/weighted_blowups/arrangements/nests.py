"""Flags, nests and validity of weighted building sets."""

import logging
from collections.abc import Iterable, Iterator, Sequence
from functools import lru_cache
from itertools import combinations

from pydantic import BaseModel, ConfigDict, Field

from ..config import DEFAULT_SETTINGS, Settings
from ..enums import NestMethod
from ..errors import CapExceededError, DomainError
from ..weightings.alignment import check_uniform_alignment
from .building import BuildingSet, arrangement, check_separated, factors_of_key, is_separated
from .subspace import Rows, intersection_key, subspace_contains

logger: logging.Logger = logging.getLogger(__name__)


class Nest(BaseModel):
    """A subset of a building set's elements, by name in building-set order."""

    model_config = ConfigDict(frozen=True)

    members: tuple[str, ...] = ()

    @classmethod
    def of(cls, bs: BuildingSet, names: Iterable[str]) -> "Nest":
        bs.members(names)
        return cls(members=bs.sort_names(names))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, name: object) -> bool:
        return name in self.members


def _comparable(bs: BuildingSet, a: str, b: str) -> bool:
    return bs.leq(a, b) or bs.leq(b, a)


def antichains(bs: BuildingSet, names: Sequence[str], min_size: int = 2) -> Iterator[tuple[str, ...]]:
    """Subsets of pairwise incomparable elements."""
    for size in range(min_size, len(names) + 1):
        for combo in combinations(names, size):
            if all(not _comparable(bs, a, b) for a, b in combinations(combo, 2)):
                yield combo


def meet_key(bs: BuildingSet, names: Iterable[str]) -> Rows:
    return intersection_key((bs.get(n).key for n in names), bs.dim)


def nest_by_factors(bs: BuildingSet, names: Sequence[str]) -> bool:
    """Every antichain P satisfies P = factors(cap P)."""
    for combo in antichains(bs, names, min_size=1):
        if set(factors_of_key(bs, meet_key(bs, combo))) != set(combo):
            return False
    return True


def nest_by_intersections(bs: BuildingSet, names: Sequence[str]) -> bool:
    """No antichain of two or more elements intersects in an element."""
    keys = bs.element_keys()
    return all(meet_key(bs, combo) not in keys for combo in antichains(bs, names))


def enumerate_flags(bs: BuildingSet, cap: int | None = None) -> list[tuple[str, ...]]:
    """All non-empty chains S_1 > S_2 > ... of proper arrangement elements, largest first."""
    cap = cap if cap is not None else DEFAULT_SETTINGS.arrangement_cap
    arr = arrangement(bs)
    if len(arr.elements) > cap:
        raise CapExceededError(f"Arrangement has {len(arr.elements)} members, cap is {cap}.", "arrangement_cap")
    proper = arr.proper
    below = {
        i: [j for j, t in enumerate(proper) if j != i and subspace_contains(s.key, t.key, bs.dim)]
        for i, s in enumerate(proper)
    }
    flags: list[tuple[str, ...]] = []

    def extend(chain: list[int]) -> None:
        flags.append(tuple(proper[k].name for k in chain))
        for j in below[chain[-1]]:
            extend(chain + [j])

    for i in range(len(proper)):
        extend([i])
    logger.debug("Enumerated %d flags over %d arrangement members", len(flags), len(proper))
    return flags


def induced_nest(bs: BuildingSet, flag: Sequence[str]) -> frozenset[str]:
    arr = arrangement(bs)
    out: set[str] = set()
    for name in flag:
        out.update(factors_of_key(bs, arr.get(name).key))
    return frozenset(out)


@lru_cache(maxsize=64)
def _flag_nests(bs: BuildingSet, cap: int) -> frozenset[frozenset[str]]:
    return frozenset({frozenset()} | {induced_nest(bs, f) for f in enumerate_flags(bs, cap)})


def nests_from_flags(bs: BuildingSet, cap: int | None = None) -> frozenset[frozenset[str]]:
    """Nests induced by flags, the empty nest from the trivial flag."""
    return _flag_nests(bs, cap if cap is not None else DEFAULT_SETTINGS.arrangement_cap)


def nest_by_flags(bs: BuildingSet, names: Sequence[str], cap: int | None = None) -> bool:
    return frozenset(names) in nests_from_flags(bs, cap)


def nest_method(bs: BuildingSet) -> NestMethod:
    return NestMethod.INTERSECTIONS if is_separated(bs) else NestMethod.FLAGS


def is_nest(bs: BuildingSet, nest: Nest | Sequence[str]) -> bool:
    names = nest.members if isinstance(nest, Nest) else tuple(nest)
    bs.members(names)
    if nest_method(bs) is NestMethod.INTERSECTIONS:
        return nest_by_intersections(bs, names)
    return nest_by_flags(bs, names)


def _extends(bs: BuildingSet, current: Sequence[str], name: str, keys: dict[Rows, str]) -> bool:
    others = [n for n in current if not _comparable(bs, n, name)]
    for size in range(1, len(others) + 1):
        for combo in combinations(others, size):
            if any(_comparable(bs, a, b) for a, b in combinations(combo, 2)):
                continue
            if meet_key(bs, combo + (name,)) in keys:
                return False
    return True


def enumerate_nests(bs: BuildingSet, cap: int | None = None) -> list[Nest]:
    """All nests including the empty one, ordered by size then building-set order."""
    cap = cap if cap is not None else DEFAULT_SETTINGS.nest_cap
    if len(bs.elements) > cap:
        raise CapExceededError(f"Building set has {len(bs.elements)} elements, cap is {cap}.", "nest_cap")
    names = bs.names
    if is_separated(bs):
        keys = bs.element_keys()
        found: list[tuple[str, ...]] = []

        def grow(current: tuple[str, ...], start: int) -> None:
            found.append(current)
            for j in range(start, len(names)):
                if _extends(bs, current, names[j], keys):
                    grow(current + (names[j],), j + 1)

        grow((), 0)
    else:
        found = [bs.sort_names(n) for n in nests_from_flags(bs)]
    order = {n: i for i, n in enumerate(names)}
    found.sort(key=lambda ns: (len(ns), [order[n] for n in ns]))
    logger.debug("Enumerated %d nests", len(found))
    return [Nest(members=ns) for ns in found]


class MaxRuleViolation(BaseModel):
    element: str
    subset: tuple[str, ...]
    expected: tuple[int, ...] = Field(..., description="Componentwise max over the subset")
    actual: tuple[int, ...]


class AlignmentViolation(BaseModel):
    nest: tuple[str, ...]
    column: int
    values: tuple[int, ...]


class WeightedCheckReport(BaseModel):
    """Diagnostics of check_weighted_building_set."""

    separated: bool
    separation_witness: str | None = None
    max_rule_violations: list[MaxRuleViolation] = Field(default_factory=list)
    alignment_violations: list[AlignmentViolation] = Field(default_factory=list)
    nests_checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.max_rule_violations and not self.alignment_violations

    @property
    def uniformly_aligned(self) -> bool:
        return not self.alignment_violations


def _max_rule(bs: BuildingSet, settings: Settings) -> list[MaxRuleViolation]:
    violations: list[MaxRuleViolation] = []
    for g in bs.elements:
        above = [h.name for h in bs.elements if subspace_contains(h.key, g.key, bs.dim)]
        if len(above) > settings.subset_cap:
            raise CapExceededError(
                f"{g.name} lies in {len(above)} elements, cap is {settings.subset_cap}.", "subset_cap"
            )
        for size in range(2, len(above) + 1):
            for combo in combinations(above, size):
                if meet_key(bs, combo) != g.key:
                    continue
                members = bs.members(combo)
                if all(h.is_coordinate for h in members):
                    expected = tuple(max(h.weight(i) for h in members) for i in range(bs.dim))
                    actual = g.weight_vector.weights
                elif all(h.is_trivially_weighted() for h in members):
                    continue
                else:
                    expected, actual = (), g.weights
                if expected != actual:
                    violations.append(
                        MaxRuleViolation(element=g.name, subset=combo, expected=expected, actual=actual)
                    )
    return violations


def nest_alignment(bs: BuildingSet, nest: Nest) -> AlignmentViolation | None:
    members = bs.members(nest.members)
    if not all(g.is_coordinate for g in members):
        if all(g.is_trivially_weighted() for g in members):
            return None
        raise DomainError(
            f"Nest {list(nest.members)} mixes non-coordinate elements with non-trivial weights.",
            "coordinate_or_trivial_weights",
        )
    result = check_uniform_alignment([g.weight_vector for g in members])
    if result.aligned:
        return None
    return AlignmentViolation(nest=nest.members, column=result.column, values=result.values)


def check_weighted_building_set(bs: BuildingSet, settings: Settings = DEFAULT_SETTINGS) -> WeightedCheckReport:
    """Max rule on intersections and uniform alignment over every nest."""
    separation = check_separated(bs)
    violations = _max_rule(bs, settings)
    nests = enumerate_nests(bs, cap=settings.nest_cap)
    alignment = [v for v in (nest_alignment(bs, n) for n in nests if len(n) > 1) if v is not None]
    return WeightedCheckReport(
        separated=separation.separated,
        separation_witness=separation.witness,
        max_rule_violations=violations,
        alignment_violations=alignment,
        nests_checked=len(nests),
    )
