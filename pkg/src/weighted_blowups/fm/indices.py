"""Index sets of collisions, their nests, and the FM building set of diagonals."""

from collections.abc import Iterable
from itertools import combinations

from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.cluster.hierarchy import DisjointSet

from ..arrangements.building import BuildingSet
from ..arrangements.subspace import WeightedSubspace

Index = tuple[int, ...]


def index_label(members: Iterable[int]) -> str:
    """'123' for {1,2,3}; comma-separated once an index has two digits."""
    ordered = sorted(members)
    if ordered and ordered[-1] >= 10:
        return ",".join(str(i) for i in ordered)
    return "".join(str(i) for i in ordered)


def parse_index_label(label: str) -> Index:
    parts = label.split(",") if "," in label else list(label)
    return tuple(sorted(int(p) for p in parts))


def _nested_or_disjoint(a: frozenset[int], b: frozenset[int]) -> bool:
    return a <= b or b <= a or not (a & b)


class IndexNest(BaseModel):
    """Pairwise nested-or-disjoint subsets of {1..s}, each of size >= 2."""

    model_config = ConfigDict(frozen=True)

    s: int = Field(..., ge=1, description="Number of points")
    members: tuple[Index, ...] = ()

    @model_validator(mode="after")
    def validate_members(self) -> "IndexNest":
        sets = []
        for member in self.members:
            if len(member) < 2 or len(set(member)) != len(member):
                raise ValueError(f"Member {member} needs at least two distinct indices.")
            if tuple(sorted(member)) != member:
                raise ValueError(f"Member {member} must be sorted.")
            if member[0] < 1 or member[-1] > self.s:
                raise ValueError(f"Member {member} is not a subset of 1..{self.s}.")
            sets.append(frozenset(member))
        if len(set(sets)) != len(sets):
            raise ValueError("Duplicate members.")
        for a, b in combinations(sets, 2):
            if not _nested_or_disjoint(a, b):
                raise ValueError(f"Members {sorted(a)} and {sorted(b)} overlap without nesting.")
        if list(self.members) != sorted(self.members, key=lambda m: (len(m), m)):
            raise ValueError("Members must be ordered by size, then lexicographically.")
        return self

    @classmethod
    def of(cls, s: int, members: Iterable[Iterable[int]]) -> "IndexNest":
        normalized = {tuple(sorted(set(m))) for m in members}
        return cls(s=s, members=tuple(sorted(normalized, key=lambda m: (len(m), m))))

    def sets(self) -> list[frozenset[int]]:
        return [frozenset(m) for m in self.members]

    def labels(self) -> list[str]:
        return [index_label(m) for m in self.members]

    def parent_member(self, member: Index) -> Index | None:
        """Smallest member strictly containing the given one."""
        target = frozenset(member)
        above = [m for m in self.members if target < frozenset(m)]
        return min(above, key=len) if above else None

    def containing(self, indices: Iterable[int]) -> list[Index]:
        """Members containing all given indices, smallest first."""
        target = frozenset(indices)
        return [m for m in self.members if target <= frozenset(m)]


def factorize(parts: Iterable[Iterable[int]]) -> set[frozenset[int]]:
    """Unions of the connected components of overlapping parts."""
    parts = [frozenset(p) for p in parts]
    ds: DisjointSet = DisjointSet()
    for p in parts:
        items = sorted(p)
        for x in items:
            ds.add(x)
        for x in items[1:]:
            ds.merge(items[0], x)
    return {frozenset(component) for component in ds.subsets()}


def collision_indices(s: int) -> list[Index]:
    """All subsets of {1..s} of size >= 2, ordered by size then lexicographically."""
    return [c for size in range(2, s + 1) for c in combinations(range(1, s + 1), size)]


def enumerate_index_nests(s: int) -> list[IndexNest]:
    """Every index nest, by direct search over nested-or-disjoint families."""
    universe = collision_indices(s)
    found: list[tuple[Index, ...]] = []

    def grow(current: tuple[Index, ...], start: int) -> None:
        found.append(current)
        for j in range(start, len(universe)):
            candidate = frozenset(universe[j])
            if all(_nested_or_disjoint(candidate, frozenset(c)) for c in current):
                grow(current + (universe[j],), j + 1)

    grow((), 0)
    return [IndexNest.of(s, members) for members in found]


def coordinate_index(point: int, j: int, m: int) -> int:
    """Position of coordinate j of point (1-based) in R^{s*m}."""
    return (point - 1) * m + j


def fm_building_set(s: int, m: int = 1) -> BuildingSet:
    """Diagonals Delta_I of (R^m)^s as equation-defined subspaces."""
    dim = s * m
    elements = []
    for members in collision_indices(s):
        rows = []
        for a, b in zip(members, members[1:]):
            for j in range(m):
                row = [0] * dim
                row[coordinate_index(a, j, m)] = 1
                row[coordinate_index(b, j, m)] = -1
                rows.append(row)
        elements.append(WeightedSubspace.from_equations(index_label(members), dim, rows))
    return BuildingSet(dim=dim, elements=tuple(elements))


def names_to_nest(s: int, names: Iterable[str]) -> IndexNest:
    return IndexNest.of(s, (parse_index_label(n) for n in names))
