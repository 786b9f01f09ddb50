"""Good perspectives: nest, control coordinates and signs defining a chart."""

from collections.abc import Mapping
from itertools import product

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..arrangements.building import BuildingSet, check_separated
from ..arrangements.nests import Nest, is_nest, nest_alignment
from ..errors import InvalidPerspectiveError
from ..jets.weights import WeightVector
from ..versioning import VersionedSchema
from .single import SingleChart


class GoodPerspective(BaseModel):
    """(nest, h, s) over a separated, uniformly aligned building set of coordinate subspaces."""

    model_config = ConfigDict(frozen=True)

    building_set: BuildingSet
    nest: Nest
    h: dict[str, int] = Field(default_factory=dict, description="Control coordinate per nest member")
    s: dict[str, int] = Field(default_factory=dict, description="Sign per nest member")

    @model_validator(mode="after")
    def validate_perspective(self) -> "GoodPerspective":
        bs, members = self.building_set, self.nest.members
        if not bs.is_coordinate():
            raise InvalidPerspectiveError("Charts need coordinate subspaces.", "coordinate_subspaces")
        separation = check_separated(bs)
        if not separation.separated:
            raise InvalidPerspectiveError(f"Not separated at {separation.witness}.", "separated")
        if not is_nest(bs, self.nest):
            raise InvalidPerspectiveError(f"{list(members)} is not a nest.", "nest")
        violation = nest_alignment(bs, self.nest)
        if violation is not None:
            raise InvalidPerspectiveError(
                f"Nest is not uniformly aligned at column {violation.column}.", "uniform_alignment"
            )
        if set(self.h) != set(members) or set(self.s) != set(members):
            raise InvalidPerspectiveError("h and s must be given exactly on the nest.", "h_s_domain")
        if any(v not in (1, -1) for v in self.s.values()):
            raise InvalidPerspectiveError("Signs must be +1 or -1.", "signs")
        if len(set(self.h.values())) != len(members):
            raise InvalidPerspectiveError("h must be injective.", "h_injective")
        for name in members:
            column = self.h[name]
            if not 0 <= column < bs.dim or bs.get(name).weight(column) == 0:
                raise InvalidPerspectiveError(f"h({name}) = {column} is not a normal coordinate.", "h_normal")
            for other in members:
                if other != name and bs.get(other).weight(column) != 0 and not bs.leq(other, name):
                    raise InvalidPerspectiveError(
                        f"Box of {name} in column {column} is not topmost ({other} is above).", "topmost_box"
                    )
        return self

    @classmethod
    def create(
        cls, bs: BuildingSet, nest: Nest | list[str], h: Mapping[str, int], s: Mapping[str, int] | None = None
    ) -> "GoodPerspective":
        nest = nest if isinstance(nest, Nest) else Nest.of(bs, nest)
        signs = dict(s) if s is not None else {n: 1 for n in nest.members}
        return cls(building_set=bs, nest=nest, h=dict(h), s=signs)

    @property
    def dim(self) -> int:
        return self.building_set.dim

    @property
    def members(self) -> tuple[str, ...]:
        return self.nest.members

    def weight(self, name: str, i: int) -> int:
        return self.building_set.get(name).weight(i)

    def weights(self, name: str) -> WeightVector:
        return self.building_set.get(name).weight_vector

    def leq(self, a: str, b: str) -> bool:
        return self.building_set.leq(a, b)

    def lt(self, a: str, b: str) -> bool:
        return self.building_set.lt(a, b)

    def chart(self, name: str) -> SingleChart:
        return SingleChart(w=self.weights(name), h=self.h[name], s=self.s[name])

    def owner(self, i: int) -> str | None:
        """The nest member whose control coordinate is i."""
        for name, column in self.h.items():
            if column == i:
                return name
        return None

    def selector(self, i: int) -> str | None:
        return selector(self, i)


def selector(perspective: GoodPerspective, i: int) -> str | None:
    """Largest nest member with a non-zero weight in column i that does not control i."""
    candidates = [n for n in perspective.members if perspective.weight(n, i) != 0 and perspective.h[n] != i]
    if not candidates:
        return None
    tops = [n for n in candidates if all(perspective.leq(o, n) for o in candidates)]
    if len(tops) != 1:
        raise InvalidPerspectiveError(f"Selector in column {i} is ambiguous: {candidates}.", "selector_chain")
    return tops[0]


def enumerate_perspectives(bs: BuildingSet, nest: Nest) -> list[GoodPerspective]:
    """Every good (h, s) over a nest, in lexicographic order."""
    members = nest.members
    options = []
    for name in members:
        g = bs.get(name)
        columns = [
            i
            for i in sorted(g.zero_set)
            if all(other == name or bs.get(other).weight(i) == 0 or bs.leq(other, name) for other in members)
        ]
        options.append(columns)
    out = []
    for columns in product(*options):
        if len(set(columns)) != len(columns):
            continue
        for signs in product((1, -1), repeat=len(members)):
            out.append(
                GoodPerspective(
                    building_set=bs,
                    nest=nest,
                    h=dict(zip(members, columns)),
                    s=dict(zip(members, signs)),
                )
            )
    return out


class PerspectiveDocument(VersionedSchema):
    """{"nest": [names], "h": {name: index}, "s": {name: 1 | -1}}."""

    nest: list[str] = Field(default_factory=list)
    h: dict[str, int] = Field(default_factory=dict)
    s: dict[str, int] = Field(default_factory=dict)

    def to_perspective(self, bs: BuildingSet) -> GoodPerspective:
        signs = self.s or {n: 1 for n in self.nest}
        return GoodPerspective.create(bs, self.nest, self.h, signs)

    @classmethod
    def from_perspective(cls, p: GoodPerspective) -> "PerspectiveDocument":
        return cls(nest=list(p.members), h=dict(p.h), s=dict(p.s))
