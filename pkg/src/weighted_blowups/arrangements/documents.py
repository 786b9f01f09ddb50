"""JSON documents for building sets."""

from pydantic import BaseModel, Field, model_validator

from ..common.numbers import Rational
from ..versioning import VersionedSchema
from .building import BuildingSet
from .subspace import WeightedSubspace


class ElementDocument(BaseModel):
    """One element: coordinate zero set with weights, or general equations."""

    name: str = Field(..., min_length=1)
    zeros: list[int] = Field(default_factory=list, description="0-based coordinates cut to zero")
    weights: dict[str, int] = Field(default_factory=dict, description="Weight per zero coordinate, default 1")
    equations: list[list[Rational]] | None = Field(None, description="Rows of linear equations")

    @model_validator(mode="after")
    def validate_shape(self) -> "ElementDocument":
        if bool(self.zeros) == bool(self.equations):
            raise ValueError(f"Element {self.name} needs exactly one of 'zeros' or 'equations'.")
        if self.equations and self.weights:
            raise ValueError(f"Element {self.name}: equation elements are trivially weighted.")
        if len(set(self.zeros)) != len(self.zeros):
            raise ValueError(f"Element {self.name} repeats a zero coordinate.")
        for key, w in self.weights.items():
            if not key.isdigit() or int(key) not in self.zeros:
                raise ValueError(f"Element {self.name}: weight key {key!r} is not one of its zeros.")
            if w < 1:
                raise ValueError(f"Element {self.name}: weights must be positive.")
        return self


class BuildingSetDocument(VersionedSchema):
    """{"dim": m, "elements": [...]} with unique names."""

    dim: int = Field(..., ge=1)
    elements: list[ElementDocument] = Field(..., min_length=1)

    @model_validator(mode="after")
    def validate_elements(self) -> "BuildingSetDocument":
        names = [e.name for e in self.elements]
        if len(set(names)) != len(names):
            raise ValueError("Element names must be unique.")
        for e in self.elements:
            if any(not 0 <= i < self.dim for i in e.zeros):
                raise ValueError(f"Element {e.name} has a zero coordinate outside 0..{self.dim - 1}.")
            if e.equations and any(len(row) != self.dim for row in e.equations):
                raise ValueError(f"Element {e.name} has an equation of the wrong length.")
        return self

    def to_building_set(self) -> BuildingSet:
        elements = []
        for e in self.elements:
            if e.equations:
                elements.append(WeightedSubspace.from_equations(e.name, self.dim, e.equations))
            else:
                weights = {i: e.weights.get(str(i), 1) for i in e.zeros}
                elements.append(WeightedSubspace.coordinate(e.name, self.dim, weights))
        return BuildingSet(dim=self.dim, elements=tuple(elements))

    @classmethod
    def from_building_set(cls, bs: BuildingSet) -> "BuildingSetDocument":
        elements = []
        for g in bs.elements:
            if g.is_coordinate:
                zeros = sorted(g.zero_set)
                elements.append(
                    ElementDocument(name=g.name, zeros=zeros, weights={str(i): g.weight(i) for i in zeros})
                )
            else:
                elements.append(ElementDocument(name=g.name, equations=[list(r) for r in g.annihilator]))
        return cls(dim=bs.dim, elements=elements)
