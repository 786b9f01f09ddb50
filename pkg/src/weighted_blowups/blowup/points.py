"""Components of points in a blow-up: bulk points and exceptional-divisor classes."""

from collections.abc import Mapping
from typing import Annotated, Literal

import sympy
from pydantic import BaseModel, ConfigDict, Field

from ..common.numbers import Exact, exact_equal, sign, to_sympy
from ..errors import DimensionMismatchError, DomainError
from ..jets.normal import NormalVector


class Bulk(BaseModel):
    """A point away from the exceptional divisor."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["bulk"] = "bulk"
    coords: tuple[Exact, ...]

    def base_point(self) -> tuple[sympy.Expr, ...]:
        return self.coords


class Divisor(BaseModel):
    """A point of the exceptional divisor: positive-ray class of a weighted normal vector."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["divisor"] = "divisor"
    normal: NormalVector

    def base_point(self) -> tuple[sympy.Expr, ...]:
        return self.normal.base_point()


Component = Annotated[Bulk | Divisor, Field(discriminator="kind")]


def same_class(a: NormalVector, b: NormalVector) -> bool:
    """a and b differ by the weighted action of a positive scalar."""
    if a.weight != b.weight:
        return False
    w = a.weight
    for i in range(w.dim):
        if w[i] == 0 and not exact_equal(a.coords[i], b.coords[i]):
            return False
    pivot = next((i for i in w.support if not exact_equal(a.coords[i], 0)), None)
    if pivot is None:
        return all(exact_equal(b.coords[i], 0) for i in w.support)
    ratio = to_sympy(b.coords[pivot]) / to_sympy(a.coords[pivot])
    if sign(ratio) <= 0:
        return False
    lam = ratio ** sympy.Rational(1, w[pivot])
    return all(exact_equal(b.coords[i], lam ** w[i] * to_sympy(a.coords[i])) for i in w.support)


def components_equal(a: Bulk | Divisor, b: Bulk | Divisor) -> bool:
    if isinstance(a, Bulk) and isinstance(b, Bulk):
        return len(a.coords) == len(b.coords) and all(exact_equal(x, y) for x, y in zip(a.coords, b.coords))
    if isinstance(a, Divisor) and isinstance(b, Divisor):
        return same_class(a.normal, b.normal)
    return False


class BlowupPoint(BaseModel):
    """One component per building-set element, all over a common base point."""

    model_config = ConfigDict(frozen=True)

    components: dict[str, Component]

    @classmethod
    def of(cls, components: Mapping[str, Bulk | Divisor]) -> "BlowupPoint":
        point = cls(components=dict(components))
        point.base_point()
        return point

    def base_point(self) -> tuple[sympy.Expr, ...]:
        """Common blow-down of all components."""
        bases = [c.base_point() for c in self.components.values()]
        if not bases:
            raise DomainError("A blow-up point needs at least one component.", "nonempty_components")
        first = bases[0]
        for other in bases[1:]:
            if len(other) != len(first):
                raise DimensionMismatchError("Components of different dimension.")
            if not all(exact_equal(x, y) for x, y in zip(first, other)):
                raise DomainError("Components do not share a base point.", "common_base_point")
        return first

    def on_divisor(self) -> tuple[str, ...]:
        return tuple(name for name, c in self.components.items() if isinstance(c, Divisor))

    def equals(self, other: "BlowupPoint") -> bool:
        if set(self.components) != set(other.components):
            return False
        return all(components_equal(c, other.components[name]) for name, c in self.components.items())
