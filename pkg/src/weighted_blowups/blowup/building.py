"""Charts, blow-down and strata of the blow-up along a weighted building set."""

import logging
from collections.abc import Sequence
from typing import Any

import sympy
from pydantic import BaseModel, ConfigDict, model_validator

from ..common.numbers import Exact, sign, to_sympy
from ..errors import ChartDomainError, DimensionMismatchError, DomainError
from .perspective import GoodPerspective
from .points import BlowupPoint, Bulk, Divisor
from .single import induced_blowdown_nested, single_chart_fwd, single_chart_inv

logger: logging.Logger = logging.getLogger(__name__)


class CornerPoint(BaseModel):
    """A point of the corner model R^m_h of a perspective."""

    model_config = ConfigDict(frozen=True)

    perspective: GoodPerspective
    y: tuple[Exact, ...]

    @model_validator(mode="after")
    def validate_corner(self) -> "CornerPoint":
        corner_vector(self.perspective, self.y)
        return self


def corner_vector(perspective: GoodPerspective, y: Sequence[Any]) -> tuple[sympy.Expr, ...]:
    if len(y) != perspective.dim:
        raise DimensionMismatchError(f"Point of length {len(y)} in dimension {perspective.dim}.")
    v = tuple(to_sympy(c) for c in y)
    for name in perspective.members:
        if sign(v[perspective.h[name]]) < 0:
            raise ChartDomainError(f"Control parameter of {name} is negative.", "corner_model")
    return v


def component_coords(perspective: GoodPerspective, y: Sequence[Any]) -> dict[str | None, tuple[sympy.Expr, ...]]:
    """x_{i:N} for every nest member N and the blow-down column N = None."""
    v = corner_vector(perspective, y)
    members = perspective.members
    controls = {n: v[perspective.h[n]] for n in members}
    table: dict[str | None, tuple[sympy.Expr, ...]] = {}
    for target in (*members, None):
        column = []
        for i in range(perspective.dim):
            if target is not None and i == perspective.h[target]:
                value = sympy.Mul(*(controls[n] for n in members if perspective.leq(n, target)))
            else:
                value = sympy.Mul(
                    *(
                        controls[n] ** perspective.weight(n, i)
                        for n in members
                        if target is None or perspective.weight(target, i) == 0 or perspective.lt(target, n)
                    )
                )
                owner = perspective.owner(i)
                value = value * (perspective.s[owner] if owner is not None else v[i])
            column.append(sympy.expand(value))
        table[target] = tuple(column)
    return table


def building_blow_down(perspective: GoodPerspective, y: Sequence[Any]) -> tuple[sympy.Expr, ...]:
    return component_coords(perspective, y)[None]


def _smallest_first(perspective: GoodPerspective, names: list[str]) -> list[str]:
    return sorted(names, key=lambda n: (-perspective.building_set.get(n).codim, perspective.members.index(n)))


def building_chart_inv(perspective: GoodPerspective, y: Sequence[Any]) -> BlowupPoint:
    """Reconstruct every component from corner coordinates."""
    table = component_coords(perspective, y)
    bs = perspective.building_set
    base = table[None]
    components: dict[str, Bulk | Divisor] = {
        name: single_chart_inv(perspective.chart(name), table[name]) for name in perspective.members
    }
    for g in bs.elements:
        if g.name in components:
            continue
        if not g.contains_point(base):
            components[g.name] = Bulk(coords=base)
            continue
        below = [n for n in perspective.members if perspective.leq(n, g.name)]
        for name in _smallest_first(perspective, below):
            try:
                components[g.name] = induced_blowdown_nested(
                    perspective.weights(name), g.weight_vector, components[name]
                )
                break
            except DomainError:
                continue
        else:
            raise ChartDomainError(f"No nest member induces the component of {g.name}.", "chart_domain")
    return BlowupPoint(components={name: components[name] for name in bs.names})


def building_chart_fwd(perspective: GoodPerspective, p: BlowupPoint) -> tuple[sympy.Expr, ...]:
    """Corner coordinates of a point in the perspective's chart domain."""
    bs = perspective.building_set
    if set(p.components) != set(bs.names):
        raise DimensionMismatchError("Point components do not match the building set.")
    base = p.base_point()
    local = {name: single_chart_fwd(perspective.chart(name), p.components[name]) for name in perspective.members}
    y = []
    for i in range(perspective.dim):
        chosen = perspective.selector(i)
        source = base if chosen is None else local[chosen]
        owner = perspective.owner(i)
        if owner is None:
            y.append(source[i])
            continue
        value = perspective.s[owner] * source[i]
        if sign(value) < 0:
            raise ChartDomainError(f"Control parameter of {owner} would be negative.", "chart_domain")
        y.append(value ** sympy.Rational(1, perspective.weight(owner, i)))
    y = tuple(sympy.expand(c) for c in y)
    if not building_chart_inv(perspective, y).equals(p):
        raise ChartDomainError("Point is not reproduced by the chart.", "chart_domain")
    logger.debug("Chart reconstruction verified for nest %s", perspective.members)
    return y


def building_transition(source: GoodPerspective, y: Sequence[Any], target: GoodPerspective) -> tuple[sympy.Expr, ...]:
    if source.building_set != target.building_set:
        raise DomainError("Perspectives over different building sets.", "same_building_set")
    return building_chart_fwd(target, building_chart_inv(source, y))


def control_set(perspective: GoodPerspective, y: Sequence[Any]) -> tuple[str, ...]:
    v = corner_vector(perspective, y)
    return tuple(n for n in perspective.members if sign(v[perspective.h[n]]) == 0)


def weak_singularity(perspective: GoodPerspective, y: Sequence[Any]) -> bool:
    """Some A < B in the control set has w_{B,h(B)} > 1."""
    controlled = control_set(perspective, y)
    return any(
        perspective.lt(a, b) and perspective.weight(b, perspective.h[b]) > 1
        for a in controlled
        for b in controlled
    )
