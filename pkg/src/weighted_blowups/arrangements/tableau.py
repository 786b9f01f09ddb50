"""Weight tableaus: stacked boxes of weights over a nest."""

from collections.abc import Mapping

from ..errors import DomainError
from .building import BuildingSet
from .nests import Nest

EMPTY_CELL = "."


def nest_levels(bs: BuildingSet, nest: Nest) -> dict[str, int]:
    """Number of nest members strictly inside each member."""
    return {n: sum(1 for other in nest.members if bs.lt(other, n)) for n in nest.members}


def column_order(bs: BuildingSet, nest: Nest) -> list[int]:
    """Columns ordered so each box occupies a contiguous run sitting on the box below."""
    levels = nest_levels(bs, nest)
    zero_sets = {n: bs.get(n).zero_set for n in nest.members}
    order: list[int] = []
    placed: set[int] = set()

    def visit(name: str) -> None:
        children = [c for c in nest.members if bs.lt(name, c) and levels[c] == levels[name] + 1]
        for child in children:
            visit(child)
        for i in sorted(zero_sets[name] - placed):
            order.append(i)
            placed.add(i)

    for root in (n for n in nest.members if levels[n] == 0):
        visit(root)
    order.extend(i for i in range(bs.dim) if i not in placed)
    return order


def tableau_render(bs: BuildingSet, nest: Nest, h: Mapping[str, int] | None = None) -> str:
    """Text tableau: one line per level, top level first, then coordinate labels."""
    if not nest.members:
        return "(empty nest)"
    levels = nest_levels(bs, nest)
    order = column_order(bs, nest)
    position = {col: pos for pos, col in enumerate(order)}
    rows: dict[int, list[str]] = {}
    spans: dict[int, list[str]] = {}
    for level in sorted(set(levels.values())):
        cells = [EMPTY_CELL] * bs.dim
        owner: dict[int, str] = {}
        labels = []
        for name in (n for n in nest.members if levels[n] == level):
            g = bs.get(name)
            cols = sorted(position[i] for i in g.zero_set)
            if cols != list(range(cols[0], cols[-1] + 1)):
                raise DomainError(f"Box {name} cannot be placed contiguously.", "stackable_nest")
            for i in g.zero_set:
                if i in owner:
                    raise DomainError(
                        f"Incomparable boxes {owner[i]} and {name} share column {i}.", "stackable_nest"
                    )
                owner[i] = name
                text = str(g.weight(i))
                cells[position[i]] = f"[{text}]" if h is not None and h.get(name) == i else text
            labels.append(f"{name}[{cols[0]}..{cols[-1]}]")
        rows[level] = cells
        spans[level] = labels
    footer = [f"x{i}" for i in order]
    width = max(len(c) for c in footer + [c for cells in rows.values() for c in cells])
    prefix = max(len(f"row {k}") for k in rows)
    lines = []
    for level in sorted(rows, reverse=True):
        body = " ".join(c.rjust(width) for c in rows[level])
        lines.append(f"{f'row {level}'.ljust(prefix)} | {body} | {' '.join(spans[level])}")
    lines.append(f"{''.ljust(prefix)} | {' '.join(c.rjust(width) for c in footer)}")
    return "\n".join(lines)
