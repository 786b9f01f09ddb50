"""Text rendering of FM model points as trees of screens."""

from .indices import Index, index_label
from .model import FMModelPoint


def _fmt(values: tuple[float, ...]) -> str:
    return "(" + ", ".join(f"{x:.6g}" for x in values) + ")"


def screens_render(p: FMModelPoint) -> str:
    """One tree per forest root: the site, then nested screens with their controls."""
    m = p.weightseq.dim
    members = list(p.nest.members)

    def maximal_inside(outer: frozenset[int] | None, tree: frozenset[int]) -> list[Index]:
        inside = [n for n in members if frozenset(n) <= tree and (outer is None or frozenset(n) < outer)]
        return [n for n in inside if not any(frozenset(n) < frozenset(o) for o in inside)]

    lines: list[str] = []

    def emit(member: Index, tree: frozenset[int], depth: int) -> None:
        block = p.screen(member)
        pad = "  " * depth
        lines.append(f"{pad}screen {index_label(member)} t={block.t:.6g}")
        for c, row in block.rows(m).items():
            lines.append(f"{pad}  {c} <- {p.forest.parent[c]}: {_fmt(row)}")
        for inner in maximal_inside(frozenset(member), tree):
            emit(inner, tree, depth + 1)

    for root in p.roots:
        tree = p.forest.subtree(root.index)
        lines.append(f"site {root.index} at {_fmt(root.coords)}")
        for member in maximal_inside(None, tree):
            emit(member, tree, 1)
    return "\n".join(lines)
