"""Covering forests of index nests and the root/offset coordinate change."""

import logging
from collections.abc import Mapping, Sequence
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import DimensionMismatchError, ForestError
from .indices import Index, IndexNest, index_label

logger: logging.Logger = logging.getLogger(__name__)


class Forest(BaseModel):
    """A parent map on {1..s}; nodes without a parent are roots."""

    model_config = ConfigDict(frozen=True)

    s: int = Field(..., ge=1)
    parent: dict[int, int] = Field(default_factory=dict, description="child -> parent")

    @model_validator(mode="after")
    def validate_acyclic(self) -> "Forest":
        for child, par in self.parent.items():
            if not (1 <= child <= self.s and 1 <= par <= self.s):
                raise ValueError(f"Edge {child}->{par} leaves 1..{self.s}.")
            if child == par:
                raise ValueError(f"Node {child} is its own parent.")
        for start in self.parent:
            seen = {start}
            node = start
            while node in self.parent:
                node = self.parent[node]
                if node in seen:
                    raise ValueError(f"Cycle through node {start}.")
                seen.add(node)
        return self

    @classmethod
    def from_parents(cls, s: int, parent: Mapping[int, int]) -> "Forest":
        return cls(s=s, parent=dict(parent))

    def roots(self) -> list[int]:
        return [k for k in range(1, self.s + 1) if k not in self.parent]

    def children(self, k: int) -> list[int]:
        return sorted(c for c, p in self.parent.items() if p == k)

    def root_of(self, k: int) -> int:
        while k in self.parent:
            k = self.parent[k]
        return k

    def subtree(self, k: int) -> frozenset[int]:
        """k together with all its descendants."""
        out = {k}
        stack = [k]
        while stack:
            for c in self.children(stack.pop()):
                out.add(c)
                stack.append(c)
        return frozenset(out)

    def topological(self) -> list[int]:
        """Nodes ordered so that parents precede children."""
        order: list[int] = []
        for r in self.roots():
            stack = [r]
            while stack:
                node = stack.pop()
                order.append(node)
                stack.extend(reversed(self.children(node)))
        return order


def subtree_root(forest: Forest, member: Index) -> int | None:
    """Top node of the member when it is a connected subtree, else None."""
    target = frozenset(member)
    tops = [o for o in member if forest.parent.get(o) not in target]
    return tops[0] if len(tops) == 1 else None


def check_covering(forest: Forest, nest: IndexNest) -> None:
    """Every member is a connected subtree, and every node with children roots a member subtree."""
    if forest.s != nest.s:
        raise DimensionMismatchError(f"Forest on {forest.s} points against a nest on {nest.s}.")
    for member in nest.members:
        if subtree_root(forest, member) is None:
            raise ForestError(f"Member {index_label(member)} is not a subtree of the forest.", "member_is_subtree")
    sets = set(nest.sets())
    for k in range(1, forest.s + 1):
        if forest.children(k) and forest.subtree(k) not in sets:
            raise ForestError(f"Node {k} has children but its subtree is not a member.", "inner_subtree_is_member")


def covering_forest(nest: IndexNest, prefer: Mapping[Any, int] | None = None) -> Forest:
    """Deterministic covering forest, built by merging members from small to large.

    Within each member the remaining roots hang below one chosen root: the ``prefer``
    entry for that member (keyed by index tuple, label or digits such as 123) when given, else the smallest.
    """
    labels = {_label_key(k): v for k, v in (prefer or {}).items()}
    parent: dict[int, int] = {}
    for member in nest.members:
        roots = [k for k in member if k not in parent]
        choice = labels.get(index_label(member))
        if choice is not None and choice not in roots:
            raise ForestError(
                f"Preferred root {choice} is not a free root of {index_label(member)}.", "preferred_root_available"
            )
        top = choice if choice is not None else min(roots)
        for k in roots:
            if k != top:
                parent[k] = top
    forest = Forest(s=nest.s, parent=parent)
    logger.debug("Covering forest for %s: %s", nest.labels(), parent)
    return forest


def controls(forest: Forest, nest: IndexNest) -> dict[Index, tuple[int, ...]]:
    """Ct_N: non-roots l whose pair {l, parent(l)} is first contained in N."""
    check_covering(forest, nest)
    out: dict[Index, list[int]] = {m: [] for m in nest.members}
    for child, par in sorted(forest.parent.items()):
        containing = nest.containing((child, par))
        if not containing:
            raise ForestError(f"Edge {child}->{par} lies in no member.", "edge_in_member")
        out[containing[0]].append(child)
    return {m: tuple(v) for m, v in out.items()}


def offset_fwd(forest: Forest, config: Sequence[Sequence[Any]]) -> tuple[dict[int, np.ndarray], dict[int, np.ndarray]]:
    """Split a configuration into root positions and parent offsets."""
    points = _as_points(forest, config)
    roots = {r: points[r - 1] for r in forest.roots()}
    offsets = {c: points[c - 1] - points[p - 1] for c, p in forest.parent.items()}
    return roots, offsets


def offset_inv(
    forest: Forest, roots: Mapping[int, Sequence[Any]], offsets: Mapping[int, Sequence[Any]]
) -> list[np.ndarray]:
    """Rebuild the configuration by summing offsets down from the roots."""
    points: dict[int, np.ndarray] = {}
    for node in forest.topological():
        if node in forest.parent:
            points[node] = points[forest.parent[node]] + np.asarray(offsets[node], dtype=object)
        else:
            points[node] = np.asarray(roots[node], dtype=object)
    return [points[k] for k in range(1, forest.s + 1)]


def _as_points(forest: Forest, config: Sequence[Sequence[Any]]) -> list[np.ndarray]:
    if len(config) != forest.s:
        raise DimensionMismatchError(f"Expected {forest.s} points, got {len(config)}.")
    points = [np.asarray(list(p), dtype=object) for p in config]
    if len({p.shape for p in points}) > 1:
        raise DimensionMismatchError("Points of different dimensions.")
    return points


def _label_key(key: Any) -> str:
    if isinstance(key, (tuple, list, frozenset, set)):
        return index_label(key)
    return str(key)
