"""The FM local model: screens and controls over offset coordinates."""

import logging
from collections.abc import Sequence
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..arrangements.building import BuildingSet
from ..arrangements.nests import WeightedCheckReport, check_weighted_building_set
from ..arrangements.subspace import WeightedSubspace
from ..common.numbers import Float17, parse_float
from ..config import DEFAULT_SETTINGS, Settings
from ..errors import CollisionError, DimensionMismatchError, DomainError
from ..jets.weights import WeightVector, is_isotropic_under_sign, sign_normalized, weighted_unit_scale
from .forest import Forest, check_covering, controls, covering_forest, offset_fwd, offset_inv, subtree_root
from .indices import Index, IndexNest, coordinate_index, enumerate_index_nests, index_label

logger: logging.Logger = logging.getLogger(__name__)


class RootPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int = Field(..., ge=1)
    coords: tuple[Float17, ...]


class ScreenBlock(BaseModel):
    """Screen of one nest member: control offsets, row-major control x coordinate."""

    model_config = ConfigDict(frozen=True)

    member: Index
    controls: tuple[int, ...]
    values: tuple[Float17, ...]
    t: Float17 = Field(..., description="Control t_N")

    def rows(self, m: int) -> dict[int, tuple[float, ...]]:
        return {c: tuple(self.values[k * m : (k + 1) * m]) for k, c in enumerate(self.controls)}


class FMModelPoint(BaseModel):
    """A point of the FM local model."""

    model_config = ConfigDict(frozen=True)

    weightseq: WeightVector
    nest: IndexNest
    forest: Forest
    roots: tuple[RootPoint, ...]
    screens: tuple[ScreenBlock, ...]
    projective: bool = Field(False, description="Controls may be negative, classes up to the sign action")

    @model_validator(mode="after")
    def validate_point(self) -> "FMModelPoint":
        m = self.weightseq.dim
        if any(w < 1 for w in self.weightseq.weights):
            raise ValueError("FM weights must all be at least 1.")
        expected = controls(self.forest, self.nest)
        if {b.member for b in self.screens} != set(expected) or len(self.screens) != len(expected):
            raise ValueError("Screens must cover the nest members exactly once.")
        for block in self.screens:
            if block.controls != expected[block.member]:
                raise ValueError(f"Screen {index_label(block.member)} has controls {block.controls}.")
            if len(block.values) != len(block.controls) * m:
                raise ValueError(f"Screen {index_label(block.member)} needs {len(block.controls) * m} entries.")
            if abs(float(np.linalg.norm(block.values)) - 1.0) > 1e-9:
                raise ValueError(f"Screen {index_label(block.member)} is not a unit vector.")
            if block.t < 0 and not self.projective:
                raise ValueError(f"Negative control on {index_label(block.member)}.")
        if sorted(r.index for r in self.roots) != self.forest.roots():
            raise ValueError("Root coordinates must be given for exactly the forest roots.")
        if any(len(r.coords) != m for r in self.roots):
            raise ValueError(f"Root coordinates need {m} entries.")
        return self

    @property
    def s(self) -> int:
        return self.nest.s

    def screen(self, member: Sequence[int]) -> ScreenBlock:
        key = tuple(sorted(member))
        for block in self.screens:
            if block.member == key:
                return block
        raise DomainError(f"{index_label(key)} is not a nest member.", "member_of_nest")

    def with_control(self, member: Sequence[int], t: float) -> "FMModelPoint":
        key = tuple(sorted(member))
        blocks = tuple(b.model_copy(update={"t": t}) if b.member == key else b for b in self.screens)
        return self.model_copy(update={"screens": blocks})


def block_weights(w: WeightVector, count: int) -> WeightVector:
    """The weight sequence repeated once per control."""
    return WeightVector(weights=w.weights * count)


def fm_chart(
    weightseq: WeightVector,
    nest: IndexNest,
    config: Sequence[Sequence[Any]],
    forest: Forest | None = None,
) -> FMModelPoint:
    """Screens and controls of a bulk configuration."""
    forest = forest or covering_forest(nest)
    check_covering(forest, nest)
    m = weightseq.dim
    points = [[parse_float(x) for x in p] for p in config]
    if any(len(p) != m for p in points):
        raise DimensionMismatchError(f"Points must have {m} coordinates.")
    roots, offsets = offset_fwd(forest, points)
    ct = controls(forest, nest)
    scale: dict[Index, float] = {}
    blocks: dict[Index, ScreenBlock] = {}
    for member in sorted(nest.members, key=len, reverse=True):
        wn = block_weights(weightseq, len(ct[member]))
        block = np.concatenate([np.asarray(offsets[c], dtype=float) for c in ct[member]])
        if not np.any(block):
            raise CollisionError(f"Points collide inside {index_label(member)}.", "distinct_points")
        scale[member] = weighted_unit_scale(block, wn)
        above = nest.parent_member(member)
        t = scale[member] / scale[above] if above is not None else scale[member]
        screen = block / scale[member] ** np.asarray(wn.weights, dtype=float)
        blocks[member] = ScreenBlock(member=member, controls=ct[member], values=tuple(screen.tolist()), t=t)
    return FMModelPoint(
        weightseq=weightseq,
        nest=nest,
        forest=forest,
        roots=tuple(RootPoint(index=r, coords=tuple(float(x) for x in roots[r])) for r in sorted(roots)),
        screens=tuple(blocks[member] for member in nest.members),
    )


def cumulative_scale(p: FMModelPoint, member: Index) -> float:
    """Product of t over the member and every member above it."""
    total = 1.0
    current: Index | None = member
    while current is not None:
        total *= p.screen(current).t
        current = p.nest.parent_member(current)
    return total


def fm_blow_down(p: FMModelPoint) -> list[tuple[float, ...]]:
    """The configuration a model point represents."""
    m = p.weightseq.dim
    exps = np.asarray(p.weightseq.weights, dtype=float)
    offsets: dict[int, np.ndarray] = {}
    for block in p.screens:
        scale = cumulative_scale(p, block.member)
        for c, row in block.rows(m).items():
            offsets[c] = np.asarray(row, dtype=float) * scale**exps
    for child in p.forest.parent:
        offsets.setdefault(child, np.zeros(m))
    roots = {r.index: np.asarray(r.coords, dtype=float) for r in p.roots}
    return [tuple(float(x) for x in point) for point in offset_inv(p.forest, roots, offsets)]


def induced_diag_building_set(weightseq: WeightVector, nest: IndexNest, forest: Forest | None = None) -> BuildingSet:
    """Diagonals of the nest as coordinate subspaces in offset coordinates."""
    forest = forest or covering_forest(nest)
    check_covering(forest, nest)
    m = weightseq.dim
    elements = []
    for member in nest.members:
        top = subtree_root(forest, member)
        weights = {
            coordinate_index(l, j, m): weightseq[j] for l in member if l != top for j in range(m)
        }
        elements.append(WeightedSubspace.coordinate(index_label(member), nest.s * m, weights))
    return BuildingSet(dim=nest.s * m, elements=tuple(elements))


def check_fm_weighted(
    weightseq: WeightVector, s: int, settings: Settings = DEFAULT_SETTINGS
) -> dict[str, WeightedCheckReport]:
    """Run the weighted building-set check on the induced set of every non-empty index nest."""
    reports = {}
    for nest in enumerate_index_nests(s):
        if not nest.members:
            continue
        bs = induced_diag_building_set(weightseq, nest)
        reports[" ".join(nest.labels())] = check_weighted_building_set(bs, settings)
    return reports


class FMProjectivePoint(BaseModel):
    point: FMModelPoint
    singular_members: tuple[Index, ...] = ()


def fm_projective_canonicalize(p: FMModelPoint) -> FMProjectivePoint:
    """Canonical representative under (screen, t) ~ ((-1) ._w screen, -t)."""
    blocks = []
    singular = []
    for block in p.screens:
        wn = block_weights(p.weightseq, len(block.controls))
        values = tuple(block.values)
        t = block.t
        if t < 0:
            values = tuple(x * (-1) ** wi for x, wi in zip(values, wn.weights))
            t = -t
        elif t == 0:
            values = sign_normalized(values, wn)
            if is_isotropic_under_sign(values, wn):
                singular.append(block.member)
        blocks.append(block.model_copy(update={"values": values, "t": t}))
    if singular:
        logger.info("Orbifold-singular screens: %s", [index_label(m) for m in singular])
    point = p.model_copy(update={"screens": tuple(blocks), "projective": True})
    return FMProjectivePoint(point=point, singular_members=tuple(singular))
