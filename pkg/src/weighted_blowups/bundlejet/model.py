"""Local model of configurations in a bundle with horizontally trivial filtration."""

from collections.abc import Callable, Sequence
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..common.numbers import Float17, parse_float
from ..errors import DimensionMismatchError
from ..fm.forest import Forest, covering_forest, offset_inv
from ..fm.indices import Index, IndexNest
from ..fm.model import FMModelPoint, RootPoint, cumulative_scale, fm_blow_down, fm_chart
from ..jets.weights import WeightVector
from .jets import JetPair2, jet_offsets, sym_size

VerticalOffsets = Callable[[int, int], Sequence[Any]]


class BundleModel(BaseModel):
    """R^m x R^d with weights (1, ..., 1, w_1, ..., w_d)."""

    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1, description="Horizontal dimension")
    vweights: tuple[int, ...] = Field((), description="Positive vertical weights")

    @model_validator(mode="after")
    def validate_weights(self) -> "BundleModel":
        if any(w < 1 for w in self.vweights):
            raise ValueError("Vertical weights must be positive.")
        return self

    @property
    def d(self) -> int:
        return len(self.vweights)

    @property
    def horizontal(self) -> WeightVector:
        return WeightVector(weights=(1,) * self.m)

    @property
    def weight_sequence(self) -> tuple[int, ...]:
        return (1,) * self.m + self.vweights


class VerticalBlock(BaseModel):
    model_config = ConfigDict(frozen=True)

    member: Index
    controls: tuple[int, ...]
    values: tuple[Float17, ...] = Field(..., description="Rescaled vertical offsets, row-major control x fiber")


class BundleModelPoint(BaseModel):
    """Horizontal FM model point plus fibers over the roots and rescaled vertical offsets."""

    model_config = ConfigDict(frozen=True)

    model: BundleModel
    base: FMModelPoint
    root_fibers: tuple[RootPoint, ...]
    vertical: tuple[VerticalBlock, ...]

    @model_validator(mode="after")
    def validate_point(self) -> "BundleModelPoint":
        if self.base.weightseq != self.model.horizontal:
            raise ValueError("The base point must use trivial horizontal weights.")
        if [b.member for b in self.vertical] != [b.member for b in self.base.screens]:
            raise ValueError("Vertical blocks must match the horizontal screens.")
        for block in self.vertical:
            if len(block.values) != len(block.controls) * self.model.d:
                expected = len(block.controls) * self.model.d
                raise ValueError(f"Vertical block of {block.member} needs {expected} entries.")
        return self


def bundle_chart(
    model: BundleModel,
    nest: IndexNest,
    horizontal: Sequence[Sequence[Any]],
    vertical: Sequence[Sequence[Any]],
    forest: Forest | None = None,
    offsets: VerticalOffsets | None = None,
) -> BundleModelPoint:
    """Normalize by horizontal offsets only; vertical offsets scale by S_N^{w_j}.

    ``offsets(child, parent)`` supplies adapted vertical offsets; plain differences by default.
    """
    forest = forest or covering_forest(nest)
    if len(vertical) != len(horizontal) or any(len(v) != model.d for v in vertical):
        raise DimensionMismatchError(f"Each point needs a fiber of dimension {model.d}.")
    base = fm_chart(model.horizontal, nest, horizontal, forest)
    fibers = [np.asarray([parse_float(x) for x in v], dtype=float) for v in vertical]
    adapted = offsets or (lambda child, parent: fibers[child - 1] - fibers[parent - 1])
    exps = np.asarray(model.vweights, dtype=float)
    blocks = []
    for screen in base.screens:
        scale = cumulative_scale(base, screen.member)
        values: list[float] = []
        for c in screen.controls:
            raw = np.asarray([parse_float(x) for x in adapted(c, forest.parent[c])], dtype=float)
            values.extend((raw / scale**exps).tolist())
        blocks.append(VerticalBlock(member=screen.member, controls=screen.controls, values=tuple(values)))
    roots = tuple(RootPoint(index=r, coords=tuple(fibers[r - 1].tolist())) for r in forest.roots())
    return BundleModelPoint(model=model, base=base, root_fibers=roots, vertical=tuple(blocks))


def bundle_blow_down(p: BundleModelPoint) -> tuple[list[tuple[float, ...]], list[tuple[float, ...]]]:
    """Horizontal configuration and fibers, recomposing plain vertical differences."""
    d = p.model.d
    exps = np.asarray(p.model.vweights, dtype=float)
    offsets: dict[int, np.ndarray] = {}
    for block in p.vertical:
        scale = cumulative_scale(p.base, block.member)
        for k, c in enumerate(block.controls):
            offsets[c] = np.asarray(block.values[k * d : (k + 1) * d], dtype=float) * scale**exps
    for child in p.base.forest.parent:
        offsets.setdefault(child, np.zeros(d))
    roots = {r.index: np.asarray(r.coords, dtype=float) for r in p.root_fibers}
    fibers = offset_inv(p.base.forest, roots, offsets)
    return fm_blow_down(p.base), [tuple(float(x) for x in f) for f in fibers]


def bundle_base_projection(p: BundleModelPoint) -> FMModelPoint:
    return p.base


class BundleLocalModel(BaseModel):
    """Forward and backward maps of the local model for a fixed nest and forest."""

    model_config = ConfigDict(frozen=True)

    model: BundleModel
    nest: IndexNest
    forest: Forest

    def forward(self, horizontal: Sequence[Sequence[Any]], vertical: Sequence[Sequence[Any]]) -> BundleModelPoint:
        return bundle_chart(self.model, self.nest, horizontal, vertical, self.forest)

    def backward(self, p: BundleModelPoint) -> tuple[list[tuple[float, ...]], list[tuple[float, ...]]]:
        return bundle_blow_down(p)


def bundle_local_model(model: BundleModel, nest: IndexNest, forest: Forest | None = None) -> BundleLocalModel:
    return BundleLocalModel(model=model, nest=nest, forest=forest or covering_forest(nest))


def jet_bundle_model(m: int) -> BundleModel:
    """J^2(R^m, R) over R^m: y has weight 3, y' weight 2, y'' weight 1."""
    return BundleModel(m=m, vweights=(3,) + (2,) * m + (1,) * sym_size(m))


def jet_pair_offsets_as_bundle(pair: JetPair2) -> BundleModelPoint:
    """The jet pair in the bundle model, with jet offsets as the adapted vertical offsets."""
    model = jet_bundle_model(pair.m)
    o = jet_offsets(pair)
    a = pair.first
    horizontal = [[float(x) for x in a.x], [float(x) for x in pair.second.x]]
    vertical = [[float(v) for v in (a.y, *a.yp, *a.ypp)], [0.0] * model.d]
    adapted = [float(v) for v in (o.dy, *o.dyp, *o.dypp)]
    nest = IndexNest.of(2, [(1, 2)])
    return bundle_chart(model, nest, horizontal, vertical, offsets=lambda child, parent: adapted)
