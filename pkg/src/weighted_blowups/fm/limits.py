"""Limits of polynomial curves of configurations in the FM model."""

import logging
from collections.abc import Sequence
from fractions import Fraction

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from ..errors import CollisionError, DimensionMismatchError
from ..jets.curves import PolynomialCurve
from ..jets.weights import WeightVector, weighted_unit_scale
from .forest import Forest, controls, covering_forest
from .indices import Index, IndexNest
from .model import FMModelPoint, RootPoint, ScreenBlock, block_weights

logger: logging.Logger = logging.getLogger(__name__)


def weighted_order(offset: PolynomialCurve, w: WeightVector) -> Fraction:
    """min over coordinates of ord(offset_i) / w_i."""
    orders = [
        Fraction(min(coeffs), w[i]) for i in range(offset.dim) if (coeffs := offset.coefficients(i))
    ]
    if not orders:
        raise CollisionError("Two points coincide along the whole curve.", "bulk_for_positive_t")
    return min(orders)


def _pairwise_orders(w: WeightVector, curves: Sequence[PolynomialCurve]) -> dict[tuple[int, int], Fraction]:
    out = {}
    for a in range(1, len(curves) + 1):
        for b in range(a + 1, len(curves) + 1):
            out[(a, b)] = weighted_order(curves[b - 1].minus(curves[a - 1]), w)
    return out


def collision_nest(w: WeightVector, curves: Sequence[PolynomialCurve]) -> tuple[IndexNest, dict[Index, Fraction]]:
    """Nest of groups colliding at t = 0, with the weighted order at which each group forms."""
    if any(c.dim != w.dim for c in curves):
        raise DimensionMismatchError(f"Curves must take values in R^{w.dim}.")
    kappa = _pairwise_orders(w, curves)
    levels: dict[Index, Fraction] = {}
    for threshold in sorted({k for k in kappa.values() if k > 0}):
        ds: DisjointSet = DisjointSet(range(1, len(curves) + 1))
        for (a, b), k in kappa.items():
            if k >= threshold:
                ds.merge(a, b)
        for group in ds.subsets():
            if len(group) >= 2:
                levels[tuple(sorted(group))] = threshold
    nest = IndexNest.of(len(curves), levels)
    return nest, {m: levels[m] for m in nest.members}


def curve_limit(
    w: WeightVector, curves: Sequence[PolynomialCurve], forest: Forest | None = None
) -> FMModelPoint:
    """The limit point at t = 0 of a curve of configurations that is in the bulk for t > 0."""
    nest, levels = collision_nest(w, curves)
    forest = forest or covering_forest(nest)
    ct = controls(forest, nest)
    m = w.dim
    blocks = []
    for member in nest.members:
        level = levels[member]
        leading = []
        for c in ct[member]:
            offset = curves[c - 1].minus(curves[forest.parent[c] - 1])
            for j in range(m):
                k = level * w[j]
                leading.append(float(offset.coefficient(j, int(k))) if k.denominator == 1 else 0.0)
        wn = block_weights(w, len(ct[member]))
        scale = weighted_unit_scale(leading, wn)
        values = np.asarray(leading) / scale ** np.asarray(wn.weights, dtype=float)
        blocks.append(ScreenBlock(member=member, controls=ct[member], values=tuple(values.tolist()), t=0.0))
    roots = tuple(
        RootPoint(index=r, coords=tuple(float(x) for x in curves[r - 1].at(Fraction(0)))) for r in forest.roots()
    )
    logger.debug("Curve limit nest %s at levels %s", nest.labels(), {k: str(v) for k, v in levels.items()})
    return FMModelPoint(weightseq=w, nest=nest, forest=forest, roots=roots, screens=tuple(blocks))
