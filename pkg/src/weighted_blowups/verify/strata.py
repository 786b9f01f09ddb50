"""Sampled checks of the stratification by control sets, and the control-set search over curves."""

import logging
import random
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

import sympy

from ..arrangements.building import BuildingSet
from ..arrangements.nests import is_nest
from ..blowup.building import control_set
from ..blowup.perspective import GoodPerspective
from ..common.numbers import to_sympy
from ..errors import DomainError
from .reports import ConjectureReport, ConjectureTrial, StratumReport, StratumViolation

logger: logging.Logger = logging.getLogger(__name__)

CornerSequence = list[tuple[Fraction, ...]]


def sample_sequences(
    perspective: GoodPerspective, n: int, seed: int, length: int = 6
) -> list[tuple[CornerSequence, tuple[Fraction, ...]]]:
    """Sequences y^(k) = y* + v/k in the corner model with their limits y*.

    Each control coordinate either sits at zero along the whole sequence, approaches zero, or stays positive.
    """
    rng = random.Random(seed)
    controls = set(perspective.h.values())
    out = []
    for _ in range(n):
        limit, step = [], []
        for i in range(perspective.dim):
            if i in controls:
                mode = rng.choice(("fixed", "falling", "positive"))
                limit.append(Fraction(0) if mode != "positive" else Fraction(rng.randint(1, 8), 4))
                step.append(Fraction(0) if mode == "fixed" else Fraction(rng.randint(1, 8), 4))
            else:
                limit.append(Fraction(rng.randint(-8, 8), 4))
                step.append(Fraction(rng.randint(-8, 8), 4))
        sequence = [tuple(a + b / k for a, b in zip(limit, step)) for k in range(1, length + 1)]
        out.append((sequence, tuple(limit)))
    return out


def stratum_closure(
    perspective: GoodPerspective, samples: Sequence[tuple[CornerSequence, Sequence[Any]]]
) -> StratumReport:
    """Sequences with a constant control set converge to points whose control set contains it."""
    report = StratumReport(samples=len(samples))
    for index, (sequence, limit) in enumerate(samples):
        sets = {control_set(perspective, y) for y in sequence}
        if len(sets) != 1:
            logger.warning("Sample %d has a varying control set; skipped", index)
            continue
        (along,) = sets
        at_limit = control_set(perspective, limit)
        if not set(along) <= set(at_limit):
            report.violations.append(
                StratumViolation(sample=index, sequence_controls=list(along), limit_controls=list(at_limit))
            )
    return report


def _random_vector_in(rng: random.Random, bs: BuildingSet, dim: int) -> list[sympy.Expr]:
    """A random integer combination of a random element's basis, or a generic vector."""
    if rng.random() < 0.5:
        g = rng.choice(bs.elements)
        rows = [[to_sympy(c) for c in row] for row in g.annihilator]
        basis = sympy.Matrix(rows).nullspace() if rows else [sympy.eye(dim)[:, i] for i in range(dim)]
        vec = sum((rng.randint(-3, 3) * b for b in basis), sympy.zeros(dim, 1))
        return list(vec)
    return [sympy.Integer(rng.randint(-3, 3)) for _ in range(dim)]


def curve_control_set(bs: BuildingSet, vectors: Sequence[Sequence[sympy.Expr]]) -> tuple[str, ...] | None:
    """Control set of the limit at 0 of t -> sum_k v_k t^k for trivially weighted elements.

    The component of H is its first v_k outside H; G is controlled unless some H inside G has that vector outside G.
    None when the curve stays inside an element.
    """
    leading: dict[str, Sequence[sympy.Expr]] = {}
    for g in bs.elements:
        first = next((v for v in vectors if not g.contains_point(v)), None)
        if first is None:
            return None
        leading[g.name] = first
    return tuple(
        g
        for g in bs.names
        if not any(bs.lt(h, g) and not bs.get(g).contains_point(leading[h]) for h in bs.names)
    )


def control_set_search(bs: BuildingSet, seed: int, trials: int = 40, degree: int = 3) -> ConjectureReport:
    """Control sets of limits of random polynomial curves through the origin, with whether each is a nest."""
    if not all(g.is_trivially_weighted() for g in bs.elements):
        raise DomainError("The curve search handles trivially weighted sets only.", "trivial_weights")
    rng = random.Random(seed)
    report = ConjectureReport(building_set=", ".join(bs.names))
    for _ in range(trials):
        vectors = [_random_vector_in(rng, bs, bs.dim) for _ in range(degree)]
        found = curve_control_set(bs, vectors)
        if found is None:
            continue
        report.trials.append(ConjectureTrial(control_set=list(found), is_nest=is_nest(bs, found)))
    logger.info(
        "Control-set search on %s: %d non-nests in %d trials", report.building_set, report.non_nests, len(report.trials)
    )
    return report
