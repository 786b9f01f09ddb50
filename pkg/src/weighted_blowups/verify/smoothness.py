"""One-sided finite-difference smoothness checks with Richardson ratios."""

import logging
import math
import random
from collections.abc import Callable, Sequence
from fractions import Fraction
from typing import Any

import sympy

from ..blowup.points import Bulk
from ..blowup.single import SingleChart, single_blow_down, single_chart_fwd, single_transition
from ..common.numbers import format_rational, to_sympy
from ..config import DEFAULT_SETTINGS, Settings
from ..jets.weights import WeightVector
from .reports import SmoothnessReport

logger: logging.Logger = logging.getLogger(__name__)

MapFn = Callable[[Sequence[sympy.Expr]], Sequence[Any]]

# The stencil only samples p + k*h*d for k >= 1, so maps need not be defined at p itself.
_STENCILS: dict[int, tuple[int, ...]] = {1: (-1, 1, 0), 2: (1, -2, 1)}
_PRECISION = 40


def _quotients(fn: MapFn, point: Sequence[sympy.Expr], direction: Sequence[sympy.Expr], h: Fraction, order: int):
    step = to_sympy(h)
    samples = [fn([p + k * step * d for p, d in zip(point, direction)]) for k in (1, 2, 3)]
    weights = _STENCILS[order]
    return [
        sum((c * to_sympy(s[i]) for c, s in zip(weights, samples)), sympy.Integer(0)) / step**order
        for i in range(len(samples[0]))
    ]


def richardson_ratio(d1: sympy.Expr, d2: sympy.Expr, d3: sympy.Expr, settings: Settings) -> float | None:
    """(D(h) - D(h/2)) / (D(h/2) - D(h/4)); None when both differences are negligible."""
    upper = float(sympy.N(d1 - d2, _PRECISION))
    lower = float(sympy.N(d2 - d3, _PRECISION))
    scale = max(1.0, abs(float(sympy.N(d3, _PRECISION))))
    if abs(upper) <= settings.float_tolerance * scale and abs(lower) <= settings.float_tolerance * scale:
        return None
    if lower == 0.0:
        return math.inf
    return upper / lower


def ratio_is_consistent(ratio: float | None, tolerance: float) -> bool:
    """Near 2^p for some integer p >= 1, as for a smooth map's forward-difference error."""
    if ratio is None:
        return True
    if not math.isfinite(ratio) or ratio <= 0:
        return False
    p = max(1, round(math.log2(ratio)))
    return abs(ratio - 2**p) <= tolerance * 2**p


def fd_smoothness(
    fn: MapFn,
    point: Sequence[Any],
    direction: Sequence[Any],
    orders: Sequence[int] = (1, 2),
    settings: Settings = DEFAULT_SETTINGS,
    name: str = "",
) -> SmoothnessReport:
    """Richardson consistency of one-sided difference quotients at steps h, h/2, h/4."""
    p = [to_sympy(x) for x in point]
    d = [to_sympy(x) for x in direction]
    h = settings.fd_base_step
    report = SmoothnessReport(
        name=name,
        point=tuple(str(x) for x in p),
        direction=tuple(str(x) for x in d),
    )
    for order in orders:
        quotients = [_quotients(fn, p, d, h / 2**k, order) for k in range(3)]
        ratios = []
        for i, (a, b, c) in enumerate(zip(*quotients)):
            ratio = richardson_ratio(a, b, c, settings)
            ratios.append(ratio)
            if not ratio_is_consistent(ratio, settings.richardson_tolerance):
                report.failures.append(f"order {order}, component {i}: ratio {ratio}")
        report.ratios[order] = ratios
    logger.debug("fd_smoothness %s: %d failures", name, len(report.failures))
    return report


def _random_rational(rng: random.Random, bound: int = 3, denominator: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound * denominator, bound * denominator), denominator)


def sample_transition_checks(
    seed: int, weights_from: Sequence[int] = (1, 2, 3), samples: int = 12, settings: Settings = DEFAULT_SETTINGS
) -> list[SmoothnessReport]:
    """Single-weighting transitions at points with y_h = 0, into the corner along e_h and a random direction."""
    rng = random.Random(seed)
    reports = []
    for k in range(samples):
        dim = rng.choice((2, 3))
        w = WeightVector(weights=tuple(rng.choice(tuple(weights_from)) for _ in range(dim)))
        h, ht = rng.sample(range(dim), 2)
        s, st = rng.choice((1, -1)), rng.choice((1, -1))
        y = [_random_rational(rng) for _ in range(dim)]
        y[h] = Fraction(0)
        y[ht] = st * Fraction(rng.randint(1, 12), 4)

        def transition(v: Sequence[sympy.Expr], w=w, h=h, s=s, ht=ht, st=st) -> tuple[sympy.Expr, ...]:
            return single_transition(w, (h, s), (ht, st), v)

        inward = [Fraction(int(i == h)) for i in range(dim)]
        tangent = [_random_rational(rng, 1) for _ in range(dim)]
        tangent[h] = Fraction(1)
        label = f"transition w={w.weights} ({h},{s})->({ht},{st}) at ({', '.join(map(format_rational, y))})"
        reports.append(fd_smoothness(transition, y, inward, settings=settings, name=f"{label} along e_{h}"))
        reports.append(fd_smoothness(transition, y, tangent, settings=settings, name=f"{label} oblique"))
    return reports


FORCED_SOURCE = SingleChart(w=WeightVector.of(1, 1, 0), h=0, s=1)
FORCED_TARGET = SingleChart(w=WeightVector.of(1, 2, 1), h=1, s=1)


def forced_component_map(a: Sequence[Any]) -> tuple[sympy.Expr, ...]:
    """Chart of the (1,1,0) blow-up followed by the (1,2,1) chart, through the bulk."""
    x = single_blow_down(FORCED_SOURCE, a)
    return single_chart_fwd(FORCED_TARGET, Bulk(coords=x))


def forced_component_check(settings: Settings = DEFAULT_SETTINGS) -> SmoothnessReport:
    """The composition at (0, 1, 0) along e_0; expected to fail."""
    return fd_smoothness(
        forced_component_map, (0, 1, 0), (1, 0, 0), settings=settings, name="forced (1,1,0) -> (1,2,1) chart"
    )
