"""Seeded verification suites."""

import logging
import random
from itertools import combinations

import sympy

from ..arrangements.building import BuildingSet, is_separated
from ..arrangements.nests import nest_by_factors, nest_by_flags, nest_by_intersections
from ..arrangements.subspace import WeightedSubspace
from ..blowup.building import control_set
from ..config import DEFAULT_SETTINGS, Settings
from ..enums import ReportStatus, SuiteKind
from ..fm.indices import enumerate_index_nests, fm_building_set
from . import samples
from .nests import NestAgreement, compare_nests
from .reports import CheckResult, SmoothnessReport, VerificationReport
from .smoothness import fd_smoothness, forced_component_check, sample_transition_checks
from .strata import control_set_search, sample_sequences, stratum_closure

logger: logging.Logger = logging.getLogger(__name__)

RANDOM_NEST_SETS = 200
STRATUM_SEQUENCES = 50


def _status(ok: bool) -> ReportStatus:
    return ReportStatus.PASS if ok else ReportStatus.FAIL


def _smoothness_result(name: str, report: SmoothnessReport, expect_pass: bool = True) -> CheckResult:
    detail = "smooth" if report.passed else "; ".join(report.failures)
    return CheckResult(
        name=name,
        status=_status(report.passed == expect_pass),
        detail=detail if expect_pass else f"expected failure: {detail}",
        data={"ratios": {str(k): [None if r is None else float(r) for r in v] for k, v in report.ratios.items()}},
    )


def smoothness_checks(seed: int, settings: Settings) -> list[CheckResult]:
    out = []
    transitions = sample_transition_checks(seed, settings=settings)
    failed = [r.name for r in transitions if not r.passed]
    out.append(
        CheckResult(
            name="single transitions across y_h = 0",
            status=_status(not failed),
            detail=f"{len(transitions) - len(failed)}/{len(transitions)} passed",
            data={"failed": failed},
        )
    )
    cubic = fd_smoothness(lambda v: (v[0] ** 3 - v[0] * v[1], v[1] ** 2), (1, 2), (1, -1), settings=settings)
    out.append(_smoothness_result("polynomial map", cubic))
    root = fd_smoothness(lambda v: (sympy.sqrt(v[0]),), (0,), (1,), settings=settings)
    out.append(_smoothness_result("square root at 0", root, expect_pass=False))
    out.append(_smoothness_result("forced chart through the misaligned point", forced_component_check(settings), False))
    return out


def random_coordinate_set(rng: random.Random, dim: int = 4) -> BuildingSet:
    zero_sets: set[frozenset[int]] = set()
    for _ in range(rng.randint(2, 4)):
        zero_sets.add(frozenset(rng.sample(range(dim), rng.randint(1, dim))))
    ordered = sorted(zero_sets, key=lambda z: (len(z), sorted(z)))
    return BuildingSet(
        dim=dim,
        elements=tuple(WeightedSubspace.coordinate(f"G{k + 1}", dim, sorted(z)) for k, z in enumerate(ordered)),
    )


def characterizations_agree(bs: BuildingSet) -> bool:
    """The factor, flag and intersection characterizations give the same nests."""
    for size in range(len(bs.names) + 1):
        for names in combinations(bs.names, size):
            answers = {nest_by_factors(bs, names), nest_by_intersections(bs, names), nest_by_flags(bs, names)}
            if len(answers) != 1:
                return False
    return True


def nest_checks(seed: int, settings: Settings) -> list[CheckResult]:
    out = []
    fixed = {
        "two planes": samples.two_planes(),
        "three planes": samples.three_planes(),
        "two axes": samples.two_axes(),
        "FM s=3": fm_building_set(3),
        "FM s=4": fm_building_set(4),
        "FM s=5": fm_building_set(5),
    }
    agreements: dict[str, NestAgreement] = {}
    for name, bs in fixed.items():
        cap = max(settings.nest_cap, len(bs.elements))
        agreement = agreements[name] = compare_nests(bs, cap=cap, settings=settings)
        out.append(
            CheckResult(
                name=f"flag oracle vs enumeration: {name}",
                status=_status(agreement.agree),
                detail=f"{len(agreement.oracle)} nests, {agreement.flags} flags",
            )
        )
    for s in (3, 4, 5):
        count = len(agreements[f"FM s={s}"].enumerated)
        brute = len(enumerate_index_nests(s))
        out.append(
            CheckResult(name=f"FM s={s} nest count", status=_status(count == brute), detail=f"{count} vs {brute}")
        )
    rng = random.Random(seed)
    tried, disagreements = 0, 0
    while tried < RANDOM_NEST_SETS:
        bs = random_coordinate_set(rng)
        if not is_separated(bs):
            continue
        tried += 1
        disagreements += not characterizations_agree(bs)
    out.append(
        CheckResult(
            name="nest characterizations on random separated sets",
            status=_status(disagreements == 0),
            detail=f"{disagreements} disagreements in {tried} sets",
        )
    )
    return out


def strata_checks(seed: int, settings: Settings) -> list[CheckResult]:
    out = []
    for name, perspective in (
        ("nested pair", samples.nested_pair_perspective()),
        ("cusp pair", samples.cusp_pair_perspective()),
    ):
        report = stratum_closure(perspective, sample_sequences(perspective, STRATUM_SEQUENCES, seed))
        out.append(
            CheckResult(
                name=f"stratum closure: {name}",
                status=_status(report.passed),
                detail=f"{len(report.violations)} violations in {report.samples} samples",
            )
        )
        origin = control_set(perspective, [0] * perspective.dim)
        out.append(
            CheckResult(
                name=f"control set at the chart origin: {name}",
                status=_status(origin == perspective.members),
                detail=", ".join(origin),
            )
        )
    for name, bs in (("three planes", samples.three_planes()), ("two axes", samples.two_axes())):
        search = control_set_search(bs, seed)
        out.append(
            CheckResult(
                name=f"control sets of curve limits: {name}",
                status=ReportStatus.SKIPPED,
                detail=f"recorded only; {search.non_nests} of {len(search.trials)} control sets are not nests",
                data=search.model_dump(),
            )
        )
    return out


_SUITES = {
    SuiteKind.SMOOTHNESS: smoothness_checks,
    SuiteKind.NESTS: nest_checks,
    SuiteKind.STRATA: strata_checks,
}


def run_suite(
    kind: SuiteKind | str, seed: int | None = None, settings: Settings = DEFAULT_SETTINGS
) -> VerificationReport:
    kind = SuiteKind(kind)
    seed = settings.seed if seed is None else seed
    selected = list(_SUITES) if kind == SuiteKind.ALL else [kind]
    checks: list[CheckResult] = []
    for suite in selected:
        logger.info("Running %s checks with seed %d", suite.value, seed)
        checks.extend(_SUITES[suite](seed, settings))
    report = VerificationReport(kind=kind, seed=seed, checks=checks)
    if not report.passed:
        logger.warning("%d verification checks failed", len(report.failures()))
    return report
