"""Necessary conditions for a tuple of components to be a point of the blow-up."""

import logging
from itertools import permutations

from ..arrangements.building import BuildingSet
from ..blowup.points import BlowupPoint, components_equal
from ..blowup.single import induced_blowdown_nested
from ..errors import DomainError
from .reports import CoherenceReport

logger: logging.Logger = logging.getLogger(__name__)


def coherence(bs: BuildingSet, p: BlowupPoint) -> CoherenceReport:
    """Common base point, and G's component inducing H's wherever G is inside H and the map is defined."""
    witnesses: list[str] = []
    try:
        p.base_point()
    except DomainError as exc:
        return CoherenceReport(coherent=False, witnesses=[f"base point: {exc}"])
    checked = 0
    for small, big in permutations(bs.names, 2):
        if not bs.leq(small, big):
            continue
        try:
            induced = induced_blowdown_nested(
                bs.get(small).weight_vector, bs.get(big).weight_vector, p.components[small]
            )
        except DomainError:
            continue
        checked += 1
        if not components_equal(induced, p.components[big]):
            witnesses.append(f"{small} -> {big}")
    logger.debug("Coherence: %d pairs checked, %d witnesses", checked, len(witnesses))
    return CoherenceReport(coherent=not witnesses, witnesses=witnesses, pairs_checked=checked)
