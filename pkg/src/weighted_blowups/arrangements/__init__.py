from .building import Arrangement, BuildingSet, arrangement, check_separated, factors
from .documents import BuildingSetDocument, ElementDocument
from .nests import (
    Nest,
    WeightedCheckReport,
    check_weighted_building_set,
    enumerate_flags,
    enumerate_nests,
    is_nest,
    nest_by_factors,
    nest_by_flags,
    nest_by_intersections,
)
from .subspace import WeightedSubspace
from .tableau import tableau_render

__all__ = [
    "Arrangement",
    "BuildingSet",
    "BuildingSetDocument",
    "ElementDocument",
    "Nest",
    "WeightedCheckReport",
    "WeightedSubspace",
    "arrangement",
    "check_separated",
    "check_weighted_building_set",
    "enumerate_flags",
    "enumerate_nests",
    "factors",
    "is_nest",
    "nest_by_factors",
    "nest_by_flags",
    "nest_by_intersections",
    "tableau_render",
]
