from .forest import Forest, check_covering, controls, covering_forest, offset_fwd, offset_inv, subtree_root
from .indices import (
    IndexNest,
    enumerate_index_nests,
    factorize,
    fm_building_set,
    index_label,
    names_to_nest,
    parse_index_label,
)
from .limits import collision_nest, curve_limit, weighted_order
from .model import (
    FMModelPoint,
    FMProjectivePoint,
    RootPoint,
    ScreenBlock,
    check_fm_weighted,
    fm_blow_down,
    fm_chart,
    fm_projective_canonicalize,
    induced_diag_building_set,
)
from .screens import screens_render

__all__ = [
    "FMModelPoint",
    "FMProjectivePoint",
    "Forest",
    "IndexNest",
    "RootPoint",
    "ScreenBlock",
    "check_covering",
    "check_fm_weighted",
    "collision_nest",
    "controls",
    "covering_forest",
    "curve_limit",
    "enumerate_index_nests",
    "factorize",
    "fm_blow_down",
    "fm_building_set",
    "fm_chart",
    "fm_projective_canonicalize",
    "index_label",
    "induced_diag_building_set",
    "names_to_nest",
    "offset_fwd",
    "offset_inv",
    "parse_index_label",
    "screens_render",
    "subtree_root",
    "weighted_order",
]
