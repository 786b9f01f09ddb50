from .building import (
    CornerPoint,
    building_blow_down,
    building_chart_fwd,
    building_chart_inv,
    building_transition,
    component_coords,
    control_set,
    weak_singularity,
)
from .perspective import GoodPerspective, PerspectiveDocument, enumerate_perspectives, selector
from .points import BlowupPoint, Bulk, Divisor, same_class
from .projective import ProjectiveClass, projective_canonicalize, projective_is_singular
from .single import (
    SingleChart,
    induced_blowdown_nested,
    single_blow_down,
    single_chart_fwd,
    single_chart_inv,
    single_transition,
)

__all__ = [
    "BlowupPoint",
    "Bulk",
    "CornerPoint",
    "Divisor",
    "GoodPerspective",
    "PerspectiveDocument",
    "ProjectiveClass",
    "SingleChart",
    "building_blow_down",
    "building_chart_fwd",
    "building_chart_inv",
    "building_transition",
    "component_coords",
    "control_set",
    "enumerate_perspectives",
    "induced_blowdown_nested",
    "projective_canonicalize",
    "projective_is_singular",
    "same_class",
    "selector",
    "single_blow_down",
    "single_chart_fwd",
    "single_chart_inv",
    "single_transition",
    "weak_singularity",
]
