from .alignment import AlignmentResult, check_uniform_alignment, intersect_standard
from .filtration import (
    clean_intersection_holds,
    conormal_basis,
    factors_through_lower_degrees,
    filtration_generators,
    ideal_contains,
    linearized_ranks,
    product_generators,
)

__all__ = [
    "AlignmentResult",
    "check_uniform_alignment",
    "clean_intersection_holds",
    "conormal_basis",
    "factors_through_lower_degrees",
    "filtration_generators",
    "ideal_contains",
    "intersect_standard",
    "linearized_ranks",
    "product_generators",
]
