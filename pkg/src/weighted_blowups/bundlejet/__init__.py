from .jets import (
    Jet2,
    JetBlown2,
    JetOffsets,
    JetPair2,
    holonomic_predicate,
    jet_blow_down,
    jet_chart,
    jet_limit,
    jet_of,
    jet_offsets,
    jet_offsets_inverse,
    jet_section_pair,
)
from .model import (
    BundleLocalModel,
    BundleModel,
    BundleModelPoint,
    VerticalBlock,
    bundle_base_projection,
    bundle_blow_down,
    bundle_chart,
    bundle_local_model,
    jet_bundle_model,
    jet_pair_offsets_as_bundle,
)

__all__ = [
    "BundleLocalModel",
    "BundleModel",
    "BundleModelPoint",
    "Jet2",
    "JetBlown2",
    "JetOffsets",
    "JetPair2",
    "VerticalBlock",
    "bundle_base_projection",
    "bundle_blow_down",
    "bundle_chart",
    "bundle_local_model",
    "holonomic_predicate",
    "jet_blow_down",
    "jet_bundle_model",
    "jet_chart",
    "jet_limit",
    "jet_of",
    "jet_offsets",
    "jet_offsets_inverse",
    "jet_section_pair",
]
