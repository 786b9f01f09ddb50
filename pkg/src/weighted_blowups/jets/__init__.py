from .curves import PolynomialCurve, TruncatedCurve, in_weighting
from .normal import NormalVector, normal_from_curve, normal_induced
from .polynomials import Monomial, Polynomial, lift
from .weights import WeightVector, weighted_action, weighted_unit_scale

__all__ = [
    "Monomial",
    "NormalVector",
    "Polynomial",
    "PolynomialCurve",
    "TruncatedCurve",
    "WeightVector",
    "in_weighting",
    "lift",
    "normal_from_curve",
    "normal_induced",
    "weighted_action",
    "weighted_unit_scale",
]
