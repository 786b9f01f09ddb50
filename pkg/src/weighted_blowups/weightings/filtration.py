"""Structure filtration of standard weightings as monomial ideals."""

from collections.abc import Iterable, Iterator
from itertools import product
from math import ceil

from sympy.polys.monomials import monomial_divides, monomial_mul

from ..jets.weights import WeightVector
from .alignment import intersect_standard

Multi = tuple[int, ...]


def _dot(alpha: Multi, w: WeightVector) -> int:
    return sum(a * wi for a, wi in zip(alpha, w.weights))


def _candidates(w: WeightVector, i: int) -> Iterator[Multi]:
    ranges = [range(ceil(i / wj) + 1) if wj > 0 else range(1) for wj in w.weights]
    return product(*ranges)


def _minimal(alphas: Iterable[Multi]) -> set[Multi]:
    pool = sorted(set(alphas), key=lambda a: (sum(a), a))
    kept: list[Multi] = []
    for a in pool:
        if not any(monomial_divides(b, a) for b in kept):
            kept.append(a)
    return set(kept)


def filtration_generators(w: WeightVector, i: int) -> set[Multi]:
    """Minimal exponents alpha with alpha.w >= i supported on positive weights."""
    if i <= 0:
        return {(0,) * w.dim}
    return _minimal(a for a in _candidates(w, i) if _dot(a, w) >= i)


def conormal_basis(w: WeightVector, i: int) -> set[Multi]:
    """Exponents alpha with alpha.w == i supported on positive weights."""
    return {a for a in _candidates(w, i) if _dot(a, w) == i}


def linearized_ranks(w: WeightVector) -> dict[int, int]:
    """Multiplicity of each positive weight."""
    ranks: dict[int, int] = {}
    for wi in w.weights:
        if wi > 0:
            ranks[wi] = ranks.get(wi, 0) + 1
    return dict(sorted(ranks.items()))


def ideal_contains(generators: Iterable[Multi], alpha: Multi) -> bool:
    """Membership of x^alpha in the monomial ideal spanned by the generators."""
    return any(monomial_divides(g, alpha) for g in generators)


def monomials_up_to(m: int, degree_bound: int) -> Iterator[Multi]:
    for alpha in product(range(degree_bound + 1), repeat=m):
        if sum(alpha) <= degree_bound:
            yield alpha


def product_generators(w1: WeightVector, w2: WeightVector, i: int) -> set[Multi]:
    """Generators of the sum over i1 + i2 = i of the products of filtration ideals."""
    gens: set[Multi] = set()
    for i1 in range(i + 1):
        for g1 in filtration_generators(w1, i1):
            for g2 in filtration_generators(w2, i - i1):
                gens.add(monomial_mul(g1, g2))
    return _minimal(gens)


def ideals_agree(gens_a: set[Multi], gens_b: set[Multi], m: int, degree_bound: int) -> bool:
    """Same membership for every monomial of total degree <= degree_bound."""
    return all(ideal_contains(gens_a, a) == ideal_contains(gens_b, a) for a in monomials_up_to(m, degree_bound))


def clean_intersection_holds(w1: WeightVector, w2: WeightVector, i: int, degree_bound: int = 8) -> bool:
    """Degree-i ideal of max(w1, w2) equals the product ideal of w1 and w2."""
    meet = intersect_standard(w1, w2)
    return ideals_agree(filtration_generators(meet, i), product_generators(w1, w2, i), w1.dim, degree_bound)


def factors_through_lower_degrees(w: WeightVector, i: int) -> bool:
    """Every degree-i generator lies in the ideal of products of degrees i1 + i2 = i, both positive."""
    lower: set[Multi] = set()
    for i1 in range(1, i):
        for g1 in filtration_generators(w, i1):
            for g2 in filtration_generators(w, i - i1):
                lower.add(monomial_mul(g1, g2))
    return all(ideal_contains(lower, g) for g in filtration_generators(w, i))


def is_minimal_generator_set(w: WeightVector, i: int, gens: set[Multi]) -> bool:
    """Each generator meets degree i and no proper divisor does."""
    for g in gens:
        if _dot(g, w) < i:
            return False
        for j, gj in enumerate(g):
            if gj == 0:
                continue
            smaller = g[:j] + (gj - 1,) + g[j + 1 :]
            if _dot(smaller, w) >= i:
                return False
    return True
