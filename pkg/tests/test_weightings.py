"""Tests for filtrations, conormal bases and alignment of standard weightings."""

import random

import pytest

from weighted_blowups.errors import DimensionMismatchError
from weighted_blowups.jets.weights import WeightVector
from weighted_blowups.weightings.alignment import check_uniform_alignment, intersect_standard
from weighted_blowups.weightings.filtration import (
    clean_intersection_holds,
    conormal_basis,
    factors_through_lower_degrees,
    filtration_generators,
    ideal_contains,
    is_minimal_generator_set,
    linearized_ranks,
)


class TestFiltration:
    """Tests for filtration_generators."""

    def test_mixed_weights(self):
        """Test degree 3 of (0,1,2): y^3, yz, z^2."""
        assert filtration_generators(WeightVector.of(0, 1, 2), 3) == {(0, 3, 0), (0, 1, 1), (0, 0, 2)}

    def test_degree_zero_is_unit_ideal(self):
        """Test that degree 0 is everything."""
        assert filtration_generators(WeightVector.of(0, 1, 2), 0) == {(0, 0, 0)}

    def test_trivial_weights(self):
        """Test degree 2 of (1,1): all quadratic monomials."""
        assert filtration_generators(WeightVector.of(1, 1), 2) == {(2, 0), (1, 1), (0, 2)}

    def test_generators_are_minimal(self):
        """Test the minimality check against the computed set."""
        w = WeightVector.of(0, 1, 2)
        assert is_minimal_generator_set(w, 3, filtration_generators(w, 3))
        assert not is_minimal_generator_set(w, 3, {(0, 2, 1)})

    def test_ideal_membership(self):
        """Test divisibility by a generator."""
        gens = filtration_generators(WeightVector.of(0, 1, 2), 3)
        assert ideal_contains(gens, (5, 1, 2))
        assert not ideal_contains(gens, (5, 2, 0))


class TestConormal:
    """Tests for conormal_basis and linearized_ranks."""

    def test_degree_four(self):
        """Test y^4, y^2 z, z^2."""
        assert conormal_basis(WeightVector.of(0, 1, 2), 4) == {(0, 4, 0), (0, 2, 1), (0, 0, 2)}

    def test_degree_one(self):
        """Test only y has degree 1."""
        assert conormal_basis(WeightVector.of(0, 1, 2), 1) == {(0, 1, 0)}

    def test_unreachable_degree(self):
        """Test odd degree under weight 2."""
        assert conormal_basis(WeightVector.of(2), 3) == set()

    def test_ranks(self):
        """Test multiplicities of positive weights."""
        assert linearized_ranks(WeightVector.of(0, 1, 2)) == {1: 1, 2: 1}
        assert linearized_ranks(WeightVector.of(1, 1, 2, 3, 3)) == {1: 2, 2: 1, 3: 2}


class TestIntersection:
    """Tests for intersections of standard weightings."""

    def test_max_rule(self):
        """Test componentwise maxima."""
        assert intersect_standard(WeightVector.of(0, 1), WeightVector.of(1, 0)) == WeightVector.of(1, 1)
        assert intersect_standard(WeightVector.of(0, 2, 1), WeightVector.of(1, 2, 0)) == WeightVector.of(1, 2, 1)

    def test_dimension_mismatch(self):
        """Test weightings of different lengths."""
        with pytest.raises(DimensionMismatchError):
            intersect_standard(WeightVector.of(1), WeightVector.of(1, 0))

    def test_clean_intersection(self):
        """Test the product ideal of two transverse lines."""
        assert clean_intersection_holds(WeightVector.of(0, 1), WeightVector.of(1, 0), 2)

    def test_clean_intersection_on_random_pairs(self):
        """Test the product ideal identity for 50 seeded pairs on R^3 in degrees up to 6."""
        rng = random.Random(5)
        for _ in range(50):
            w1 = WeightVector.of(*(rng.randint(0, 3) for _ in range(3)))
            w2 = WeightVector.of(*(rng.randint(0, 3) for _ in range(3)))
            for i in range(7):
                assert clean_intersection_holds(w1, w2, i, degree_bound=8)

    def test_factorization_through_lower_degrees(self):
        """Test that a weight-2 coordinate is a new generator in degree 2."""
        assert factors_through_lower_degrees(WeightVector.of(1, 1), 2)
        assert not factors_through_lower_degrees(WeightVector.of(1, 2), 2)


class TestUniformAlignment:
    """Tests for check_uniform_alignment."""

    def test_aligned(self):
        """Test agreeing non-zero columns."""
        result = check_uniform_alignment([WeightVector.of(0, 2, 1), WeightVector.of(1, 2, 0)])
        assert result.aligned
        assert result.column is None

    def test_misaligned(self):
        """Test (1,1,0) against (1,2,1) fails in the middle column."""
        result = check_uniform_alignment([WeightVector.of(1, 1, 0), WeightVector.of(1, 2, 1)])
        assert not result.aligned
        assert result.column == 1
        assert result.values == (1, 2)

    def test_singleton(self):
        """Test a single weighting."""
        assert check_uniform_alignment([WeightVector.of(3, 0)]).aligned
