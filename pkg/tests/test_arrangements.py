"""Tests for weighted subspaces, building sets, nests and tableaus."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from weighted_blowups.arrangements.building import BuildingSet, arrangement, check_separated, factors
from weighted_blowups.arrangements.documents import BuildingSetDocument, ElementDocument
from weighted_blowups.arrangements.nests import (
    Nest,
    check_weighted_building_set,
    enumerate_nests,
    is_nest,
    nest_by_factors,
    nest_by_flags,
    nest_by_intersections,
    nest_method,
)
from weighted_blowups.arrangements.subspace import WeightedSubspace, intersect, transverse
from weighted_blowups.arrangements.tableau import tableau_render
from weighted_blowups.enums import NestMethod
from weighted_blowups.errors import CapExceededError, DomainError, NotInArrangementError
from weighted_blowups.fm.indices import enumerate_index_nests, fm_building_set


def three_lines() -> BuildingSet:
    return BuildingSet(
        dim=2,
        elements=(
            WeightedSubspace.coordinate("G1", 2, [0]),
            WeightedSubspace.coordinate("G2", 2, [1]),
            WeightedSubspace.from_equations("G3", 2, [[1, -1]]),
        ),
    )


class TestWeightedSubspace:
    """Tests for WeightedSubspace."""

    def test_coordinate_subspace(self):
        """Test weights and zero set."""
        g = WeightedSubspace.coordinate("A", 3, {0: 1, 2: 3})
        assert g.zero_set == frozenset({0, 2})
        assert g.weights == (1, 0, 3)
        assert g.codim == 2
        assert not g.is_trivially_weighted()

    def test_equations_in_rref(self):
        """Test that equations are reduced and coordinate ones recognized."""
        g = WeightedSubspace.from_equations("L", 3, [[2, 0, 0]])
        assert g.annihilator == ((Fraction(1), Fraction(0), Fraction(0)),)
        assert g.is_coordinate
        assert g.weights == (1, 0, 0)

    def test_weights_off_zero_set_rejected(self):
        """Test that weights are positive exactly on the zero set."""
        with pytest.raises(ValidationError):
            WeightedSubspace(name="A", dim=2, annihilator=((1, 0),), weights=(1, 1))

    def test_non_rref_rejected(self):
        """Test the canonical form of the annihilator."""
        with pytest.raises(ValidationError):
            WeightedSubspace(name="A", dim=2, annihilator=((2, 0),))

    def test_containment(self):
        """Test the origin lies in a line."""
        line = WeightedSubspace.coordinate("L", 2, [0])
        origin = WeightedSubspace.coordinate("O", 2, [0, 1])
        assert line.contains(origin)
        assert not origin.contains(line)
        assert line.contains_point([0, 5])
        assert not line.contains_point([1, 5])

    def test_intersection_max_rule(self):
        """Test the weights of an intersection of coordinate subspaces."""
        a = WeightedSubspace.coordinate("A", 3, {0: 2})
        b = WeightedSubspace.coordinate("B", 3, {0: 1, 1: 3})
        meet = intersect("AB", [a, b])
        assert meet.weights == (2, 3, 0)
        assert not transverse([a, b])

    def test_strict_intersection_refuses_mixed_weights(self):
        """Test weighted elements meeting a general subspace."""
        a = WeightedSubspace.coordinate("A", 2, {0: 2})
        d = WeightedSubspace.from_equations("D", 2, [[1, -1]])
        with pytest.raises(DomainError):
            intersect("AD", [a, d])
        assert intersect("AD", [a, d], strict=False).codim == 2


class TestBuildingSet:
    """Tests for BuildingSet and its arrangement."""

    def test_duplicate_names_rejected(self):
        """Test unique names."""
        with pytest.raises(ValidationError):
            BuildingSet(
                dim=2,
                elements=(WeightedSubspace.coordinate("G", 2, [0]), WeightedSubspace.coordinate("G", 2, [1])),
            )

    def test_unknown_element(self, two_lines):
        """Test lookup of a missing name."""
        with pytest.raises(NotInArrangementError):
            two_lines.get("G9")

    def test_two_lines(self, two_lines):
        """Test the lattice of two transverse lines."""
        arr = arrangement(two_lines)
        assert len(arr.elements) == 4
        assert [s.codim for s in arr.elements] == [0, 1, 1, 2]

    def test_fm3_lattice(self, fm3):
        """Test the four diagonals of three points on a line are closed under intersection."""
        assert len(arrangement(fm3).proper) == 4

    def test_fm4_lattice(self, fm4):
        """Test eleven diagonals plus three disjoint collisions."""
        arr = arrangement(fm4)
        assert len(arr.proper) == 14
        assert {"12∩34", "13∩24", "14∩23"} <= {s.name for s in arr.proper}

    def test_factors_of_element(self, fm3):
        """Test that an element is its own factor."""
        assert factors(fm3, fm3.get("12")) == ("12",)

    def test_factors_of_disjoint_collision(self, fm4):
        """Test the factors of two disjoint pairs colliding."""
        assert factors(fm4, arrangement(fm4).get("12∩34")) == ("12", "34")

    def test_factors_of_three_lines(self):
        """Test three lines through the origin of R^2."""
        bs = three_lines()
        origin = next(s for s in arrangement(bs).proper if s.codim == 2)
        assert factors(bs, origin) == ("G1", "G2", "G3")

    def test_factors_outside_arrangement(self, two_lines):
        """Test a subspace that is not an intersection of elements."""
        diagonal = WeightedSubspace.from_equations("D", 2, [[1, -1]])
        with pytest.raises(NotInArrangementError):
            factors(two_lines, diagonal)


class TestSeparation:
    """Tests for check_separated."""

    def test_two_axes_not_separated(self, two_axes):
        """Test two lines of R^3 meeting at the origin."""
        result = check_separated(two_axes)
        assert not result.separated
        assert result.witness == "G4∩G5"

    def test_three_lines_not_separated(self):
        """Test three concurrent lines."""
        assert not check_separated(three_lines()).separated

    def test_fm_separated(self, fm4):
        """Test diagonal arrangements."""
        assert check_separated(fm4).separated
        assert check_separated(fm_building_set(3, 2)).separated


class TestNests:
    """Tests for nests."""

    def test_two_lines(self, two_lines):
        """Test that two transverse lines form a nest."""
        assert is_nest(two_lines, ["G1", "G2"])
        assert len(enumerate_nests(two_lines)) == 4

    def test_fm3_membership(self, fm3):
        """Test nests of diagonals."""
        assert not is_nest(fm3, ["12", "13"])
        assert is_nest(fm3, ["12", "123"])

    def test_fm3_count(self, fm3):
        """Test eight nests, the empty one first."""
        nests = enumerate_nests(fm3)
        assert len(nests) == 8
        assert nests[0] == Nest()
        assert Nest(members=("12", "123")) in nests

    def test_fm4_count(self, fm4):
        """Test agreement with nested families of index sets."""
        assert len(enumerate_nests(fm4)) == len(enumerate_index_nests(4))

    def test_cap(self, two_lines):
        """Test the enumeration cap."""
        with pytest.raises(CapExceededError):
            enumerate_nests(two_lines, cap=1)

    def test_characterizations_agree(self, two_planes):
        """Test factors, flags and intersections on every subset."""
        for names in ([], ["G1"], ["G2"], ["G1", "G2"]):
            expected = nest_by_intersections(two_planes, names)
            assert nest_by_factors(two_planes, names) == expected
            assert nest_by_flags(two_planes, names) == expected

    def test_method(self, two_planes, two_axes):
        """Test flags decide nests of non-separated sets."""
        assert nest_method(two_planes) is NestMethod.INTERSECTIONS
        assert nest_method(two_axes) is NestMethod.FLAGS

    def test_unknown_member(self, two_lines):
        """Test nests over missing names."""
        with pytest.raises(NotInArrangementError):
            is_nest(two_lines, ["G1", "G7"])


class TestWeightedCheck:
    """Tests for check_weighted_building_set."""

    def test_fm_passes(self, fm3):
        """Test a trivially weighted diagonal arrangement."""
        report = check_weighted_building_set(fm3)
        assert report.separated
        assert report.passed
        assert report.nests_checked == 8

    def test_misaligned(self, misaligned_pair):
        """Test (1,1,0) inside (1,2,1) fails uniform alignment."""
        report = check_weighted_building_set(misaligned_pair)
        assert report.separated
        assert not report.uniformly_aligned
        assert report.alignment_violations[0].column == 1
        assert report.alignment_violations[0].values == (1, 2)

    def test_single_element(self):
        """Test a one-element building set."""
        bs = BuildingSet(dim=2, elements=(WeightedSubspace.coordinate("A", 2, {0: 3}),))
        assert check_weighted_building_set(bs).passed

    def test_max_rule_violation(self):
        """Test an intersection carrying weights above the maximum."""
        bs = BuildingSet(
            dim=2,
            elements=(
                WeightedSubspace.coordinate("A", 2, {0: 1}),
                WeightedSubspace.coordinate("B", 2, {1: 1}),
                WeightedSubspace.coordinate("C", 2, {0: 2, 1: 1}),
            ),
        )
        report = check_weighted_building_set(bs)
        assert not report.passed
        assert [(v.element, v.subset) for v in report.max_rule_violations] == [("C", ("A", "B"))]

    def test_nested_pair_passes(self, nested_pair, tableau_set):
        """Test the sample sets used for charts."""
        assert check_weighted_building_set(nested_pair).passed
        assert check_weighted_building_set(tableau_set).passed


class TestTableau:
    """Tests for tableau_render."""

    def test_two_levels(self, tableau_set):
        """Test the stacked tableau of four boxes in R^8."""
        text = tableau_render(tableau_set, Nest.of(tableau_set, ["A", "B", "C", "D"]))
        assert text.splitlines() == [
            "row 1 |  1  1  2  .  1  2  .  . | A[0..2] B[4..5]",
            "row 0 |  1  1  2  3  1  2  1  1 | C[0..3] D[4..7]",
            "      | x0 x1 x2 x5 x3 x4 x6 x7",
        ]

    def test_singleton(self, tableau_set):
        """Test one box gives one row."""
        text = tableau_render(tableau_set, Nest.of(tableau_set, ["B"]))
        assert len(text.splitlines()) == 2
        assert text.startswith("row 0")

    def test_marked_controls(self, tableau_set):
        """Test boxed weights for the chosen control coordinates."""
        text = tableau_render(tableau_set, Nest.of(tableau_set, ["A", "C"]), {"A": 2, "C": 5})
        top, bottom = text.splitlines()[:2]
        assert "[2]" in top
        assert "[3]" in bottom

    def test_empty_nest(self, tableau_set):
        """Test the empty nest."""
        assert tableau_render(tableau_set, Nest()) == "(empty nest)"

    def test_incomparable_boxes_share_column(self):
        """Test boxes that cannot be stacked."""
        bs = BuildingSet(
            dim=3,
            elements=(WeightedSubspace.coordinate("X", 3, [0, 1]), WeightedSubspace.coordinate("Y", 3, [1, 2])),
        )
        with pytest.raises(DomainError):
            tableau_render(bs, Nest(members=("X", "Y")))


class TestBuildingSetDocument:
    """Tests for the building-set JSON document."""

    def test_to_building_set(self):
        """Test coordinate and equation elements."""
        doc = BuildingSetDocument.model_validate(
            {
                "dim": 3,
                "elements": [
                    {"name": "A", "zeros": [0, 1], "weights": {"1": 2}},
                    {"name": "D", "equations": [["1", "-1", "0"]]},
                ],
            }
        )
        bs = doc.to_building_set()
        assert bs.get("A").weights == (1, 2, 0)
        assert not bs.get("D").is_coordinate

    def test_zeros_and_equations_exclusive(self):
        """Test an element with both shapes."""
        with pytest.raises(ValidationError):
            ElementDocument(name="A", zeros=[0], equations=[[1, 0]])

    def test_weight_key_must_be_a_zero(self):
        """Test weights on coordinates outside the zero set."""
        with pytest.raises(ValidationError):
            ElementDocument(name="A", zeros=[0], weights={"1": 2})

    def test_zero_out_of_range(self):
        """Test coordinates beyond the dimension."""
        with pytest.raises(ValidationError):
            BuildingSetDocument(dim=2, elements=[ElementDocument(name="A", zeros=[2])])

    def test_duplicate_names(self):
        """Test unique element names."""
        with pytest.raises(ValidationError):
            BuildingSetDocument(
                dim=2, elements=[ElementDocument(name="A", zeros=[0]), ElementDocument(name="A", zeros=[1])]
            )
