"""Tests for index nests, covering forests and the FM local model."""

import itertools
import math
import random

import pytest
from pydantic import ValidationError

from weighted_blowups.errors import CollisionError, ForestError
from weighted_blowups.fm.forest import (
    Forest,
    check_covering,
    controls,
    covering_forest,
    offset_fwd,
    offset_inv,
    subtree_root,
)
from weighted_blowups.fm.indices import (
    IndexNest,
    collision_indices,
    enumerate_index_nests,
    factorize,
    index_label,
    parse_index_label,
)
from weighted_blowups.fm.limits import collision_nest, curve_limit
from weighted_blowups.fm.model import (
    FMModelPoint,
    block_weights,
    check_fm_weighted,
    fm_blow_down,
    fm_chart,
    fm_projective_canonicalize,
    induced_diag_building_set,
)
from weighted_blowups.fm.screens import screens_render
from weighted_blowups.jets.curves import PolynomialCurve
from weighted_blowups.jets.weights import WeightVector, normalize_weighted

W1 = WeightVector(weights=(1,))
W12 = WeightVector(weights=(1, 2))

NINE_POINTS = [(1, 2, 3), (5, 6), (7, 8, 9), (5, 6, 7, 8, 9)]


def curve(*rows):
    """Polynomial curve from per-coordinate {exponent: coefficient} maps."""
    return PolynomialCurve(terms=tuple(tuple(row.items()) for row in rows))


def _model_curves(rng, w, nest):
    """Curves whose offset of each control in member N has weighted order the depth of N in the nest."""
    forest = covering_forest(nest)
    depth = {n: sum(1 for o in nest.members if set(n) <= set(o)) for n in nest.members}
    candidates = [v for v in itertools.product(range(-4, 5), repeat=w.dim) if all(v)]
    leading, level = {}, {}
    for member, children in controls(forest, nest).items():
        for c, v in zip(children, rng.sample(candidates, len(children))):
            leading[c], level[c] = v, depth[member]
    starts = dict(zip(forest.roots(), rng.sample(range(-20, 21), len(forest.roots()))))
    rows = {}
    for node in forest.topological():
        if node in starts:
            rows[node] = [{0: starts[node]}] + [{} for _ in range(w.dim - 1)]
            continue
        rows[node] = [dict(row) for row in rows[forest.parent[node]]]
        for j, a in enumerate(leading[node]):
            e = level[node] * w[j]
            rows[node][j][e] = rows[node][j].get(e, 0) + a
    return [curve(*rows[k]) for k in range(1, nest.s + 1)], leading


class TestIndices:
    """Tests for index labels, nests and factorization."""

    def test_labels(self):
        """Test digit and comma labels."""
        assert index_label((3, 1, 2)) == "123"
        assert index_label((1, 10)) == "1,10"
        assert parse_index_label("1,10") == (1, 10)
        assert parse_index_label("123") == (1, 2, 3)

    def test_nest_sorted(self):
        """Test members are ordered by size."""
        nest = IndexNest.of(9, NINE_POINTS)
        assert nest.labels() == ["56", "123", "789", "56789"]
        assert nest.parent_member((5, 6)) == (5, 6, 7, 8, 9)
        assert nest.parent_member((1, 2, 3)) is None

    def test_overlap_rejected(self):
        """Test members that overlap without nesting."""
        with pytest.raises(ValidationError):
            IndexNest.of(3, [(1, 2), (2, 3)])

    def test_singleton_rejected(self):
        """Test members of size one."""
        with pytest.raises(ValidationError):
            IndexNest(s=3, members=((1,),))

    def test_out_of_range(self):
        """Test members outside 1..s."""
        with pytest.raises(ValidationError):
            IndexNest.of(3, [(3, 4)])

    def test_factorize(self):
        """Test overlapping parts merge."""
        assert factorize([{1, 2}, {2, 3}, {5, 6}]) == {frozenset({1, 2, 3}), frozenset({5, 6})}
        assert factorize([{1, 2}, {3, 4}]) == {frozenset({1, 2}), frozenset({3, 4})}

    def test_collision_indices(self):
        """Test diagonals of three points."""
        assert collision_indices(3) == [(1, 2), (1, 3), (2, 3), (1, 2, 3)]
        assert len(enumerate_index_nests(3)) == 8


class TestForest:
    """Tests for covering forests and offset coordinates."""

    def test_default_forest(self):
        """Test smallest-index roots on the nine-point nest."""
        forest = covering_forest(IndexNest.of(9, NINE_POINTS))
        assert forest.parent == {2: 1, 3: 1, 6: 5, 8: 7, 9: 7, 7: 5}
        assert forest.roots() == [1, 4, 5]

    def test_default_controls(self):
        """Test controls partition the non-roots."""
        nest = IndexNest.of(9, NINE_POINTS)
        ct = controls(covering_forest(nest), nest)
        assert ct == {(5, 6): (6,), (1, 2, 3): (2, 3), (7, 8, 9): (8, 9), (5, 6, 7, 8, 9): (7,)}

    def test_preferred_roots(self):
        """Test preferred roots reproduce the forest with roots 2, 4 and 7."""
        nest = IndexNest.of(9, NINE_POINTS)
        forest = covering_forest(nest, prefer={123: 2, 56: 6, 789: 7, 56789: 7})
        assert forest.parent == {1: 2, 3: 2, 5: 6, 8: 7, 9: 7, 6: 7}
        assert controls(forest, nest) == {
            (5, 6): (5,),
            (1, 2, 3): (1, 3),
            (7, 8, 9): (8, 9),
            (5, 6, 7, 8, 9): (6,),
        }

    def test_member_need_not_be_a_descendant_set(self):
        """Test a connected member that is not everything below its top node."""
        nest = IndexNest.of(9, NINE_POINTS)
        forest = Forest(s=9, parent={1: 2, 3: 2, 5: 6, 8: 7, 9: 7, 6: 7})
        check_covering(forest, nest)
        assert subtree_root(forest, (7, 8, 9)) == 7

    def test_unavailable_preference(self):
        """Test a preferred root that already has a parent."""
        nest = IndexNest.of(3, [(1, 2), (1, 2, 3)])
        with pytest.raises(ForestError):
            covering_forest(nest, prefer={"12": 2, "123": 1})

    def test_inner_subtree_not_a_member(self):
        """Test a chain 3 -> 2 -> 1 against the nest {12, 123}."""
        forest = Forest(s=3, parent={2: 1, 3: 2})
        with pytest.raises(ForestError):
            check_covering(forest, IndexNest.of(3, [(1, 2), (1, 2, 3)]))

    def test_cycle_rejected(self):
        """Test acyclicity."""
        with pytest.raises(ValidationError):
            Forest(s=2, parent={1: 2, 2: 1})

    def test_offsets(self):
        """Test roots and parent offsets."""
        forest = Forest(s=3, parent={2: 1, 3: 1})
        roots, offsets = offset_fwd(forest, [[1], [4], [6]])
        assert roots[1].tolist() == [1]
        assert offsets[2].tolist() == [3]
        assert offsets[3].tolist() == [5]
        assert [p.tolist() for p in offset_inv(forest, roots, offsets)] == [[1], [4], [6]]

    def test_offsets_round_trip_on_seeded_configurations(self):
        """Test offset_inv undoes offset_fwd for default forests of random nests."""
        rng = random.Random(23)
        nests = enumerate_index_nests(4)
        for _ in range(100):
            forest = covering_forest(rng.choice(nests))
            m = rng.randint(1, 3)
            config = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(4)]
            restored = offset_inv(forest, *offset_fwd(forest, config))
            assert [p.tolist() for p in restored] == config


class TestModel:
    """Tests for fm_chart and fm_blow_down."""

    def test_two_points_in_the_plane(self):
        """Test the control of a single collision with weights (1, 2)."""
        nest = IndexNest.of(2, [(1, 2)])
        p = fm_chart(W12, nest, [[0, 0], [3, 4]])
        assert p.screen((1, 2)).t == pytest.approx(math.sqrt((9 + math.sqrt(145)) / 2))
        blown = fm_blow_down(p)
        assert blown[0] == pytest.approx((0, 0))
        assert blown[1] == pytest.approx((3, 4))

    def test_collision(self):
        """Test coinciding points inside a member."""
        with pytest.raises(CollisionError):
            fm_chart(W12, IndexNest.of(2, [(1, 2)]), [[1, 1], [1, 1]])

    def test_nested_controls(self):
        """Test relative controls of a nested collision."""
        nest = IndexNest.of(3, [(1, 2), (1, 2, 3)])
        p = fm_chart(W1, nest, [[0], [1], [5]])
        assert p.screen((1, 2)).t == pytest.approx(0.2)
        assert p.screen((1, 2, 3)).t == pytest.approx(5.0)
        assert [pt[0] for pt in fm_blow_down(p)] == pytest.approx([0, 1, 5])

    def test_zero_control(self):
        """Test a boundary point collapses its group."""
        nest = IndexNest.of(3, [(1, 2), (1, 2, 3)])
        p = fm_chart(W1, nest, [[0], [1], [5]]).with_control((1, 2), 0.0)
        assert [pt[0] for pt in fm_blow_down(p)] == pytest.approx([0, 0, 5])

    def test_non_unit_screen_rejected(self):
        """Test the screen normalization."""
        p = fm_chart(W1, IndexNest.of(2, [(1, 2)]), [[0], [2]])
        block = p.screens[0].model_copy(update={"values": (2.0,)})
        with pytest.raises(ValidationError):
            FMModelPoint(weightseq=W1, nest=p.nest, forest=p.forest, roots=p.roots, screens=(block,))

    def test_induced_building_set(self):
        """Test offset coordinates of non-top points carry the weights."""
        bs = induced_diag_building_set(W12, IndexNest.of(3, [(1, 2), (1, 2, 3)]))
        assert bs.dim == 6
        assert bs.get("12").weights == (0, 0, 1, 2, 0, 0)
        assert bs.get("123").weights == (0, 0, 1, 2, 1, 2)

    def test_weighted_check(self):
        """Test every induced set of three points passes."""
        reports = check_fm_weighted(W12, 3)
        assert len(reports) == 7
        assert all(r.passed for r in reports.values())

    def test_blow_down_inverts_chart_on_seeded_configurations(self):
        """Test fm_blow_down recovers the configuration fm_chart started from."""
        rng = random.Random(29)
        nests = [n for n in enumerate_index_nests(4) if n.members]
        weights = [W1, W12, WeightVector(weights=(1, 1, 2))]
        for _ in range(100):
            w = rng.choice(weights)
            config = [[rng.uniform(-5, 5) for _ in range(w.dim)] for _ in range(4)]
            blown = fm_blow_down(fm_chart(w, rng.choice(nests), config))
            for got, want in zip(blown, config):
                assert got == pytest.approx(tuple(want), abs=1e-12)


class TestProjective:
    """Tests for fm_projective_canonicalize."""

    def test_negative_control(self):
        """Test a negative control flips the screen."""
        p = fm_chart(W1, IndexNest.of(2, [(1, 2)]), [[0], [3]]).with_control((1, 2), -3.0)
        result = fm_projective_canonicalize(p)
        block = result.point.screen((1, 2))
        assert block.values == (-1.0,)
        assert block.t == 3.0
        assert result.point.projective
        assert [pt[0] for pt in fm_blow_down(result.point)] == pytest.approx([0, -3])

    def test_singular_screen(self):
        """Test an even weight at zero control."""
        p = fm_chart(WeightVector(weights=(2,)), IndexNest.of(2, [(1, 2)]), [[0], [4]]).with_control((1, 2), 0.0)
        assert fm_projective_canonicalize(p).singular_members == ((1, 2),)


class TestCurveLimit:
    """Tests for limits of polynomial curves of configurations."""

    def test_pair(self):
        """Test (0, t^2) on the line."""
        p = curve_limit(W1, [curve({}), curve({2: 1})])
        assert p.nest.labels() == ["12"]
        assert p.screen((1, 2)).values == pytest.approx((1.0,))
        assert p.screen((1, 2)).t == 0.0

    def test_nested_levels(self):
        """Test two points meeting faster than the third."""
        nest, levels = collision_nest(W1, [curve({}), curve({2: 1}), curve({1: 1})])
        assert nest.labels() == ["12", "123"]
        assert levels == {(1, 2): 2, (1, 2, 3): 1}

    def test_render(self):
        """Test the text tree of screens."""
        p = curve_limit(W1, [curve({}), curve({2: 1}), curve({1: 1})])
        assert screens_render(p) == (
            "site 1 at (0)\n  screen 123 t=0\n    3 <- 1: (1)\n    screen 12 t=0\n      2 <- 1: (1)"
        )

    def test_weighted_cusp(self):
        """Test (t^2, t^3) approaching the origin with weights (1, 2)."""
        p = curve_limit(W12, [curve({}, {}), curve({2: 1}, {3: 1})])
        assert p.screen((1, 2)).values == pytest.approx((0.0, 1.0))

    def test_identical_curves(self):
        """Test a curve that never leaves the diagonal."""
        with pytest.raises(CollisionError):
            curve_limit(W1, [curve({1: 1}), curve({1: 1})])

    def test_screens_of_seeded_model_curves(self):
        """Test curve_limit recovers the nest and the leading offsets of curves built from a nest."""
        rng = random.Random(31)
        nests = [n for n in enumerate_index_nests(4) if n.members]
        for case in range(50):
            w = W12 if case % 2 else W1
            nest = rng.choice(nests)
            curves, leading = _model_curves(rng, w, nest)
            p = curve_limit(w, curves)
            assert p.nest.labels() == nest.labels()
            ct = controls(p.forest, nest)
            for member in nest.members:
                block = [float(a) for c in ct[member] for a in leading[c]]
                unit, _ = normalize_weighted(block, block_weights(w, len(ct[member])))
                assert p.screen(member).values == pytest.approx(unit)
                assert p.screen(member).t == 0.0
