"""Shared building sets and perspectives."""

import pytest

from weighted_blowups.arrangements.building import BuildingSet
from weighted_blowups.arrangements.subspace import WeightedSubspace
from weighted_blowups.blowup.perspective import GoodPerspective
from weighted_blowups.fm.indices import fm_building_set
from weighted_blowups.verify import samples


@pytest.fixture
def nested_pair() -> BuildingSet:
    return samples.nested_pair()


@pytest.fixture
def nested_perspective() -> GoodPerspective:
    return samples.nested_pair_perspective()


@pytest.fixture
def cusp_pair() -> BuildingSet:
    return samples.cusp_pair()


@pytest.fixture
def cusp_perspective() -> GoodPerspective:
    return samples.cusp_pair_perspective()


@pytest.fixture
def misaligned_pair() -> BuildingSet:
    return samples.misaligned_pair()


@pytest.fixture
def two_planes() -> BuildingSet:
    return samples.two_planes()


@pytest.fixture
def three_planes() -> BuildingSet:
    return samples.three_planes()


@pytest.fixture
def two_axes() -> BuildingSet:
    return samples.two_axes()


@pytest.fixture
def two_lines() -> BuildingSet:
    """The coordinate axes of R^2."""
    return BuildingSet(
        dim=2,
        elements=(WeightedSubspace.coordinate("G1", 2, [0]), WeightedSubspace.coordinate("G2", 2, [1])),
    )


@pytest.fixture
def tableau_set() -> BuildingSet:
    """Four coordinate subspaces of R^8: C inside A, D inside B, A and B disjoint boxes."""
    return BuildingSet(
        dim=8,
        elements=(
            WeightedSubspace.coordinate("A", 8, {0: 1, 1: 1, 2: 2}),
            WeightedSubspace.coordinate("B", 8, {3: 1, 4: 2}),
            WeightedSubspace.coordinate("C", 8, {0: 1, 1: 1, 2: 2, 5: 3}),
            WeightedSubspace.coordinate("D", 8, {3: 1, 4: 2, 6: 1, 7: 1}),
        ),
    )


@pytest.fixture
def fm3() -> BuildingSet:
    return fm_building_set(3)


@pytest.fixture
def fm4() -> BuildingSet:
    return fm_building_set(4)
