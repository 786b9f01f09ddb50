"""Small building sets and perspectives used by the suite and the CLI."""

from ..arrangements.building import BuildingSet
from ..arrangements.subspace import WeightedSubspace
from ..blowup.perspective import GoodPerspective


def nested_pair() -> BuildingSet:
    """A inside B in R^6 with weights (1,2,1,2,3,0) and (1,2,1,0,0,0)."""
    return BuildingSet(
        dim=6,
        elements=(
            WeightedSubspace.coordinate("A", 6, {0: 1, 1: 2, 2: 1, 3: 2, 4: 3}),
            WeightedSubspace.coordinate("B", 6, {0: 1, 1: 2, 2: 1}),
        ),
    )


def nested_pair_perspective() -> GoodPerspective:
    return GoodPerspective.create(nested_pair(), ["A", "B"], h={"A": 4, "B": 2})


def cusp_pair() -> BuildingSet:
    """Origin of R^2 weighted (2,1) inside the axis x_0 = 0 weighted 2."""
    return BuildingSet(
        dim=2,
        elements=(
            WeightedSubspace.coordinate("A", 2, {0: 2, 1: 1}),
            WeightedSubspace.coordinate("B", 2, {0: 2}),
        ),
    )


def cusp_pair_perspective() -> GoodPerspective:
    return GoodPerspective.create(cusp_pair(), ["A", "B"], h={"A": 1, "B": 0})


def misaligned_pair() -> BuildingSet:
    """Weights (1,1,0) and (1,2,1): separated but not uniformly aligned."""
    return BuildingSet(
        dim=3,
        elements=(
            WeightedSubspace.coordinate("A", 3, {0: 1, 1: 1}),
            WeightedSubspace.coordinate("B", 3, {0: 1, 1: 2, 2: 1}),
        ),
    )


def two_planes() -> BuildingSet:
    """Two coordinate planes of R^3 meeting in a line."""
    return BuildingSet(
        dim=3,
        elements=(WeightedSubspace.coordinate("G1", 3, [0]), WeightedSubspace.coordinate("G2", 3, [1])),
    )


def three_planes() -> BuildingSet:
    """Three planes through one line; not separated."""
    return BuildingSet(
        dim=3,
        elements=(
            WeightedSubspace.coordinate("G1", 3, [0]),
            WeightedSubspace.coordinate("G2", 3, [1]),
            WeightedSubspace.from_equations("G3", 3, [[1, -1, 0]]),
        ),
    )


def two_axes() -> BuildingSet:
    """The x_2 and x_1 axes of R^3; not separated at the origin."""
    return BuildingSet(
        dim=3,
        elements=(WeightedSubspace.coordinate("G4", 3, [0, 2]), WeightedSubspace.coordinate("G5", 3, [1, 2])),
    )
