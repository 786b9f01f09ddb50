"""Intersections and uniform alignment of standard weightings."""

from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field

from ..errors import DimensionMismatchError
from ..jets.weights import WeightVector


class AlignmentResult(BaseModel):
    """Outcome of a column-wise alignment check."""

    model_config = ConfigDict(frozen=True)

    aligned: bool
    column: int | None = Field(None, description="First offending column (0-based)")
    values: tuple[int, ...] = Field((), description="Distinct non-zero weights found in that column")


def intersect_standard(w1: WeightVector, w2: WeightVector) -> WeightVector:
    if w1.dim != w2.dim:
        raise DimensionMismatchError(f"Weightings of length {w1.dim} and {w2.dim}.")
    return WeightVector(weights=tuple(max(a, b) for a, b in zip(w1.weights, w2.weights)))


def check_uniform_alignment(ws: Sequence[WeightVector]) -> AlignmentResult:
    """All non-zero entries of every column agree."""
    if not ws:
        return AlignmentResult(aligned=True)
    m = ws[0].dim
    if any(w.dim != m for w in ws):
        raise DimensionMismatchError("Weightings of different lengths.")
    for column in range(m):
        values = sorted({w[column] for w in ws if w[column] != 0})
        if len(values) > 1:
            return AlignmentResult(aligned=False, column=column, values=tuple(values))
    return AlignmentResult(aligned=True)
