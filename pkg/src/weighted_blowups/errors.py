"""Error hierarchy shared by every module."""


class WeightedBlowupError(Exception):
    """Base error for the package."""


class DomainError(WeightedBlowupError):
    """An operation's precondition does not hold."""

    def __init__(self, message: str, precondition: str = ""):
        super().__init__(message)
        self.precondition = precondition or type(self).__name__

    def to_dict(self) -> dict[str, str]:
        return {"error": type(self).__name__, "precondition": self.precondition, "message": str(self)}


class OrderExceededError(DomainError):
    """A jet of insufficient order was asked for a higher coefficient."""


class NotAMorphismError(DomainError):
    """A weighting map was requested between weightings without dominance."""


class DimensionMismatchError(DomainError):
    """Arguments live in spaces of different dimension."""


class NotInArrangementError(DomainError):
    """A subspace is not an element of the arrangement."""


class CapExceededError(DomainError):
    """An enumeration would exceed its configured cap."""


class InvalidPerspectiveError(DomainError):
    """A nest, selection or sign choice is not a good perspective."""


class ChartDomainError(DomainError):
    """A point lies outside the domain of a chart."""


class CollisionError(DomainError):
    """Points coincide where the model requires them to be apart."""


class ForestError(DomainError):
    """A parent map is not a covering forest of a nest."""


class SchemaVersionError(WeightedBlowupError):
    """An input document was written under another major schema version."""
