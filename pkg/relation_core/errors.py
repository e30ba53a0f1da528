class GroupoidalError(Exception):
    """Base exception for every error raised by the library packages."""


class RelationError(GroupoidalError):
    """Base exception for pair-set, support relation and ideal errors."""


class IndexRangeError(RelationError):
    """An index lies outside {1..n}."""


class SizeMismatchError(RelationError):
    """Two pair-sets that must live on the same index set do not."""


class InvalidRelationError(RelationError):
    """A pair-set is not reflexive and transitive."""


class InvalidIdealError(RelationError):
    """A pair-set is not closed under two-sided absorption by its parent."""


class ContainmentError(RelationError):
    """A pair-set is not contained in the set it is required to live in.

    Raised for seeds outside the support relation, generators outside the
    ideal, and lifted images outside the next-level relation.
    """


class BoundExceededError(GroupoidalError):
    """An exhaustive computation was requested beyond its configured bound."""


class PayloadFormatError(GroupoidalError):
    """A JSON payload does not follow the documented schema."""


class LatticeError(RelationError):
    """A computed family of projections is not closed under meet and join."""
