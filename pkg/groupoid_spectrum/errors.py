from relation_core.errors import GroupoidalError


class SpectrumError(GroupoidalError):
    """Base exception for finite-depth groupoid and spectrum errors."""


class DepthMismatchError(SpectrumError):
    """Words or G-sets of different truncation depths were combined."""


class GSetError(SpectrumError):
    """A pair set fails the one-to-one range and source property."""


class OverlapError(SpectrumError):
    """A family that must be pairwise disjoint is not."""


class OrderingError(SpectrumError):
    """A listing is not in level-major, row-major order."""


class CoefficientError(SpectrumError):
    """A coefficient is zero or not a dyadic rational."""
