"""Exception types raised across the package."""


class TropcurvError(Exception):
    """Base class for all package errors."""


class DegenerateSimplex(TropcurvError, ValueError):
    pass


class ZeroGenerator(TropcurvError, ValueError):
    pass


class MissingFacets(TropcurvError, ValueError):
    pass


class InvalidSampleCount(TropcurvError, ValueError):
    pass


class DimensionMismatch(TropcurvError, ValueError):
    pass


class TropicalSyntaxError(TropcurvError, ValueError):
    """Malformed polynomial text. ``position`` is the 0-based character offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DuplicateExponent(TropcurvError, ValueError):
    pass


class NotGeneric(TropcurvError, ValueError):
    pass


class NotNonSingular(TropcurvError, ValueError):
    pass


class NotElementary(TropcurvError, ValueError):
    pass


class UnknownExponent(TropcurvError, KeyError):
    pass


class InvalidT(TropcurvError, ValueError):
    pass


class NotPlaneCurve(TropcurvError, ValueError):
    pass


class InsufficientResolution(TropcurvError, RuntimeError):
    pass


class IgnoredSignWarning(UserWarning):
    """Signs were supplied on exponents that are not vertices of the subdivision."""
