"""Exception types shared across the package."""


class GridRigError(Exception):
    """Base class for all gridrig errors."""


class ZeroVector(GridRigError):
    """A norm gradient was requested at the origin."""


class NonSmoothPoint(GridRigError):
    """The unit sphere has no tangent at the requested point (l-inf corner)."""


class DegenerateTangent(GridRigError):
    """A brace tangent cannot be written as a positive combination of the
    line tangents; the norm/placement is outside the supported class."""


class MalformedDocument(GridRigError):
    """A grid-spec document is not valid JSON or misses required keys."""


class DimensionMismatch(GridRigError):
    """Array lengths in a grid-spec document disagree with m or n."""


class UnknownBraceChar(GridRigError):
    """A bracing string contains a character outside '.', 'b', '\\', 'r', '/', 'x'."""


class InvalidNorm(GridRigError):
    """A norm description is malformed or violates parameter constraints."""


class NotACycle(GridRigError):
    """An edge list does not form a closed walk without repeated edges."""


class NoWitness(GridRigError):
    """A flex witness was requested for a rigid framework."""


class ExceptionalParameters(GridRigError):
    """No isostatic bracing exists because the brace parameters coincide."""


class UnsupportedConfiguration(GridRigError):
    """The norm/placement combination admits no decision procedure here."""


class TooLarge(GridRigError):
    """An exhaustive enumeration would exceed its configured size bound."""
