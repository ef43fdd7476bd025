"""Exception hierarchy shared by all modules.

Every mathematically meaningful failure gets its own class so callers (and
the command line driver) can name it precisely.
"""


class SkeinError(Exception):
    """Base class for all errors raised by this package."""


class FractionalExponentSign(SkeinError):
    """A sign-flipping substitution hit a genuinely fractional exponent."""


class ZeroFunction(SkeinError):
    """Series expansion of an identically-zero numerator was requested."""


class LimitDoesNotExist(SkeinError):
    """The numerator vanishes to lower order than the denominator (a pole)."""


class SizeMismatch(SkeinError):
    """Character evaluation requires |lambda| == |mu|."""


class BoundExceeded(SkeinError):
    """A character table larger than the configured bound was requested."""


class NonCoprime(SkeinError):
    """Torus parameters m and n must be coprime."""


class IntegralityViolation(SkeinError):
    """Fractional q-exponents survived a summation that must be integral.

    This signals an internal bug, never an expected outcome on valid input.
    """


class IndexOutOfRange(SkeinError):
    """Braid generator index outside 1..n-1."""
