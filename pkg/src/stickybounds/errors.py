"""Exception hierarchy shared by all modules."""


class StickyBoundsError(Exception):
    """Base class for every error raised by this package."""


class NoSignChange(StickyBoundsError, ValueError):
    pass


class NoConvergence(StickyBoundsError, RuntimeError):
    pass


class StepUnderflow(StickyBoundsError, RuntimeError):
    pass


class DomainError(StickyBoundsError, ValueError):
    pass


class ParseError(StickyBoundsError, ValueError):
    pass


class InvariantViolation(StickyBoundsError, ValueError):
    pass


class UnknownName(StickyBoundsError, KeyError):
    pass


class MissingInput(StickyBoundsError, ValueError):
    pass


class DimensionUnsupported(StickyBoundsError, ValueError):
    pass


class InvalidRegime(StickyBoundsError, ValueError):
    pass


class NoRootInRange(StickyBoundsError, RuntimeError):
    pass
