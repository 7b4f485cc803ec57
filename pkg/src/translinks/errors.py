"""Exception types shared across the package.

The CLI reports failures by class name, so names are part of the interface.
"""


class TranslinksError(Exception):
    """Base class for all errors raised by this package."""


class IndexOutOfRange(TranslinksError, IndexError):
    pass


class CompositeModulus(TranslinksError, ValueError):
    pass


class UnknownSolid(TranslinksError, KeyError):
    pass


class BadParameter(TranslinksError, ValueError):
    pass


class BudgetExceeded(TranslinksError, RuntimeError):
    pass


class InvalidMap(TranslinksError, ValueError):
    pass


class DisconnectedMap(TranslinksError, ValueError):
    pass


class NotThreeRegular(TranslinksError, ValueError):
    pass


class NotFourRegular(TranslinksError, ValueError):
    pass


class NotPerfectMatchingOrbit(TranslinksError, ValueError):
    pass


class EdgeTransitiveInput(TranslinksError, ValueError):
    pass


class InconsistentPropagation(TranslinksError, ValueError):
    pass


class InvalidDiagram(TranslinksError, ValueError):
    pass


class LayoutDegenerate(TranslinksError, RuntimeError):
    pass


class IOFailure(TranslinksError, OSError):
    pass
