"""Exception types raised by numrad."""


class NumradError(Exception):
    """Base class for every error raised by this package."""


class InvalidMatrix(NumradError, ValueError):
    """Input is not a finite square complex matrix."""


class NotHermitian(NumradError, ValueError):
    pass


class NotPSD(NumradError, ValueError):
    pass


class NotPD(NumradError, ValueError):
    pass


class NoConvergence(NumradError, ArithmeticError):
    pass


class DomainError(NumradError, ValueError):
    """Scalar argument outside the domain of an inequality."""


class ZeroVector(NumradError, ValueError):
    pass


class ZeroMatrix(NumradError, ValueError):
    pass


class NotUnit(NumradError, ValueError):
    pass


class PremiseFailed(NumradError, ValueError):
    """The hypotheses of a conditional bound are not met by the given data."""


class PremiseUndefined(NumradError, ValueError):
    pass


class RatioUndefined(NumradError, ArithmeticError):
    pass


class NotHyponormal(NumradError, ValueError):
    pass


class BadSpec(NumradError, ValueError):
    pass
