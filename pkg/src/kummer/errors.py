"""Exception types raised across the package."""


class KummerError(Exception):
    """Base class for all errors raised by this package."""


class PoleParameter(KummerError, ValueError):
    """A lower series parameter sits on (or within guard distance of) a pole."""


class NoConvergence(KummerError, ArithmeticError):
    """The term cap was reached before the stopping rule fired."""


class DomainError(KummerError, ValueError):
    """The prefactor is undefined at the requested argument."""


class ResonantDenominator(KummerError, ZeroDivisionError):
    """The Frobenius recurrence denominator vanished at some index."""

    def __init__(self, n, message=None):
        self.n = n
        super().__init__(message or f"recurrence denominator vanishes at n={n}")


class ExcludedParameter(KummerError, ValueError):
    """A parameter value is excluded by the hypotheses of a transformation."""

    def __init__(self, a, reason):
        self.a = a
        self.reason = reason
        super().__init__(f"a={a}: {reason}")


class ResonantParameter(KummerError, ValueError):
    """Indicial exponents differ by an integer; connection matching is not attempted."""
