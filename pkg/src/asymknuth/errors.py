"""Exception types raised across the package."""


class AsymKnuthError(Exception):
    """Base class for all package errors."""


class ContainmentError(AsymKnuthError, ValueError):
    """A partition does not fit inside the given rectangle."""


class LengthError(AsymKnuthError, ValueError):
    """A partition has more rows than the declared padding length."""


class SpecError(AsymKnuthError, ValueError):
    """Invalid (alpha, beta) exponents for a mixed sum."""


class DomainError(AsymKnuthError, ValueError):
    """Input outside the domain of an asymptotic formula or integrand."""


class ScaleError(AsymKnuthError, ValueError):
    """A brute-force routine was asked to run beyond its size guard."""


class SampleError(AsymKnuthError, ValueError):
    """Too few Monte Carlo samples requested."""


class InexactDivisionError(AsymKnuthError, AssertionError):
    """An exact integer division left a nonzero remainder."""
