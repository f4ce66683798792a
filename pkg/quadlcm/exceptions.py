"""Errors raised by quadlcm."""


class QuadLcmError(Exception):
    """Base class of every error raised by this package."""


class RingMismatchError(QuadLcmError, ValueError):
    """Two operands live in rings with different parameters c."""


class ZeroElementError(QuadLcmError, ZeroDivisionError):
    """An operation is undefined on the zero element."""


class InexactDivisionError(QuadLcmError, ArithmeticError):
    """A quotient claimed to be exact has a non-integral part."""


class HypothesisError(QuadLcmError, ValueError):
    """The hypotheses of the divisibility lemma do not hold."""


class CommonFactorError(QuadLcmError, ValueError):
    """Two polynomials expected to be coprime share a factor."""


class DegreeError(QuadLcmError, ValueError):
    """An index or degree argument is out of its admissible range."""


class PoleError(QuadLcmError, ZeroDivisionError):
    """A rational function was evaluated at one of its poles."""


class InvariantViolation(QuadLcmError, AssertionError):
    """An identity guaranteed by the theory did not hold."""


class ConfigError(QuadLcmError, ValueError):
    """A sweep configuration is inconsistent."""
