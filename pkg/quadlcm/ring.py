"""Exact arithmetic in Z[√-c] and Q(√-c).

Every element carries its ring parameter ``c``; arithmetic between
elements of different rings raises :class:`RingMismatchError`.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .exceptions import (
    DegreeError,
    HypothesisError,
    InexactDivisionError,
    RingMismatchError,
    ZeroElementError,
)

logger = logging.getLogger(__name__)


def _check_c(c):
    if isinstance(c, bool) or not isinstance(c, int) or c < 1:
        raise ValueError('ring parameter c must be a positive integer, got {!r}'.format(c))


def _same_ring(x, y):
    if x.c != y.c:
        raise RingMismatchError('cannot combine elements of Z[√-{}] and Z[√-{}]'.format(x.c, y.c))


def _format(a, b, c):
    sign = '-' if b < 0 else '+'
    return '{}{}{}√-{}'.format(a, sign, abs(b), c)


@dataclass(frozen=True)
class QuadInt:
    """The element a + b√-c of Z[√-c]."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        _check_c(self.c)
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError('QuadInt components must be integers')

    @classmethod
    def root(cls, c: int) -> 'QuadInt':
        """√-c itself."""
        return cls(0, 1, c)

    def _coerce(self, other):
        if isinstance(other, int):
            return QuadInt(other, 0, self.c)
        if isinstance(other, QuadInt):
            _same_ring(self, other)
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadInt(self.a + other.a, self.b + other.b, self.c)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.a, -self.b, self.c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadInt(self.a - other.a, self.b - other.b, self.c)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # √-c · √-c = -c
        return QuadInt(self.a * other.a - self.c * self.b * other.b,
                       self.a * other.b + self.b * other.a,
                       self.c)

    __rmul__ = __mul__

    def conj(self) -> 'QuadInt':
        return QuadInt(self.a, -self.b, self.c)

    def norm(self) -> int:
        return self.a * self.a + self.c * self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self):
        return _format(self.a, self.b, self.c)


@dataclass(frozen=True)
class QuadRat:
    """The element a + b√-c of Q(√-c), components kept as reduced fractions."""

    a: Fraction
    b: Fraction
    c: int

    def __post_init__(self):
        _check_c(self.c)
        object.__setattr__(self, 'a', Fraction(self.a))
        object.__setattr__(self, 'b', Fraction(self.b))

    @classmethod
    def root(cls, c: int) -> 'QuadRat':
        return cls(0, 1, c)

    @classmethod
    def from_quadint(cls, x: QuadInt) -> 'QuadRat':
        return cls(x.a, x.b, x.c)

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadRat(other, 0, self.c)
        if isinstance(other, (QuadRat, QuadInt)):
            _same_ring(self, other)
            return other if isinstance(other, QuadRat) else QuadRat.from_quadint(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadRat(self.a + other.a, self.b + other.b, self.c)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.a, -self.b, self.c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadRat(self.a - other.a, self.b - other.b, self.c)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadRat(self.a * other.a - self.c * self.b * other.b,
                       self.a * other.b + self.b * other.a,
                       self.c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def conj(self) -> 'QuadRat':
        return QuadRat(self.a, -self.b, self.c)

    def norm(self) -> Fraction:
        return self.a * self.a + self.c * self.b * self.b

    def inverse(self) -> 'QuadRat':
        """conj(x) / norm(x); never leaves exact arithmetic."""
        n = self.norm()
        if n == 0:
            raise ZeroElementError('0 has no inverse in Q(√-{})'.format(self.c))
        return QuadRat(self.a / n, -self.b / n, self.c)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def to_quadint(self) -> QuadInt:
        if not self.is_integral():
            raise InexactDivisionError('{} is not an element of Z[√-{}]'.format(self, self.c))
        return QuadInt(self.a.numerator, self.b.numerator, self.c)

    def __str__(self):
        return _format(self.a, self.b, self.c)


Quad = Union[QuadInt, QuadRat]


def _same_kind(x, y):
    if type(x) is not type(y):
        raise TypeError('operands must both be QuadInt or both QuadRat')
    _same_ring(x, y)


def quad_add(x: Quad, y: Quad) -> Quad:
    _same_kind(x, y)
    return x + y


def quad_sub(x: Quad, y: Quad) -> Quad:
    _same_kind(x, y)
    return x - y


def quad_neg(x: Quad) -> Quad:
    return -x


def quad_mul(x: Quad, y: Quad) -> Quad:
    _same_kind(x, y)
    return x * y


def quad_conj(x: Quad) -> Quad:
    return x.conj()


def quad_norm(x: Quad):
    """a² + c·b², an integer for QuadInt and a Fraction for QuadRat."""
    return x.norm()


def quad_inverse(x: QuadRat) -> QuadRat:
    return x.inverse()


def h_c(x: QuadInt) -> int:
    """gcd(a, b) of a nonzero element a + b√-c."""
    if x.is_zero():
        raise ZeroElementError('h_c is not defined at 0')
    return math.gcd(x.a, x.b)


def is_multiple(N: int, z: QuadInt) -> bool:
    """Whether the rational integer N is a multiple of z in Z[√-c].

    This holds exactly when (a² + cb²)/gcd(a, b) divides N.
    """
    if z.is_zero():
        raise ZeroElementError('divisibility by 0 is not defined')
    return N % (z.norm() // h_c(z)) == 0


def quad_divide_exact(w: QuadInt, z: QuadInt) -> QuadInt:
    """The q with q·z = w, computed as w·conj(z)/norm(z)."""
    _same_ring(w, z)
    if z.is_zero():
        raise ZeroElementError('division by 0 in Z[√-{}]'.format(z.c))
    numerator = w * z.conj()
    n = z.norm()
    if numerator.a % n or numerator.b % n:
        raise InexactDivisionError('{} is not a multiple of {}'.format(w, z))
    return QuadInt(numerator.a // n, numerator.b // n, z.c)


def divides(z: QuadInt, w: QuadInt) -> bool:
    """Whether z divides w in Z[√-c]; 0 divides only 0."""
    _same_ring(w, z)
    if z.is_zero():
        return w.is_zero()
    try:
        quad_divide_exact(w, z)
    except InexactDivisionError:
        return False
    return True


def prod_shifted(c: int, m: int, n: int) -> QuadInt:
    """∏_{k=m}^{n} (k + √-c)."""
    if m > n:
        raise DegreeError('prod_shifted needs m <= n, got m={} n={}'.format(m, n))
    product = QuadInt(1, 0, c)
    for k in range(m, n + 1):
        product = product * QuadInt(k, 1, c)
    return product


def star_quotient(c: int, m: int, n: int, L: int) -> QuadInt:
    """x + y√-c with L·(n-m)! = (x + y√-c)·∏_{k=m}^{n}(k + √-c)."""
    w = QuadInt(L * math.factorial(n - m), 0, c)
    return quad_divide_exact(w, prod_shifted(c, m, n))


def _product(values, c):
    result = QuadInt(1, 0, c)
    for v in values:
        result = result * v
    return result


def check_lemma_l1(u: Sequence[QuadInt], a: QuadInt, b: QuadInt) -> bool:
    """Check that a·b is a multiple of u_0·u_1···u_n.

    Hypotheses: every u_i divides a and every ∏_{j≠i}(u_i - u_j) divides b.
    A failed hypothesis raises :class:`HypothesisError`; the return value
    only reports the conclusion.
    """
    if not u:
        raise HypothesisError('the lemma needs at least one element u_0')
    c = a.c
    for x in list(u) + [b]:
        _same_ring(a, x)

    for i, ui in enumerate(u):
        if not divides(ui, a):
            raise HypothesisError('u_{} = {} does not divide a = {}'.format(i, ui, a))
        differences = _product((ui - uj for j, uj in enumerate(u) if j != i), c)
        if not divides(differences, b):
            raise HypothesisError(
                'difference product {} for u_{} does not divide b = {}'.format(differences, i, b))

    holds = divides(_product(u, c), a * b)
    if not holds:
        logger.warning('lemma conclusion failed for u=%s a=%s b=%s',
                       [str(x) for x in u], a, b)
    return holds
