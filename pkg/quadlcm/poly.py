"""Exact polynomials over Q(√-c) and the Bézout cofactor α_k.

P_k(X) = (X + √-c)(X - 1 + √-c)···(X - k + √-c) and its conjugate have no
common root, so there is a unique α_k of degree at most k with

    α_k·P_k + conj(α_k)·conj(P_k) = 1.

α_k is built two ways: by Newton forward interpolation of its values
1/P_k(s + √-c), s = 0..k, and from the closed form of the interpolation
coefficients. Both must agree exactly. Clearing denominators with
d = c·∏(ℓ² + 4c) yields the integer certificate r·A - c·s·B = d.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .bounds import hc_bound_d
from .exceptions import (
    CommonFactorError,
    DegreeError,
    InexactDivisionError,
    InvariantViolation,
    PoleError,
    RingMismatchError,
)
from .ring import QuadInt, QuadRat, h_c, prod_shifted

logger = logging.getLogger(__name__)


def _to_quadrat(value, c):
    if isinstance(value, QuadRat):
        if value.c != c:
            raise RingMismatchError('coefficient lives in Q(√-{}), expected Q(√-{})'.format(value.c, c))
        return value
    if isinstance(value, QuadInt):
        if value.c != c:
            raise RingMismatchError('coefficient lives in Z[√-{}], expected Z[√-{}]'.format(value.c, c))
        return QuadRat.from_quadint(value)
    if isinstance(value, (int, Fraction)):
        return QuadRat(value, 0, c)
    raise TypeError('cannot use {!r} as a coefficient'.format(value))


class QuadPoly:
    """Dense polynomial in X over Q(√-c); ``coeffs[i]`` multiplies X^i."""

    __slots__ = ('_c', '_coeffs')

    def __init__(self, coeffs: Iterable, c: int):
        items = [_to_quadrat(v, c) for v in coeffs]
        while items and items[-1].is_zero():
            items.pop()
        self._c = c
        self._coeffs = tuple(items)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple], c: int) -> 'QuadPoly':
        return cls((QuadRat(a, b, c) for a, b in pairs), c)

    @classmethod
    def zero(cls, c: int) -> 'QuadPoly':
        return cls((), c)

    @classmethod
    def constant(cls, value, c: int) -> 'QuadPoly':
        return cls((value,), c)

    @classmethod
    def x(cls, c: int) -> 'QuadPoly':
        return cls((0, 1), c)

    @property
    def c(self) -> int:
        return self._c

    @property
    def coeffs(self) -> Tuple[QuadRat, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> QuadRat:
        if not self._coeffs:
            raise DegreeError('the zero polynomial has no leading coefficient')
        return self._coeffs[-1]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, QuadPoly):
            return NotImplemented
        return self._c == other._c and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._c, self._coeffs))

    def __repr__(self):
        return 'QuadPoly([{}], c={})'.format(', '.join(str(v) for v in self._coeffs), self._c)

    def _check(self, other):
        if other.c != self._c:
            raise RingMismatchError('cannot combine polynomials over Q(√-{}) and Q(√-{})'.format(self._c, other.c))

    def _lift(self, other):
        if isinstance(other, QuadPoly):
            self._check(other)
            return other
        try:
            return QuadPoly.constant(_to_quadrat(other, self._c), self._c)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        zero = QuadRat(0, 0, self._c)
        left = self._coeffs + (zero,) * (size - len(self._coeffs))
        right = other._coeffs + (zero,) * (size - len(other._coeffs))
        return QuadPoly((x + y for x, y in zip(left, right)), self._c)

    __radd__ = __add__

    def __neg__(self):
        return QuadPoly((-v for v in self._coeffs), self._c)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuadPoly):
            self._check(other)
            if self.is_zero() or other.is_zero():
                return QuadPoly.zero(self._c)
            result = [QuadRat(0, 0, self._c)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, x in enumerate(self._coeffs):
                for j, y in enumerate(other._coeffs):
                    result[i + j] = result[i + j] + x * y
            return QuadPoly(result, self._c)
        try:
            scalar = _to_quadrat(other, self._c)
        except TypeError:
            return NotImplemented
        return QuadPoly((v * scalar for v in self._coeffs), self._c)

    def __rmul__(self, other):
        return self * other

    def conj(self) -> 'QuadPoly':
        return QuadPoly((v.conj() for v in self._coeffs), self._c)

    def __call__(self, z) -> QuadRat:
        z = _to_quadrat(z, self._c)
        result = QuadRat(0, 0, self._c)
        for v in reversed(self._coeffs):
            result = result * z + v
        return result

    def shift(self, t) -> 'QuadPoly':
        """p(X + t)."""
        step = QuadPoly((t, 1), self._c)
        result = QuadPoly.zero(self._c)
        for v in reversed(self._coeffs):
            result = result * step + QuadPoly.constant(v, self._c)
        return result

    def monic(self) -> 'QuadPoly':
        return self * self.leading.inverse()

    def divmod(self, divisor: 'QuadPoly') -> Tuple['QuadPoly', 'QuadPoly']:
        """Euclidean division over the field Q(√-c)."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError('polynomial division by zero')
        remainder = list(self._coeffs)
        inverse = divisor.leading.inverse()
        shift = len(remainder) - len(divisor._coeffs)
        quotient = [QuadRat(0, 0, self._c)] * max(shift + 1, 0)
        while shift >= 0:
            factor = remainder[-1] * inverse
            quotient[shift] = factor
            for i, v in enumerate(divisor._coeffs):
                remainder[shift + i] = remainder[shift + i] - factor * v
            remainder.pop()
            shift -= 1
        return QuadPoly(quotient, self._c), QuadPoly(remainder, self._c)


class IntPoly:
    """Dense polynomial in X with integer coefficients."""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable[int]):
        items = [int(v) for v in coeffs]
        while items and items[-1] == 0:
            items.pop()
        self._coeffs = tuple(items)

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def to_list(self) -> List[int]:
        """Coefficients in ascending degree; the zero polynomial is ``[0]``."""
        return list(self._coeffs) or [0]

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return 'IntPoly({})'.format(list(self._coeffs))

    def __add__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        left = self._coeffs + (0,) * (size - len(self._coeffs))
        right = other._coeffs + (0,) * (size - len(other._coeffs))
        return IntPoly(x + y for x, y in zip(left, right))

    def __neg__(self):
        return IntPoly(-v for v in self._coeffs)

    def __sub__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(v * other for v in self._coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return IntPoly(())
        result = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, x in enumerate(self._coeffs):
            for j, y in enumerate(other._coeffs):
                result[i + j] += x * y
        return IntPoly(result)

    def __rmul__(self, other):
        return self * other

    def __call__(self, x: int) -> int:
        result = 0
        for v in reversed(self._coeffs):
            result = result * x + v
        return result


def poly_add(p: QuadPoly, q: QuadPoly) -> QuadPoly:
    return p + q


def poly_sub(p: QuadPoly, q: QuadPoly) -> QuadPoly:
    return p - q


def poly_mul(p: QuadPoly, q: QuadPoly) -> QuadPoly:
    return p * q


def poly_scale(p: QuadPoly, scalar) -> QuadPoly:
    return p * scalar


def poly_conj(p: QuadPoly) -> QuadPoly:
    return p.conj()


def poly_eval(p: QuadPoly, z) -> QuadRat:
    return p(z)


def poly_shift(p: QuadPoly, t) -> QuadPoly:
    return p.shift(t)


def poly_divmod(p: QuadPoly, q: QuadPoly) -> Tuple[QuadPoly, QuadPoly]:
    return p.divmod(q)


def build_P(c: int, k: int) -> QuadPoly:
    """P_k(X) = (X + √-c)(X - 1 + √-c)···(X - k + √-c)."""
    if k < 0:
        raise DegreeError('k must be nonnegative, got {}'.format(k))
    root = QuadRat.root(c)
    result = QuadPoly.constant(1, c)
    for i in range(k + 1):
        result = result * QuadPoly((root - i, 1), c)
    return result


def split_AB(p: QuadPoly) -> Tuple[IntPoly, IntPoly]:
    """Split p = A + B√-c into integer polynomials A and B."""
    for i, v in enumerate(p.coeffs):
        if not v.is_integral():
            raise InexactDivisionError('coefficient of X^{} is {}, not in Z[√-{}]'.format(i, v, p.c))
    return (IntPoly(v.a.numerator for v in p.coeffs),
            IntPoly(v.b.numerator for v in p.coeffs))


def forward_difference(p: QuadPoly, order: int) -> QuadPoly:
    """Δ^order p, where Δp(X) = p(X + 1) - p(X).

    Computed by repeated differencing and by the binomial expansion over
    shifts; the two results are compared exactly.
    """
    if order < 0:
        raise DegreeError('difference order must be nonnegative, got {}'.format(order))
    repeated = p
    for _ in range(order):
        repeated = repeated.shift(1) - repeated

    expanded = QuadPoly.zero(p.c)
    for m in range(order + 1):
        weight = (-1) ** (order - m) * math.comb(order, m)
        expanded = expanded + p.shift(m) * weight

    if repeated != expanded:
        raise InvariantViolation('Δ^{} by repetition and by binomial expansion disagree'.format(order))
    return repeated


def newton_basis(c: int, ell: int) -> QuadPoly:
    """(X - √-c)(X - √-c - 1)···(X - √-c - ℓ + 1); 1 for ℓ = 0."""
    if ell < 0:
        raise DegreeError('basis index must be nonnegative, got {}'.format(ell))
    root = QuadRat.root(c)
    result = QuadPoly.constant(1, c)
    for i in range(ell):
        result = result * QuadPoly((-root - i, 1), c)
    return result


def _check_index(k, ell):
    if k < 0 or ell < 0 or ell > k:
        raise DegreeError('need 0 <= ell <= k, got k={} ell={}'.format(k, ell))


def theta_def(c: int, k: int, ell: int) -> QuadRat:
    """Θ_{k,ℓ} = (1/ℓ!) Σ_j (-1)^{ℓ-j} C(ℓ,j) / P_k(j + √-c)."""
    _check_index(k, ell)
    P = build_P(c, k)
    root = QuadRat.root(c)
    total = QuadRat(0, 0, c)
    for j in range(ell + 1):
        weight = (-1) ** (ell - j) * math.comb(ell, j)
        total = total + P(root + j).inverse() * weight
    return total * Fraction(1, math.factorial(ell))


def _nonzero(factor: QuadRat, what: str) -> QuadRat:
    if factor.is_zero():
        raise PoleError('{} vanishes'.format(what))
    return factor


def R_def(c: int, k: int, ell: int, z: QuadRat) -> QuadRat:
    """R_{k,ℓ}(z) = (1/ℓ!) Σ_j (-1)^{ℓ-j} C(ℓ,j) / P_k(z + j + √-c)."""
    _check_index(k, ell)
    z = _to_quadrat(z, c)
    root = QuadRat.root(c)
    total = QuadRat(0, 0, c)
    for j in range(ell + 1):
        w = z + j + root
        denominator = QuadRat(1, 0, c)
        for i in range(k + 1):
            denominator = denominator * _nonzero(w - i + root, 'P_{}(z + {} + √-c)'.format(k, j))
        weight = (-1) ** (ell - j) * math.comb(ell, j)
        total = total + denominator.inverse() * weight
    return total * Fraction(1, math.factorial(ell))


def _falling(w: QuadRat, n: int, what: str) -> QuadRat:
    result = QuadRat(1, 0, w.c)
    for i in range(n):
        result = result * _nonzero(w - i, what)
    return result


def R_closed(c: int, k: int, ell: int, z: QuadRat) -> QuadRat:
    """(-1)^{k+ℓ} C(k+ℓ,ℓ) / ((z + 2√-c)·(k - 2√-c - z)^{k falling}·(ℓ + 2√-c + z)^{ℓ falling})."""
    _check_index(k, ell)
    z = _to_quadrat(z, c)
    two_root = QuadRat(0, 2, c)
    denominator = (_nonzero(z + two_root, 'z + 2√-c')
                   * _falling(k - two_root - z, k, 'a factor of (k - 2√-c - z) falling k')
                   * _falling(two_root + z + ell, ell, 'a factor of (ℓ + 2√-c + z) falling ℓ'))
    return denominator.inverse() * ((-1) ** (k + ell) * math.comb(k + ell, ell))


def theta_closed(c: int, k: int, ell: int) -> QuadRat:
    return R_closed(c, k, ell, QuadRat(0, 0, c))


def _newton_sum(c: int, thetas: Sequence[QuadRat]) -> QuadPoly:
    root = QuadRat.root(c)
    basis = QuadPoly.constant(1, c)
    result = QuadPoly.zero(c)
    for ell, theta in enumerate(thetas):
        result = result + basis * theta
        basis = basis * QuadPoly((-root - ell, 1), c)
    return result


def alpha_closed(c: int, k: int) -> QuadPoly:
    """α_k from the closed-form interpolation coefficients."""
    if k < 0:
        raise DegreeError('k must be nonnegative, got {}'.format(k))
    return _newton_sum(c, [theta_closed(c, k, ell) for ell in range(k + 1)])


def alpha_interp(c: int, k: int) -> QuadPoly:
    """α_k by Newton forward interpolation of 1/P_k(s + √-c), s = 0..k."""
    if k < 0:
        raise DegreeError('k must be nonnegative, got {}'.format(k))
    return _newton_sum(c, [theta_def(c, k, ell) for ell in range(k + 1)])


def bezout_general(P: QuadPoly, Q: QuadPoly) -> Tuple[QuadPoly, QuadPoly]:
    """The unique (U, V) with P·U + Q·V = 1, deg U < deg Q, deg V < deg P."""
    P._check(Q)
    if P.degree < 1 or Q.degree < 1:
        raise DegreeError('bezout_general needs non-constant polynomials')
    c = P.c
    one = QuadPoly.constant(1, c)
    zero = QuadPoly.zero(c)

    # r_i = s_i·P + t_i·Q throughout
    r0, r1 = P, Q
    s0, s1 = one, zero
    t0, t1 = zero, one
    step = 0
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        s, t = s0 - q * s1, t0 - q * t1
        if not r.is_zero():
            scale = r.leading.inverse()
            r, s, t = r * scale, s * scale, t * scale
        r0, r1 = r1, r
        s0, s1 = s1, s
        t0, t1 = t1, t
        step += 1
        logger.debug('euclid step %d: remainder degree %d', step, r1.degree)

    if r0.degree >= 1:
        raise CommonFactorError('common factor of degree {}: {!r}'.format(r0.degree, r0.monic()))

    scale = r0.leading.inverse()
    U0, V0 = s0 * scale, t0 * scale
    # reduce U0 modulo Q and move the quotient over to V
    quotient, U = U0.divmod(Q)
    V = V0 + quotient * P

    if P * U + Q * V != one or U.degree >= Q.degree or V.degree >= P.degree:
        raise InvariantViolation('extended Euclid produced an invalid Bézout pair')
    return U, V


@dataclass(frozen=True)
class BezoutCertificate:
    """(α_k, r_k, s_k, d) with 2d·α_k = r + s√-c and r·A - c·s·B = d."""

    c: int
    k: int
    alpha: QuadPoly
    A: IntPoly
    B: IntPoly
    r: IntPoly
    s: IntPoly
    d: int


def bezout_certificate(c: int, k: int) -> BezoutCertificate:
    alpha = alpha_closed(c, k)
    if alpha != alpha_interp(c, k):
        raise InvariantViolation('closed-form and interpolated α_{} differ for c={}'.format(k, c))

    P = build_P(c, k)
    if alpha * P + alpha.conj() * P.conj() != QuadPoly.constant(1, c):
        raise InvariantViolation('α_{0}·P_{0} + conj(α_{0})·conj(P_{0}) != 1 for c={1}'.format(k, c))

    A, B = split_AB(P)
    d = hc_bound_d(c, k)
    try:
        r, s = split_AB(alpha * (2 * d))
    except InexactDivisionError as exc:
        raise InvariantViolation('2d·α_{} is not integral for c={}: {}'.format(k, c, exc))

    if r * A - s * B * c != IntPoly((d,)):
        raise InvariantViolation('r·A - c·s·B != d for c={} k={}'.format(c, k))

    logger.debug('certificate c=%d k=%d d=%d', c, k, d)
    return BezoutCertificate(c=c, k=k, alpha=alpha, A=A, B=B, r=r, s=s, d=d)


def certificate_hc_check(cert: BezoutCertificate, n: int) -> bool:
    """Whether h_c(P_k(n)) = gcd(A_k(n), B_k(n)) divides d, for n > k."""
    if n <= cert.k:
        raise DegreeError('need n > k, got n={} k={}'.format(n, cert.k))
    g = math.gcd(cert.A(n), cert.B(n))
    if g != h_c(prod_shifted(cert.c, n - cert.k, n)):
        raise InvariantViolation('gcd(A_k(n), B_k(n)) differs from h_c(P_k(n)) at n={}'.format(n))
    return cert.d % g == 0
