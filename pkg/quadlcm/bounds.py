"""L_{c,m,n} = lcm{m²+c, ..., n²+c}, its rational divisor and lower bounds.

Divisibility statements are checked in exact integer arithmetic. Lower
bounds that involve e and π are compared in log space with mpmath at
``PRECISION_BITS`` of working precision; factorial logarithms are sums of
logarithms of integers, never Stirling approximations.

Bounds reported by :func:`bound_report`, by name:

    oon_2n       2^n, for m <= ceil(n/2)
    binom        m·C(n, m)
    t7           λ1(c)·m²·n!²/(m!²(n-m)!³)
    t9           λ2(c)·nm/(n-m)^{3/2}·(m²/(n-m)³)^{n-m}·e^{3(n-m)}, m < n
    c5           λ3(c)·(n - n^{2/3}/2)·(2e³)^{floor(n^{2/3}/2)}, m <= n - n^{2/3}/2
    final        λ2(c)·n·e^{3(n-m)}, n - n^{2/3}/2 <= m
    farhi        0.32·1.442^n, for c = m = 1
    oon_modulus  ∏√(k²+c)/(n-m)!
    p2           ∏(k²+c)/((n-m)!·h_c(∏(k+√-c)))
    divisor      the rational divisor D itself
    t9_sharp     the Stirling estimate before simplification to t9
    c5_sharp     2^{3/2}λ2(c)(n - n^{2/3}/2)[8(1 - 1/(2n^{1/3}))²]^f e^{3f}, n >= 3

The gap n - m of order n^α makes the t9 bound grow like n^{(2-3α)n^α};
the best exponent is α = 2/3 - 1/log n, which motivates the c5 gate. This
is a heuristic and is not checked.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import gmpy2
import mpmath

from .config import LOG_TOLERANCE, PRECISION_BITS
from .exceptions import DegreeError, InexactDivisionError, InvariantViolation
from .ring import QuadInt, h_c, prod_shifted, quad_divide_exact

logger = logging.getLogger(__name__)

BOUND_NAMES = (
    'oon_2n', 'binom', 't7', 't9', 'c5', 'final', 'farhi',
    'oon_modulus', 'p2', 'divisor', 't9_sharp', 'c5_sharp',
)

precise = mpmath.workprec(PRECISION_BITS)


def _check_triple(c, m, n):
    if c < 1 or m < 1:
        raise DegreeError('c and m must be positive, got c={} m={}'.format(c, m))
    if m > n:
        raise DegreeError('need m <= n, got m={} n={}'.format(m, n))


def big_lcm(c: int, m: int, n: int) -> int:
    _check_triple(c, m, n)
    result = 1
    for k in range(m, n + 1):
        value = k * k + c
        result = result * value // math.gcd(result, value)
    return result


def lcm_column(c: int, n: int) -> Dict[int, int]:
    """{m: L_{c,m,n}} for every 1 <= m <= n, by incremental lcm from m = n down."""
    _check_triple(c, 1, n)
    column = {}
    result = 1
    for m in range(n, 0, -1):
        value = m * m + c
        result = result * value // math.gcd(result, value)
        column[m] = result
    return column


def shifted_norm_product(c: int, m: int, n: int) -> int:
    """∏_{k=m}^{n} (k² + c)."""
    return math.prod(k * k + c for k in range(m, n + 1))


def hc_bound_d(c: int, k: int) -> int:
    """c·∏_{ℓ=1}^{k} (ℓ² + 4c)."""
    if k < 0:
        raise DegreeError('k must be nonnegative, got {}'.format(k))
    return c * math.prod(ell * ell + 4 * c for ell in range(1, k + 1))


def divisor_denominator(c: int, m: int, n: int) -> int:
    return math.factorial(n - m) * hc_bound_d(c, n - m)


def divisor_D(c: int, m: int, n: int) -> Fraction:
    _check_triple(c, m, n)
    return Fraction(shifted_norm_product(c, m, n), divisor_denominator(c, m, n))


def hc_product(c: int, m: int, n: int) -> int:
    return h_c(prod_shifted(c, m, n))


@dataclass(frozen=True)
class DivisorReport:
    """Outcome of :func:`verify_t7_divisor`.

    ``quotient_check`` is L/D as an int, or the non-integral Fraction when
    that check fails.
    """

    c: int
    m: int
    n: int
    L: int
    numerator: int
    denominator: int
    D: Fraction
    quotient_check: Union[int, Fraction]
    hc_value: int
    hc_bound: int
    star_x: Optional[int]
    star_y: Optional[int]
    violations: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_t7_divisor(c: int, m: int, n: int, L: Optional[int] = None,
                      strict: bool = True) -> DivisorReport:
    """Check that D divides L, that h_c divides c∏(ℓ²+4c), and L·(n-m)! = (x + y√-c)·∏(k + √-c).

    With ``strict`` a violation raises :class:`InvariantViolation`;
    otherwise it is recorded in ``violations``.
    """
    _check_triple(c, m, n)
    if L is None:
        L = big_lcm(c, m, n)
    numerator = shifted_norm_product(c, m, n)
    denominator = divisor_denominator(c, m, n)
    D = Fraction(numerator, denominator)
    quotient = Fraction(L) / D
    product = prod_shifted(c, m, n)
    hc_value = h_c(product)
    hc_bound = hc_bound_d(c, n - m)
    scaled_L = L * math.factorial(n - m)

    violations = []
    if quotient.denominator != 1:
        violations.append('L/D = {} is not an integer'.format(quotient))
    if hc_bound % hc_value:
        violations.append('h_c = {} does not divide {}'.format(hc_value, hc_bound))
    try:
        star = quad_divide_exact(QuadInt(scaled_L, 0, c), product)
    except InexactDivisionError:
        star = None
        violations.append('L·(n-m)! is not a multiple of ∏(k+√-c)')
    else:
        if star * product != QuadInt(scaled_L, 0, c):
            violations.append('(x + y√-c)·∏(k+√-c) != L·(n-m)!')
    if (scaled_L * hc_value) % numerator:
        violations.append('L·(n-m)!·h_c is not a multiple of ∏(k²+c)')

    report = DivisorReport(
        c=c, m=m, n=n, L=L,
        numerator=numerator, denominator=denominator, D=D,
        quotient_check=quotient.numerator if quotient.denominator == 1 else quotient,
        hc_value=hc_value, hc_bound=hc_bound,
        star_x=None if star is None else star.a,
        star_y=None if star is None else star.b,
        violations=tuple(violations),
    )
    if violations:
        logger.warning('divisor check failed for (c, m, n) = (%d, %d, %d): %s', c, m, n, '; '.join(violations))
        if strict:
            raise InvariantViolation('; '.join(violations))
    return report


@dataclass(frozen=True)
class OonReport:
    binom_ok: bool
    two_n_ok: Optional[bool]


def half_ceil(n: int) -> int:
    return (n + 1) // 2


def oon_checks(c: int, m: int, n: int, L: Optional[int] = None) -> OonReport:
    """L >= m·C(n, m) always; L >= 2^n only checked when m <= ceil(n/2)."""
    _check_triple(c, m, n)
    if L is None:
        L = big_lcm(c, m, n)
    two_n_ok = L >= 2 ** n if m <= half_ceil(n) else None
    return OonReport(binom_ok=L >= m * math.comb(n, m), two_n_ok=two_n_ok)


def central_binomial_check(r: int) -> bool:
    """ceil(r/2)·C(r, ceil(r/2)) >= 2^r, which holds from r = 7 on."""
    if r < 7:
        raise DegreeError('the central binomial estimate needs r >= 7, got {}'.format(r))
    m0 = half_ceil(r)
    return m0 * math.comb(r, m0) >= 2 ** r


def oon_full_range(c: int, n: int) -> bool:
    """lcm(1²+c, ..., n²+c) >= 2^n."""
    return big_lcm(c, 1, n) >= 2 ** n


def c5_floor(n: int) -> int:
    """floor(n^{2/3}/2), from the integer cube root of n²."""
    root, _ = gmpy2.iroot(n * n, 3)
    return int(root) // 2


def c5_applicable(m: int, n: int) -> bool:
    """m <= n - n^{2/3}/2, i.e. n² <= 8(n-m)³."""
    return m <= n and n * n <= 8 * (n - m) ** 3


def final_applicable(m: int, n: int) -> bool:
    """n - n^{2/3}/2 <= m <= n, i.e. 8(n-m)³ <= n²."""
    return m <= n and 8 * (n - m) ** 3 <= n * n


class _LogFactorials:
    """Cumulative table of log k! = Σ_{j<=k} log j."""

    def __init__(self):
        self._table = [mpmath.mpf(0)]

    @precise
    def __call__(self, k: int):
        if k < 0:
            raise DegreeError('log k! needs k >= 0, got {}'.format(k))
        while len(self._table) <= k:
            j = len(self._table)
            self._table.append(self._table[-1] + mpmath.log(j))
        return self._table[k]


log_factorial = _LogFactorials()


@precise
def log_lambda1(c: int):
    return -2 * mpmath.pi ** 2 * c / 3 - mpmath.log(c)


@precise
def log_lambda2(c: int):
    return log_lambda1(c) - mpmath.mpf(5) / 12 - mpmath.mpf(3) / 2 * mpmath.log(2 * mpmath.pi)


@precise
def log_lambda3(c: int):
    return log_lambda1(c) - mpmath.mpf(5) / 12 - mpmath.mpf(3) / 2 * mpmath.log(mpmath.pi)


@precise
def lambda1(c: int):
    """e^{-2π²c/3}/c."""
    return mpmath.exp(log_lambda1(c))


@precise
def lambda2(c: int):
    """e^{-2π²c/3 - 5/12}/((2π)^{3/2}·c)."""
    return mpmath.exp(log_lambda2(c))


@precise
def lambda3(c: int):
    """e^{-2π²c/3 - 5/12}/(π^{3/2}·c)."""
    return mpmath.exp(log_lambda3(c))


@dataclass(frozen=True)
class BoundValue:
    applicable: bool
    log_value: Optional[mpmath.mpf] = None


@dataclass(frozen=True)
class BoundReport:
    c: int
    m: int
    n: int
    logL: mpmath.mpf
    bounds: Dict[str, BoundValue] = field(default_factory=dict)
    violations: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @precise
    def tightness(self, name: str):
        """log(bound)/log L, or None when the bound does not apply."""
        value = self.bounds[name]
        if not value.applicable:
            return None
        return value.log_value / self.logL


@precise
def _bound_logs(c, m, n, hc_value):
    log = mpmath.log
    k = n - m
    numerator = shifted_norm_product(c, m, n)
    D = Fraction(numerator, divisor_denominator(c, m, n))
    n_two_thirds = mpmath.cbrt(n) ** 2
    logs = {
        'oon_modulus': log(numerator) / 2 - log_factorial(k),
        'p2': log(numerator) - log_factorial(k) - log(hc_value),
        'divisor': log(D.numerator) - log(D.denominator),
        'binom': log(m * math.comb(n, m)),
        't7': (log_lambda1(c) + 2 * log(m) + 2 * log_factorial(n)
               - 2 * log_factorial(m) - 3 * log_factorial(k)),
        'final': log_lambda2(c) + log(n) + 3 * k if final_applicable(m, n) else None,
        'oon_2n': n * log(2) if m <= half_ceil(n) else None,
        'farhi': log(mpmath.mpf('0.32')) + n * log(mpmath.mpf('1.442')) if (c, m) == (1, 1) else None,
    }
    if k > 0:
        shape = log(n) + log(m) - mpmath.mpf(3) / 2 * log(k) + k * (2 * log(m) - 3 * log(k))
        logs['t9'] = log_lambda2(c) + shape + 3 * k
        logs['t9_sharp'] = (log_lambda1(c) - mpmath.mpf(3) / 2 * log(2 * mpmath.pi) + shape
                            + 2 * n * (log(n) - log(m)) + k
                            - mpmath.mpf(1) / (6 * m) - mpmath.mpf(1) / (4 * k))
    if c5_applicable(m, n):
        f = c5_floor(n)
        head = log(n - n_two_thirds / 2)
        logs['c5'] = log_lambda3(c) + head + f * (log(2) + 3)
        if n >= 3:
            shrink = 1 - 1 / (2 * mpmath.cbrt(n))
            logs['c5_sharp'] = (mpmath.mpf(3) / 2 * log(2) + log_lambda2(c) + head
                                + f * (log(8) + 2 * log(shrink)) + 3 * f)
    return logs


@precise
def bound_report(c: int, m: int, n: int, L: Optional[int] = None,
                 hc_value: Optional[int] = None, strict: bool = True) -> BoundReport:
    """Evaluate every lower bound for L_{c,m,n} in log space and compare with log L."""
    _check_triple(c, m, n)
    if L is None:
        L = big_lcm(c, m, n)
    if hc_value is None:
        hc_value = hc_product(c, m, n)
    logL = mpmath.log(L)
    tolerance = mpmath.mpf(LOG_TOLERANCE)

    logs = _bound_logs(c, m, n, hc_value)
    bounds = {}
    violations = []
    for name in BOUND_NAMES:
        value = logs.get(name)
        if value is None:
            bounds[name] = BoundValue(applicable=False)
            continue
        bounds[name] = BoundValue(applicable=True, log_value=value)
        if logL < value - tolerance * abs(value):
            violations.append('{} bound {} exceeds log L = {}'.format(
                name, mpmath.nstr(value, 15), mpmath.nstr(logL, 15)))

    report = BoundReport(c=c, m=m, n=n, logL=logL, bounds=bounds, violations=tuple(violations))
    if violations:
        logger.warning('bound check failed for (c, m, n) = (%d, %d, %d): %s', c, m, n, '; '.join(violations))
        if strict:
            raise InvariantViolation('; '.join(violations))
    return report


@precise
def stirling_check(k: int) -> bool:
    """k^k e^{-k} √(2πk) <= k! <= k^k e^{-k} √(2πk) e^{1/(12k)}, in logs."""
    if k < 1:
        raise DegreeError('Stirling bounds need k >= 1, got {}'.format(k))
    return _stirling_holds(k, log_factorial(k))


def _stirling_holds(k, log_fact):
    base = k * mpmath.log(k) - k + mpmath.log(2 * mpmath.pi * k) / 2
    return base <= log_fact <= base + mpmath.mpf(1) / (12 * k)


@precise
def stirling_sweep(k_max: int) -> bool:
    """stirling_check for 1 <= k <= k_max, accumulating Σ log j once."""
    log_fact = mpmath.mpf(0)
    for k in range(1, k_max + 1):
        log_fact += mpmath.log(k)
        if not _stirling_holds(k, log_fact):
            logger.warning('Stirling bounds fail at k=%d', k)
            return False
    return True


def monotone_in_m(c: int, n: int) -> bool:
    """L_{c,m,n} never increases as m grows."""
    values: List[int] = [big_lcm(c, m, n) for m in range(1, n + 1)]
    return all(a >= b for a, b in zip(values, values[1:]))
