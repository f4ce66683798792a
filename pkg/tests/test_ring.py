#!/usr/bin/env python

"""Tests for `quadlcm.ring`."""

import math
import random
import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from quadlcm.exceptions import (
    DegreeError,
    HypothesisError,
    InexactDivisionError,
    RingMismatchError,
    ZeroElementError,
)
from quadlcm.ring import (
    QuadInt,
    QuadRat,
    check_lemma_l1,
    divides,
    h_c,
    is_multiple,
    prod_shifted,
    quad_add,
    quad_conj,
    quad_divide_exact,
    quad_inverse,
    quad_mul,
    quad_norm,
    star_quotient,
)

from tests import SCALE


def gaussian(a, b):
    return QuadInt(a, b, 1)


@st.composite
def quadints(draw, c=None, bound=50):
    c = draw(st.integers(1, 7)) if c is None else c
    a = draw(st.integers(-bound, bound))
    b = draw(st.integers(-bound, bound))
    return QuadInt(a, b, c)


@st.composite
def ring_triples(draw):
    c = draw(st.integers(1, 7))
    return tuple(draw(quadints(c=c)) for _ in range(3))


def brute_force_multiple(N, z):
    """Search x + y√-c with (x + y√-c)·z = N without going through h_c."""
    a, b, c = z.a, z.b, z.c
    bound = math.isqrt(N * N // z.norm()) + 1
    for x in range(-bound, bound + 1):
        # the √-c part b·x + a·y must vanish
        if a == 0:
            if x != 0:
                continue
            candidates = [-N // (c * b)] if N % (c * b) == 0 else []
        elif (b * x) % a == 0:
            candidates = [-(b * x) // a]
        else:
            candidates = []
        for y in candidates:
            if QuadInt(x, y, c) * z == QuadInt(N, 0, c):
                return True
    return False


class TestQuadArithmetic(unittest.TestCase):
    """Ring operations on QuadInt and QuadRat."""

    def test_add(self):
        """Componentwise sums."""
        self.assertEqual(quad_add(gaussian(1, 2), gaussian(3, -2)), gaussian(4, 0))
        self.assertEqual(quad_add(QuadInt(0, 0, 5), QuadInt(7, 1, 5)), QuadInt(7, 1, 5))
        self.assertEqual(quad_add(QuadInt(2, 3, 2), QuadInt(5, 4, 2)), QuadInt(7, 7, 2))

    def test_mul(self):
        """Products use √-c·√-c = -c."""
        self.assertEqual(quad_mul(gaussian(1, 1), gaussian(2, 1)), gaussian(1, 3))
        self.assertEqual(quad_mul(gaussian(1, 3), gaussian(3, 1)), gaussian(0, 10))
        x = QuadInt(4, -9, 3)
        self.assertEqual(quad_mul(x, QuadInt(1, 0, 3)), x)

    def test_mismatched_rings(self):
        """Elements of different rings never combine."""
        with self.assertRaises(RingMismatchError):
            quad_add(QuadInt(1, 1, 1), QuadInt(1, 1, 2))
        with self.assertRaises(RingMismatchError):
            quad_mul(QuadRat(1, 1, 3), QuadRat(1, 1, 2))
        with self.assertRaises(RingMismatchError):
            quad_divide_exact(QuadInt(4, 0, 1), QuadInt(2, 0, 2))

    def test_invalid_parameter(self):
        """c must be a positive integer."""
        with self.assertRaises(ValueError):
            QuadInt(1, 1, 0)
        with self.assertRaises(ValueError):
            QuadRat(1, 1, -3)

    def test_conj(self):
        """Conjugation flips the √-c part."""
        self.assertEqual(quad_conj(gaussian(1, 3)), gaussian(1, -3))
        self.assertEqual(quad_conj(QuadInt(5, 0, 2)), QuadInt(5, 0, 2))
        x, y = gaussian(1, 1), gaussian(2, 1)
        self.assertEqual(quad_conj(x * y), gaussian(1, -3))
        self.assertEqual(quad_conj(x * y), quad_conj(x) * quad_conj(y))

    def test_norm(self):
        """a² + c·b²."""
        self.assertEqual(quad_norm(gaussian(1, 3)), 10)
        self.assertEqual(quad_norm(QuadInt(0, 0, 4)), 0)
        for c in range(1, 6):
            for k in range(1, 10):
                self.assertEqual(quad_norm(QuadInt(k, 1, c)), k * k + c)
                self.assertEqual(QuadInt(k, 1, c) * QuadInt(k, -1, c), QuadInt(k * k + c, 0, c))

    def test_rational_inverse(self):
        """conj/norm inversion stays exact."""
        x = QuadRat(Fraction(3, 4), Fraction(-2, 5), 3)
        self.assertEqual(x * quad_inverse(x), QuadRat(1, 0, 3))
        self.assertEqual(quad_inverse(QuadRat(0, 2, 1)), QuadRat(0, Fraction(-1, 2), 1))
        with self.assertRaises(ZeroElementError):
            quad_inverse(QuadRat(0, 0, 2))

    @settings(deadline=None, max_examples=200)
    @given(ring_triples())
    def test_ring_axioms(self, triple):
        """Associativity, commutativity and distributivity hold exactly."""
        x, y, z = triple
        self.assertEqual((x + y) + z, x + (y + z))
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x + y, y + x)
        self.assertEqual(x * y, y * x)
        self.assertEqual(x * (y + z), x * y + x * z)

    @settings(deadline=None, max_examples=200)
    @given(ring_triples())
    def test_norm_and_conj_are_multiplicative(self, triple):
        """norm(xy) = norm(x)norm(y); conj respects sums and products."""
        x, y, _ = triple
        self.assertEqual(quad_norm(x * y), quad_norm(x) * quad_norm(y))
        self.assertEqual(quad_conj(x + y), quad_conj(x) + quad_conj(y))
        self.assertEqual(quad_conj(x * y), quad_conj(x) * quad_conj(y))
        self.assertEqual(quad_conj(quad_conj(x)), x)

    @settings(deadline=None, max_examples=200)
    @given(quadints())
    def test_h_c_of_norm(self, x):
        """x·conj(x) = norm(x), so h_c(x·conj(x)) = norm(x)."""
        if x.is_zero():
            return
        product = x * quad_conj(x)
        self.assertEqual(product, QuadInt(quad_norm(x), 0, x.c))
        self.assertEqual(h_c(product), quad_norm(x))


class TestDivisibility(unittest.TestCase):
    """h_c, the multiple criterion and exact division."""

    def test_h_c(self):
        """h_c is gcd of the two components."""
        self.assertEqual(h_c(gaussian(1, 3)), 1)
        self.assertEqual(h_c(gaussian(0, 10)), 10)
        self.assertEqual(h_c(gaussian(5, 5)), 5)
        self.assertEqual(h_c(QuadInt(-6, 0, 2)), 6)
        with self.assertRaises(ZeroElementError):
            h_c(QuadInt(0, 0, 3))

    def test_is_multiple(self):
        """N is a multiple of z iff norm(z)/h_c(z) divides N."""
        self.assertTrue(is_multiple(10, gaussian(1, 3)))
        self.assertFalse(is_multiple(5, gaussian(1, 3)))
        self.assertTrue(is_multiple(-10, gaussian(1, 3)))
        for N in (-7, 0, 1, 13):
            self.assertTrue(is_multiple(N, QuadInt(1, 0, 4)))
        with self.assertRaises(ZeroElementError):
            is_multiple(3, QuadInt(0, 0, 1))

    def test_divide_exact(self):
        """Quotients come back exactly or not at all."""
        self.assertEqual(quad_divide_exact(gaussian(20, 0), gaussian(0, 10)), gaussian(0, -2))
        self.assertEqual(quad_divide_exact(gaussian(10, 0), gaussian(5, 5)), gaussian(1, -1))
        z = QuadInt(3, -2, 5)
        self.assertEqual(quad_divide_exact(z, z), QuadInt(1, 0, 5))
        with self.assertRaises(InexactDivisionError):
            quad_divide_exact(gaussian(5, 0), gaussian(1, 3))
        with self.assertRaises(ZeroElementError):
            quad_divide_exact(gaussian(5, 0), gaussian(0, 0))

    def test_divides_zero(self):
        """Everything divides 0 and 0 divides only 0."""
        self.assertTrue(divides(QuadInt(2, 7, 3), QuadInt(0, 0, 3)))
        self.assertTrue(divides(QuadInt(0, 0, 3), QuadInt(0, 0, 3)))
        self.assertFalse(divides(QuadInt(0, 0, 3), QuadInt(1, 0, 3)))

    def test_multiple_criterion_matches_search(self):
        """The h_c criterion agrees with a direct quotient search."""
        r = SCALE.p1_ab_max
        for c in range(1, SCALE.p1_c_max + 1):
            for a in range(-r, r + 1):
                for b in range(-r, r + 1):
                    if a == 0 and b == 0:
                        continue
                    z = QuadInt(a, b, c)
                    for N in range(-SCALE.p1_n_max, SCALE.p1_n_max + 1):
                        self.assertEqual(is_multiple(N, z), brute_force_multiple(N, z),
                                         msg='N={} z={}'.format(N, z))

    @settings(deadline=None, max_examples=300)
    @given(quadints(bound=20), st.integers(-500, 500))
    def test_multiple_criterion_random(self, z, N):
        """Random samples over the full desk range."""
        if z.is_zero():
            return
        self.assertEqual(is_multiple(N, z), brute_force_multiple(N, z))


class TestShiftedProducts(unittest.TestCase):
    """∏(k + √-c) and the quotient x + y√-c of L·(n-m)!."""

    def test_prod_shifted(self):
        """Products at small triples; m > n is refused."""
        self.assertEqual(prod_shifted(1, 1, 3), gaussian(0, 10))
        self.assertEqual(prod_shifted(1, 2, 3), gaussian(5, 5))
        self.assertEqual(prod_shifted(1, 4, 4), gaussian(4, 1))
        with self.assertRaises(DegreeError):
            prod_shifted(1, 4, 3)

    def test_star_quotient(self):
        """L·(n-m)! = (x + y√-c)·∏(k + √-c)."""
        self.assertEqual(star_quotient(1, 1, 3, 10), gaussian(0, -2))
        self.assertEqual(star_quotient(1, 2, 3, 10), gaussian(1, -1))


class TestLemma(unittest.TestCase):
    """The divisibility lemma: u_i | a and ∏_{j≠i}(u_i - u_j) | b give ∏u_i | ab."""

    def setUp(self):
        self.rng = random.Random(20131)

    def test_examples(self):
        """Small instances worked by hand."""
        u = [gaussian(1, 1), gaussian(2, 1)]
        b = (u[0] - u[1]) * (u[1] - u[0])
        self.assertEqual(b, gaussian(-1, 0))
        self.assertTrue(check_lemma_l1(u, gaussian(1, 3), b))
        for c in (1, 3):
            k = 4
            self.assertTrue(check_lemma_l1([QuadInt(k, 1, c)], QuadInt(k * k + c, 0, c), QuadInt(1, 0, c)))
        # c = 1, m = 1, n = 2: a = L_{1,1,2} = 10 and b = 1!
        self.assertTrue(check_lemma_l1(u, gaussian(10, 0), gaussian(1, 0)))

    def test_violated_hypotheses(self):
        """Failed hypotheses are reported apart from the conclusion."""
        with self.assertRaises(HypothesisError):
            check_lemma_l1([gaussian(1, 1)], gaussian(1, 0), gaussian(1, 0))
        with self.assertRaises(HypothesisError):
            check_lemma_l1([gaussian(1, 1), gaussian(3, 1)], gaussian(10, 0), gaussian(1, 0))
        with self.assertRaises(HypothesisError):
            check_lemma_l1([], gaussian(1, 0), gaussian(1, 0))

    def _random_element(self, c):
        while True:
            x = QuadInt(self.rng.randint(-6, 6), self.rng.randint(-6, 6), c)
            if not x.is_zero():
                return x

    def _random_instance(self):
        c = self.rng.randint(1, 5)
        u = []
        while len(u) < self.rng.randint(1, 4):
            x = self._random_element(c)
            if x not in u:
                u.append(x)
        # each element divides its norm, so it divides any multiple of the lcm of norms
        a_base = 1
        b_base = 1
        for i, ui in enumerate(u):
            a_base = math.lcm(a_base, ui.norm())
            differences = QuadInt(1, 0, c)
            for j, uj in enumerate(u):
                if j != i:
                    differences = differences * (ui - uj)
            b_base = math.lcm(b_base, differences.norm())
        a = QuadInt(a_base, 0, c) * self._random_element(c)
        b = QuadInt(b_base, 0, c) * self._random_element(c)
        return u, a, b

    def test_random_instances(self):
        """The conclusion holds on every instance satisfying the hypotheses."""
        for _ in range(SCALE.lemma_instances):
            u, a, b = self._random_instance()
            self.assertTrue(check_lemma_l1(u, a, b), msg='u={} a={} b={}'.format(u, a, b))


if __name__ == '__main__':
    unittest.main()
