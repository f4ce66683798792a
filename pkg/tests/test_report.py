#!/usr/bin/env python

"""Tests for `quadlcm.report`."""

import dataclasses
import io
import json
import unittest
from fractions import Fraction

import mpmath

from quadlcm.bounds import bound_report, oon_checks, verify_t7_divisor
from quadlcm.poly import bezout_certificate
from quadlcm.report import (
    SWEEP_COLUMNS,
    TABLE_COLUMNS,
    certificate_document,
    format_log,
    format_rational,
    lossless,
    quadrat_entry,
    sweep_row,
    table_row,
    verify_document,
    write_csv,
    write_json,
)
from quadlcm.ring import QuadRat


class TestFormatting(unittest.TestCase):
    """Scalar renderings."""

    def test_lossless(self):
        """Integers past signed 64 bits become decimal strings."""
        self.assertEqual(lossless(2 ** 63 - 1), 2 ** 63 - 1)
        self.assertEqual(lossless(2 ** 63), '9223372036854775808')
        self.assertEqual(lossless(-2 ** 63), -2 ** 63)
        self.assertEqual(lossless(-2 ** 63 - 1), '-9223372036854775809')
        self.assertIs(lossless(True), True)
        self.assertIsNone(lossless(None))
        self.assertEqual(lossless('7/2'), '7/2')

    def test_format_rational(self):
        """Integral values render as ints, others as p/q."""
        self.assertEqual(format_rational(Fraction(8)), 8)
        self.assertEqual(format_rational(8), 8)
        self.assertEqual(format_rational(Fraction(28, 5)), '28/5')

    def test_format_log(self):
        """Logs render as decimal strings; missing ones stay None."""
        self.assertIsNone(format_log(None))
        self.assertEqual(format_log(mpmath.mpf(2)), '2.0')
        with mpmath.workprec(96):
            text = format_log(mpmath.log(10))
        self.assertTrue(text.startswith('2.302585092994'))

    def test_quadrat_entry(self):
        """p/q + (r/s)√-c flattens to [p, q, r, s]."""
        self.assertEqual(quadrat_entry(QuadRat(Fraction(-2, 5), Fraction(1, 10), 1)), [-2, 5, 1, 10])


class TestDocuments(unittest.TestCase):
    """Certificate and verification documents."""

    def test_certificate_document(self):
        """Coefficients of r, s, A, B and α at c = k = 1."""
        document = certificate_document(bezout_certificate(1, 1))
        self.assertEqual(document['d'], 5)
        self.assertEqual(document['r'], [-4])
        self.assertEqual(document['s'], [1, -2])
        self.assertEqual(document['A'], [-1, -1, 1])
        self.assertEqual(document['B'], [-1, 2])
        self.assertEqual(document['alpha'], [[-2, 5, 1, 10], [0, 1, -1, 5]])

    def test_zero_polynomial_is_listed(self):
        """The zero polynomial serializes as [0]."""
        document = certificate_document(bezout_certificate(1, 0))
        self.assertEqual(document['r'], [0])
        self.assertEqual(document['s'], [-1])

    def test_verify_document(self):
        """The (1, 1, 3) document and its sections."""
        divisor = verify_t7_divisor(1, 1, 3)
        document = verify_document(divisor, oon_checks(1, 1, 3), bound_report(1, 1, 3))
        self.assertEqual(document['status'], 'ok')
        self.assertEqual(document['divisor']['D'], '5/4')
        self.assertEqual(document['divisor']['quotient'], 8)
        self.assertEqual(document['divisor']['hc'], 10)
        self.assertEqual(document['oon'], {'binom_ok': True, 'two_n_ok': True})
        self.assertIsNone(document['bounds']['bounds']['final']['log_value'])

    def test_violation_status(self):
        """A wrong L turns the status into violation."""
        divisor = verify_t7_divisor(1, 1, 3, L=7, strict=False)
        document = verify_document(divisor, oon_checks(1, 1, 3, L=7), bound_report(1, 1, 3, L=7, strict=False))
        self.assertEqual(document['status'], 'violation')
        self.assertTrue(document['divisor']['violations'])


class TestRows(unittest.TestCase):
    """Sweep and table rows and their writers."""

    def setUp(self):
        self.row = sweep_row(verify_t7_divisor(1, 1, 3), oon_checks(1, 1, 3), bound_report(1, 1, 3))

    def test_sweep_row(self):
        """Columns, status and divisor fields of a sweep row."""
        self.assertEqual(tuple(self.row), SWEEP_COLUMNS)
        self.assertEqual(self.row['status'], 'ok')
        self.assertEqual((self.row['D_num'], self.row['D_den']), (5, 4))
        self.assertEqual(self.row['quotient'], 8)
        self.assertIsNone(self.row['final'])

    def test_table_row(self):
        """Columns in order, ending with the status of the triple."""
        row = table_row(bound_report(1, 2, 9))
        self.assertEqual(tuple(row), TABLE_COLUMNS)
        self.assertEqual(row['status'], 'ok')
        self.assertIsNone(row['farhi'])

    def test_table_row_violation(self):
        """A failed bound check shows in the status column."""
        report = dataclasses.replace(bound_report(1, 2, 9), violations=('forced',))
        self.assertEqual(table_row(report)['status'], 'violation: forced')

    def test_write_csv(self):
        """Header plus one line, with NA for missing values."""
        stream = io.StringIO()
        write_csv([self.row], SWEEP_COLUMNS, stream)
        header, line = stream.getvalue().splitlines()
        self.assertEqual(header.split(','), list(SWEEP_COLUMNS))
        values = dict(zip(SWEEP_COLUMNS, line.split(',')))
        self.assertEqual(values['L'], '10')
        self.assertEqual(values['final'], 'NA')
        self.assertEqual(values['status'], 'ok')

    def test_write_json(self):
        """Large integers survive as strings."""
        row = dict(self.row, L=2 ** 70)
        stream = io.StringIO()
        write_json([row], stream)
        self.assertTrue(stream.getvalue().endswith('\n'))
        parsed = json.loads(stream.getvalue())
        self.assertEqual(parsed[0]['L'], str(2 ** 70))
        self.assertIsNone(parsed[0]['final'])


if __name__ == '__main__':
    unittest.main()
