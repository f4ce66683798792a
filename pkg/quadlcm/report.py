"""Lossless CSV and JSON renderings of reports and certificates.

Exact quantities are written as integers (decimal strings beyond signed
64-bit in JSON); rationals as separate numerator and denominator fields;
elements of Q(√-c) as their two rational components. Logarithms are the
only real numbers written, with ``LOG_DIGITS`` significant digits.
"""
import csv
import json
from fractions import Fraction
from typing import IO, Dict, Iterable, List, Optional, Sequence, Union

import mpmath

from .bounds import BOUND_NAMES, BoundReport, DivisorReport, OonReport
from .config import LOG_DIGITS
from .poly import BezoutCertificate
from .ring import QuadRat

INT64_MIN = -2 ** 63
INT64_MAX = 2 ** 63 - 1

SWEEP_COLUMNS = (
    ('c', 'm', 'n', 'L', 'D_num', 'D_den', 'quotient', 'hc', 'hc_bound',
     'star_x', 'star_y', 'logL') + BOUND_NAMES + ('status',)
)

TABLE_COLUMNS = ('c', 'n', 'm') + BOUND_NAMES + ('status',)

STATUS_OK = 'ok'


def lossless(value):
    """Integers as JSON numbers while they fit in 64 bits, else as strings."""
    if isinstance(value, bool) or not isinstance(value, int):
        return value
    if INT64_MIN <= value <= INT64_MAX:
        return value
    return str(value)


def format_log(value) -> Optional[str]:
    if value is None:
        return None
    return mpmath.nstr(value, LOG_DIGITS)


def format_rational(value: Union[int, Fraction]):
    """An integer, or an integral fraction, as its integer; anything else as ``"p/q"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return '{}/{}'.format(value.numerator, value.denominator)


def quadrat_entry(value: QuadRat) -> List:
    return [lossless(value.a.numerator), lossless(value.a.denominator),
            lossless(value.b.numerator), lossless(value.b.denominator)]


def certificate_document(cert: BezoutCertificate) -> Dict:
    return {
        'c': lossless(cert.c),
        'k': lossless(cert.k),
        'd': lossless(cert.d),
        'alpha': [quadrat_entry(v) for v in cert.alpha.coeffs],
        'r': [lossless(v) for v in cert.r.to_list()],
        's': [lossless(v) for v in cert.s.to_list()],
        'A': [lossless(v) for v in cert.A.to_list()],
        'B': [lossless(v) for v in cert.B.to_list()],
    }


def divisor_document(report: DivisorReport) -> Dict:
    quotient = format_rational(report.quotient_check)
    return {
        'c': report.c,
        'm': report.m,
        'n': report.n,
        'L': lossless(report.L),
        'numerator': lossless(report.numerator),
        'denominator': lossless(report.denominator),
        'D': str(report.D),
        'D_num': lossless(report.D.numerator),
        'D_den': lossless(report.D.denominator),
        'quotient': lossless(quotient),
        'hc': lossless(report.hc_value),
        'hc_bound': lossless(report.hc_bound),
        'star_x': lossless(report.star_x),
        'star_y': lossless(report.star_y),
        'violations': list(report.violations),
    }


def oon_document(report: OonReport) -> Dict:
    return {'binom_ok': report.binom_ok, 'two_n_ok': report.two_n_ok}


def bounds_document(report: BoundReport) -> Dict:
    return {
        'logL': format_log(report.logL),
        'bounds': {
            name: {
                'applicable': value.applicable,
                'log_value': format_log(value.log_value),
            }
            for name, value in report.bounds.items()
        },
        'violations': list(report.violations),
    }


def oon_violations(report: OonReport) -> List[str]:
    problems = []
    if not report.binom_ok:
        problems.append('L < m·C(n, m)')
    if report.two_n_ok is False:
        problems.append('L < 2^n')
    return problems


def verify_document(divisor: DivisorReport, oon: OonReport, bounds: BoundReport) -> Dict:
    problems = list(divisor.violations) + oon_violations(oon) + list(bounds.violations)
    return {
        'divisor': divisor_document(divisor),
        'oon': oon_document(oon),
        'bounds': bounds_document(bounds),
        'status': STATUS_OK if not problems else 'violation',
    }


def sweep_row(divisor: DivisorReport, oon: OonReport, bounds: BoundReport) -> Dict:
    """One sweep row; ``None`` marks a bound that does not apply."""
    problems = list(divisor.violations) + oon_violations(oon) + list(bounds.violations)
    row = {
        'c': divisor.c,
        'm': divisor.m,
        'n': divisor.n,
        'L': divisor.L,
        'D_num': divisor.D.numerator,
        'D_den': divisor.D.denominator,
        'quotient': format_rational(divisor.quotient_check),
        'hc': divisor.hc_value,
        'hc_bound': divisor.hc_bound,
        'star_x': divisor.star_x,
        'star_y': divisor.star_y,
        'logL': format_log(bounds.logL),
    }
    for name in BOUND_NAMES:
        row[name] = format_log(bounds.bounds[name].log_value)
    row['status'] = STATUS_OK if not problems else 'violation: ' + '; '.join(problems)
    return row


def table_row(bounds: BoundReport) -> Dict:
    row = {'c': bounds.c, 'n': bounds.n, 'm': bounds.m}
    for name in BOUND_NAMES:
        row[name] = format_log(bounds.tightness(name))
    row['status'] = STATUS_OK if bounds.ok else 'violation: ' + '; '.join(bounds.violations)
    return row


def write_csv(rows: Iterable[Dict], columns: Sequence[str], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow(['NA' if row[name] is None else str(row[name]) for name in columns])


def write_json(document, stream: IO[str]) -> None:
    """Write a document; integers in sweep rows are made lossless first."""
    if isinstance(document, list):
        document = [{key: lossless(value) for key, value in row.items()} for row in document]
    json.dump(document, stream, indent=2, ensure_ascii=False)
    stream.write('\n')
