"""Console script for quadlcm.

Exit codes: 0 when every check passes, 1 on a usage or configuration
error, 2 when a mathematical invariant is violated.
"""
import argparse
import contextlib
import logging
import sys

from .bounds import big_lcm, bound_report, oon_checks, verify_t7_divisor
from .config import OutputFormat, SweepConfig, parse_m_policy
from .exceptions import ConfigError, DegreeError, InvariantViolation
from .poly import bezout_certificate
from .report import (
    STATUS_OK,
    SWEEP_COLUMNS,
    TABLE_COLUMNS,
    certificate_document,
    verify_document,
    write_csv,
    write_json,
)
from .sweep import run_sweep, run_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('expected a positive integer, got {}'.format(text))
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError('expected a nonnegative integer, got {}'.format(text))
    return value


def build_parser():
    parser = _Parser(prog='quadlcm', description=__doc__.splitlines()[0])
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress to standard error (-vv for debug)')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    verify = commands.add_parser('verify', help='check every theorem for one (c, m, n)')
    verify.add_argument('--c', type=_positive, required=True)
    verify.add_argument('--m', type=_positive, required=True)
    verify.add_argument('--n', type=_positive, required=True)

    sweep = commands.add_parser('sweep', help='check a grid of triples')
    sweep.add_argument('--c-min', type=_positive, default=1)
    sweep.add_argument('--c-max', type=_positive, default=1)
    sweep.add_argument('--n-min', type=_positive, default=1)
    sweep.add_argument('--n-max', type=_positive, default=10)
    sweep.add_argument('--m-policy', default='all',
                       help='all, half_ceil, fixed (with --m) or frontier')
    sweep.add_argument('--m', type=_positive, default=None)
    sweep.add_argument('--format', choices=[f.value for f in OutputFormat], default='csv')
    sweep.add_argument('--parallelism', type=_positive, default=1)
    sweep.add_argument('--out', default='stdout')

    bezout = commands.add_parser('bezout', help='emit the Bézout certificate for (c, k)')
    bezout.add_argument('--c', type=_positive, required=True)
    bezout.add_argument('--k', type=_nonnegative, required=True)

    table = commands.add_parser('table', help='bound tightness ratios for one c')
    table.add_argument('--c', type=_positive, required=True)
    table.add_argument('--n-max', type=_positive, required=True)
    table.add_argument('--parallelism', type=_positive, default=1)
    table.add_argument('--out', default='stdout')
    return parser


@contextlib.contextmanager
def _output(target):
    if target in ('-', 'stdout'):
        yield sys.stdout
    else:
        with open(target, 'w', newline='', encoding='utf-8') as stream:
            yield stream


def cmd_verify(args):
    if args.m > args.n:
        raise UsageError('--m ({}) must not exceed --n ({})'.format(args.m, args.n))
    c, m, n = args.c, args.m, args.n
    L = big_lcm(c, m, n)
    divisor = verify_t7_divisor(c, m, n, L=L, strict=False)
    bounds = bound_report(c, m, n, L=L, hc_value=divisor.hc_value, strict=False)
    document = verify_document(divisor, oon_checks(c, m, n, L=L), bounds)
    write_json(document, sys.stdout)
    return EXIT_OK if document['status'] == STATUS_OK else EXIT_VIOLATION


def cmd_sweep(args):
    policy, m_fixed = parse_m_policy(args.m_policy, args.m)
    config = SweepConfig(
        c_min=args.c_min, c_max=args.c_max,
        n_min=args.n_min, n_max=args.n_max,
        m_policy=policy, m_fixed=m_fixed,
        output_format=OutputFormat(args.format),
        parallelism=args.parallelism,
    ).validate()
    rows = run_sweep(config)
    with _output(args.out) as stream:
        if config.output_format is OutputFormat.CSV:
            write_csv(rows, SWEEP_COLUMNS, stream)
        else:
            write_json(rows, stream)
    return EXIT_OK if all(row['status'] == STATUS_OK for row in rows) else EXIT_VIOLATION


def cmd_bezout(args):
    cert = bezout_certificate(args.c, args.k)
    write_json(certificate_document(cert), sys.stdout)
    return EXIT_OK


def cmd_table(args):
    rows = run_table(args.c, args.n_max, args.parallelism)
    with _output(args.out) as stream:
        write_csv(rows, TABLE_COLUMNS, stream)
    return EXIT_OK if all(row['status'] == STATUS_OK for row in rows) else EXIT_VIOLATION


COMMANDS = {
    'verify': cmd_verify,
    'sweep': cmd_sweep,
    'bezout': cmd_bezout,
    'table': cmd_table,
}


def main(argv=None):
    """Console script for quadlcm."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print('quadlcm: error: {}'.format(exc), file=sys.stderr)
        return EXIT_USAGE

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')

    try:
        return COMMANDS[args.command](args)
    except (UsageError, ConfigError, DegreeError) as exc:
        parser.print_usage(sys.stderr)
        print('quadlcm: error: {}'.format(exc), file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        logger.error('invariant violated: %s', exc)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())  # pragma: no cover
