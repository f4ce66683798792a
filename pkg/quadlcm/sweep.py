"""Grid sweeps over (c, m, n) and bound-tightness tables.

Triples are independent; with ``parallelism`` above one they are evaluated
in a process pool. Results always come back in (c, n, m) order.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from .bounds import big_lcm, bound_report, c5_floor, half_ceil, oon_checks, verify_t7_divisor
from .config import MPolicy, SweepConfig
from .report import STATUS_OK, sweep_row, table_row

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def m_values(config: SweepConfig, n: int) -> List[int]:
    if config.m_policy is MPolicy.ALL:
        return list(range(1, n + 1))
    if config.m_policy is MPolicy.HALF_CEIL:
        return [half_ceil(n)]
    if config.m_policy is MPolicy.FRONTIER:
        return [n - c5_floor(n)]
    return [config.m_fixed] if config.m_fixed <= n else []


def triples(config: SweepConfig) -> Iterator[Triple]:
    for c in range(config.c_min, config.c_max + 1):
        for n in range(config.n_min, config.n_max + 1):
            for m in sorted(m_values(config, n)):
                yield c, m, n


def evaluate_triple(triple: Triple) -> Dict:
    """All checks for one triple, as a sweep row; never raises on a violation."""
    c, m, n = triple
    L = big_lcm(c, m, n)
    divisor = verify_t7_divisor(c, m, n, L=L, strict=False)
    bounds = bound_report(c, m, n, L=L, hc_value=divisor.hc_value, strict=False)
    row = sweep_row(divisor, oon_checks(c, m, n, L=L), bounds)
    logger.debug('evaluated (c, m, n) = %s: %s', triple, row['status'])
    return row


def tightness_triple(triple: Triple) -> Dict:
    c, m, n = triple
    bounds = bound_report(c, m, n, strict=False)
    return table_row(bounds)


def _run(func: Callable[[Triple], Dict], work: Sequence[Triple], parallelism: int) -> List[Dict]:
    if parallelism == 1:
        return [func(t) for t in work]
    chunksize = max(1, len(work) // (parallelism * 4))
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(func, work, chunksize=chunksize))


def run_sweep(config: SweepConfig) -> List[Dict]:
    config.validate()
    work = list(triples(config))
    logger.info('sweeping %d triples with parallelism %d', len(work), config.parallelism)
    rows = _run(evaluate_triple, work, config.parallelism)
    flagged = [row for row in rows if row['status'] != STATUS_OK]
    for row in flagged:
        logger.warning('violation at (c, m, n) = (%s, %s, %s): %s', row['c'], row['m'], row['n'], row['status'])
    logger.info('sweep finished: %d rows, %d flagged', len(rows), len(flagged))
    return rows


def run_table(c: int, n_max: int, parallelism: int = 1) -> List[Dict]:
    """Tightness ratios log(bound)/log L for every 1 <= m <= n <= n_max."""
    config = SweepConfig(c_min=c, c_max=c, n_min=1, n_max=n_max, parallelism=parallelism).validate()
    work = list(triples(config))
    logger.info('tightness table for c=%d up to n=%d', c, n_max)
    return _run(tightness_triple, work, parallelism)
