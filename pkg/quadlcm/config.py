"""Configuration: numeric settings, sweep configuration and desk-scale ranges."""
import enum
from dataclasses import dataclass
from typing import Optional

from .exceptions import ConfigError

# Working precision of every transcendental evaluation (at least 80 bits).
PRECISION_BITS = 96

# Relative tolerance on log-space bound comparisons.
LOG_TOLERANCE = '1e-9'

# Significant digits of serialized logarithms.
LOG_DIGITS = 15


class MPolicy(enum.Enum):
    """Which values of m a sweep visits for a given n."""

    ALL = 'all'
    HALF_CEIL = 'half_ceil'
    FIXED = 'fixed'
    FRONTIER = 'frontier'


class OutputFormat(enum.Enum):
    CSV = 'csv'
    JSON = 'json'


def parse_m_policy(text: str, m: Optional[int] = None):
    """Parse the ``--m-policy`` value; ``fixed`` takes its m separately."""
    try:
        policy = MPolicy(text)
    except ValueError:
        choices = ', '.join(p.value for p in MPolicy)
        raise ConfigError('unknown m policy {!r} (choose from {})'.format(text, choices))
    if policy is MPolicy.FIXED and m is None:
        raise ConfigError('m policy "fixed" needs --m')
    return policy, (m if policy is MPolicy.FIXED else None)


@dataclass(frozen=True)
class SweepConfig:
    c_min: int = 1
    c_max: int = 1
    n_min: int = 1
    n_max: int = 10
    m_policy: MPolicy = MPolicy.ALL
    m_fixed: Optional[int] = None
    output_format: OutputFormat = OutputFormat.CSV
    parallelism: int = 1

    def validate(self) -> 'SweepConfig':
        for name in ('c_min', 'c_max', 'n_min', 'n_max', 'parallelism'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ConfigError('{} must be a positive integer, got {!r}'.format(name, value))
        if self.c_min > self.c_max:
            raise ConfigError('c_min ({}) exceeds c_max ({})'.format(self.c_min, self.c_max))
        if self.n_min > self.n_max:
            raise ConfigError('n_min ({}) exceeds n_max ({})'.format(self.n_min, self.n_max))
        if self.m_policy is MPolicy.FIXED:
            if not isinstance(self.m_fixed, int) or self.m_fixed < 1:
                raise ConfigError('fixed m must be a positive integer, got {!r}'.format(self.m_fixed))
        return self


@dataclass(frozen=True)
class DeskScale:
    """Parameter ranges over which every theorem is checked exhaustively."""

    c_max: int
    n_max_exact: int
    n_max_oon: int
    n_max_binom: int
    n_max_lambda: int
    n_max_farhi: int
    k_max_bezout: int
    c_max_rfunc: int
    k_max_rfunc: int
    rfunc_points: int
    p1_ab_max: int
    p1_c_max: int
    p1_n_max: int
    stirling_k_max: int
    lemma_instances: int


DESK_SCALE = DeskScale(
    c_max=5,
    n_max_exact=60,
    n_max_oon=300,
    n_max_binom=60,
    n_max_lambda=200,
    n_max_farhi=300,
    k_max_bezout=25,
    c_max_rfunc=3,
    k_max_rfunc=10,
    rfunc_points=50,
    p1_ab_max=20,
    p1_c_max=5,
    p1_n_max=500,
    stirling_k_max=10 ** 4,
    lemma_instances=10 ** 4,
)

QUICK_SCALE = DeskScale(
    c_max=3,
    n_max_exact=30,
    n_max_oon=300,
    n_max_binom=30,
    n_max_lambda=40,
    n_max_farhi=300,
    k_max_bezout=12,
    c_max_rfunc=2,
    k_max_rfunc=6,
    rfunc_points=10,
    p1_ab_max=5,
    p1_c_max=3,
    p1_n_max=80,
    stirling_k_max=2000,
    lemma_instances=1000,
)
