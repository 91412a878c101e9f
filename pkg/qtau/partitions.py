"""Partition counting and constrained enumeration."""

import enum
import itertools
import math
import threading
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from loguru import logger

from .arith import pentagonal_table
from .errors import DomainError
from .series import EtaProductSpec, eta_product, make_series, power

__all__ = ['PartitionShape', 'ConstraintMode', 'FrequencyConstraint', 'enum_partitions', 'count_partitions',
           'partition_numbers', 'p_count', 'q_distinct', 'distinct_table', 'regular_count', 'regular_table',
           'bounded_frequency_count', 'bounded_frequency_table', 'frequency_set_count', 'frequency_set_table',
           'series_pairs', 'weak_compositions', 'composition_weighted_sum', 'composition_weighted_table',
           'composition_weighted_sum_brute']

# above this many (m, a) pairs with a * m <= N the frequency-set product is left to enumeration
SERIES_PAIR_BUDGET = 10 ** 6


@dataclass(frozen=True)
class PartitionShape:
    """A partition in frequency form: ((a_1, f_1), ..., (a_r, f_r)) with a_1 > ... > a_r."""
    pairs: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        previous = None
        for part, frequency in self.pairs:
            if part < 1 or frequency < 1:
                raise DomainError(f"parts and frequencies must be positive, got {part}^{frequency}")
            if previous is not None and part >= previous:
                raise DomainError("parts must be strictly decreasing")
            previous = part

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> 'PartitionShape':
        """Builds the frequency form of a multiset of parts."""
        ordered = sorted(parts, reverse=True)
        return cls(tuple((part, len(list(group))) for part, group in itertools.groupby(ordered)))

    @property
    def size(self) -> int:
        """The partitioned integer."""
        return sum(part * frequency for part, frequency in self.pairs)

    @property
    def frequencies(self) -> Tuple[int, ...]:
        return tuple(frequency for _, frequency in self.pairs)

    def parts(self) -> List[int]:
        """The parts in non-increasing order."""
        return [part for part, frequency in self.pairs for _ in range(frequency)]

    def __len__(self):
        return sum(self.frequencies)

    def __str__(self):
        return ' '.join(f"{part}^{frequency}" for part, frequency in self.pairs) or '()'


class ConstraintMode(enum.Enum):
    """Restrictions understood by the enumerator."""
    UNCONSTRAINED = 'unconstrained'
    MAX_FREQUENCY = 'max_frequency'
    FREQUENCY_SET = 'frequency_set'
    DISTINCT_PARTS = 'distinct_parts'
    NO_PART_DIVISIBLE_BY = 'no_part_divisible_by'


@dataclass(frozen=True)
class FrequencyConstraint:
    """A predicate on parts and frequencies; build it with the classmethod factories."""
    mode: ConstraintMode = ConstraintMode.UNCONSTRAINED
    t: Optional[int] = None
    allowed: FrozenSet[int] = frozenset()

    @classmethod
    def unconstrained(cls) -> 'FrequencyConstraint':
        return cls()

    @classmethod
    def max_frequency(cls, t: int) -> 'FrequencyConstraint':
        """Every frequency at most t."""
        if t < 1:
            raise DomainError(f"maximum frequency must be positive, got {t}")
        return cls(ConstraintMode.MAX_FREQUENCY, t=t)

    @classmethod
    def frequency_set(cls, allowed: Iterable[int]) -> 'FrequencyConstraint':
        """Every frequency drawn from `allowed`."""
        values = frozenset(allowed)
        if not values:
            raise DomainError("the frequency set must not be empty")
        if min(values) < 1:
            raise DomainError(f"frequencies must be positive, got {sorted(values)}")
        return cls(ConstraintMode.FREQUENCY_SET, allowed=values)

    @classmethod
    def distinct_parts(cls) -> 'FrequencyConstraint':
        return cls(ConstraintMode.DISTINCT_PARTS)

    @classmethod
    def no_part_divisible_by(cls, t: int) -> 'FrequencyConstraint':
        """The t-regular partitions."""
        if t < 1:
            raise DomainError(f"divisor must be positive, got {t}")
        return cls(ConstraintMode.NO_PART_DIVISIBLE_BY, t=t)

    def allows_part(self, part: int) -> bool:
        if self.mode is ConstraintMode.NO_PART_DIVISIBLE_BY:
            return part % self.t != 0
        return True

    def allows_frequency(self, frequency: int) -> bool:
        if self.mode is ConstraintMode.MAX_FREQUENCY:
            return frequency <= self.t
        if self.mode is ConstraintMode.FREQUENCY_SET:
            return frequency in self.allowed
        if self.mode is ConstraintMode.DISTINCT_PARTS:
            return frequency == 1
        return True


def _enumerate(remaining: int, max_part: int, constraint: FrequencyConstraint,
               prefix: List[Tuple[int, int]]) -> Iterator[PartitionShape]:
    if remaining == 0:
        yield PartitionShape(tuple(prefix))
        return
    for part in range(min(max_part, remaining), 0, -1):
        if not constraint.allows_part(part):
            continue
        for frequency in range(remaining // part, 0, -1):
            if constraint.allows_frequency(frequency):
                prefix.append((part, frequency))
                yield from _enumerate(remaining - part * frequency, part - 1, constraint, prefix)
                prefix.pop()


def enum_partitions(n: int, constraint: Optional[FrequencyConstraint] = None) -> Iterator[PartitionShape]:
    """Yields each partition of n satisfying `constraint` once, reverse-lexicographically by parts.

    n = 0 yields only the empty partition. The stream is single-consumer.
    """
    if n < 0:
        raise DomainError(f"cannot partition a negative integer ({n})")
    return _enumerate(n, n, constraint or FrequencyConstraint.unconstrained(), [])


def count_partitions(n: int, constraint: Optional[FrequencyConstraint] = None) -> int:
    """Counts by enumeration; exponential, only meant as an oracle."""
    return sum(1 for _ in enum_partitions(n, constraint))


_p_table: List[int] = [1]
_p_lock = threading.Lock()


def _extend_p_table(n: int):
    with _p_lock:
        for m in range(len(_p_table), n + 1):
            total = 0
            for entry in pentagonal_table(m):
                if entry.value:
                    # p(m) = sum over g > 0 of (-1)^(l+1) p(m - g)
                    total -= entry.sign * _p_table[m - entry.value]
            _p_table.append(total)


def partition_numbers(n: int) -> List[int]:
    """[p(0), ..., p(n)] from the shared pentagonal-recurrence table."""
    if n < 0:
        raise DomainError(f"p(n) needs n >= 0, got {n}")
    if n >= len(_p_table):
        _extend_p_table(n)
    return _p_table[:n + 1]


def p_count(n: int) -> int:
    """The number of partitions of n."""
    if n < 0:
        raise DomainError(f"p(n) needs n >= 0, got {n}")
    if n >= len(_p_table):
        _extend_p_table(n)
    return _p_table[n]


DISTINCT_SPEC = EtaProductSpec(0, ((2, 1), (1, -1)))


def distinct_table(max_n: int) -> List[int]:
    """[q(0), ..., q(max_n)] from prod(1 + q^m) = prod(1 - q^(2m)) / prod(1 - q^m)."""
    if max_n < 0:
        raise DomainError(f"q(n) needs n >= 0, got {max_n}")
    return list(eta_product(DISTINCT_SPEC, max_n).coeffs)


def q_distinct(n: int) -> int:
    """The number of partitions of n into distinct parts."""
    return distinct_table(n)[n]


def _require_regular(t: int):
    if t < 2:
        raise DomainError(f"t-regular partitions need t >= 2, got {t}")


def regular_table(t: int, max_n: int) -> List[int]:
    """[R_t(0), ..., R_t(max_n)]: partitions with no part divisible by t."""
    _require_regular(t)
    if max_n < 0:
        raise DomainError(f"R_t(n) needs n >= 0, got {max_n}")
    return list(eta_product(EtaProductSpec(0, ((t, 1), (1, -1))), max_n).coeffs)


def regular_count(t: int, n: int) -> int:
    """R_t(n)."""
    return regular_table(t, n)[n]


def _frequency_set_series(allowed: FrozenSet[int], max_n: int) -> List[int]:
    # prod over m of (1 + sum_{a in A} q^(am))
    coeffs = [1] + [0] * max_n
    for m in range(1, max_n + 1):
        shifts = [a * m for a in allowed if a * m <= max_n]
        if not shifts:
            continue
        old = coeffs[:]
        for shift in shifts:
            coeffs[shift:] = [x + y for x, y in zip(coeffs[shift:], old)]
    return coeffs


def series_pairs(allowed: Iterable[int], max_n: int) -> int:
    """Number of (m, a) with a in A and a * m <= max_n: the shift passes the product expansion makes."""
    return sum(max_n // a for a in set(allowed) if a > 0)


def frequency_set_table(allowed: Iterable[int], max_n: int, method: str = 'auto') -> List[int]:
    """[F_A(0), ..., F_A(max_n)] where F_A counts partitions with every frequency in A.

    `method` is 'series', 'enumerate' or 'auto'; auto expands the product unless it needs more than
    SERIES_PAIR_BUDGET shift passes.
    """
    constraint = FrequencyConstraint.frequency_set(allowed)
    if max_n < 0:
        raise DomainError(f"F_A(n) needs n >= 0, got {max_n}")
    if method == 'auto':
        method = 'series' if series_pairs(constraint.allowed, max_n) <= SERIES_PAIR_BUDGET else 'enumerate'
        logger.debug(f"Counting F_A for A={sorted(constraint.allowed)} by {method}")
    if method == 'series':
        return _frequency_set_series(constraint.allowed, max_n)
    if method == 'enumerate':
        return [count_partitions(n, constraint) for n in range(max_n + 1)]
    raise DomainError(f"unknown counting method {method!r}")


def frequency_set_count(allowed: Iterable[int], n: int, method: str = 'auto') -> int:
    """F_A(n)."""
    return frequency_set_table(allowed, n, method)[n]


def bounded_frequency_table(t: int, max_n: int) -> List[int]:
    """[d_t(0), ..., d_t(max_n)]: every frequency at most t, counted as F_{1..t}."""
    if t < 1:
        raise DomainError(f"d_t needs t >= 1, got {t}")
    return frequency_set_table(range(1, t + 1), max_n, method='series')


def bounded_frequency_count(t: int, n: int) -> int:
    """d_t(n), which equals R_(t+1)(n)."""
    return bounded_frequency_table(t, n)[n]


def weak_compositions(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Ordered k-tuples of non-negative integers summing to n, by stars and bars."""
    if n < 0 or k < 1:
        raise DomainError(f"weak compositions need n >= 0 and k >= 1, got n={n}, k={k}")
    for bars in itertools.combinations(range(n + k - 1), k - 1):
        edges = (-1,) + bars + (n + k - 1,)
        yield tuple(edges[i + 1] - edges[i] - 1 for i in range(k))


def composition_weighted_table(k: int, max_n: int) -> List[int]:
    """Coefficients of (sum p(n) q^n)^k: the k-fold convolution of the partition numbers."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    return list(power(make_series(partition_numbers(max_n), max_n), k).coeffs)


def composition_weighted_sum(k: int, n: int) -> int:
    """Sum over weak compositions (a_1, ..., a_k) of n of p(a_1) ... p(a_k)."""
    return composition_weighted_table(k, n)[n]


def composition_weighted_sum_brute(k: int, n: int) -> int:
    """The same sum by walking every weak composition."""
    p = partition_numbers(n)
    return sum(math.prod(p[a] for a in composition) for composition in weak_compositions(n, k))
