"""The generalized tau function: tau_k(n) is the coefficient of q^n in q prod(1 - q^m)^k.

Three independent routes compute it:

* ``series``: sparse pentagonal expansion of the eta power
* ``recurrence``: tau_k(n+1) = -(k/n) sum_{i=1..n} tau_k(i) sigma(n+1-i), exact division asserted
* ``partition_sum``: binomial-weighted sum over partitions of n-1 (exponential, verification only)
"""

import csv
import enum
import io
import math
import operator
from dataclasses import dataclass
from typing import List, Optional, Tuple

from loguru import logger

from .arith import binom_exact, sigma_table, triangular_coeff
from .config import config
from .errors import DomainError, InexactDivisionError, LimitExceededError
from .partitions import FrequencyConstraint, enum_partitions
from .series import EtaProductSpec, check_order, eta_product

__all__ = ['TauRoute', 'TauTable', 'tau_series', 'tau_recurrence', 'tau_partition_sum', 'tau_partition_table',
           'tau3_closed', 'tau_table', 'ramanujan_tau']


class TauRoute(enum.Enum):
    SERIES = 'series'
    RECURRENCE = 'recurrence'
    PARTITION_SUM = 'partition_sum'


@dataclass(frozen=True)
class TauTable:
    """tau_k(1), ..., tau_k(max_n); indexing is 1-based like the function itself."""
    k: int
    values: Tuple[int, ...]
    route: TauRoute = TauRoute.SERIES

    @property
    def max_n(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise DomainError(f"tau_{self.k}({n}) is outside the table 1..{self.max_n}")
        return self.values[n - 1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return self.max_n

    def rows(self, modulus: Optional[int] = None) -> List[Tuple[int, int]]:
        """(n, tau_k(n)) pairs, reduced to [0, modulus) when a modulus is given."""
        if modulus is not None and modulus < 2:
            raise DomainError(f"modulus must be at least 2, got {modulus}")
        return [(n, value % modulus if modulus else value) for n, value in enumerate(self.values, start=1)]

    def to_csv(self, modulus: Optional[int] = None) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(('n', 'value'))
        writer.writerows(self.rows(modulus))
        return buffer.getvalue()

    def to_json(self, modulus: Optional[int] = None) -> dict:
        """Values as decimal strings, since they leave the double range quickly."""
        payload = {'k': self.k, 'route': self.route.value,
                   'values': [str(value) for _, value in self.rows(modulus)]}
        if modulus:
            payload['modulus'] = modulus
        return payload


def _validate(k: int, max_n: int):
    if k == 0:
        raise DomainError("tau_k needs k != 0")
    if max_n < 1:
        raise DomainError(f"max_n must be at least 1, got {max_n}")
    check_order(max_n)


def tau_series(k: int, max_n: int) -> TauTable:
    """Reads tau_k(1..max_n) off the expansion of q prod(1 - q^m)^k."""
    _validate(k, max_n)
    expansion = eta_product(EtaProductSpec.eta_power(k), max_n)
    return TauTable(k, expansion.coeffs[1:], TauRoute.SERIES)


def tau_recurrence(k: int, max_n: int) -> TauTable:
    """Builds tau_k(1..max_n) from the divisor-sum recurrence."""
    _validate(k, max_n)
    sig = sigma_table(max_n)
    values = [1]
    for n in range(1, max_n):
        # sig[n:0:-1] is sigma(n), ..., sigma(1), aligned with tau_k(1), ..., tau_k(n)
        numerator = -k * sum(map(operator.mul, values, sig[n:0:-1]))
        value, remainder = divmod(numerator, n)
        if remainder:
            raise InexactDivisionError(k, n, numerator)
        values.append(value)
    return TauTable(k, tuple(values), TauRoute.RECURRENCE)


def _partition_weight(k: int, frequencies: Tuple[int, ...]) -> int:
    if k > 0:
        sign = -1 if sum(frequencies) % 2 else 1
        return sign * math.prod(binom_exact(k, f) for f in frequencies)
    kappa = -k
    return math.prod(binom_exact(f + kappa - 1, kappa - 1) for f in frequencies)


def tau_partition_sum(k: int, n: int) -> int:
    """tau_k(n) as a sum over partitions of n - 1.

    For k > 0 every frequency is at most k and a partition weighs (-1)^(f_1 + ... + f_r) C(k, f_1) ... C(k, f_r);
    for k < 0 all partitions count with weight C(f_1 + |k| - 1, |k| - 1) ... C(f_r + |k| - 1, |k| - 1).
    """
    if k == 0:
        raise DomainError("tau_k needs k != 0")
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    cap = config['partition_sum_cap']
    if n - 1 > cap:
        raise LimitExceededError(f"partition sums are capped at n - 1 <= {cap}, got n = {n}")
    constraint = FrequencyConstraint.max_frequency(k) if k > 0 else FrequencyConstraint.unconstrained()
    return sum(_partition_weight(k, shape.frequencies) for shape in enum_partitions(n - 1, constraint))


def tau_partition_table(k: int, max_n: int) -> TauTable:
    _validate(k, max_n)
    return TauTable(k, tuple(tau_partition_sum(k, n) for n in range(1, max_n + 1)), TauRoute.PARTITION_SUM)


def tau3_closed(n: int) -> int:
    """tau_3(n) from the triple product: (-1)^t (2t + 1) when n - 1 = t(t+1)/2, else 0."""
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    return triangular_coeff(n - 1)


_ROUTES = {
    TauRoute.SERIES: tau_series,
    TauRoute.RECURRENCE: tau_recurrence,
    TauRoute.PARTITION_SUM: tau_partition_table,
}


def tau_table(k: int, max_n: int, route: TauRoute = TauRoute.SERIES) -> TauTable:
    """Dispatches to one of the three routes."""
    logger.debug(f"Building tau_{k} up to {max_n} by {route.value}")
    return _ROUTES[TauRoute(route)](k, max_n)


def ramanujan_tau(n: int) -> int:
    """Ramanujan's tau(n) = tau_24(n)."""
    return tau_series(24, n)[n]
