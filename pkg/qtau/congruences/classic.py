"""Numeric spot checks of multiplicativity, the Hecke recursion and the Deligne bound for tau."""

import math

from ..arith import is_prime
from ..tau import tau_series
from .AbstractChecks import Case, Check

MULTIPLICATIVE_BOUND = 40
HECKE_SQUARE_PRIMES = (2, 3, 5, 7)
DELIGNE_BOUND = 97


class RamanujanConjectures(Check):
    check_id = 'CLASSIC-TAU'
    title = "multiplicativity, Hecke recursion and the Deligne bound"
    statement = "tau(mn) = tau(m) tau(n) for coprime m, n <= 40; tau(p^(r+1)) = tau(p) tau(p^r) - p^11 tau(p^(r-1)); " \
                "tau(p)^2 <= 4 p^11 for p <= 97"
    quick_limit = 1600
    full_limit = 1600

    def cases(self):
        tau = tau_series(24, self.limit)
        for m in range(2, MULTIPLICATIVE_BOUND + 1):
            for n in range(m + 1, MULTIPLICATIVE_BOUND + 1):
                if math.gcd(m, n) == 1 and m * n <= self.limit:
                    yield Case(m * n, tau[m * n], tau[m] * tau[n], 'multiplicative')
        for p in HECKE_SQUARE_PRIMES:
            if p * p <= self.limit:
                yield Case(p * p, tau[p * p], tau[p] ** 2 - p ** 11, 'hecke p^2')
        for p in filter(is_prime, range(2, math.isqrt(self.limit) + 1)):
            previous, current, power = 1, tau[p], p
            while power * p <= self.limit:
                following = tau[p] * current - p ** 11 * previous
                yield Case(power * p, tau[power * p], following, f"hecke p={p}")
                previous, current, power = current, tau[power * p], power * p
        for p in filter(is_prime, range(2, min(DELIGNE_BOUND, self.limit) + 1)):
            yield Case(p, int(tau[p] ** 2 <= 4 * p ** 11), 1, 'deligne bound')
