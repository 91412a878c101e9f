"""Parity of tau_k against regular, distinct and frequency-restricted partition counts."""

import math

from ..arith import binom_mod2, is_triangular
from ..errors import DomainError
from ..partitions import bounded_frequency_table, distinct_table, frequency_set_table, regular_table
from ..series import EtaProductSpec, eta_product
from .AbstractChecks import Case, Check, eta_ladder


class FrequencySetParity(Check):
    check_id = 'T3.2'
    title = "tau_k(n+1) has the parity of F_A(n) for A = {a : C(k, a) odd}"
    statement = "tau_k(n+1) = F_A(n) (mod 2) where A = {1 <= a <= k : C(k, a) odd}"
    lower = 0
    full_limit = 2000
    params = {'k': (6, 14, 24)}

    def cases(self):
        for k in self.family('k'):
            if k < 1:
                raise DomainError(f"T3.2 needs k >= 1, got {k}")
            allowed = [a for a in range(1, k + 1) if binom_mod2(k, a)]
            tau = eta_product(EtaProductSpec.eta_power(k), self.limit + 1, 2)
            counts = frequency_set_table(allowed, self.limit, method='series')
            for n in range(self.lower, self.limit + 1):
                yield Case(n, tau.coeffs[n + 1], counts[n] % 2, f"k={k}")


class FourRegularParity(Check):
    check_id = 'T3.3'
    title = "R_4(n) is odd exactly at triangular n"
    statement = "R_4(n) = 1 (mod 2) iff n = m(m+1)/2"
    lower = 0
    full_limit = 2000

    def cases(self):
        counts = regular_table(4, self.limit)
        for n in range(self.lower, self.limit + 1):
            yield Case(n, counts[n] % 2, int(is_triangular(n)))


class BoundedFrequencyConvolution(Check):
    check_id = 'E6'
    title = "d_3(n) as a convolution of distinct-part counts"
    statement = "d_3(n) = sum_{s <= n/2} q(n - 2s) q(s)"
    lower = 0
    full_limit = 500

    def cases(self):
        bounded = bounded_frequency_table(3, self.limit)
        distinct = distinct_table(self.limit)
        for n in range(self.lower, self.limit + 1):
            total = sum(distinct[n - 2 * s] * distinct[s] for s in range(n // 2 + 1))
            yield Case(n, bounded[n], total)


class FourteenEightParity(Check):
    check_id = 'T3.4a'
    title = "tau_14(2n+1) has the parity of R_8(n)"
    statement = "tau_14(2n+1) = R_8(n) (mod 2)"
    lower = 0
    full_limit = 2000

    def cases(self):
        tau = eta_product(EtaProductSpec.eta_power(14), 2 * self.limit + 1, 2)
        counts = regular_table(8, self.limit)
        for n in range(self.lower, self.limit + 1):
            yield Case(n, tau.coeffs[2 * n + 1], counts[n] % 2)


class SixTriangularParity(Check):
    check_id = 'T3.4b'
    title = "tau_6(2n+1) is odd exactly at triangular n"
    statement = "tau_6(2n+1) = 1 (mod 2) iff n = m(m+1)/2"
    lower = 0
    full_limit = 2000

    def cases(self):
        tau = eta_product(EtaProductSpec.eta_power(6), 2 * self.limit + 1, 2)
        for n in range(self.lower, self.limit + 1):
            yield Case(n, tau.coeffs[2 * n + 1], int(is_triangular(n)))


class EvenExponentEvenIndex(Check):
    check_id = 'R-EVEN'
    title = "tau_2k vanishes mod 2 at even arguments"
    statement = "tau_2k(2n) = 0 (mod 2)"
    full_limit = 2000
    params = {'k': tuple(range(1, 13))}

    def cases(self):
        halves = self.family('k')
        if any(k < 1 for k in halves):
            raise DomainError("R-EVEN needs k >= 1")
        ladder = eta_ladder([2 * k for k in halves], 2 * self.limit, 2)
        for k in halves:
            expansion = ladder[2 * k]
            for n in range(self.lower, self.limit + 1):
                yield Case(n, expansion.coeffs[2 * n], 0, f"k={k}")


class OddTauOddSquare(Check):
    check_id = 'R-EWELL'
    title = "tau(m) is odd only at odd squares"
    statement = "tau(m) = 1 (mod 2) implies m is an odd square"
    full_limit = 5000

    def cases(self):
        tau = eta_product(EtaProductSpec.eta_power(24), self.limit, 2)
        for m in range(self.lower, self.limit + 1):
            root = math.isqrt(m)
            odd_square = root * root == m and m % 2 == 1
            yield Case(m, int(odd_square), 1, applicable=tau.coeffs[m] == 1)


class PowerOfTwoRegularParity(Check):
    check_id = 'T3.5'
    title = "R_(2^s)(n) has the parity of tau_(2^s - 1)(n+1)"
    statement = "R_(2^s)(n) = tau_(2^s - 1)(n+1) (mod 2)"
    lower = 0
    full_limit = 2000
    params = {'s': (1, 2, 3, 4, 5)}

    def cases(self):
        for s in self.family('s'):
            if s < 1:
                raise DomainError(f"T3.5 needs s >= 1, got {s}")
            counts = regular_table(2 ** s, self.limit)
            tau = eta_product(EtaProductSpec.eta_power(2 ** s - 1), self.limit + 1, 2)
            for n in range(self.lower, self.limit + 1):
                yield Case(n, counts[n] % 2, tau.coeffs[n + 1], f"s={s}")
