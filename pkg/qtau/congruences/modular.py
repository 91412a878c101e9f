"""Ramanujan's tau modulo 3, 5, 7, 11, 13, 17, 19, 23 and 25."""

from ..arith import sigma_table
from ..partitions import regular_table
from ..series import EtaProductSpec, eta_product, make_series, mul
from ..tau import tau_recurrence
from .AbstractChecks import (Case, Check, Formulation, SeriesCongruenceCheck, pentagonal_series,
                             triangular_series)

RAMANUJAN = EtaProductSpec.eta_power(24)

# quadratic non-residues mod 23
MORDELL_RESIDUES = (5, 7, 10, 11, 14, 15, 17, 19, 20, 21, 22)


def _recurrence_series(k: int, order: int):
    """sum_s tau_k(s+1) q^s, taken from the divisor-sum recurrence rather than an expansion."""
    return make_series(tau_recurrence(k, order + 1).values, order)


class TauModThree(Check):
    check_id = 'T3.6'
    title = "tau(n+1) mod 3 through the 9-regular partitions"
    statement = "tau(n+1) = R_9(n/3) (mod 3) when 3 | n, and 0 (mod 3) otherwise"
    lower = 0
    full_limit = 5000

    def cases(self):
        tau = eta_product(RAMANUJAN, self.limit + 1, 3)
        counts = regular_table(9, self.limit // 3)
        for n in range(self.lower, self.limit + 1):
            expected = counts[n // 3] % 3 if n % 3 == 0 else 0
            yield Case(n, tau.coeffs[n + 1], expected)


class TauThreeNMod3(Check):
    check_id = 'C3.6a'
    title = "tau(3n) is divisible by 3"
    statement = "tau(3n) = 0 (mod 3)"
    full_limit = 5000

    def cases(self):
        tau = eta_product(RAMANUJAN, self.limit, 3)
        for n in range(3, self.limit + 1, 3):
            yield Case(n, tau.coeffs[n], 0)


class NineRegularSigma(Check):
    check_id = 'C3.6b'
    title = "R_9(n) mod 3 through the divisor sum"
    statement = "R_9(n) = sigma(3n+1) (mod 3)"
    lower = 0
    full_limit = 5000

    def cases(self):
        counts = regular_table(9, self.limit)
        sig = sigma_table(3 * self.limit + 1)
        for n in range(self.lower, self.limit + 1):
            yield Case(n, counts[n] % 3, sig[3 * n + 1] % 3)


class TauModFive(Check):
    check_id = 'T-MOD5'
    title = "tau(n+1) mod 5 through the 25-regular partitions"
    statement = "tau(n+1) = R_25(n) (mod 5), and R_25(n) = (n+1) sigma(n+1) (mod 5)"
    lower = 0
    full_limit = 5000

    def cases(self):
        tau = eta_product(RAMANUJAN, self.limit + 1, 5)
        counts = regular_table(25, self.limit)
        sig = sigma_table(self.limit + 1)
        for n in range(self.lower, self.limit + 1):
            yield Case(n, tau.coeffs[n + 1], counts[n] % 5, 'regular')
            yield Case(n, counts[n] % 5, (n + 1) * sig[n + 1] % 5, 'divisor sum')


class TauModSeven(SeriesCongruenceCheck):
    check_id = 'T-MOD7'
    title = "tau mod 7 as a product of two triple products"
    statement = "q prod(1-q^m)^24 = q prod(1-q^m)^3 prod(1-q^7m)^3 (mod 7); " \
                "tau(n+1) = sum over n = m(m+1)/2 + 7r(r+1)/2 of (-1)^(m+r) (2m+1)(2r+1)"

    def formulations(self):
        yield Formulation('series', 7, RAMANUJAN, EtaProductSpec(1, ((1, 3), (7, 3))),
                          lambda order: mul(triangular_series(order), triangular_series(order, 7)))


class TauSevenNMod7(Check):
    check_id = 'C-MOD7'
    title = "tau(7n) is divisible by 7"
    statement = "tau(7n) = 0 (mod 7)"
    full_limit = 2000

    def cases(self):
        tau = eta_product(RAMANUJAN, self.limit, 7)
        for n in range(7, self.limit + 1, 7):
            yield Case(n, tau.coeffs[n], 0)


class TauModEleven(SeriesCongruenceCheck):
    check_id = 'T-MOD11'
    title = "tau mod 11 as a fourfold pentagonal sum"
    statement = "q prod(1-q^m)^24 = q prod(1-q^m)^2 prod(1-q^11m)^2 (mod 11); " \
                "tau(n+1) = sum over n = g_l + g_m + 11 g_s + 11 g_r of (-1)^(l+m+s+r)"

    @staticmethod
    def _stated(order):
        single = pentagonal_series(order)
        scaled = pentagonal_series(order, 11)
        return mul(mul(single, single), mul(scaled, scaled))

    def formulations(self):
        yield Formulation('series', 11, RAMANUJAN, EtaProductSpec(1, ((1, 2), (11, 2))), self._stated)


class _TauLinearMod(SeriesCongruenceCheck):
    """tau mod p against q prod(1-q^m)^(24-p) prod(1-q^pm) with the stated sum over tau_(24-p)."""
    prime = 13

    def _stated(self, order):
        return mul(pentagonal_series(order, self.prime), _recurrence_series(24 - self.prime, order))

    def formulations(self):
        p = self.prime
        yield Formulation('series', p, RAMANUJAN, EtaProductSpec(1, ((1, 24 - p), (p, 1))), self._stated)


class TauModThirteen(_TauLinearMod):
    check_id = 'T-MOD13'
    title = "tau mod 13 through tau_11"
    statement = "q prod(1-q^m)^24 = q prod(1-q^m)^11 prod(1-q^13m) (mod 13); " \
                "tau(n+1) = sum over n = 13 g_r + s of (-1)^r tau_11(s+1)"
    prime = 13


class TauModSeventeen(_TauLinearMod):
    check_id = 'T-MOD17'
    title = "tau mod 17 through tau_7"
    statement = "q prod(1-q^m)^24 = q prod(1-q^m)^7 prod(1-q^17m) (mod 17); " \
                "tau(n+1) = sum over n = 17 g_r + s of (-1)^r tau_7(s+1)"
    prime = 17


class TauModNineteen(_TauLinearMod):
    check_id = 'T-MOD19'
    title = "tau mod 19 through tau_5"
    statement = "q prod(1-q^m)^24 = q prod(1-q^m)^5 prod(1-q^19m) (mod 19); " \
                "tau(n+1) = sum over n = 19 g_r + s of (-1)^r tau_5(s+1)"
    prime = 19


class TauModTwentyThree(SeriesCongruenceCheck):
    check_id = 'T-MOD23'
    title = "tau mod 23 as a double pentagonal sum, with the non-residue classes"
    statement = "q prod(1-q^m)^24 = q prod(1-q^m) prod(1-q^23m) (mod 23); " \
                "tau(n+1) = sum over n = g_r + 23 g_s of (-1)^(r+s); tau(23n + m) = 0 (mod 23) " \
                "for m in {5, 7, 10, 11, 14, 15, 17, 19, 20, 21, 22}"

    @staticmethod
    def _stated(order):
        return mul(pentagonal_series(order), pentagonal_series(order, 23))

    def formulations(self):
        yield Formulation('series', 23, RAMANUJAN, EtaProductSpec(1, ((1, 1), (23, 1))), self._stated)

    def cases(self):
        yield from super().cases()
        tau = eta_product(RAMANUJAN, self.limit, 23)
        for n in range(1, self.limit + 1):
            if n % 23 in MORDELL_RESIDUES:
                yield Case(n, tau.coeffs[n], 0, 'non-residue class')


class TauModTwentyFive(SeriesCongruenceCheck):
    check_id = 'T-MOD25'
    title = "tau mod 25 through the 5-regular partitions"
    statement = "q prod(1-q^m)^24 = q prod(1-q^5m)^5 / prod(1-q^m) (mod 25); " \
                "tau(n+1) = sum over n = r + 5s(s+1)/2 + 5 g_t of (-1)^(s+t) (2s+1) R_5(r)"

    @staticmethod
    def _stated(order):
        regular = make_series(regular_table(5, order), order)
        return mul(mul(regular, triangular_series(order, 5)), pentagonal_series(order, 5))

    def formulations(self):
        yield Formulation('series', 25, RAMANUJAN, EtaProductSpec(1, ((5, 5), (1, -1))), self._stated)
