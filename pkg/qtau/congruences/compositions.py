"""Partition-function-weighted composition sums modulo odd primes, and the classic p(n) congruences."""

from ..arith import binom_exact, binom_shifted_mod_l, is_prime
from ..config import config
from ..errors import DomainError
from ..partitions import (composition_weighted_sum_brute, composition_weighted_table, p_count,
                          partition_numbers)
from ..series import EtaProductSpec, make_series, mul
from ..tau import tau_recurrence
from .AbstractChecks import (Case, Check, Formulation, SeriesCongruenceCheck, closed_form_series,
                             pentagonal_series)

COMPOSITION_PAIRS = ((3, 2), (5, 2), (5, 3), (7, 4), (7, 5), (11, 8), (13, 10))

# beyond this the composition walk is too long to be an oracle
BRUTE_FORCE_MAX_K = 4
BRUTE_FORCE_MAX_N = 25


class ShiftedBinomialResidue(Check):
    check_id = 'L4.1'
    title = "C(n+k, k) mod l in closed form"
    statement = "with r = n mod l, C(n+k, k) = (-1)^r C(l-k-1, r) (mod l) for r <= l-k-1, and 0 (mod l) otherwise"
    lower = 0
    full_limit = 500
    params = {'l': (3, 5, 7, 11, 13, 23)}

    def cases(self):
        for l in self.family('l'):
            for k in range(1, l):
                for n in range(self.lower, self.limit + 1):
                    yield Case(n, binom_shifted_mod_l(n, k, l), binom_exact(n + k, k) % l, f"l={l}, k={k}")


class CompositionSumMod(SeriesCongruenceCheck):
    check_id = 'T4.2'
    title = "weighted composition sums mod l through tau_(l-k)"
    statement = "prod(1-q^m)^-k = prod(1-q^m)^(l-k) / prod(1-q^lm) (mod l); sum over weak compositions of n " \
                "of p(a_1)...p(a_k) = sum over n+1 = t + ls of tau_(l-k)(t) p(s) (mod l)"
    full_limit = 300
    params = {'l': tuple(sorted({l for l, _ in COMPOSITION_PAIRS})),
              'k': tuple(sorted({k for _, k in COMPOSITION_PAIRS}))}

    def pairs(self):
        if 'l' in self.overrides and 'k' in self.overrides:
            l, k = int(self.overrides['l']), int(self.overrides['k'])
            if not is_prime(l) or l == 2 or not 2 <= k < l:
                raise DomainError(f"T4.2 needs an odd prime l > k >= 2, got l={l}, k={k}")
            return [(l, k)]
        return [(l, k) for l, k in COMPOSITION_PAIRS if l in self.family('l') and k in self.family('k')]

    def formulations(self):
        for l, k in self.pairs():
            yield Formulation(f"l={l}, k={k}", l, EtaProductSpec(0, ((1, -k),)),
                              EtaProductSpec(0, ((1, l - k), (l, -1))))

    def cases(self):
        yield from super().cases()
        order = min(self.limit, config['stated_sum_limit'])
        for l, k in self.pairs():
            sums = composition_weighted_table(k, self.limit)
            stated = mul(make_series(tau_recurrence(l - k, order + 1).values, order),
                         closed_form_series(p_count, order, l))
            for n in range(self.lower, order + 1):
                yield Case(n, sums[n] % l, stated.coeffs[n] % l, f"l={l}, k={k}, stated sum")
            if k <= BRUTE_FORCE_MAX_K:
                for n in range(self.lower, min(self.limit, BRUTE_FORCE_MAX_N) + 1):
                    yield Case(n, composition_weighted_sum_brute(k, n), sums[n], f"k={k}, brute force")


class PairSumModThree(Check):
    check_id = 'C4.2a'
    title = "sum of p(a)p(b) over a + b = n, mod 3"
    statement = "sum over a + b = n of p(a) p(b) = sum over n = t + 3s of omega(t) p(s) (mod 3)"
    lower = 0
    full_limit = 300

    def cases(self):
        sums = composition_weighted_table(2, self.limit)
        stated = mul(pentagonal_series(self.limit), closed_form_series(p_count, self.limit, 3))
        for n in range(self.lower, self.limit + 1):
            yield Case(n, sums[n] % 3, stated.coeffs[n] % 3)


def triangular_residue_set(l: int) -> frozenset:
    """{0} together with (-1)^r C(l-3, r) mod l for 0 <= r <= (l-3)/2."""
    return frozenset({0} | {(-1) ** r * binom_exact(l - 3, r) % l for r in range((l - 3) // 2 + 1)})


class ResidueClassVanishing(Check):
    check_id = 'C4.2b'
    title = "(l-3)-fold composition sums vanish mod l off the triangular classes"
    statement = "n mod l outside {0} and {(-1)^r C(l-3, r) mod l : 0 <= r <= (l-3)/2} implies " \
                "sum over weak compositions of n into l-3 parts of p(a_1)...p(a_(l-3)) = 0 (mod l)"
    lower = 0
    full_limit = 300
    params = {'l': (5, 7, 11)}

    def cases(self):
        for l in self.family('l'):
            if not is_prime(l) or l < 5:
                raise DomainError(f"C4.2b needs a prime l >= 5, got {l}")
            residues = triangular_residue_set(l)
            sums = composition_weighted_table(l - 3, self.limit)
            for n in range(self.lower, self.limit + 1):
                yield Case(n, sums[n] % l, 0, f"l={l}", applicable=n % l not in residues)


class RamanujanPartitionCongruences(Check):
    check_id = 'CLASSIC-P'
    title = "p(5n+4), p(7n+5) and p(11n+6)"
    statement = "p(5n+4) = 0 (mod 5), p(7n+5) = 0 (mod 7), p(11n+6) = 0 (mod 11)"
    lower = 0
    full_limit = 2000

    def cases(self):
        p = partition_numbers(self.limit)
        for modulus, offset in ((5, 4), (7, 5), (11, 6)):
            for n in range(offset, self.limit + 1, modulus):
                yield Case(n, p[n] % modulus, 0, f"mod {modulus}")
