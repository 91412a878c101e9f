"""Divisibility of tau_k(n) by k - 1 and by the divisors of k."""

import math

from ..arith import generalized_pentagonals, is_prime
from ..errors import DomainError
from ..series import EtaProductSpec, eta_product
from .AbstractChecks import Case, Check, eta_ladder


class PentagonalResidueVanishing(Check):
    check_id = 'P2.1'
    title = "tau_k(n) vanishes mod k - 1 away from pentagonal residues"
    statement = ("p = k - 1 prime: if n - 1 - g is prime to p for every generalized pentagonal g <= n - 1, "
                 "then tau_k(n) = 0 (mod p)")
    full_limit = 1000
    params = {'k': (3, 4, 6, 8, 12, 24)}

    def cases(self):
        pentagonals = generalized_pentagonals(self.limit)
        for k in self.family('k'):
            p = k - 1
            if not is_prime(p):
                raise DomainError(f"P2.1 needs k - 1 prime, got k={k}")
            tau = eta_product(EtaProductSpec.eta_power(k), self.limit, p)
            seen = [False] * p
            reached = 0
            for n in range(1, self.limit + 1):
                while reached < len(pentagonals) and pentagonals[reached] <= n - 1:
                    seen[pentagonals[reached] % p] = True
                    reached += 1
                # p | n - 1 - g for some g exactly when n - 1 hits a residue already seen
                yield Case(n, tau.coeffs[n], 0, f"k={k}", applicable=not seen[(n - 1) % p])


class DerivativeDivisibility(Check):
    check_id = 'P2.2'
    title = "n tau_k(n+1) is divisible by |k|"
    statement = "n tau_k(n+1) = 0 (mod |k|) for |k| >= 2"
    full_limit = 1000
    params = {'k': tuple(k for k in range(-30, 31) if abs(k) >= 2)}

    def cases(self):
        ks = self.family('k')
        if any(abs(k) < 2 for k in ks):
            raise DomainError("P2.2 needs |k| >= 2")
        ladder = eta_ladder(ks, self.limit + 1)
        for k in ks:
            expansion = ladder[k]
            for n in range(1, self.limit + 1):
                yield Case(n, n * expansion.coeffs[n + 1] % abs(k), 0, f"k={k}")


class DivisorClassVanishing(Check):
    check_id = 'P2.3'
    title = "tau_k(|k|m + dr + 1) is divisible by |k|/d"
    statement = "tau_k(|k|m + dr + 1) = 0 (mod |k|/d) for d | |k|, d < |k|, gcd(r, |k|/d) = 1"
    full_limit = 1000
    params = {'k': (6, 12, 24)}

    def cases(self):
        for k in self.family('k'):
            size = abs(k)
            if size < 2:
                raise DomainError("P2.3 needs |k| >= 2")
            tau = eta_product(EtaProductSpec.eta_power(k), self.limit, size)
            for n in range(1, self.limit + 1):
                # n - 1 = |k|m + dr with gcd(r, |k|/d) = 1 exactly when gcd(n - 1, |k|) = d
                d = math.gcd(n - 1, size)
                modulus = size // d
                yield Case(n, tau.coeffs[n] % modulus, 0, f"k={k}, d={d}", applicable=d < size)


class _ResidueTableCheck(Check):
    """tau(24m + r + 1) = 0 modulo a divisor of 24, one row per (item, modulus, residues r)."""
    items = ()
    lower = 0
    quick_limit = 50
    full_limit = 200

    def cases(self):
        tau = eta_product(EtaProductSpec.eta_power(24), 24 * self.limit + 25, 24)
        for m in range(self.lower, self.limit + 1):
            for item, modulus, residues in self.items:
                for r in residues:
                    n = 24 * m + r + 1
                    yield Case(n, tau.coeffs[n] % modulus, 0, item)


class PrintedDivisorTable(_ResidueTableCheck):
    check_id = 'P2.4a'
    title = "tau modulo divisors of 24, as printed (audit)"
    statement = ("tau(24m+r+1) = 0 mod 24 for r in {1,5,7,11,13,17,19,23}; mod 12 for r in {4,20}; "
                 "mod 8 for r in {3,9,6,15}; mod 6 for r in {8,16}; tau(24m+13) = 0 mod 4. "
                 "Items 2, 4 and 5 are refuted by tau(5), tau(9) and tau(13); r = 6 is reported only")
    items = (
        ('item 1', 24, (1, 5, 7, 11, 13, 17, 19, 23)),
        ('item 2', 12, (4, 20)),
        ('item 3', 8, (3, 9, 15)),
        ('item 3 (r=6)', 8, (6,)),
        ('item 4', 6, (8, 16)),
        ('item 5', 4, (12,)),
    )
    expected_failures = frozenset({'item 2', 'item 4', 'item 5'})
    unasserted = frozenset({'item 3 (r=6)'})


class DerivedDivisorTable(_ResidueTableCheck):
    check_id = 'P2.4b'
    title = "tau modulo divisors of 24, derived from the divisor classes"
    statement = ("tau(24m+r+1) = 0 mod 24/gcd(r, 24): mod 24 at r in {1,5,7,11,13,17,19,23}, mod 12 at {2,10,14,22}, "
                 "mod 8 at {3,9,15,21}, mod 6 at {4,20}, mod 4 at {6,18}, mod 3 at {8,16}, mod 2 at {12}")
    items = (
        ('mod 24', 24, (1, 5, 7, 11, 13, 17, 19, 23)),
        ('mod 12', 12, (2, 10, 14, 22)),
        ('mod 8', 8, (3, 9, 15, 21)),
        ('mod 6', 6, (4, 20)),
        ('mod 4', 4, (6, 18)),
        ('mod 3', 3, (8, 16)),
        ('mod 2', 2, (12,)),
    )
