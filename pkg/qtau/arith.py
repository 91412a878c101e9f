"""Scalar number theory: divisor sums, pentagonal and triangular closed forms, binomials mod 2 and mod odd primes."""

import functools
import math
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from .errors import DomainError

__all__ = ['PentagonalEntry', 'PentagonalTable', 'pentagonal_table', 'generalized_pentagonals', 'sigma', 'sigma_table',
           'divisors', 'omega', 'omega_scaled', 'is_triangular', 'triangular_coeff', 'binom_mod2',
           'binom_shifted_mod_l', 'binom_mod_prime', 'binom_exact', 'p_adic_valuation', 'is_prime']


@dataclass(frozen=True)
class PentagonalEntry:
    """One generalized pentagonal number g = (3l^2 - l)/2 with signed index l; sign is (-1)^l."""
    index: int
    value: int
    sign: int


@dataclass(frozen=True)
class PentagonalTable:
    """Every generalized pentagonal number up to `bound`, sorted by value, l = 0 listed once."""
    bound: int
    entries: Tuple[PentagonalEntry, ...]

    def __iter__(self) -> Iterator[PentagonalEntry]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def offsets(self, scale: int = 1) -> List[Tuple[int, int]]:
        """(scale * g, sign) pairs for g > 0, the shape the sparse series kernels consume."""
        return [(scale * entry.value, entry.sign) for entry in self.entries if entry.value]


@functools.lru_cache(maxsize=64)
def pentagonal_table(bound: int) -> PentagonalTable:
    """Builds the table of generalized pentagonal numbers not exceeding `bound`."""
    if bound < 0:
        raise DomainError(f"pentagonal bound must be non-negative, got {bound}")
    entries = [PentagonalEntry(0, 0, 1)]
    l = 1
    while (3 * l * l - l) // 2 <= bound:
        sign = -1 if l % 2 else 1
        entries.append(PentagonalEntry(l, (3 * l * l - l) // 2, sign))
        plus = (3 * l * l + l) // 2
        if plus <= bound:
            entries.append(PentagonalEntry(-l, plus, sign))
        l += 1
    return PentagonalTable(bound, tuple(entries))


def generalized_pentagonals(bound: int) -> List[int]:
    """The values g <= bound, increasing."""
    return [entry.value for entry in pentagonal_table(bound)]


def is_prime(n: int) -> bool:
    """Deterministic trial division; every modulus the verifier touches is tiny."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def _require_prime(p: int, odd: bool = False):
    if not is_prime(p) or (odd and p == 2):
        raise DomainError(f"{p} is not an {'odd ' if odd else ''}prime")


def divisors(n: int) -> List[int]:
    """Positive divisors of n in increasing order."""
    if n < 1:
        raise DomainError(f"divisors need n >= 1, got {n}")
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def sigma(n: int) -> int:
    """Sum of the positive divisors of n, by trial division up to sqrt(n)."""
    if n < 1:
        raise DomainError(f"sigma needs n >= 1, got {n}")
    total = 0
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            total += d
            if d * d != n:
                total += n // d
    return total


def sigma_table(max_n: int) -> List[int]:
    """sigma(0..max_n) by a divisor sieve; index 0 holds 0."""
    table = [0] * (max_n + 1)
    for d in range(1, max_n + 1):
        for multiple in range(d, max_n + 1, d):
            table[multiple] += d
    return table


def omega(n: int) -> int:
    """Coefficient of q^n in prod(1 - q^m): (-1)^l when 24n + 1 = (6l -+ 1)^2, else 0."""
    if n < 0:
        raise DomainError(f"omega needs n >= 0, got {n}")
    disc = 24 * n + 1
    root = math.isqrt(disc)
    if root * root != disc:
        return 0
    # root is prime to 6 here
    l = (root - 1) // 6 if root % 6 == 1 else (root + 1) // 6
    return -1 if l % 2 else 1


def omega_scaled(n: int, c: int) -> int:
    """Coefficient of q^n in prod(1 - q^(cm))."""
    if c < 1:
        raise DomainError(f"scale must be positive, got {c}")
    if n < 0:
        raise DomainError(f"omega needs n >= 0, got {n}")
    if n % c:
        return 0
    return omega(n // c)


def is_triangular(n: int) -> bool:
    """Whether n = t(t+1)/2 for some t >= 0."""
    if n < 0:
        return False
    disc = 8 * n + 1
    root = math.isqrt(disc)
    return root * root == disc


def triangular_coeff(n: int) -> int:
    """Coefficient of q^n in prod(1 - q^m)^3: (-1)^t (2t + 1) at n = t(t+1)/2, else 0."""
    if n < 0:
        raise DomainError(f"triangular_coeff needs n >= 0, got {n}")
    disc = 8 * n + 1
    root = math.isqrt(disc)
    if root * root != disc:
        return 0
    t = (root - 1) // 2
    return -root if t % 2 else root


def binom_exact(n: int, k: int) -> int:
    """C(n, k) by the multiplicative formula, dividing exactly at every step."""
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


def binom_mod2(n: int, k: int) -> int:
    """Parity of C(n, k) by repeated halving: an even n over an odd k is even, otherwise halve both."""
    if k < 0 or n < 0 or k > n:
        return 0
    while k:
        if n % 2 == 0 and k % 2 == 1:
            return 0
        n //= 2
        k //= 2
    return 1


def binom_mod_prime(n: int, k: int, p: int) -> int:
    """C(n, k) mod p via the base-p digit product."""
    _require_prime(p)
    if k < 0 or n < 0 or k > n:
        return 0
    result = 1
    while k:
        n_digit, k_digit = n % p, k % p
        if k_digit > n_digit:
            return 0
        result = result * binom_exact(n_digit, k_digit) % p
        n //= p
        k //= p
    return result


def binom_shifted_mod_l(n: int, k: int, l: int) -> int:
    """C(n + k, k) mod l in closed form.

    With r = n mod l the residue is (-1)^r C(l - k - 1, r) when r <= l - k - 1, and 0 when r >= l - k.
    """
    _require_prime(l, odd=True)
    if not 1 <= k < l:
        raise DomainError(f"k must satisfy 1 <= k < {l}, got {k}")
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    r = n % l
    if r >= l - k:
        return 0
    value = binom_exact(l - k - 1, r)
    return (-value if r % 2 else value) % l


def p_adic_valuation(m: int, p: int) -> int:
    """Largest k with p^k dividing m."""
    if m == 0:
        raise DomainError("the valuation of 0 is unbounded")
    if m < 0:
        raise DomainError(f"valuation needs m >= 1, got {m}")
    _require_prime(p)
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k
