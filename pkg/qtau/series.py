"""Exact truncated power series and eta product expansion.

Every number the verifier compares flows through here. Series are immutable; all operations are pure and truncate
to the smaller order of their inputs.
"""

import functools
import operator
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from loguru import logger

from .arith import pentagonal_table
from .config import config
from .errors import DomainError, LimitExceededError, ModulusMismatchError, NonUnitError, SpecParseError

__all__ = ['IntSeries', 'ModSeries', 'EtaProductSpec', 'make_series', 'make_mod_series', 'one', 'add', 'sub', 'mul',
           'negate', 'invert', 'power', 'truncate', 'reduce_mod', 'coeff', 'eta_factor', 'eta_multiply',
           'eta_product', 'check_order', 'clear_expansion_cache', 'series_to_json', 'series_from_json']

CHECKSUM_MASK = (1 << 64) - 1
CHECKSUM_MULTIPLIER = 1000003


class _SeriesBase:
    """Shared behaviour of exact and modular series; subclasses are frozen dataclasses."""
    coeffs: Tuple[int, ...]
    order: int

    def _like(self, coeffs: Sequence[int], order: int):
        raise NotImplementedError

    def _unit_inverse(self, c: int) -> int:
        raise NotImplementedError

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, n: int) -> int:
        return coeff(self, n)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return negate(self)

    def __mul__(self, other):
        return mul(self, other)

    def __pow__(self, e: int):
        return power(self, e)

    def checksum(self) -> int:
        """A 64-bit fold of the coefficients; stable across runs and platforms."""
        h = 0
        for c in self.coeffs:
            h = (h * CHECKSUM_MULTIPLIER + c) & CHECKSUM_MASK
        return h


@dataclass(frozen=True)
class IntSeries(_SeriesBase):
    """Dense series sum(coeffs[i] q^i) for 0 <= i <= order, exact integers."""
    coeffs: Tuple[int, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise DomainError(f"order must be non-negative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise DomainError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    def _like(self, coeffs, order):
        return IntSeries(tuple(coeffs), order)

    def _unit_inverse(self, c):
        if c not in (1, -1):
            raise NonUnitError(f"constant term {c} is not a unit over the integers")
        return c


@dataclass(frozen=True)
class ModSeries(_SeriesBase):
    """Dense series with canonical residues in [0, modulus)."""
    coeffs: Tuple[int, ...]
    order: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise DomainError(f"modulus must be at least 2, got {self.modulus}")
        if self.order < 0:
            raise DomainError(f"order must be non-negative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise DomainError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")
        if any(not 0 <= c < self.modulus for c in self.coeffs):
            raise DomainError(f"coefficients must be canonical residues mod {self.modulus}")

    def _like(self, coeffs, order):
        m = self.modulus
        return ModSeries(tuple(c % m for c in coeffs), order, m)

    def _unit_inverse(self, c):
        try:
            return pow(c, -1, self.modulus)
        except ValueError:
            raise NonUnitError(f"constant term {c} is not a unit mod {self.modulus}") from None


Series = Union[IntSeries, ModSeries]


def make_series(coeffs: Iterable[int], order: int) -> IntSeries:
    """Builds an IntSeries, padding the coefficients with zeros up to `order`."""
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    values = [int(c) for c in coeffs]
    if len(values) > order + 1:
        raise DomainError(f"{len(values)} coefficients do not fit in order {order}")
    return IntSeries(tuple(values + [0] * (order + 1 - len(values))), order)


def make_mod_series(coeffs: Iterable[int], order: int, modulus: int) -> ModSeries:
    """Builds a ModSeries, reducing and padding the coefficients."""
    if modulus < 2:
        raise DomainError(f"modulus must be at least 2, got {modulus}")
    return reduce_mod(make_series(coeffs, order), modulus)


def one(order: int, modulus: Optional[int] = None) -> Series:
    """The constant series 1."""
    series = make_series([1], order)
    return series if modulus is None else reduce_mod(series, modulus)


def _common_order(f: Series, g: Series) -> int:
    if type(f) is not type(g):
        raise DomainError(f"cannot combine {type(f).__name__} with {type(g).__name__}")
    if isinstance(f, ModSeries) and f.modulus != g.modulus:
        raise ModulusMismatchError(f"moduli differ: {f.modulus} and {g.modulus}")
    return min(f.order, g.order)


def truncate(f: Series, order: int) -> Series:
    """Drops every coefficient above `order`."""
    if not 0 <= order <= f.order:
        raise DomainError(f"cannot truncate order {f.order} to {order}")
    return f._like(f.coeffs[:order + 1], order)


def add(f: Series, g: Series) -> Series:
    """Coefficient-wise sum."""
    order = _common_order(f, g)
    return f._like(map(operator.add, f.coeffs[:order + 1], g.coeffs[:order + 1]), order)


def sub(f: Series, g: Series) -> Series:
    """Coefficient-wise difference."""
    order = _common_order(f, g)
    return f._like(map(operator.sub, f.coeffs[:order + 1], g.coeffs[:order + 1]), order)


def negate(f: Series) -> Series:
    """Coefficient-wise negation."""
    return f._like((-c for c in f.coeffs), f.order)


def _mul_coeffs(a: Sequence[int], b: Sequence[int], order: int) -> List[int]:
    """Schoolbook truncated Cauchy product, one row per nonzero coefficient of `a`."""
    acc = [0] * (order + 1)
    for i, x in enumerate(a[:order + 1]):
        if x:
            acc[i:] = [s + x * y for s, y in zip(acc[i:], b)]
    return acc


def mul(f: Series, g: Series) -> Series:
    """Truncated Cauchy product: coefficient n is sum over i + j = n of f_i g_j."""
    order = _common_order(f, g)
    return f._like(_mul_coeffs(f.coeffs, g.coeffs, order), order)


def invert(f: Series) -> Series:
    """g with f g = 1 up to the order, via g_n = -u * sum_{i=1..n} f_i g_(n-i) where u = 1/f_0."""
    u = f._unit_inverse(f.coeffs[0])
    m = getattr(f, 'modulus', None)
    a = f.coeffs
    g = [u]
    for n in range(1, f.order + 1):
        value = -u * sum(map(operator.mul, a[1:n + 1], reversed(g)))
        g.append(value % m if m else value)
    return f._like(g, f.order)


def power(f: Series, e: int) -> Series:
    """f^e by repeated squaring; negative exponents go through invert."""
    if e < 0:
        return power(invert(f), -e)
    result = f._like([1] + [0] * f.order, f.order)
    base = f
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def reduce_mod(f: IntSeries, m: int) -> ModSeries:
    """Canonical residues of every coefficient; a ModSeries may only be reduced to a divisor of its modulus."""
    if m < 2:
        raise DomainError(f"modulus must be at least 2, got {m}")
    if isinstance(f, ModSeries) and f.modulus % m:
        raise ModulusMismatchError(f"cannot reduce a series mod {f.modulus} to mod {m}")
    return ModSeries(tuple(c % m for c in f.coeffs), f.order, m)


def coeff(f: Series, n: int) -> int:
    """Coefficient of q^n."""
    if not 0 <= n <= f.order:
        raise DomainError(f"index {n} outside 0..{f.order}")
    return f.coeffs[n]


def eta_factor(c: int, order: int) -> IntSeries:
    """prod(1 - q^(cm)) to `order`: (-1)^l at q^(c(3l^2 -+ l)/2), zero elsewhere."""
    if c < 1:
        raise DomainError(f"scale must be positive, got {c}")
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    coeffs = [0] * (order + 1)
    for entry in pentagonal_table(order // c):
        coeffs[c * entry.value] = entry.sign
    return IntSeries(tuple(coeffs), order)


def _sparse_multiply(coeffs: List[int], plus: List[int], minus: List[int], m: Optional[int]) -> List[int]:
    old = coeffs[:]
    for g in plus:
        coeffs[g:] = [x + y for x, y in zip(coeffs[g:], old)]
    for g in minus:
        coeffs[g:] = [x - y for x, y in zip(coeffs[g:], old)]
    if m:
        coeffs = [x % m for x in coeffs]
    return coeffs


def _sparse_divide(coeffs: List[int], offsets: List[Tuple[int, int]], m: Optional[int]) -> List[int]:
    # solve f * E = h in place; position n still holds h_n when it is reached
    for n in range(1, len(coeffs)):
        acc = coeffs[n]
        for g, sign in offsets:
            if g > n:
                break
            acc -= sign * coeffs[n - g]
        coeffs[n] = acc % m if m else acc
    return coeffs


def _apply_eta(coeffs: List[int], c: int, e: int, m: Optional[int]) -> List[int]:
    order = len(coeffs) - 1
    offsets = pentagonal_table(order // c).offsets(c)
    if e > 0:
        plus = [g for g, sign in offsets if sign > 0]
        minus = [g for g, sign in offsets if sign < 0]
        for _ in range(e):
            coeffs = _sparse_multiply(coeffs, plus, minus, m)
    else:
        for _ in range(-e):
            coeffs = _sparse_divide(coeffs, offsets, m)
    return coeffs


def eta_multiply(f: Series, c: int, e: int) -> Series:
    """f * prod(1 - q^(cm))^e, one sparse pentagonal pass per unit of |e|."""
    if c < 1:
        raise DomainError(f"scale must be positive, got {c}")
    m = getattr(f, 'modulus', None)
    return f._like(_apply_eta(list(f.coeffs), c, e, m), f.order)


_FACTOR_RE = re.compile(r'^(\d+)\^([+-]?\d+)$')


@dataclass(frozen=True)
class EtaProductSpec:
    """q^delta * prod over factors (c, e) of prod_m (1 - q^(cm))^e.

    Duplicate scales are merged, zero exponents dropped and factors kept sorted by scale, so equal products
    compare (and hash) equal.
    """
    delta: int = 0
    factors: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.delta < 0:
            raise DomainError(f"delta must be non-negative, got {self.delta}")
        merged: Dict[int, int] = {}
        for c, e in self.factors:
            if c < 1:
                raise DomainError(f"scale must be positive, got {c}")
            merged[c] = merged.get(c, 0) + e
        object.__setattr__(self, 'factors', tuple(sorted((c, e) for c, e in merged.items() if e)))

    @classmethod
    def eta_power(cls, k: int, delta: int = 1) -> 'EtaProductSpec':
        """q^delta prod(1 - q^m)^k."""
        return cls(delta, ((1, k),))

    @classmethod
    def parse(cls, text: str) -> 'EtaProductSpec':
        """Parses "delta; c1^e1 c2^e2 ..." (whitespace separated, negative exponents allowed)."""
        head, sep, tail = text.partition(';')
        if not sep:
            raise SpecParseError("expected ';' after delta", text, len(text))
        stripped = head.strip()
        if not stripped.isdigit():
            raise SpecParseError("delta must be a non-negative integer", text, len(head) - len(head.lstrip()))
        factors = []
        for match in re.finditer(r'\S+', tail):
            column = len(head) + 1 + match.start()
            token = _FACTOR_RE.match(match.group())
            if token is None:
                raise SpecParseError("expected scale^exponent", text, column)
            scale, exponent = int(token.group(1)), int(token.group(2))
            if scale < 1:
                raise SpecParseError("scale must be positive", text, column)
            factors.append((scale, exponent))
        return cls(int(stripped), tuple(factors))

    def __str__(self):
        return f"{self.delta}; " + ' '.join(f"{c}^{e}" for c, e in self.factors)


def check_order(order: int):
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    if order > config['max_order']:
        logger.critical(f"Requested order {order} exceeds the configured ceiling {config['max_order']}")
        raise LimitExceededError(f"order {order} exceeds the ceiling {config['max_order']}")


@functools.lru_cache(maxsize=256)
def _expand(spec: EtaProductSpec, order: int, modulus: Optional[int]) -> Tuple[int, ...]:
    logger.debug(f"Expanding [{spec}] to order {order}" + (f" mod {modulus}" if modulus else ""))
    body = order - spec.delta
    if body < 0:
        return (0,) * (order + 1)
    coeffs = [1] + [0] * body
    for c, e in spec.factors:
        coeffs = _apply_eta(coeffs, c, e, modulus)
    if modulus:
        coeffs = [x % modulus for x in coeffs]
    return tuple([0] * spec.delta + coeffs)


def clear_expansion_cache():
    _expand.cache_clear()


def eta_product(spec: EtaProductSpec, order: int, modulus: Optional[int] = None) -> Series:
    """Expands `spec` to `order`; with a modulus every pass is reduced and a ModSeries comes back."""
    check_order(order)
    if modulus is not None and modulus < 2:
        raise DomainError(f"modulus must be at least 2, got {modulus}")
    coeffs = _expand(spec, order, modulus)
    if modulus is None:
        return IntSeries(coeffs, order)
    return ModSeries(coeffs, order, modulus)


def series_to_json(f: Series) -> dict:
    """{"order": N, "coeffs": [decimal strings]} plus "modulus" for modular series."""
    payload = {'order': f.order, 'coeffs': [str(c) for c in f.coeffs]}
    if isinstance(f, ModSeries):
        payload['modulus'] = f.modulus
    return payload


def series_from_json(payload: dict) -> Series:
    """Inverse of series_to_json."""
    coeffs = [int(c) for c in payload['coeffs']]
    if 'modulus' in payload:
        return ModSeries(tuple(coeffs), int(payload['order']), int(payload['modulus']))
    return make_series(coeffs, int(payload['order']))
