"""Base classes for congruence checks and the helpers their formulations share."""

import enum
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Type

from loguru import logger

from ..arith import omega, triangular_coeff
from ..config import config
from ..errors import DomainError
from ..series import EtaProductSpec, IntSeries, eta_multiply, eta_product, make_series

__all__ = ['Case', 'Counterexample', 'Status', 'CheckOutcome', 'Check', 'Formulation', 'SeriesCongruenceCheck',
           'eta_ladder', 'closed_form_series', 'pentagonal_series', 'triangular_series']

# counterexamples kept per outcome; the total is always counted
MAX_COUNTEREXAMPLES = 50


@dataclass(frozen=True)
class Case:
    """One evaluated instance of a claim; it fails when applicable and lhs != rhs."""
    n: int
    lhs: int
    rhs: int
    item: str = ''
    applicable: bool = True


@dataclass(frozen=True)
class Counterexample:
    n: int
    lhs: int
    rhs: int
    item: str = ''

    def to_json(self) -> dict:
        return {'n': self.n, 'lhs': str(self.lhs), 'rhs': str(self.rhs), 'item': self.item}


class Status(enum.Enum):
    PASS = 'pass'
    FAIL = 'fail'


@dataclass
class CheckOutcome:
    """Result of scanning one check over [lower, limit]."""
    check_id: str
    params: Dict[str, int]
    range: Tuple[int, int]
    status: Status
    counterexamples: List[Counterexample] = field(default_factory=list)
    failures: int = 0
    applicable: int = 0
    not_applicable_count: int = 0
    elapsed: float = 0.0
    expected_failures: FrozenSet[str] = frozenset()
    unasserted: FrozenSet[str] = frozenset()
    unexpected_failures: int = 0

    @property
    def matches_expectation(self) -> bool:
        """True when every failure belongs to an audited item that is expected (or allowed) to fail."""
        return self.unexpected_failures == 0

    @property
    def expected_fail(self) -> bool:
        return self.status is Status.FAIL and self.matches_expectation

    def to_json(self) -> dict:
        return {
            'id': self.check_id,
            'params': dict(self.params),
            'range': [self.range[0], self.range[1]],
            'status': self.status.value,
            'expected': self.matches_expectation,
            'failures': self.failures,
            'applicable': self.applicable,
            'not_applicable_count': self.not_applicable_count,
            'counterexamples': [example.to_json() for example in self.counterexamples],
            'elapsed_ms': round(self.elapsed * 1000, 3),
        }


class Check:
    """A congruence claim that can be scanned over its natural index.

    Subclasses set `check_id` and implement `cases`; they register themselves in definition order.
    `params` maps each family parameter to the values scanned by default; a caller may pin one value.
    """

    check_id: Optional[str] = None
    title: str = ""
    statement: str = ""
    lower: int = 1
    quick_limit: int = 300
    full_limit: int = 300
    params: Dict[str, Tuple[int, ...]] = {}
    expected_failures: FrozenSet[str] = frozenset()
    unasserted: FrozenSet[str] = frozenset()
    disabled = False

    _registered: List[Type['Check']] = []

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if cls.check_id is not None:
            Check._registered.append(cls)

    @classmethod
    def registered(cls) -> List[Type['Check']]:
        return list(Check._registered)

    def __init__(self, limit: int, params: Optional[Dict[str, int]] = None):
        self.limit = limit
        self.overrides = dict(params or {})
        unknown = sorted(set(self.overrides) - set(self.params))
        if unknown:
            raise DomainError(f"{self.check_id} takes no parameter {', '.join(unknown)}")

    def __str__(self):
        return f"{self.check_id}: {self.title}"

    def family(self, name: str) -> Tuple[int, ...]:
        """Values of a family parameter, narrowed to the pinned value if one was given."""
        if name in self.overrides:
            return (int(self.overrides[name]),)
        return self.params[name]

    def cases(self) -> Iterator[Case]:
        raise NotImplementedError

    def run(self) -> CheckOutcome:
        start = time.perf_counter()
        examples: List[Counterexample] = []
        failures = applicable = vacuous = unexpected = 0
        tolerated = self.expected_failures | self.unasserted
        for case in self.cases():
            if not case.applicable:
                vacuous += 1
                continue
            applicable += 1
            if case.lhs != case.rhs:
                failures += 1
                if case.item not in tolerated:
                    unexpected += 1
                if len(examples) < MAX_COUNTEREXAMPLES:
                    examples.append(Counterexample(case.n, case.lhs, case.rhs, case.item))
        outcome = CheckOutcome(self.check_id, self.overrides, (self.lower, self.limit),
                               Status.FAIL if failures else Status.PASS, examples, failures, applicable, vacuous,
                               time.perf_counter() - start, self.expected_failures, self.unasserted, unexpected)
        if failures and not outcome.matches_expectation:
            logger.warning(f"{self.check_id} failed {failures} time(s) up to {self.limit}")
        else:
            logger.debug(f"{self.check_id} finished up to {self.limit} in {outcome.elapsed:.3f}s")
        return outcome


@dataclass(frozen=True)
class Formulation:
    """lhs = rhs (mod modulus) as eta products.

    `stated`, when given, builds the explicit index-set sum to a given order; its coefficient n is compared with
    coefficient n + lhs.delta of the lhs expansion.
    """
    item: str
    modulus: int
    lhs: EtaProductSpec
    rhs: EtaProductSpec
    stated: Optional[Callable[[int], IntSeries]] = None


class SeriesCongruenceCheck(Check):
    """Compares two eta product expansions coefficient by coefficient, then any stated-sum formulation."""

    lower = 0
    full_limit = 2000

    def formulations(self) -> Iterable[Formulation]:
        raise NotImplementedError

    def cases(self):
        for form in self.formulations():
            lhs = eta_product(form.lhs, self.limit, form.modulus)
            rhs = eta_product(form.rhs, self.limit, form.modulus)
            for n in range(self.lower, self.limit + 1):
                yield Case(n, lhs.coeffs[n], rhs.coeffs[n], form.item)
            if form.stated is None:
                continue
            order = min(self.limit - form.lhs.delta, config['stated_sum_limit'])
            if order < 0:
                continue
            stated = form.stated(order)
            for n in range(order + 1):
                yield Case(n, lhs.coeffs[n + form.lhs.delta], stated.coeffs[n] % form.modulus,
                           f"{form.item}, stated sum")


def eta_ladder(exponents: Iterable[int], order: int, modulus: Optional[int] = None,
               delta: int = 1) -> Dict[int, IntSeries]:
    """q^delta prod(1 - q^m)^k for every requested k, walking up (and down) one exponent step at a time."""
    wanted = set(exponents)
    base = eta_product(EtaProductSpec(delta), order, modulus)
    ladder = {0: base} if 0 in wanted else {}
    for direction in (1, -1):
        current, at = base, 0
        for k in sorted((k for k in wanted if k * direction > 0), key=abs):
            current = eta_multiply(current, 1, k - at)
            at = k
            ladder[k] = current
    return ladder


def closed_form_series(fn: Callable[[int], int], order: int, scale: int = 1) -> IntSeries:
    """sum_j fn(j) q^(scale j) truncated at `order`."""
    coeffs = [0] * (order + 1)
    for j in range(order // scale + 1):
        coeffs[scale * j] = fn(j)
    return make_series(coeffs, order)


def pentagonal_series(order: int, scale: int = 1) -> IntSeries:
    """prod(1 - q^(scale m)) from omega alone."""
    return closed_form_series(omega, order, scale)


def triangular_series(order: int, scale: int = 1) -> IntSeries:
    """prod(1 - q^(scale m))^3 from the triple product closed form."""
    return closed_form_series(triangular_coeff, order, scale)
