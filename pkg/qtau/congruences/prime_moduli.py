"""tau_k modulo a prime p for k = p^s, 2p, 2p + 1 and p^2 + 1."""

from ..arith import is_prime, omega_scaled
from ..errors import DomainError
from ..series import EtaProductSpec, eta_product, mul
from .AbstractChecks import Case, Check, Formulation, SeriesCongruenceCheck, pentagonal_series

ODD_PRIMES = (3, 5, 7, 11, 13)


def _odd_primes(values):
    for p in values:
        if not is_prime(p) or p == 2:
            raise DomainError(f"{p} is not an odd prime")
    return values


class PrimePowerExponent(Check):
    check_id = 'T-PS'
    title = "tau_(p^s) mod p is the dilated pentagonal character"
    statement = "tau_(p^s)(n+1) = (-1)^t (mod p) if n = p^s (3t^2 -+ t)/2, and 0 (mod p) otherwise"
    lower = 0
    full_limit = 1000
    params = {'p': (2, 3, 5, 7), 's': (1, 2, 3)}

    def cases(self):
        for p in self.family('p'):
            if not is_prime(p):
                raise DomainError(f"{p} is not a prime")
            for s in self.family('s'):
                if s < 1:
                    raise DomainError(f"T-PS needs s >= 1, got {s}")
                scale = p ** s
                tau = eta_product(EtaProductSpec(0, ((1, scale),)), self.limit, p)
                for n in range(self.lower, self.limit + 1):
                    yield Case(n, tau.coeffs[n], omega_scaled(n, scale) % p, f"p={p}, s={s}")


class TwicePrimeExponent(SeriesCongruenceCheck):
    check_id = 'T-2P'
    title = "tau_2p mod p lives on multiples of p"
    statement = "prod(1-q^m)^2p = prod(1-q^pm)^2 (mod p); tau_2p(n+1) = sum over n = p(g_r + g_s) of (-1)^(r+s); " \
                "p does not divide n implies tau_2p(n+1) = 0 (mod p)"
    full_limit = 1000
    params = {'p': ODD_PRIMES}

    def formulations(self):
        for p in _odd_primes(self.family('p')):
            yield Formulation(f"p={p}", p, EtaProductSpec(0, ((1, 2 * p),)), EtaProductSpec(0, ((p, 2),)),
                              lambda order, p=p: mul(pentagonal_series(order, p), pentagonal_series(order, p)))

    def cases(self):
        yield from super().cases()
        for p in _odd_primes(self.family('p')):
            tau = eta_product(EtaProductSpec(0, ((1, 2 * p),)), self.limit, p)
            for n in range(self.lower, self.limit + 1):
                yield Case(n, tau.coeffs[n], 0, f"p={p}, off multiples", applicable=n % p != 0)


class TwicePrimePlusOneExponent(SeriesCongruenceCheck):
    check_id = 'T-2P1'
    title = "tau_(2p+1) mod p as a triple pentagonal sum"
    statement = "prod(1-q^m)^(2p+1) = prod(1-q^m) prod(1-q^pm)^2 (mod p); " \
                "tau_(2p+1)(n+1) = sum over n = g_r + p(g_s + g_t) of (-1)^(r+s+t)"
    full_limit = 1000
    params = {'p': ODD_PRIMES}

    @staticmethod
    def _stated(order, p):
        scaled = pentagonal_series(order, p)
        return mul(pentagonal_series(order), mul(scaled, scaled))

    def formulations(self):
        for p in _odd_primes(self.family('p')):
            yield Formulation(f"p={p}", p, EtaProductSpec(0, ((1, 2 * p + 1),)),
                              EtaProductSpec(0, ((1, 1), (p, 2))), lambda order, p=p: self._stated(order, p))


class SquarePlusOneExponent(SeriesCongruenceCheck):
    check_id = 'T-P21'
    title = "tau_(p^2+1) mod p as a double pentagonal sum"
    statement = "prod(1-q^m)^(p^2+1) = prod(1-q^m) prod(1-q^(p^2 m)) (mod p); " \
                "tau_(p^2+1)(n+1) = sum over n = g_r + p^2 g_s of (-1)^(r+s)"
    full_limit = 1000
    params = {'p': ODD_PRIMES}

    def formulations(self):
        for p in _odd_primes(self.family('p')):
            square = p * p
            yield Formulation(f"p={p}", p, EtaProductSpec(0, ((1, square + 1),)),
                              EtaProductSpec(0, ((1, 1), (square, 1))),
                              lambda order, square=square: mul(pentagonal_series(order),
                                                               pentagonal_series(order, square)))
