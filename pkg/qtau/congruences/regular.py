"""Regular partitions modulo 3 and modulo a prime p."""

from ..arith import is_prime
from ..errors import DomainError
from ..partitions import regular_table
from ..series import EtaProductSpec, eta_product
from .AbstractChecks import Case, Check

# R_9 at (4^s - 1)/3, 4^(s-1) + (4^s - 1)/3 and 2 * 4^(s-1) + (4^s - 1)/3 for r = 1, 2, 3
CLOSED_FORM_RESIDUES = {1: 1, 2: 2, 3: 0}


def nine_regular_orbit(r: int, s: int) -> int:
    """a_s for a_1 = r and a_s = 4 a_(s-1) + 1, i.e. (r - 1) 4^(s-1) + (4^s - 1)/3."""
    return (r - 1) * 4 ** (s - 1) + (4 ** s - 1) // 3


class NineRegularRecursion(Check):
    check_id = 'T3.7'
    title = "R_9(4n+1) and R_9(n) agree mod 3"
    statement = "R_9(4n+1) = R_9(n) (mod 3); hence R_9((r-1) 4^(s-1) + (4^s-1)/3) = R_9(r) (mod 3), which is " \
                "1, 2, 0 for r = 1, 2, 3"
    lower = 0
    full_limit = 2000
    params = {'r': (1, 2, 3, 4, 5), 's': (1, 2, 3, 4, 5)}

    def cases(self):
        rs, ss = self.family('r'), self.family('s')
        if min(rs) < 1 or min(ss) < 1:
            raise DomainError("T3.7 needs r, s >= 1")
        top = max(4 * self.limit + 1, max(nine_regular_orbit(r, s) for r in rs for s in ss))
        counts = regular_table(9, top)
        for n in range(self.lower, self.limit + 1):
            yield Case(n, counts[4 * n + 1] % 3, counts[n] % 3, 'recursion')
        for r in rs:
            for s in ss:
                a = nine_regular_orbit(r, s)
                yield Case(a, counts[a] % 3, counts[r] % 3, f"r={r}, s={s}")
                if r in CLOSED_FORM_RESIDUES:
                    yield Case(a, counts[a] % 3, CLOSED_FORM_RESIDUES[r], f"closed form r={r}")


class PrimeRegularTau(Check):
    check_id = 'T3.8'
    title = "R_p(n) and tau_(p-1)(n+1) agree mod p"
    statement = "R_p(n) = tau_(p-1)(n+1) (mod p) for p prime"
    lower = 0
    full_limit = 1000
    params = {'p': (2, 3, 5, 7, 11, 13)}

    def cases(self):
        for p in self.family('p'):
            if not is_prime(p):
                raise DomainError(f"{p} is not a prime")
            counts = regular_table(p, self.limit)
            tau = eta_product(EtaProductSpec.eta_power(p - 1), self.limit + 1, p)
            for n in range(self.lower, self.limit + 1):
                yield Case(n, counts[n] % p, tau.coeffs[n + 1], f"p={p}")
