"""Commands that print coefficient tables: tau_k, the partition counts and raw eta products."""
from qtau.context import QTauContext
from qtau.errors import DomainError
from qtau.partitions import (bounded_frequency_table, distinct_table, frequency_set_table, partition_numbers,
                             regular_table)
from qtau.series import EtaProductSpec, eta_product, series_to_json
from qtau.tau import TauRoute, tau_table
from ._utils import Cog, argument, command, format_option

PARTITION_FUNCTIONS = ('p', 'q', 'd', 'R', 'F')


def _int_set(text: str):
    try:
        return sorted({int(part) for part in text.replace(',', ' ').split()})
    except ValueError:
        raise DomainError(f"--A expects comma-separated integers, got {text!r}") from None


class Tables(Cog):
    """Tables of tau_k and the partition counts, and raw eta product expansions."""

    @command()
    @argument('--k', type=int, required=True, help="exponent of prod(1 - q^m)")
    @argument('--max-n', type=int, required=True, help="last n to print")
    @argument('--modulus', type=int, help="reduce values into [0, modulus)")
    @argument('--route', choices=[route.value for route in TauRoute], default=TauRoute.SERIES.value)
    @format_option()
    def tau(self, ctx: QTauContext, args):
        """Prints tau_k(n), the coefficient of q^n in q prod(1 - q^m)^k, for 1 <= n <= max-n."""
        table = tau_table(args.k, args.max_n, TauRoute(args.route))
        ctx.send_table(('n', 'value'), table.rows(args.modulus), table.to_json(args.modulus))

    tau.example_usage = """
    `qtau tau --k 24 --max-n 10` - Ramanujan's tau(1), ..., tau(10)
    `qtau tau --k 1 --max-n 8 --format csv` - the pentagonal signs as CSV
    `qtau tau --k 5 --max-n 30 --modulus 5 --route recurrence` - tau_5 mod 5 through the divisor-sum recurrence
    """

    @command()
    @argument('--fn', choices=PARTITION_FUNCTIONS, required=True,
              help="p: all partitions, q: distinct parts, d: frequencies <= t, R: no part divisible by t, "
                   "F: frequencies in A")
    @argument('--t', type=int, help="the parameter of d and R")
    @argument('--A', dest='allowed', help="comma-separated frequency set for F")
    @argument('--max-n', type=int, required=True, help="last n to print")
    @format_option()
    def partition(self, ctx: QTauContext, args):
        """Prints a partition counting function for 0 <= n <= max-n."""
        if args.max_n < 0:
            raise DomainError(f"--max-n must be non-negative, got {args.max_n}")
        if args.fn in ('d', 'R') and args.t is None:
            raise DomainError(f"--fn {args.fn} needs --t")
        if args.fn == 'F' and not args.allowed:
            raise DomainError("--fn F needs --A")
        if args.fn == 'p':
            values = partition_numbers(args.max_n)
        elif args.fn == 'q':
            values = distinct_table(args.max_n)
        elif args.fn == 'd':
            values = bounded_frequency_table(args.t, args.max_n)
        elif args.fn == 'R':
            values = regular_table(args.t, args.max_n)
        else:
            values = frequency_set_table(_int_set(args.allowed), args.max_n)
        payload = {'fn': args.fn, 'values': [str(value) for value in values]}
        if args.fn in ('d', 'R'):
            payload['t'] = args.t
        if args.fn == 'F':
            payload['A'] = _int_set(args.allowed)
        ctx.send_table(('n', 'value'), enumerate(values), payload)

    partition.example_usage = """
    `qtau partition --fn p --max-n 9` - p(0), ..., p(9)
    `qtau partition --fn R --t 9 --max-n 3` - 9-regular partitions
    `qtau partition --fn F --A 1,3,5 --max-n 20` - partitions whose frequencies are all odd and at most 5
    """

    @command()
    @argument('--spec', required=True, help='eta product "delta; c1^e1 c2^e2 ..."')
    @argument('--order', type=int, required=True, help="truncation order")
    @argument('--modulus', type=int, help="expand modulo this integer")
    @format_option()
    def series(self, ctx: QTauContext, args):
        """Expands q^delta prod_i prod_m (1 - q^(c_i m))^(e_i) up to q^order."""
        spec = EtaProductSpec.parse(args.spec)
        expansion = eta_product(spec, args.order, args.modulus)
        payload = dict(spec=str(spec), **series_to_json(expansion))
        ctx.send_table(('n', 'coeff'), enumerate(expansion.coeffs), payload)

    series.example_usage = """
    `qtau series --spec "1; 1^24" --order 10` - the Delta function
    `qtau series --spec "0; 4^1 1^-1" --order 6` - 4-regular partitions
    `qtau series --spec "0; 1^-3" --order 50 --modulus 3` - three-coloured partitions mod 3
    """


def setup(bot):
    """Adds the tables cog to the bot"""
    bot.add_cog(Tables(bot))
