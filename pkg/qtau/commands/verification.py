"""Commands that run the congruence checks and list the catalogue."""
import time
from typing import Dict, List

import humanize

from qtau.congruences import CheckOutcome, get_check, outcomes_to_json, registry, run_all, run_check
from qtau.congruences.runner import PROFILES
from qtau.context import QTauContext
from qtau.errors import DomainError
from qtau.utils import pretty_concat
from ._utils import Cog, argument, command, format_option

OUTCOME_HEADER = ('id', 'status', 'lower', 'limit', 'applicable', 'failures', 'elapsed_ms')


def parse_params(pairs: List[str]) -> Dict[str, int]:
    """['k=3', 'l=7'] -> {'k': 3, 'l': 7}"""
    params = {}
    for pair in pairs or ():
        name, sep, value = pair.partition('=')
        if not sep or not name:
            raise DomainError(f"--param expects name=value, got {pair!r}")
        try:
            params[name.strip()] = int(value)
        except ValueError:
            raise DomainError(f"--param {name} needs an integer, got {value!r}") from None
    return params


def status_label(outcome: CheckOutcome) -> str:
    if outcome.expected_fail:
        return 'expected fail'
    return outcome.status.value if outcome.matches_expectation else 'FAIL'


class Verification(Cog):
    """Runs the executable congruence catalogue."""

    @command()
    @argument('--check', dest='checks', action='append', metavar='ID', help="check id; repeat for several")
    @argument('--limit', type=int, help="scan up to this index instead of the profile limit")
    @argument('--profile', choices=PROFILES, default='quick')
    @argument('--param', dest='params', action='append', metavar='NAME=VALUE', help="pin a family parameter")
    @argument('--workers', type=int, help="process pool size when running the whole catalogue")
    @format_option()
    def verify(self, ctx: QTauContext, args):
        """Runs the selected checks (every check by default) and exits 1 if any fails unexpectedly."""
        params = parse_params(args.params)
        if params and not args.checks:
            raise DomainError("--param needs an explicit --check")
        start = time.perf_counter()
        if args.checks:
            selected = [get_check(check_id).check_id for check_id in args.checks]
            outcomes = [run_check(check_id, args.limit, params, args.profile) for check_id in selected]
        elif args.limit is not None:
            outcomes = [run_check(entry.check_id, args.limit) for entry in registry()
                        if entry.check_id not in self.bot.config['disabled_checks']]
        else:
            outcomes = run_all(args.profile, args.workers)
        elapsed = time.perf_counter() - start

        rows = [(outcome.check_id, status_label(outcome), outcome.range[0], outcome.range[1], outcome.applicable,
                 outcome.failures, round(outcome.elapsed * 1000, 3)) for outcome in outcomes]
        ctx.send_table(OUTCOME_HEADER, rows, outcomes_to_json(outcomes))
        unexpected = [outcome.check_id for outcome in outcomes if not outcome.matches_expectation]
        if ctx.format == 'table':
            for outcome in outcomes:
                for example in outcome.counterexamples:
                    ctx.send(f"{outcome.check_id} [{example.item}] n={example.n}: {example.lhs} != {example.rhs}")
                if outcome.failures > len(outcome.counterexamples):
                    ctx.send(f"{outcome.check_id}: {outcome.failures - len(outcome.counterexamples)} more failure(s)")
            ctx.send(f"{len(outcomes)} check(s) in "
                     f"{humanize.precisedelta(elapsed, minimum_unit='milliseconds', format='%0.1f')}")
        if unexpected:
            ctx.error(f"Unexpected failures in {pretty_concat(unexpected)}")
            return 1
        return 0

    verify.example_usage = """
    `qtau verify` - every check at its quick limit
    `qtau verify --profile full --workers 4` - every check at its full limit on four processes
    `qtau verify --check T3.6 --limit 3000` - one check to n = 3000
    `qtau verify --check T4.2 --param l=7 --param k=4 --format json` - one member of a family as JSON
    """

    @command(name='checks')
    @format_option()
    def list_checks(self, ctx: QTauContext, args):  # pylint: disable=unused-argument
        """Lists every registered check with its statement."""
        entries = registry()
        ctx.send_table(('id', 'title', 'statement'), [entry[:3] for entry in entries],
                       [{'id': entry.check_id, 'title': entry.title, 'statement': entry.statement,
                         'expected_failures': list(entry.expected_failures)} for entry in entries])

    list_checks.example_usage = """
    `qtau checks` - the catalogue in registration order
    """


def setup(bot):
    """Adds the verification cog to the bot"""
    bot.add_cog(Verification(bot))
