"""Commands for working on qtau itself: kernel timings and the Sphinx sources."""
import os
import time

import rstcloth
from loguru import logger

from qtau.congruences import registry
from qtau.context import QTauContext
from qtau.errors import DomainError
from qtau.series import EtaProductSpec, clear_expansion_cache, eta_product
from ._utils import Cog, argument, command, format_option

BENCH_SPECS = (EtaProductSpec.eta_power(24), EtaProductSpec(0, ((1, -1),)))


class Development(Cog):
    """Commands useful for developing qtau"""

    @command()
    @argument('--order', type=int, required=True, help="truncation order of each expansion")
    @format_option()
    def bench(self, ctx: QTauContext, args):
        """Times the eta product kernel on the Delta function and the partition generating function."""
        if args.order < 1:
            raise DomainError(f"--order must be at least 1, got {args.order}")
        rows = []
        for spec in BENCH_SPECS:
            clear_expansion_cache()
            start = time.perf_counter()
            expansion = eta_product(spec, args.order)
            elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
            logger.info(f"[{spec}] to order {args.order} took {elapsed_ms} ms")
            rows.append((str(spec), args.order, elapsed_ms, f"{expansion.checksum():016x}"))
        ctx.send_table(('spec', 'order', 'ms', 'checksum'), rows,
                       [{'spec': spec, 'order': order, 'ms': ms, 'checksum': checksum}
                        for spec, order, ms, checksum in rows])

    bench.example_usage = """
    `qtau bench --order 2000` - two timings and their coefficient checksums
    """

    @command()
    @argument('--out', default='docs', help="directory to write the .rst files into")
    def document(self, ctx: QTauContext, args):
        """Dump documentation for Sphinx processing"""
        os.makedirs(args.out, exist_ok=True)
        for name, cog in self.bot.cogs.items():
            comrst = rstcloth.RstCloth()
            comrst.title(name)
            for cmd in cog.get_commands():
                comrst.h4(cmd.name)
                comrst.content(cmd.help)
                if cmd.example_usage:
                    comrst.codeblock(cmd.example_usage)
            comrst.write(os.path.join(args.out, f"{name}.rst"))
        catalogue = rstcloth.RstCloth()
        catalogue.title("Checks")
        for entry in registry():
            catalogue.h4(f"{entry.check_id}: {entry.title}")
            catalogue.content(entry.statement)
            if entry.expected_failures:
                catalogue.content("Expected to fail: " + ', '.join(sorted(entry.expected_failures)))
        catalogue.write(os.path.join(args.out, "Checks.rst"))
        ctx.send(f"Documentation written to {args.out}")

    document.example_usage = """
    `qtau document` - regenerates docs/*.rst
    """


def setup(bot):
    """Adds the development cog to the bot"""
    bot.add_cog(Development(bot))
