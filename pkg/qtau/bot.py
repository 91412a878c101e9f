"""Application object for qtau"""

import argparse
import importlib
import os
import re
import traceback
from typing import Dict, Optional, Pattern, Sequence, TextIO, Tuple

from loguru import logger
from sentry_sdk import capture_exception

from .commands._utils import Cog, Command
from .context import QTauContext
from .errors import DomainError, UnknownCheckError

COMMANDS_DIR = os.path.join(os.path.dirname(__file__), 'commands')

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class QTau:
    """Discovers the command cogs, parses argv and maps whatever goes wrong onto an exit code"""

    def __init__(self, config: dict):
        self.config = config
        self.cogs: Dict[str, Cog] = {}
        self.commands: Dict[str, Tuple[Cog, Command]] = {}
        self.load_extensions()

    def load_extensions(self):
        for ext in sorted(os.listdir(COMMANDS_DIR)):
            if not ext.startswith(('_', '.')) and ext.endswith(".py"):
                importlib.import_module('qtau.commands.' + ext[:-3]).setup(self)  # Remove '.py'

    def add_cog(self, cog: Cog):
        self.cogs[cog.qualified_name] = cog
        for cmd in cog.get_commands():
            if cmd.name in self.commands:
                logger.warning(f"Command {cmd.name} of {cog.qualified_name} shadows an earlier one")
            self.commands[cmd.name] = (cog, cmd)

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog='qtau', description="Exact q-series engine and congruence verifier")
        subparsers = parser.add_subparsers(dest='command', metavar='command', required=True)
        for _, cmd in self.commands.values():
            cmd.add_to(subparsers)
        return parser

    def run(self, argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
        """Runs one command line and returns its exit code"""
        try:
            args = self.build_parser().parse_args(list(argv))
        except SystemExit as exc:  # argparse reports usage errors (and --help) this way
            return exc.code if isinstance(exc.code, int) else EXIT_USAGE
        cog, cmd = self.commands[args.command]
        ctx = QTauContext(self, cmd, args, stdout, stderr)
        logger.debug(f"Running {cmd.name} with {vars(args)}")
        try:
            code = cmd.callback(cog, ctx, args)
        except Exception as exception:  # pylint: disable=broad-except
            return self.on_command_error(ctx, exception)
        return EXIT_OK if code is None else code

    def on_command_error(self, context: QTauContext, exception: Exception) -> int:
        if isinstance(exception, (DomainError, UnknownCheckError)):
            context.error(f'qtau {context.command.name}: {self.format_error(exception)}')
            return EXIT_USAGE
        context.error(''.join(traceback.format_exception_only(type(exception), exception)).strip())
        logger.error(f'Error in command <{context.command.name}> ({vars(context.args)})')
        logger.error(''.join(traceback.format_exception(type(exception), exception, exception.__traceback__)))
        capture_exception(exception)
        return EXIT_FAILURE

    @staticmethod
    def format_error(err: Exception, *, word_re: Pattern = re.compile('[A-Z][a-z]+')):
        """Turns an exception into a user-friendly (or -friendlier, at least) error message."""
        type_words = word_re.findall(type(err).__name__)
        type_msg = ' '.join(map(str.lower, type_words))

        if err.args:
            return f'{type_msg}: {err}'
        else:
            return type_msg
