"""Utilities for qtau commands."""
import inspect
from typing import Any, Dict, List, Tuple

from qtau.utils import FORMATS

__all__ = ['Command', 'command', 'argument', 'format_option', 'Cog']


class Command:
    """A subcommand: a cog method plus the argparse arguments attached to it"""

    def __init__(self, func, name: str = None, help: str = None,  # pylint: disable=redefined-builtin
                 example_usage: str = ''):
        self.callback = func
        self.name = name or func.__name__
        self.help = inspect.cleandoc(help or func.__doc__ or '')
        self.arguments: List[Tuple[tuple, Dict[str, Any]]] = list(reversed(getattr(func, '__command_arguments__', [])))
        self.example_usage = example_usage

    @property
    def example_usage(self):
        """Example usage property"""
        return self._example_usage

    @example_usage.setter
    def example_usage(self, usage):
        """Sets example usage"""
        self._example_usage = inspect.cleandoc(usage)

    def add_to(self, subparsers):
        """Registers this command and its arguments on an argparse subparsers action"""
        parser = subparsers.add_parser(self.name, help=self.help.splitlines()[0] if self.help else None,
                                       description=self.help, epilog=self.example_usage or None)
        for flags, kwargs in self.arguments:
            parser.add_argument(*flags, **kwargs)
        parser.set_defaults(command=self.name)
        return parser


def command(**kwargs):
    """Turns a cog method into a subcommand"""

    def decorator(func):
        return Command(func, **kwargs)

    return decorator


def argument(*flags, **kwargs):
    """Attaches an argparse argument to a command; stack these under @command"""

    def decorator(func):
        if isinstance(func, Command):
            func.arguments.append((flags, kwargs))
        else:
            func.__dict__.setdefault('__command_arguments__', []).append((flags, kwargs))
        return func

    return decorator


def format_option():
    return argument('--format', choices=FORMATS, default='table', help="output format")


class Cog:
    """Initiates cogs."""

    def __init__(self, bot):
        super().__init__()
        self.bot = bot

    @property
    def qualified_name(self) -> str:
        return type(self).__name__

    def get_commands(self) -> List[Command]:
        return [value for value in vars(type(self)).values() if isinstance(value, Command)]
