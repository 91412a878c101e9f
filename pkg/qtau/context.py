"""Class that holds the per-invocation context. """
import sys
from typing import Any, Iterable, Optional, Sequence, TextIO

from qtau import utils


class QTauContext:
    """Routes command output to stdout and diagnostics to stderr in the requested format"""

    def __init__(self, bot, command=None, args=None, stdout: Optional[TextIO] = None,
                 stderr: Optional[TextIO] = None):
        self.bot = bot
        self.command = command
        self.args = args
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.format = getattr(args, 'format', None) or 'table'

    def send(self, content: str = ''):
        print(content, file=self.stdout)

    def error(self, content: str):
        print(content, file=self.stderr)

    def send_table(self, header: Sequence[str], rows: Iterable[Sequence[Any]], payload: Any = None):
        """Renders rows as an aligned table or CSV, or `payload` as JSON."""
        if self.format == 'json':
            self.send(utils.render_json(payload))
        elif self.format == 'csv':
            self.send(utils.render_csv(header, rows))
        else:
            self.send(utils.render_table(header, rows))
