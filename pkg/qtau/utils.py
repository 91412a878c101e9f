"""Provides some useful utilities for the command line, mostly to do with rendering tables."""

import csv
import io
import json
from typing import Any, Iterable, Sequence

__all__ = ['FORMATS', 'render_table', 'render_csv', 'render_json', 'pretty_concat']

FORMATS = ('table', 'csv', 'json')


def render_table(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Right-aligns every column to its widest cell."""
    cells = [[str(cell) for cell in header]] + [[str(cell) for cell in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ['  '.join(cell.rjust(width) for cell, width in zip(row, widths)) for row in cells]
    lines.insert(1, '  '.join('-' * width for width in widths))
    return '\n'.join(lines)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip('\n')


def render_json(payload: Any) -> str:
    """Stable rendering: loading the output and rendering it again gives the same text."""
    return json.dumps(payload, indent=2, ensure_ascii=False)


def pretty_concat(strings, single_suffix='', multi_suffix=''):
    """Concatenates things in a pretty way"""
    if len(strings) == 1:
        return strings[0] + single_suffix
    elif len(strings) == 2:
        return f'{strings[0]} and {strings[1]}{multi_suffix}'
    else:
        return f'{", ".join(strings[:-1])}, and {strings[-1]}{multi_suffix}'
