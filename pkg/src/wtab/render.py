"""ASCII box figures for frames, tables, s-tables and tableaux.

Each box is drawn with ``+``, ``-`` and ``|``; entries are right-justified.
A row shifted by one unit (half a box) is shifted by half a cell, so the
cell pitch is kept even.  S-tables mark the origin with ``*`` on the line
between the two central rows.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .frames import Frame, SFrame
from .rs import Tableau
from .stables import STable
from .tables import RowClass, Table

__all__ = ["render", "render_rows"]


def render_rows(
    rows: Sequence[tuple[int, int]],
    cells: Optional[Sequence[Sequence[str]]] = None,
    *,
    origin_line: Optional[int] = None,
) -> str:
    """Draw rows ``(offset, length)`` top to bottom.

    ``origin_line`` is the index of the row whose lower border should carry
    the ``*`` marking ``x = 0``.
    """
    if cells is None:
        cells = [[""] * length for _, length in rows]
    width = max([2] + [len(c) for row in cells for c in row])
    if width % 2 == 0:
        width += 1
    pitch = width + 1
    half = pitch // 2
    left = min(o - 1 for o, _ in rows)
    right = max(o + 2 * l - 1 for o, l in rows)
    ncols = (right - left) * half + 1
    grid = [[" "] * ncols for _ in range(2 * len(rows) + 1)]

    for i, ((offset, length), content) in enumerate(zip(rows, cells)):
        y = 2 * i + 1
        for j in range(length):
            x0 = (offset - 1 + 2 * j - left) * half
            x1 = x0 + pitch
            for yy in (y - 1, y + 1):
                for x in range(x0 + 1, x1):
                    if grid[yy][x] == " ":
                        grid[yy][x] = "-"
                grid[yy][x0] = grid[yy][x1] = "+"
            grid[y][x0] = grid[y][x1] = "|"
            text = content[j].rjust(width)
            for k, ch in enumerate(text):
                grid[y][x0 + 1 + k] = ch
    if origin_line is not None:
        grid[2 * origin_line + 2][(0 - left) * half] = "*"
    return "\n".join("".join(line).rstrip() for line in grid)


def render(value) -> str:
    if isinstance(value, RowClass):
        value = value.table
    if isinstance(value, Frame):
        return render_rows(value.rows)
    if isinstance(value, SFrame):
        return render_rows(value.full().rows, origin_line=value.m - 1)
    if isinstance(value, Table):
        return render_rows(value.frame.rows, [[str(x) for x in r] for r in value.rows])
    if isinstance(value, STable):
        full = value.full_table()
        return render_rows(
            full.frame.rows, [[str(x) for x in r] for r in full.rows], origin_line=value.m - 1
        )
    if isinstance(value, Tableau):
        rows = [(0, len(r)) for r in value.rows]
        return render_rows(rows, [[str(x) for x in r] for r in value.rows])
    raise TypeError(f"cannot render {type(value).__name__}")
