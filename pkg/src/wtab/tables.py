"""Tables (filled frames), row classes, words, column strictness, weights."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Any, Iterable, Optional, Sequence

from .entry import Cmp, Entry, cmp_partial, entries
from .frames import Frame, coordinate_table, validate_frame
from .frames import left_justify as _left_justify_frame

__all__ = [
    "Table",
    "RowClass",
    "make_table",
    "canonical_rows",
    "sort_row",
    "word",
    "left_justify",
    "is_column_strict",
    "column_strict_witness",
    "column_strict_witness_bruteforce",
    "weight_of",
    "table_of",
]

EntryRow = tuple[Entry, ...]


@dataclass(frozen=True)
class Table:
    frame: Frame
    rows: tuple[EntryRow, ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != self.frame.lengths:
            raise ValueError(
                f"row lengths {[len(r) for r in self.rows]} do not match frame {self.frame.lengths}"
            )

    @property
    def m(self) -> int:
        return self.frame.m

    def multiset(self) -> Counter:
        return Counter(x for row in self.rows for x in row)

    def __str__(self) -> str:
        return " / ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows)


def make_table(rows: Sequence[Sequence[Any]], offsets: Optional[Sequence[int]] = None) -> Table:
    """Build a table from nested entries; rows are left-justified unless
    ``offsets`` (one per row) are given."""
    rows = tuple(entries(r) for r in rows)
    if offsets is None:
        offsets = [0] * len(rows)
    frame = validate_frame([(o, len(r)) for o, r in zip(offsets, rows)])
    return Table(frame, rows)


def sort_row(row: Iterable[Entry]) -> EntryRow:
    """Canonical order: cosets blocked by ``(re mod 1, im)``, then ascending."""
    return tuple(sorted(row, key=Entry.sort_key))


@dataclass(frozen=True)
class RowClass:
    """A row-equivalence class, held as its canonical representative."""

    table: Table

    @property
    def frame(self) -> Frame:
        return self.table.frame

    @property
    def rows(self) -> tuple[EntryRow, ...]:
        return self.table.rows

    @property
    def m(self) -> int:
        return self.table.m

    def __str__(self) -> str:
        return str(self.table)


def canonical_rows(table: Table | RowClass) -> RowClass:
    if isinstance(table, RowClass):
        return table
    return RowClass(Table(table.frame, tuple(sort_row(r) for r in table.rows)))


def word(table: Table | RowClass) -> tuple[Entry, ...]:
    return tuple(x for row in table.rows for x in row)


def left_justify(obj):
    """Left-justify a frame, table or row class (entries keep their rows)."""
    if isinstance(obj, Frame):
        return _left_justify_frame(obj)
    if isinstance(obj, RowClass):
        return RowClass(left_justify(obj.table))
    return Table(_left_justify_frame(obj.frame), obj.rows)


def _require_justified(frame: Frame) -> None:
    if not frame.is_justified:
        raise ValueError("column strictness needs a justified frame; apply left_justify first")


def _columns(rows: Sequence[Sequence[Entry]]) -> list[list[Entry]]:
    width = max(len(r) for r in rows)
    return [[r[j] for r in rows if len(r) > j] for j in range(width)]


def is_column_strict(table: Table | RowClass) -> bool:
    """Entries strictly decrease down every column.

    Cells of a column are compared with the next occupied cell below,
    which in a justified frame may skip rows that are too short.
    """
    _require_justified(table.frame)
    for col in _columns(table.rows):
        for a, b in zip(col, col[1:]):
            if cmp_partial(a, b) is not Cmp.GT:
                return False
    return True


def column_strict_witness(rc: Table | RowClass) -> Optional[Table]:
    """A column-strict rearrangement of the rows of a justified table.

    Columns are filled left to right; within a column the cells are filled
    bottom-up with entries strictly greater than the cell below.  Choices
    are explored depth-first with failed states memoised, so the answer is
    exact for any justified shape.
    """
    table = rc.table if isinstance(rc, RowClass) else rc
    _require_justified(table.frame)
    rows = table.rows
    lengths = tuple(len(r) for r in rows)
    start = tuple(_key_multiset(r) for r in rows)
    path = _search(start, lengths, 0)
    if path is None:
        return None
    filled: list[list[Entry]] = [[] for _ in rows]
    for column in path:
        for i, x in column:
            filled[i].append(x)
    return Table(table.frame, tuple(tuple(r) for r in filled))


def _key_multiset(row: Sequence[Entry]) -> tuple[Entry, ...]:
    return tuple(sorted(row, key=Entry.sort_key))


@lru_cache(maxsize=200_000)
def _search(remaining: tuple[tuple[Entry, ...], ...], lengths: tuple[int, ...], col: int):
    """Fill columns ``col..``; returns a list of columns of ``(row, entry)``."""
    present = [i for i, l in enumerate(lengths) if l > col]
    if not present:
        return []
    for choice in _column_choices(remaining, present):
        nxt = list(remaining)
        for i, x in choice:
            row = list(nxt[i])
            row.remove(x)
            nxt[i] = tuple(row)
        rest = _search(tuple(nxt), lengths, col + 1)
        if rest is not None:
            return [choice] + rest
    return None


def _column_choices(remaining, present):
    """Strictly decreasing (top to bottom) picks, one per present row.

    Generated bottom-up with candidates in increasing order, so the first
    choice yielded is the smallest-entries one.
    """
    order = present[::-1]

    def rec(k, below):
        if k == len(order):
            yield []
            return
        i = order[k]
        seen = set()
        for x in remaining[i]:
            if x in seen:
                continue
            seen.add(x)
            if below is not None and cmp_partial(x, below) is not Cmp.GT:
                continue
            for tail in rec(k + 1, x):
                yield [(i, x)] + tail

    for picks in rec(0, None):
        yield tuple(picks)


def column_strict_witness_bruteforce(rc: Table | RowClass) -> Optional[Table]:
    """Exhaustive oracle: try every ordering of every row."""
    table = rc.table if isinstance(rc, RowClass) else rc
    _require_justified(table.frame)
    options = [sorted(set(permutations(r)), key=lambda p: [x.sort_key() for x in p]) for r in table.rows]

    def rec(i, chosen):
        if i == len(options):
            candidate = Table(table.frame, tuple(chosen))
            return candidate if is_column_strict(candidate) else None
        for perm in options[i]:
            found = rec(i + 1, chosen + [perm])
            if found is not None:
                return found
        return None

    return rec(0, [])


def weight_of(table: Table, coords: Sequence[Sequence[int]]) -> tuple[Entry, ...]:
    """Coefficients ``a_1..a_n`` with ``a_i`` the entry where ``coords`` holds ``i``.

    For s-tables only the positive labels ``1..n`` are read.
    """
    if [len(r) for r in coords] != [len(r) for r in table.rows]:
        raise ValueError("table and coordinate table have different frames")
    found: dict[int, Entry] = {}
    for row, krow in zip(table.rows, coords):
        for x, k in zip(row, krow):
            if k > 0:
                found[k] = x
    n = len(found)
    if sorted(found) != list(range(1, n + 1)):
        raise ValueError("coordinate table must number boxes 1..n")
    return tuple(found[i] for i in range(1, n + 1))


def table_of(weight: Sequence[Any], coords: Sequence[Sequence[int]], frame: Frame) -> Table:
    """Inverse of :func:`weight_of` for a fixed coordinate table."""
    w = entries(weight)
    if tuple(len(r) for r in coords) != frame.lengths:
        raise ValueError("coordinate table does not match frame")
    rows = []
    for krow in coords:
        rows.append(tuple(w[k - 1] if k > 0 else -w[-k - 1] for k in krow))
    return Table(frame, tuple(rows))


def coordinate_weight(table: Table) -> tuple[Entry, ...]:
    """Shortcut: weight against the frame's own coordinate table."""
    return weight_of(table, coordinate_table(table.frame))
