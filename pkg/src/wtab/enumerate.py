"""Bounded, deterministic enumeration of tables and s-tables.

The total number of candidates is computed before anything is generated
and compared against a cap (``WTAB_MAX_ENUM``, default one million).
"""

from __future__ import annotations

import os
from itertools import combinations_with_replacement, product
from math import comb, prod
from typing import Any, Iterator, Optional, Sequence

from .entry import Entry, entries
from .frames import Frame, SFrame
from .stables import STable, is_fd_evenmult
from .tables import RowClass, Table, canonical_rows, column_strict_witness, left_justify

__all__ = ["EnumerationCapError", "max_enum", "count_tables", "enumerate_tables", "enumerate_stables"]

DEFAULT_MAX_ENUM = 1_000_000


class EnumerationCapError(ValueError):
    pass


def max_enum() -> int:
    raw = os.environ.get("WTAB_MAX_ENUM")
    if raw is None:
        return DEFAULT_MAX_ENUM
    try:
        value = int(raw)
    except ValueError as exc:
        raise EnumerationCapError(f"WTAB_MAX_ENUM must be an integer, got {raw!r}") from exc
    if value < 0:
        raise EnumerationCapError("WTAB_MAX_ENUM must be non-negative")
    return value


def count_tables(lengths: Sequence[int], alphabet_size: int, row_classes: bool) -> int:
    if row_classes:
        return prod(comb(alphabet_size + l - 1, l) for l in lengths)
    return alphabet_size ** sum(lengths)


def _check_cap(total: int, cap: Optional[int]) -> None:
    cap = max_enum() if cap is None else cap
    if total > cap:
        raise EnumerationCapError(f"{total} candidates exceed the enumeration cap {cap}")


def _row_options(length: int, alphabet: Sequence[Entry], row_classes: bool):
    if row_classes:
        return list(combinations_with_replacement(alphabet, length))
    return list(product(alphabet, repeat=length))


def _alphabet(alphabet: Sequence[Any]) -> tuple[Entry, ...]:
    alpha = entries(alphabet)
    if len(set(alpha)) != len(alpha):
        raise ValueError("alphabet has repeated entries")
    return tuple(sorted(alpha, key=Entry.sort_key))


def enumerate_tables(
    frame: Frame,
    alphabet: Sequence[Any],
    *,
    row_classes: bool = False,
    fd: bool = False,
    single_coset: bool = False,
    cap: Optional[int] = None,
) -> Iterator[Table | RowClass]:
    """Every filling of ``frame`` by ``alphabet`` (or every row class).

    ``fd`` keeps labels whose left justification is row equivalent to a
    column-strict table, and needs a pyramid frame.
    """
    alpha = _alphabet(alphabet)
    _check_cap(count_tables(frame.lengths, len(alpha), row_classes), cap)
    if fd and not frame.is_pyramid:
        raise ValueError("the fd filter is only defined on pyramids; transport with star_act first")
    options = [_row_options(l, alpha, row_classes) for l in frame.lengths]
    for rows in product(*options):
        table = Table(frame, tuple(rows))
        if single_coset and len({x.coset for r in rows for x in r}) > 1:
            continue
        if fd and column_strict_witness(left_justify(table)) is None:
            continue
        yield canonical_rows(table) if row_classes else table


def enumerate_stables(
    sframe: SFrame,
    alphabet: Sequence[Any],
    phi: Any,
    *,
    sorted_only: bool = True,
    fd: bool = False,
    cap: Optional[int] = None,
) -> Iterator[STable]:
    """Skew-symmetric fillings of ``sframe``; entries that break the φ
    integrality rule are skipped.  ``sorted_only`` restricts to sTab≤."""
    alpha = _alphabet(alphabet)
    _check_cap(count_tables(sframe.half_lengths, len(alpha), sorted_only), cap)
    options = [_row_options(l, alpha, sorted_only) for l in sframe.half_lengths]
    for rows in product(*options):
        try:
            table = STable(sframe, tuple(rows), phi)
        except ValueError:
            continue
        if fd and not is_fd_evenmult(table):
            continue
        yield table
