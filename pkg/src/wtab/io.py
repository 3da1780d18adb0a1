"""Canonical JSON for entries, frames, tables, s-tables and tableaux."""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Any

from .entry import Entry, entry
from .frames import Frame, FrameError, SFrame, validate_frame, validate_sframe
from .rs import Tableau
from .stables import STable, make_stable
from .tables import RowClass, Table, make_table

__all__ = [
    "InputError",
    "dumps",
    "to_json",
    "from_json",
    "parse_json_text",
    "load_json",
    "load_table",
    "load_stable",
]


class InputError(ValueError):
    """Malformed user input; ``line``/``column`` are set for JSON syntax errors."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


def _rational_json(q: Fraction) -> Any:
    if q.denominator == 1:
        return q.numerator
    return {"num": q.numerator, "den": q.denominator}


def _rational(obj: Any) -> Fraction:
    if isinstance(obj, bool):
        raise InputError(f"booleans are not numbers: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, dict) and set(obj) == {"num", "den"}:
        num, den = obj["num"], obj["den"]
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (num, den)):
            raise InputError(f"num and den must be integers: {obj!r}")
        if den == 0:
            raise InputError("zero denominator")
        return Fraction(num, den)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational number: {obj!r}") from exc
    raise InputError(f"not an exact rational: {obj!r} (floats are refused)")


def entry_to_json(x: Entry) -> Any:
    if x.im == 0:
        return _rational_json(x.re)
    return {"re": _rational_json(x.re), "im": _rational_json(x.im)}


def entry_from_json(obj: Any) -> Entry:
    if isinstance(obj, dict) and set(obj) <= {"re", "im"} and "re" in obj:
        return Entry(_rational(obj["re"]), _rational(obj.get("im", 0)))
    if isinstance(obj, str):
        try:
            return entry(obj)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    return Entry(_rational(obj))


def _rows_json(rows):
    return [{"offset": o, "len": l} for o, l in rows]


def to_json(value: Any) -> Any:
    """Plain JSON-ready data for any library value."""
    if isinstance(value, Entry):
        return entry_to_json(value)
    if isinstance(value, Frame):
        return {"kind": "frame", "rows": _rows_json(value.rows)}
    if isinstance(value, SFrame):
        return {"kind": "sframe", "rows": _rows_json(value.half_rows)}
    if isinstance(value, RowClass):
        value = value.table
    if isinstance(value, Table):
        return {
            "kind": "table",
            "frame": to_json(value.frame),
            "rows": [[entry_to_json(x) for x in r] for r in value.rows],
        }
    if isinstance(value, STable):
        return {
            "kind": "stable",
            "frame": to_json(value.sframe),
            "half_rows": [[entry_to_json(x) for x in r] for r in value.half_rows],
            "phi": "+" if value.phi == 1 else "-",
        }
    if isinstance(value, Tableau):
        return {
            "kind": "tableau",
            "rows": [[entry_to_json(x) for x in r] for r in value.rows],
            "shape": list(value.shape),
        }
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return _rational_json(value)
    raise TypeError(f"cannot serialise {type(value).__name__}")


def dumps(value: Any) -> str:
    """Canonical JSON text: sorted keys, no insignificant whitespace."""
    return json.dumps(to_json(value), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _frame_rows(obj: Any) -> list[tuple[int, int]]:
    if not isinstance(obj, dict) or not isinstance(obj.get("rows"), list):
        raise InputError(f"a frame needs a 'rows' list: {obj!r}")
    out = []
    for r in obj["rows"]:
        if not isinstance(r, dict) or set(r) != {"offset", "len"}:
            raise InputError(f"frame rows look like {{'offset': int, 'len': int}}, got {r!r}")
        if not all(isinstance(r[k], int) and not isinstance(r[k], bool) for k in r):
            raise InputError(f"offset and len must be integers: {r!r}")
        out.append((r["offset"], r["len"]))
    return out


def _entry_rows(obj: Any, what: str) -> list[list[Entry]]:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise InputError(f"{what} must be a list of lists of entries")
    return [[entry_from_json(x) for x in r] for r in obj]


def from_json(obj: Any) -> Any:
    """Inverse of :func:`to_json`, dispatching on ``kind``."""
    try:
        return _from_json(obj)
    except FrameError as exc:
        raise InputError(str(exc)) from exc


def _from_json(obj: Any) -> Any:
    if not isinstance(obj, dict) or "kind" not in obj:
        return entry_from_json(obj)
    kind = obj["kind"]
    if kind == "frame":
        return validate_frame(_frame_rows(obj))
    if kind == "sframe":
        return validate_sframe(_frame_rows(obj))
    if kind == "table":
        rows = _entry_rows(obj.get("rows"), "table rows")
        if "frame" in obj:
            frame = from_json(obj["frame"])
            if not isinstance(frame, Frame):
                raise InputError("a table's frame must have kind 'frame'")
            try:
                return Table(frame, tuple(tuple(r) for r in rows))
            except ValueError as exc:
                raise InputError(str(exc)) from exc
        return make_table(rows)
    if kind == "stable":
        rows = _entry_rows(obj.get("half_rows"), "half_rows")
        if "phi" not in obj:
            raise InputError("an s-table needs 'phi' ('+' or '-')")
        sframe = None
        if "frame" in obj:
            sframe = from_json(obj["frame"])
            if not isinstance(sframe, SFrame):
                raise InputError("an s-table's frame must have kind 'sframe'")
        try:
            return make_stable(rows, obj["phi"], sframe)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if kind == "tableau":
        return Tableau(tuple(tuple(r) for r in _entry_rows(obj.get("rows"), "tableau rows")))
    raise InputError(f"unknown kind {kind!r}")


def parse_json_text(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc


def load_json(arg: str) -> Any:
    """Inline JSON, or the path of a JSON file."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_json_text(fh.read())
    return parse_json_text(arg)


def load_table(arg: str) -> Table:
    """A type-A table; a bare list of rows is read as left-justified."""
    obj = load_json(arg)
    value = make_table_checked(obj) if isinstance(obj, list) else from_json(obj)
    if not isinstance(value, Table):
        raise InputError(f"expected a table, got {type(value).__name__}")
    return value


def make_table_checked(rows: Any) -> Table:
    try:
        return make_table(_entry_rows(rows, "table rows"))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def load_stable(arg: str, phi: Any = None) -> STable:
    """An s-table; a bare list of half rows (bottom-up) needs ``phi``."""
    obj = load_json(arg)
    if isinstance(obj, list):
        if phi is None:
            raise InputError("half rows given without --phi")
        try:
            return make_stable(_entry_rows(obj, "half_rows"), phi)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    value = from_json(obj)
    if not isinstance(value, STable):
        raise InputError(f"expected an s-table, got {type(value).__name__}")
    if phi is not None and value.phi != (1 if phi in ("+", 1, "+1") else -1):
        raise InputError("--phi disagrees with the table's phi")
    return value
