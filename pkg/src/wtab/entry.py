"""Exact complex entries and the integer-difference partial order.

Entries are pairs of rationals.  Two entries are comparable exactly when
their difference is a rational integer, so every entry lives in a coset
``a + Z`` and comparisons never cross cosets.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Union

__all__ = ["Entry", "Cmp", "cmp_partial", "entry", "entries", "parse_entry"]


class Cmp(enum.Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"
    INCOMPARABLE = "INCOMPARABLE"


class Entry:
    """An exact complex number ``re + im*i`` with rational parts.

    ``coset`` and ``level`` split the number as ``coset + level`` with
    ``level`` an integer, so two entries compare iff their cosets agree.
    """

    __slots__ = ("re", "im", "coset", "level", "_hash")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        re = Fraction(re)
        im = Fraction(im)
        level = math.floor(re)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coset", (re - level, im))
        object.__setattr__(self, "_hash", hash((re, im)))

    def __setattr__(self, name, value):
        raise AttributeError("Entry is immutable")

    def __reduce__(self):
        return (Entry, (self.re, self.im))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def sort_key(self) -> tuple:
        """Total order used for canonical forms: coset first, then level."""
        return (self.coset, self.level)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Entry):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __neg__(self) -> "Entry":
        return Entry(-self.re, -self.im)

    def __add__(self, other: Any) -> "Entry":
        other = entry(other)
        return Entry(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Entry":
        other = entry(other)
        return Entry(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Any) -> "Entry":
        return entry(other) - self

    def __repr__(self) -> str:
        return f"Entry({self})"

    def __str__(self) -> str:
        if self.im == 0:
            return _fmt(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else _fmt(self.im) + "i"
        if self.re == 0:
            return im
        sign = "" if im.startswith("-") else "+"
        return f"{_fmt(self.re)}{sign}{im}"


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=4096)
def _int_entry(n: int) -> Entry:
    return Entry(n)


def entry(x: Any) -> Entry:
    """Coerce ints, Fractions, strings and Entries to an :class:`Entry`."""
    if isinstance(x, Entry):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not entries")
    if isinstance(x, int):
        return _int_entry(x)
    if isinstance(x, Fraction):
        return Entry(x)
    if isinstance(x, str):
        return parse_entry(x)
    if isinstance(x, tuple) and len(x) == 2:
        return Entry(Fraction(x[0]), Fraction(x[1]))
    raise TypeError(f"cannot interpret {x!r} as an entry")


def entries(xs: Iterable[Any]) -> tuple[Entry, ...]:
    return tuple(entry(x) for x in xs)


def parse_entry(text: str) -> Entry:
    """Parse ``"3"``, ``"-1/2"``, ``"1/2+3i"``, ``"2i"`` or ``"-i"``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty entry")
    if s.endswith("i"):
        # split the imaginary part at the last sign that is not leading
        body = s[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut > 0:
            re_part, im_part = body[:cut], body[cut:]
        else:
            re_part, im_part = "0", body
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        try:
            return Entry(Fraction(re_part), Fraction(im_part))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid entry {text!r}") from exc
    try:
        return Entry(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid entry {text!r}") from exc


def cmp_partial(a: Any, b: Any) -> Cmp:
    """Compare under ``a <= b  iff  b - a`` is a non-negative integer."""
    a = entry(a)
    b = entry(b)
    if a.coset != b.coset:
        return Cmp.INCOMPARABLE
    if a.level < b.level:
        return Cmp.LT
    if a.level > b.level:
        return Cmp.GT
    return Cmp.EQ
