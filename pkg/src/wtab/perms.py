"""Permutations of ``1..m`` in one-line notation, with reduced words.

``sigma[i - 1]`` is the image of ``i``.  ``compose(u, v)`` applies ``v``
first.  The simple transposition ``s_k`` swaps ``k`` and ``k + 1``.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Perm",
    "identity",
    "compose",
    "invert",
    "simple",
    "length",
    "left_descents",
    "reduced_word",
    "reduced_words",
    "from_word",
    "parse_cycles",
    "format_cycles",
]

Perm = tuple[int, ...]


def identity(m: int) -> Perm:
    return tuple(range(1, m + 1))


def _check(p: Sequence[int]) -> Perm:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{p} is not a permutation")
    return p


def compose(u: Sequence[int], v: Sequence[int]) -> Perm:
    if len(u) != len(v):
        raise ValueError("permutations of different degree")
    return tuple(u[x - 1] for x in v)


def invert(u: Sequence[int]) -> Perm:
    out = [0] * len(u)
    for i, x in enumerate(u, start=1):
        out[x - 1] = i
    return tuple(out)


def simple(k: int, m: int) -> Perm:
    if not 1 <= k < m:
        raise ValueError(f"s_{k} does not exist in S_{m}")
    p = list(range(1, m + 1))
    p[k - 1], p[k] = p[k], p[k - 1]
    return tuple(p)


def length(u: Sequence[int]) -> int:
    return sum(1 for i in range(len(u)) for j in range(i + 1, len(u)) if u[i] > u[j])


def left_descents(u: Sequence[int]) -> list[int]:
    """``k`` with ``length(s_k u) < length(u)``."""
    inv = invert(u)
    return [k for k in range(1, len(u)) if inv[k - 1] > inv[k]]


def reduced_word(u: Sequence[int]) -> list[int]:
    """Lexicographically least reduced word ``[i_1, .., i_l]`` with
    ``u = s_{i_1} ... s_{i_l}``."""
    u = _check(u)
    out = []
    while True:
        d = left_descents(u)
        if not d:
            return out
        k = d[0]
        out.append(k)
        u = compose(simple(k, len(u)), u)


def reduced_words(u: Sequence[int]) -> list[list[int]]:
    """All reduced words, in lexicographic order."""
    return [list(w) for w in _all_words(_check(u))]


@lru_cache(maxsize=None)
def _all_words(u: Perm) -> tuple[tuple[int, ...], ...]:
    d = left_descents(u)
    if not d:
        return ((),)
    out = []
    for k in d:
        for tail in _all_words(compose(simple(k, len(u)), u)):
            out.append((k,) + tail)
    return tuple(out)


def from_word(word: Iterable[int], m: int) -> Perm:
    u = identity(m)
    for k in reversed(list(word)):
        u = compose(simple(k, m), u)
    return u


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, m: int) -> Perm:
    """Parse cycle notation such as ``"(1 2 3)"`` or ``"(1,2)(3,4)"``."""
    s = text.strip()
    if s in ("", "id", "e", "()"):
        return identity(m)
    if _CYCLE.sub("", s).strip():
        raise ValueError(f"cannot parse permutation {text!r}")
    images = list(range(1, m + 1))
    seen: set[int] = set()
    for body in _CYCLE.findall(s):
        pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
        for x in pts:
            if not 1 <= x <= m:
                raise ValueError(f"point {x} outside 1..{m}")
            if x in seen:
                raise ValueError(f"point {x} repeated in {text!r}")
            seen.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b
    return tuple(images)


def format_cycles(u: Sequence[int]) -> str:
    seen, parts = set(), []
    for start in range(1, len(u) + 1):
        if start in seen or u[start - 1] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = u[x - 1]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "id"
