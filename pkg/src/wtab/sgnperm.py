"""The hyperoctahedral group W_m acting on row labels ``±1..±m``.

A :class:`SignedPerm` stores the images of ``1..m``; ``w(-i) = -w(i)``.
Generators are ``r = (m, -m)`` and ``s̄_k = (k, k+1)(-k, -k-1)``, written
``"r"`` and ``"s1"``, ``"s2"``, ... in words.  ``compose(u, v)`` applies
``v`` first, and a word ``[g_1, .., g_l]`` denotes ``g_1 ... g_l``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "SignedPerm",
    "compose",
    "invert",
    "generator",
    "generators",
    "coxeter_length",
    "reduced_word",
    "reduced_words",
    "from_word",
    "parse_word",
    "format_word",
    "parse_signed_cycles",
    "format_signed_cycles",
    "parse_signed_perm",
    "all_elements",
    "act_labels",
]


@dataclass(frozen=True)
class SignedPerm:
    images: tuple[int, ...]

    def __post_init__(self):
        m = len(self.images)
        if sorted(abs(x) for x in self.images) != list(range(1, m + 1)):
            raise ValueError(f"{self.images} is not a signed permutation")

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        x = self.images[abs(i) - 1]
        return x if i > 0 else -x

    @classmethod
    def identity(cls, m: int) -> "SignedPerm":
        return cls(tuple(range(1, m + 1)))

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.m + 1))

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        return compose(self, other)

    def __str__(self) -> str:
        return format_signed_cycles(self)


def compose(u: SignedPerm, v: SignedPerm) -> SignedPerm:
    if u.m != v.m:
        raise ValueError(f"rank mismatch: W_{u.m} and W_{v.m}")
    return SignedPerm(tuple(u(v(i)) for i in range(1, u.m + 1)))


def invert(u: SignedPerm) -> SignedPerm:
    out = [0] * u.m
    for i in range(1, u.m + 1):
        x = u(i)
        out[abs(x) - 1] = i if x > 0 else -i
    return SignedPerm(tuple(out))


def generator(name: str, m: int) -> SignedPerm:
    images = list(range(1, m + 1))
    if name == "r":
        images[m - 1] = -m
        return SignedPerm(tuple(images))
    match = re.fullmatch(r"s(\d+)", name)
    if not match:
        raise ValueError(f"unknown generator {name!r}")
    k = int(match.group(1))
    if not 1 <= k < m:
        raise ValueError(f"s{k} does not exist in W_{m}")
    images[k - 1], images[k] = images[k], images[k - 1]
    return SignedPerm(tuple(images))


def generators(m: int) -> list[str]:
    """Generator names in the order used for lexicographic comparison."""
    return ["r"] + [f"s{k}" for k in range(1, m)]


def coxeter_length(u: SignedPerm) -> int:
    # Relabel i -> m+1-i so that r becomes the sign change at 1; then the
    # usual count of inversions plus negative-sum pairs applies.
    m = u.m

    def rho(x: int) -> int:
        return (m + 1 - abs(x)) * (1 if x > 0 else -1)

    w = [rho(u(m + 1 - i)) for i in range(1, m + 1)]
    inv = sum(1 for i in range(m) for j in range(i + 1, m) if w[i] > w[j])
    nsp = sum(1 for i in range(m) for j in range(i, m) if w[i] + w[j] < 0)
    return inv + nsp


def _left_descents(u: SignedPerm) -> list[str]:
    ell = coxeter_length(u)
    return [g for g in generators(u.m) if coxeter_length(compose(generator(g, u.m), u)) < ell]


def reduced_word(u: SignedPerm) -> list[str]:
    """Lexicographically least reduced word, ``r`` before ``s1`` before ``s2``."""
    out = []
    while True:
        d = _left_descents(u)
        if not d:
            return out
        out.append(d[0])
        u = compose(generator(d[0], u.m), u)


def reduced_words(u: SignedPerm) -> list[list[str]]:
    return [list(w) for w in _all_words(u)]


@lru_cache(maxsize=None)
def _all_words(u: SignedPerm) -> tuple[tuple[str, ...], ...]:
    d = _left_descents(u)
    if not d:
        return ((),)
    out = []
    for g in d:
        for tail in _all_words(compose(generator(g, u.m), u)):
            out.append((g,) + tail)
    return tuple(out)


def from_word(word: Iterable[str], m: int) -> SignedPerm:
    u = SignedPerm.identity(m)
    for g in reversed(list(word)):
        u = compose(generator(g, m), u)
    return u


def parse_word(text: str) -> list[str]:
    """``"r s1 r"`` (also ``"r*s1*r"`` or ``"r,s1,r"``) to a generator list."""
    toks = [t for t in re.split(r"[\s,*·]+", text.strip()) if t]
    for t in toks:
        if t != "r" and not re.fullmatch(r"s\d+", t):
            raise ValueError(f"unknown generator {t!r} in {text!r}")
    return toks


def format_word(word: Sequence[str]) -> str:
    return " ".join(word) if word else "id"


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_signed_cycles(text: str, m: int) -> SignedPerm:
    """Parse ``"(1 -2)(2 -1)"``; cycles act on ``±1..±m`` and must be
    closed under negation as a whole."""
    s = text.strip()
    if s in ("", "id", "e", "()"):
        return SignedPerm.identity(m)
    if _CYCLE.sub("", s).strip():
        raise ValueError(f"cannot parse signed permutation {text!r}")
    mapping = {i: i for i in range(-m, m + 1) if i}
    for body in _CYCLE.findall(s):
        pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
        for x in pts:
            if x == 0 or abs(x) > m:
                raise ValueError(f"label {x} outside ±1..±{m}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            mapping[a] = b
    images = tuple(mapping[i] for i in range(1, m + 1))
    u = SignedPerm(images)
    if any(mapping[-i] != -u(i) for i in range(1, m + 1)):
        raise ValueError(f"{text!r} does not commute with negation")
    return u


def format_signed_cycles(u: SignedPerm) -> str:
    seen, parts = set(), []
    for start in list(range(1, u.m + 1)) + list(range(-1, -u.m - 1, -1)):
        if start in seen or u(start) == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = u(x)
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "id"


def parse_signed_perm(text: str, m: int) -> SignedPerm:
    """Cycle notation if the text has parentheses, otherwise a word."""
    if "(" in text or text.strip() in ("", "id", "e"):
        return parse_signed_cycles(text, m)
    return from_word(parse_word(text), m)


@lru_cache(maxsize=None)
def all_elements(m: int) -> tuple[SignedPerm, ...]:
    """Every element of W_m, by breadth-first search from the identity."""
    gens = [generator(g, m) for g in generators(m)]
    start = SignedPerm.identity(m)
    seen = {start}
    frontier = [start]
    order = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                v = compose(g, u)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
                    order.append(v)
        frontier = nxt
    return tuple(order)


def act_labels(u: SignedPerm, rows: Sequence, mirror) -> tuple:
    """Move the row labelled ``i`` to label ``u(i)``.

    ``rows[i - 1]`` is the row labelled ``i``; ``mirror`` turns a row into
    the centrally symmetric row it faces.  Returns the new ``rows``.
    """
    if len(rows) != u.m:
        raise ValueError(f"rank mismatch: {len(rows)} rows for W_{u.m}")
    out = [None] * u.m
    for i in range(1, u.m + 1):
        j = u(i)
        out[abs(j) - 1] = rows[i - 1] if j > 0 else mirror(rows[i - 1])
    return tuple(out)
