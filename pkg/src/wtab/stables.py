"""Skew-symmetric tables for types C and D.

An :class:`STable` stores the rows labelled ``1..m`` (bottom row first);
row ``-i`` is always the negate-reverse of row ``i``.  ``phi = +1`` is the
orthogonal case and ``phi = -1`` the symplectic one.

Undefined results are ``None`` in the ``*_or_none`` helpers and in the
⋆-actions; the component-group operators raise :class:`UndefinedError`
because their inputs are supposed to lie where they are defined.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from . import sgnperm
from .entry import Entry, entries, entry
from .frames import Frame, Partition, SFrame, _mirror_offset, coordinate_table, validate_sframe
from .sgnperm import SignedPerm
from .swaps import swap_adjacent
from .tables import Table, column_strict_witness, left_justify, weight_of

__all__ = [
    "UndefinedError",
    "STable",
    "make_stable",
    "negrev",
    "is_phi_even",
    "is_phi_odd",
    "ComponentGroup",
    "component_group",
    "sharp_element",
    "sharp_element_bruteforce",
    "c_central",
    "c_central_or_none",
    "sbar_star",
    "c_j",
    "c_j_or_none",
    "wstar_act",
    "wstar_act_word",
    "act_rows",
    "component_orbit",
    "is_fd_evenmult",
    "iso_evenmult",
    "WeylData",
    "restricted_weyl_data",
]

EntryRow = tuple[Entry, ...]


class UndefinedError(ValueError):
    """An operator was applied outside the set where it is defined."""


def negrev(row: Sequence[Entry]) -> EntryRow:
    return tuple(-x for x in reversed(row))


def _sorted(row: Iterable[Entry]) -> EntryRow:
    return tuple(sorted(row, key=Entry.sort_key))


def _sign(phi: Any) -> int:
    if phi in (1, "+", "+1"):
        return 1
    if phi in (-1, "-", "-1"):
        return -1
    raise ValueError(f"phi must be '+' or '-', got {phi!r}")


def is_phi_even(length: int, phi: int) -> bool:
    """``l`` is φ-even iff φ=+ and ``l`` even, or φ=− and ``l`` odd."""
    return (length % 2 == 0) == (_sign(phi) == 1)


def is_phi_odd(length: int, phi: int) -> bool:
    return not is_phi_even(length, phi)


@dataclass(frozen=True)
class STable:
    sframe: SFrame
    half_rows: tuple[EntryRow, ...]
    phi: int

    def __post_init__(self):
        object.__setattr__(self, "phi", _sign(self.phi))
        if tuple(len(r) for r in self.half_rows) != self.sframe.half_lengths:
            raise ValueError(
                f"half-row lengths {[len(r) for r in self.half_rows]} do not match "
                f"s-frame {self.sframe.half_lengths}"
            )
        values = [x for row in self.half_rows for x in row]
        if any(x.im != 0 for x in values):
            raise ValueError("s-table entries must be real")
        fracs = {x.re - x.level for x in values}
        if self.phi == -1 and fracs - {0}:
            raise ValueError("for phi = - every entry must be an integer")
        if self.phi == 1 and not (fracs <= {0} or fracs <= {Fraction(1, 2)}):
            raise ValueError("for phi = + entries must be all integers or all in 1/2 + Z")

    @property
    def m(self) -> int:
        return self.sframe.m

    def row(self, label: int) -> EntryRow:
        r = self.half_rows[abs(label) - 1]
        return r if label > 0 else negrev(r)

    @property
    def is_sorted(self) -> bool:
        """Membership in sTab≤: every row weakly increasing."""
        return all(
            all(a.re <= b.re for a, b in zip(row, row[1:])) for row in self.half_rows
        )

    def canonical(self) -> "STable":
        return STable(self.sframe, tuple(_sorted(r) for r in self.half_rows), self.phi)

    def labels_top_down(self) -> list[int]:
        return list(range(-1, -self.m - 1, -1)) + list(range(self.m, 0, -1))

    def full_table(self) -> Table:
        """The whole skew-symmetric table, rows top to bottom."""
        return Table(self.sframe.full(), tuple(self.row(i) for i in self.labels_top_down()))

    def top_half(self) -> Table:
        return Table(self.sframe.top_half(), tuple(self.row(-i) for i in range(1, self.m + 1)))

    def bottom_half(self) -> Table:
        rows = tuple(self.sframe.row(i) for i in range(self.m, 0, -1))
        return Table(Frame(rows), tuple(self.row(i) for i in range(self.m, 0, -1)))

    def weight(self) -> tuple[Entry, ...]:
        """Coefficients read through the coordinate pyramid's positive labels."""
        return weight_of(self.full_table(), coordinate_table(self.sframe))

    def signed_multiset(self) -> Counter:
        return Counter(x for row in self.half_rows for x in row)

    def __str__(self) -> str:
        body = " / ".join(
            "[" + ", ".join(map(str, self.row(i))) + "]" for i in range(1, self.m + 1)
        )
        return f"{body} (bottom-up, phi={'+' if self.phi == 1 else '-'})"


def make_stable(
    half_rows: Sequence[Sequence[Any]], phi: Any, sframe: Optional[SFrame | Sequence] = None
) -> STable:
    """Build a sorted s-table from half rows listed bottom-up (labels 1..m).

    Without ``sframe`` every row is centred on the origin.
    """
    rows = tuple(_sorted(entries(r)) for r in half_rows)
    if sframe is None:
        sframe = validate_sframe(tuple((-(len(r) - 1), len(r)) for r in rows))
    else:
        sframe = validate_sframe(sframe)
    return STable(sframe, rows, phi)


# ---------------------------------------------------------------- ♯-element


def _padded(xs: Sequence[Any]) -> list[Entry]:
    xs = list(entries(xs))
    if not xs:
        raise ValueError("the sharp element of an empty list is not defined")
    if len(xs) % 2 == 0:
        xs.append(entry(0))
    cosets = {x.coset for x in xs}
    if len(cosets) > 1:
        raise ValueError(f"sharp element needs pairwise comparable entries, got {xs}")
    return xs


def _pairs_positive(rest: Sequence[Entry]) -> bool:
    vals = sorted(x.re for x in rest)
    k = len(vals)
    return all(vals[i] + vals[k - 1 - i] > 0 for i in range(k // 2))


def sharp_element(xs: Sequence[Any]) -> Optional[Entry]:
    """Largest possible last element when the rest is split into pairs with
    positive sums; ``None`` if no split works.  Even lists get a 0 added.

    A candidate ``x`` works iff the others, sorted, pair up outermost-first
    with positive sums (pairing smallest with largest maximises the
    minimum pair sum).
    """
    xs = _padded(xs)
    for x in sorted(set(xs), key=lambda e: e.re, reverse=True):
        rest = list(xs)
        rest.remove(x)
        if _pairs_positive(rest):
            return x
    return None


def _has_positive_matching(rest: list[Entry]) -> bool:
    if not rest:
        return True
    first, others = rest[0], rest[1:]
    return any(
        first.re + y.re > 0 and _has_positive_matching(others[:i] + others[i + 1 :])
        for i, y in enumerate(others)
    )


def sharp_element_bruteforce(xs: Sequence[Any]) -> Optional[Entry]:
    """Oracle: try every last element against every perfect matching of the rest."""
    xs = _padded(xs)
    if len(xs) > 11:
        raise ValueError("brute-force sharp element is limited to 11 entries")
    best = None
    for i, last in enumerate(xs):
        if best is not None and last.re <= best.re:
            continue
        if _has_positive_matching(xs[:i] + xs[i + 1 :]):
            best = last
    return best


# ---------------------------------------------------------------- operators


def _replace_half(a: STable, label: int, row: Sequence[Entry], frame_row=None) -> STable:
    half = list(a.half_rows)
    half[label - 1] = _sorted(row)
    sframe = a.sframe
    if frame_row is not None:
        hr = list(sframe.half_rows)
        hr[label - 1] = frame_row
        sframe = SFrame(tuple(hr))
    return STable(sframe, tuple(half), a.phi)


def _flip_one(row: Sequence[Entry], x: Entry) -> EntryRow:
    out = list(row)
    out[out.index(x)] = -x
    return _sorted(out)


def c_central_or_none(a: STable) -> Optional[STable]:
    m = a.m
    a = a.canonical()
    if is_phi_even(len(a.half_rows[m - 1]), a.phi):
        return a
    upper = a.row(-m)
    s = sharp_element(upper)
    if s is None:
        return None
    if s == 0:
        return a
    return _replace_half(a, m, negrev(_flip_one(upper, s)))


def c_central(a: STable) -> STable:
    """The operator ``c`` on the central row pair ``±m``.

    Trivial when the central length is φ-even.  Otherwise the ♯-element
    ``a`` of the upper central row (row ``-m``) is replaced by ``-a``
    there, and ``-a`` by ``a`` in the lower central row.  The lower row is
    never consulted: falling back to it breaks ``c^2 = 1``.
    """
    out = c_central_or_none(a)
    if out is None:
        raise UndefinedError(f"the upper central row of {a} has no sharp element")
    return out


def sbar_star(a: STable, k: int, *, via: str = "top") -> Optional[STable]:
    """``s̄_k ⋆ A``: the row swap on labels ``k, k+1`` and ``-k, -k-1``.

    The swap is computed in one half and mirrored into the other.  ``via``
    picks the half (``"top"`` or ``"bottom"``); both must agree.
    """
    m = a.m
    if not 1 <= k < m:
        raise ValueError(f"s{k} does not exist for an s-table with {m} row pairs")
    a = a.canonical()
    if via == "top":
        swapped = swap_adjacent(a.top_half(), k)
        if swapped is None:
            return None
        half = tuple(negrev(swapped.rows[i]) for i in range(m))
    elif via == "bottom":
        swapped = swap_adjacent(a.bottom_half(), m - k)
        if swapped is None:
            return None
        half = tuple(swapped.rows[m - i] for i in range(1, m + 1))
    else:
        raise ValueError(f"via must be 'top' or 'bottom', got {via!r}")
    hr = list(a.sframe.half_rows)
    hr[k - 1], hr[k] = hr[k], hr[k - 1]
    return STable(SFrame(tuple(hr)), tuple(_sorted(r) for r in half), a.phi)


def _apply_generator(g: str, a: STable) -> Optional[STable]:
    if g == "r":
        out = c_central_or_none(a)
        if out is None:
            return None
        offset, length = out.sframe.half_rows[out.m - 1]
        # r swaps rows m and -m, so the frame row is mirrored as well
        return _replace_half(out, out.m, out.half_rows[out.m - 1], (_mirror_offset(offset, length), length))
    k = int(g[1:])
    return sbar_star(a, k)


def wstar_act_word(word: Sequence[str], a: STable) -> Optional[STable]:
    """Apply ``g_1 ... g_l``, rightmost first; ``r`` acts as ``c``."""
    cur: Optional[STable] = a.canonical()
    for g in reversed(list(word)):
        cur = _apply_generator(g, cur)
        if cur is None:
            return None
    return cur


def wstar_act(w: SignedPerm, a: STable) -> Optional[STable]:
    if w.m != a.m:
        raise ValueError(f"W_{w.m} cannot act on an s-table with {a.m} row pairs")
    return wstar_act_word(sgnperm.reduced_word(w), a)


def act_rows(w: SignedPerm, a: STable) -> STable:
    """Plain relabelling: the row labelled ``i`` moves to label ``w(i)``."""

    def mirror_row(pair):
        (offset, length), row = pair
        return ((_mirror_offset(offset, length), length), negrev(row))

    moved = sgnperm.act_labels(w, list(zip(a.sframe.half_rows, a.half_rows)), mirror_row)
    return STable(SFrame(tuple(f for f, _ in moved)), tuple(r for _, r in moved), a.phi)


# ---------------------------------------------------------------- C̃(e)


@dataclass(frozen=True)
class ComponentGroup:
    """``C̃(e) ≅ Z_2^d`` with one generator per distinct φ-odd part."""

    partition: Partition
    phi: int
    parts: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.parts)

    @property
    def order(self) -> int:
        return 2**self.d


def component_group(half_lengths: Iterable[int], phi: Any) -> ComponentGroup:
    """Generators ordered by their parts, largest first."""
    halved = Partition(sorted(half_lengths, reverse=True))
    parts = tuple(sorted({p for p in halved if is_phi_odd(p, phi)}, reverse=True))
    return ComponentGroup(halved, _sign(phi), parts)


def _cj_word(a: STable, j: int) -> list[str]:
    group = component_group(a.sframe.half_lengths, a.phi)
    if not 1 <= j <= group.d:
        raise ValueError(f"c_{j} does not exist; the component group has rank {group.d}")
    part = group.parts[j - 1]
    t = max(i for i, l in enumerate(a.sframe.half_lengths, start=1) if l == part)
    return [f"s{k}" for k in range(a.m - 1, t - 1, -1)]


def c_j_or_none(a: STable, j: int) -> Optional[STable]:
    tau = _cj_word(a, j)
    moved = wstar_act_word(tau, a)
    if moved is None:
        return None
    flipped = c_central_or_none(moved)
    if flipped is None:
        return None
    return wstar_act_word(list(reversed(tau)), flipped)


def c_j(a: STable, j: int) -> STable:
    """``c_j · B = τ^{-1} ⋆ (c · (τ ⋆ B))`` where ``τ = s̄_{m-1} ... s̄_t``
    brings the central-most row pair of length ``p_{i_j}`` to the centre."""
    out = c_j_or_none(a, j)
    if out is None:
        raise UndefinedError(f"c_{j} is not defined on {a}")
    return out


def component_orbit(a: STable) -> list[STable]:
    """Closure of ``{A}`` under ``c_1 .. c_d``, in discovery order.

    Generators that are undefined at some member are skipped there.
    """
    a = a.canonical()
    d = component_group(a.sframe.half_lengths, a.phi).d
    seen = {a}
    order = [a]
    queue = deque([a])
    while queue:
        cur = queue.popleft()
        for j in range(1, d + 1):
            nxt = c_j_or_none(cur, j)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order


def _check_frame(a: STable, sigma: SignedPerm) -> None:
    back = act_rows(sgnperm.invert(sigma), a)
    lengths = back.sframe.half_lengths
    if any(x > y for x, y in zip(lengths, lengths[1:])):
        raise ValueError(
            f"s-frame lengths {a.sframe.half_lengths} are not a symmetric pyramid moved by {sigma}"
        )


def _plain_witness(a: STable) -> bool:
    return column_strict_witness(left_justify(a.full_table())) is not None


def is_fd_evenmult(a: STable, sigma: Optional[SignedPerm] = None) -> bool:
    """Finite dimensionality for an even-multiplicity label.

    For ``σ = id``: some member of the component orbit is row equivalent,
    after left justification, to a column-strict table.  Other ``σ`` are
    transported back by ``σ^{-1} ⋆`` first; an undefined step means no.
    """
    sigma = sigma if sigma is not None else SignedPerm.identity(a.m)
    _check_frame(a, sigma)
    if not sigma.is_identity:
        back = wstar_act(sgnperm.invert(sigma), a)
        if back is None:
            return False
        a = back
    return any(_plain_witness(b) for b in component_orbit(a))


def iso_evenmult(sigma: SignedPerm, b: STable, sigma2: SignedPerm, b2: STable) -> bool:
    """``L_σ(B) ≅ L_σ'(B')`` iff ``B' = τ ⋆ B`` with ``τ = σ' σ^{-1}``."""
    for label, s in ((b, sigma), (b2, sigma2)):
        if not is_fd_evenmult(label, s):
            raise ValueError(f"{label} is not finite dimensional for {s}")
    tau = sgnperm.compose(sigma2, sgnperm.invert(sigma))
    return wstar_act(tau, b) == b2.canonical()


# ---------------------------------------------------------------- W^e


@dataclass(frozen=True)
class WeylData:
    """Structure of the restricted Weyl group for an even-multiplicity ``p``.

    ``multiplicities`` pairs each distinct part of the halved partition
    with its multiplicity; ``factor_types`` gives ``"B"`` or ``"D"`` for
    the matching factor of ``W'``.  ``generators`` lists the ``Z^e``
    generators as ``(index i_j, part, row label)``.  ``rules[k-1]`` says how
    ``r_k`` acts: ``("c", j)`` or ``("trivial",)``.
    """

    partition: Partition
    phi: int
    multiplicities: tuple[tuple[int, int], ...]
    factor_types: tuple[str, ...]
    generators: tuple[tuple[int, int, int], ...]
    rules: tuple[tuple, ...]

    @property
    def d(self) -> int:
        return len(self.generators)


def restricted_weyl_data(p: Iterable[int], phi: Any) -> WeylData:
    full = Partition(sorted(p, reverse=True))
    halved = full.halved()
    phi = _sign(phi)
    m = len(halved)
    counts = Counter(halved)
    distinct = sorted(counts, reverse=True)
    mults = tuple((q, counts[q]) for q in distinct)
    types = tuple("D" if is_phi_odd(q, phi) else "B" for q in distinct)
    gens = []
    for q in distinct:
        if is_phi_odd(q, phi):
            i = halved.index(q) + 1
            gens.append((i, q, m + 1 - i))
    index_of = {q: j for j, (_, q, _) in enumerate(gens, start=1)}
    rules = tuple(("c", index_of[q]) if q in index_of else ("trivial",) for q in halved)
    return WeylData(full, phi, mults, types, tuple(gens), rules)
