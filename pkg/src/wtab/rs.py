"""Robinson-Schensted insertion over the integer-difference partial order."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .entry import Cmp, Entry, cmp_partial, entries
from .frames import Partition
from .tables import RowClass, Table, canonical_rows, sort_row, word

__all__ = [
    "Tableau",
    "rs_insert",
    "rs_tableau",
    "rs_class",
    "greene_shape",
    "same_annihilator",
    "GREENE_MAX_LENGTH",
]

GREENE_MAX_LENGTH = 12


@dataclass(frozen=True)
class Tableau:
    """Insertion tableau, compared up to reordering inside rows.

    ``rows`` keeps each row in canonical order; for a single coset this is
    exactly the insertion order.
    """

    rows: tuple[tuple[Entry, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def is_valid(self) -> bool:
        """Rows weakly increase, columns strictly increase, shape is a
        partition; checked separately on every coset."""
        if any(len(a) < len(b) for a, b in zip(self.rows, self.rows[1:])):
            return False
        cosets = {x.coset for row in self.rows for x in row}
        for coset in cosets:
            sub = [[x for x in row if x.coset == coset] for row in self.rows]
            sub = [r for r in sub if r]
            if any(len(a) < len(b) for a, b in zip(sub, sub[1:])):
                return False
            for row in sub:
                if any(cmp_partial(a, b) is Cmp.GT for a, b in zip(row, row[1:])):
                    return False
            for upper, lower in zip(sub, sub[1:]):
                if any(cmp_partial(a, b) is not Cmp.LT for a, b in zip(upper, lower)):
                    return False
        return True

    def __str__(self) -> str:
        return " / ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows)


def rs_insert(rows: Sequence[Sequence[Entry]], x: Entry) -> tuple[tuple[Entry, ...], ...]:
    """Row-insert ``x``: it bumps the leftmost strictly greater comparable
    entry of a row, which moves on to the next row down."""
    out = [list(r) for r in rows]
    for row in out:
        coset, level = x.coset, x.level
        for j, y in enumerate(row):
            if y.coset == coset and y.level > level:
                row[j], x = x, y
                break
        else:
            row.append(x)
            return tuple(tuple(r) for r in out)
    out.append([x])
    return tuple(tuple(r) for r in out)


def rs_tableau(w: Iterable[Any]) -> Tableau:
    rows: tuple[tuple[Entry, ...], ...] = ()
    for x in entries(w):
        rows = rs_insert(rows, x)
    return Tableau(tuple(sort_row(r) for r in rows))


def rs_class(rc: Table | RowClass) -> Tableau:
    return rs_tableau(word(canonical_rows(rc)))


def greene_shape(w: Iterable[Any]) -> Partition:
    """Shape from Greene's invariants, by exhaustive subset search.

    ``lambda_1 + .. + lambda_k`` is the largest union of ``k`` disjoint
    weakly increasing subsequences.  Exponential; an oracle only.
    """
    w = entries(w)
    n = len(w)
    if n > GREENE_MAX_LENGTH:
        raise ValueError(f"greene_shape is exhaustive; words longer than {GREENE_MAX_LENGTH} are refused")
    if n == 0:
        return Partition(())
    le = [[cmp_partial(w[i], w[j]) in (Cmp.LT, Cmp.EQ) for j in range(n)] for i in range(n)]
    full = (1 << n) - 1
    # chain[mask]: positions in mask read left to right are weakly increasing
    chain = [False] * (1 << n)
    last = [-1] * (1 << n)
    chain[0] = True
    for mask in range(1, 1 << n):
        top = mask.bit_length() - 1
        rest = mask ^ (1 << top)
        last[mask] = top
        chain[mask] = chain[rest] and (rest == 0 or le[last[rest]][top])
    # cover[mask]: fewest chains partitioning mask
    cover = [0] * (1 << n)
    for mask in range(1, 1 << n):
        if chain[mask]:
            cover[mask] = 1
            continue
        low = mask & -mask
        rest = mask ^ low
        best = n
        sub = rest
        while True:
            c = sub | low
            if chain[c]:
                best = min(best, 1 + cover[mask ^ c])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        cover[mask] = best
    best_k = [0] * (n + 1)
    for mask in range(1 << n):
        k = cover[mask]
        size = bin(mask).count("1")
        if size > best_k[k]:
            best_k[k] = size
    for k in range(1, n + 1):
        best_k[k] = max(best_k[k], best_k[k - 1])
    parts = [best_k[k] - best_k[k - 1] for k in range(1, n + 1)]
    assert best_k[n] == n and cover[full] <= n
    return Partition(p for p in parts if p > 0)


def same_annihilator(lam: Sequence[Any], mu: Sequence[Any]) -> bool:
    """Joseph's test: equal insertion tableaux of the two weights' words."""
    if len(lam) != len(mu):
        raise ValueError(f"weights have different lengths {len(lam)} and {len(mu)}")
    return rs_tableau(lam) == rs_tableau(mu)
