"""Row swapping ``s_k ⋆`` and the ⋆-action of S_m on row classes.

An undefined swap is returned as ``None`` and propagates through
:func:`star_act`.
"""

from __future__ import annotations

import bisect
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Optional, Sequence

from . import perms
from .entry import Cmp, Entry, cmp_partial
from .frames import Frame, Partition, permute_rows
from .rs import rs_class
from .tables import RowClass, Table, canonical_rows, column_strict_witness, left_justify

__all__ = [
    "swap_adjacent",
    "select_dominated",
    "select_dominating",
    "select_bruteforce",
    "star_act",
    "star_act_word",
    "WellDefinedReport",
    "verify_star_well_defined",
    "FdReport",
    "fd_report",
    "is_fd_typeA",
    "iso_typeA",
    "SwapConsistencyError",
]


class SwapConsistencyError(RuntimeError):
    """Two routes that must agree (greedy vs gate, RS vs ⋆) disagreed."""


def _by_coset(xs: Sequence[Entry]) -> dict:
    groups = defaultdict(list)
    for x in xs:
        groups[x.coset].append(x.level)
    for levels in groups.values():
        levels.sort()
    return groups


def select_dominated(c: Sequence[Entry], d: Sequence[Entry]) -> Optional[list[Entry]]:
    """Case ``len(c) < len(d)``: pick ``e ⊂ d`` matched with ``e_i < c_i``
    and ``Σ(c_i - e_i)`` minimal.

    Each ``c``, largest first, takes the largest unused entry of ``d``
    strictly below it.
    """
    pool = _by_coset(d)
    chosen = []
    for x in sorted(c, key=Entry.sort_key, reverse=True):
        levels = pool.get(x.coset)
        if not levels:
            return None
        i = bisect.bisect_left(levels, x.level) - 1
        if i < 0:
            return None
        chosen.append(Entry(x.coset[0] + levels.pop(i), x.coset[1]))
    return chosen


def select_dominating(c: Sequence[Entry], d: Sequence[Entry]) -> Optional[list[Entry]]:
    """Case ``len(c) > len(d)``: pick ``e ⊂ c`` matched with ``e_i > d_i``
    and ``Σ(e_i - d_i)`` minimal.

    Each ``d``, largest first, takes the smallest unused entry of ``c``
    strictly above it.
    """
    pool = _by_coset(c)
    chosen = []
    for x in sorted(d, key=Entry.sort_key, reverse=True):
        levels = pool.get(x.coset)
        if not levels:
            return None
        i = bisect.bisect_right(levels, x.level)
        if i == len(levels):
            return None
        chosen.append(Entry(x.coset[0] + levels.pop(i), x.coset[1]))
    return chosen


def _cost(upper: Sequence[Entry], lower: Sequence[Entry]) -> Optional[int]:
    """Σ(upper_i - lower_i) over the best pointwise-strict matching of two
    equal-size lists, or ``None`` if no matching exists."""
    best = None
    for perm in set(permutations(lower)):
        if all(cmp_partial(a, b) is Cmp.GT for a, b in zip(upper, perm)):
            total = sum(a.level - b.level for a, b in zip(upper, perm))
            if best is None or total < best:
                best = total
    return best


def select_bruteforce(c: Sequence[Entry], d: Sequence[Entry]) -> list[Counter]:
    """Every optimal choice of ``e`` (as a multiset), by exhaustion."""
    if len(c) == len(d):
        raise ValueError("brute force selection needs rows of different lengths")
    small, big = (c, d) if len(c) < len(d) else (d, c)
    best, winners = None, []
    for idx in combinations(range(len(big)), len(small)):
        e = [big[i] for i in idx]
        cost = _cost(c, e) if len(c) < len(d) else _cost(e, d)
        if cost is None:
            continue
        if best is None or cost < best:
            best, winners = cost, [Counter(e)]
        elif cost == best and Counter(e) not in winners:
            winners.append(Counter(e))
    return winners


def _two_row_witness(c: Sequence[Entry], d: Sequence[Entry]) -> bool:
    frame = Frame(((0, len(c)), (0, len(d))))
    return column_strict_witness(Table(frame, (tuple(c), tuple(d)))) is not None


def swap_adjacent(rc: RowClass | Table, k: int) -> Optional[RowClass]:
    """``s_k ⋆ Ā`` on rows ``k`` and ``k + 1`` (1-based, top to bottom)."""
    rc = canonical_rows(rc)
    m = rc.m
    if not 1 <= k < m:
        raise ValueError(f"k={k} out of range for a frame with {m} rows")
    frame = permute_rows(rc.frame, perms.simple(k, m))
    rows = list(rc.rows)
    c, d = rows[k - 1], rows[k]
    if len(c) == len(d):
        return canonical_rows(Table(frame, tuple(rows)))
    if not _two_row_witness(c, d):
        return None
    if len(c) < len(d):
        e = select_dominated(c, d)
        if e is None:
            raise SwapConsistencyError(f"greedy selection failed on defined swap {c} / {d}")
        rest = list(d)
        for x in e:
            rest.remove(x)
        rows[k - 1], rows[k] = tuple(c) + tuple(rest), tuple(e)
    else:
        e = select_dominating(c, d)
        if e is None:
            raise SwapConsistencyError(f"greedy selection failed on defined swap {c} / {d}")
        rest = list(c)
        for x in e:
            rest.remove(x)
        rows[k - 1], rows[k] = tuple(e), tuple(d) + tuple(rest)
    return canonical_rows(Table(frame, tuple(rows)))


def star_act_word(word: Sequence[int], rc: RowClass | Table) -> Optional[RowClass]:
    """Apply ``s_{i_1} ... s_{i_l}``, rightmost letter first."""
    cur: Optional[RowClass] = canonical_rows(rc)
    for k in reversed(list(word)):
        cur = swap_adjacent(cur, k)
        if cur is None:
            return None
    return cur


def star_act(sigma: Sequence[int], rc: RowClass | Table) -> Optional[RowClass]:
    """``σ ⋆ Ā`` along the lexicographically least reduced word of ``σ``."""
    if len(sigma) != rc.m:
        raise ValueError(f"permutation of degree {len(sigma)} on a table with {rc.m} rows")
    return star_act_word(perms.reduced_word(sigma), rc)


@dataclass
class WellDefinedReport:
    sigma: tuple[int, ...]
    results: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len(set(self.results.values())) <= 1

    def divergent_words(self) -> list[tuple[int, ...]]:
        if self.agree:
            return []
        reference = self.results[min(self.results)]
        return [w for w, r in self.results.items() if r != reference]


def verify_star_well_defined(rc: RowClass | Table, sigma: Sequence[int]) -> WellDefinedReport:
    """Evaluate ``σ ⋆ Ā`` along every reduced word of ``σ``."""
    report = WellDefinedReport(tuple(sigma))
    for w in perms.reduced_words(sigma):
        report.results[tuple(w)] = star_act_word(w, rc)
    return report


def _base_pyramid(frame: Frame, sigma: Sequence[int]) -> Frame:
    base = permute_rows(frame, perms.invert(sigma))
    if not base.is_pyramid:
        raise ValueError(
            f"frame rows {frame.rows} are not a pyramid permuted by {perms.format_cycles(sigma)}"
        )
    return base


@dataclass(frozen=True)
class FdReport:
    fd: bool
    transported: Optional[RowClass]
    partition: Partition
    rs_shape: Partition

    @property
    def shape_matches(self) -> bool:
        return self.rs_shape == self.partition


def fd_report(rc: RowClass | Table, sigma: Optional[Sequence[int]] = None) -> FdReport:
    """Finite-dimensionality of ``L_σ(Ā)`` plus the RS-shape diagnostic.

    For ``σ = id`` the test is a column-strict element in ``l(Ā)``; other
    ``σ`` are first transported back to the pyramid by ``σ^{-1} ⋆``.
    """
    rc = canonical_rows(rc)
    sigma = tuple(sigma) if sigma is not None else perms.identity(rc.m)
    base = _base_pyramid(rc.frame, sigma)
    if sigma == perms.identity(rc.m):
        back: Optional[RowClass] = rc
    else:
        back = star_act(perms.invert(sigma), rc)
    fd = back is not None and column_strict_witness(left_justify(back)) is not None
    return FdReport(fd, back, base.partition(), rs_class(rc).shape)


def is_fd_typeA(rc: RowClass | Table, sigma: Optional[Sequence[int]] = None) -> bool:
    return fd_report(rc, sigma).fd


def iso_typeA(
    sigma: Sequence[int], b: RowClass | Table, sigma2: Sequence[int], b2: RowClass | Table
) -> bool:
    """``L_σ(B̄) ≅ L_σ'(B̄')``: equal RS classes, cross-checked against
    ``B̄' = τ ⋆ B̄`` with ``τ = σ' σ^{-1}``."""
    b, b2 = canonical_rows(b), canonical_rows(b2)
    if _base_pyramid(b.frame, sigma) != _base_pyramid(b2.frame, sigma2):
        raise ValueError("labels live on different pyramids")
    for label, s in ((b, sigma), (b2, sigma2)):
        if not is_fd_typeA(label, s):
            raise ValueError(f"label {label} is not finite dimensional for {perms.format_cycles(s)}")
    by_rs = rs_class(b) == rs_class(b2)
    tau = perms.compose(tuple(sigma2), perms.invert(sigma))
    by_star = star_act(tau, b) == b2
    if by_rs != by_star:
        raise SwapConsistencyError(f"RS test says {by_rs} but τ ⋆ B̄ test says {by_star}")
    return by_rs
