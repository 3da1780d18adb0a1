import random
from collections import Counter
from itertools import permutations, product

import pytest

from wtab import perms
from wtab.entry import Cmp, cmp_partial, entries
from wtab.enumerate import enumerate_tables
from wtab.frames import pyramid
from wtab.rs import rs_class, rs_tableau
from wtab.swaps import (
    SwapConsistencyError,
    fd_report,
    is_fd_typeA,
    iso_typeA,
    select_bruteforce,
    select_dominated,
    select_dominating,
    star_act,
    swap_adjacent,
    verify_star_well_defined,
)
from wtab.tables import canonical_rows, make_table, word

A_SWAP = make_table([[3, 3, 5, 5], [4], [1, 2]])
A_STAR = make_table([[4], [-2], [-3, 1, 3], [-4, -1, 2]])
A_421 = make_table([[5], [-1, 3], [-3, 1, 1, 4]], [1, 0, -2])
CYCLE = perms.parse_cycles("(1 2 3)", 4)


def rows_of(rc):
    return [[int(x.re) for x in r] for r in rc.rows]


class TestSwapAdjacent:
    def test_case_two_example(self):
        out = swap_adjacent(A_SWAP, 1)
        assert rows_of(out) == [[5], [3, 3, 4, 5], [1, 2]]
        assert out.frame.lengths == (1, 4, 2)
        assert word(out) == entries([5, 3, 3, 4, 5, 1, 2])

    def test_case_one_example(self):
        assert rows_of(swap_adjacent(make_table([[3], [1, 2]]), 1)) == [[1, 3], [2]]

    def test_undefined_without_witness(self):
        assert swap_adjacent(make_table([[0], [1, 2]]), 1) is None

    def test_equal_lengths_are_untouched(self):
        t = make_table([[0], [5]])
        assert swap_adjacent(t, 1) == canonical_rows(t)

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            swap_adjacent(A_SWAP, 3)
        with pytest.raises(ValueError):
            swap_adjacent(A_SWAP, 0)

    def test_swapping_twice_returns(self):
        out = swap_adjacent(A_SWAP, 1)
        assert swap_adjacent(out, 1) == canonical_rows(A_SWAP)


class TestSelection:
    def test_bruteforce_needs_unequal_rows(self):
        with pytest.raises(ValueError):
            select_bruteforce(entries([1]), entries([2]))

    @pytest.mark.parametrize("seed", range(4))
    def test_greedy_is_the_unique_optimum(self, seed):
        rng = random.Random(seed)
        checked = 0
        while checked < 250:
            s, t = rng.randint(1, 4), rng.randint(1, 5)
            if s == t:
                continue
            c = entries(rng.randint(-3, 3) for _ in range(s))
            d = entries(rng.randint(-3, 3) for _ in range(t))
            winners = select_bruteforce(c, d)
            greedy = select_dominated(c, d) if s < t else select_dominating(c, d)
            if not winners:
                assert greedy is None
                continue
            assert len(winners) == 1
            assert Counter(greedy) == winners[0]
            checked += 1


class TestStarAction:
    def test_three_cycle_example(self):
        out = star_act(CYCLE, A_STAR)
        assert rows_of(out) == [[-2, 1, 4], [3], [-3], [-4, -1, 2]]
        assert verify_star_well_defined(A_STAR, CYCLE).agree

    def test_identity_and_inverse(self):
        assert star_act(perms.identity(4), A_STAR) == canonical_rows(A_STAR)
        out = star_act(CYCLE, A_STAR)
        assert star_act(perms.invert(CYCLE), out) == canonical_rows(A_STAR)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            star_act((1, 2), A_STAR)

    def test_rs_is_invariant(self):
        assert rs_class(swap_adjacent(A_SWAP, 1)) == rs_class(A_SWAP)
        assert rs_class(star_act(CYCLE, A_STAR)) == rs_class(A_STAR)

    def test_all_reduced_words_on_longest_element(self):
        longest = (3, 2, 1)
        for rc in enumerate_tables(pyramid([2, 1, 1]), [-1, 0, 1, 2], row_classes=True, fd=True):
            report = verify_star_well_defined(rc, longest)
            assert len(report.results) == 2
            assert report.agree and report.divergent_words() == []


class TestFiniteDimensional:
    def test_pyramid_examples(self):
        assert is_fd_typeA(A_421)
        assert not is_fd_typeA(make_table([[0], [0, 1]]))
        report = fd_report(make_table([[0], [0, 1]]))
        assert report.rs_shape == (3,) and report.partition == (2, 1)
        assert not report.shape_matches

    def test_transported_label(self):
        moved = star_act(CYCLE, A_STAR)
        assert is_fd_typeA(moved, CYCLE)
        assert fd_report(moved, CYCLE).shape_matches

    def test_frame_must_be_a_moved_pyramid(self):
        with pytest.raises(ValueError):
            is_fd_typeA(A_SWAP)


class TestIsomorphism:
    def test_three_cycle_example(self):
        moved = star_act(CYCLE, A_STAR)
        assert iso_typeA(perms.identity(4), A_STAR, CYCLE, moved)

    def test_distinct_classes(self):
        other = make_table([[5], [-2], [-3, 1, 3], [-4, -1, 2]])
        assert is_fd_typeA(other)
        assert not iso_typeA(perms.identity(4), A_STAR, perms.identity(4), other)

    def test_equal_length_rows_can_be_relabelled(self):
        tau = perms.parse_cycles("(1 2)", 4)
        assert iso_typeA(perms.identity(4), A_STAR, tau, star_act(tau, A_STAR))
        assert star_act(tau, A_STAR) == canonical_rows(A_STAR)

    def test_non_fd_labels_are_refused(self):
        bad = make_table([[0], [0, 1]])
        with pytest.raises(ValueError):
            iso_typeA((1, 2), bad, (1, 2), bad)

    def test_error_type_is_exported(self):
        assert issubclass(SwapConsistencyError, RuntimeError)


def test_canonical_tie_break_does_not_change_rs():
    rng = random.Random(7)
    alphabet = [-1, 0, 1, "1/2", "3/2", "-1/2"]
    for _ in range(300):
        rows = [entries(rng.choice(alphabet) for _ in range(rng.randint(1, 3))) for _ in range(rng.randint(1, 3))]

        def orders(row):
            return {
                p
                for p in permutations(row)
                if all(cmp_partial(p[i], p[j]) is not Cmp.GT for i in range(len(p)) for j in range(i + 1, len(p)))
            }

        tableaux = {rs_tableau([x for r in choice for x in r]) for choice in product(*map(orders, rows))}
        assert len(tableaux) == 1
