import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wtab.entry import entries, entry
from wtab.frames import coordinate_table, pyramid, validate_frame
from wtab.tables import (
    Table,
    canonical_rows,
    column_strict_witness,
    column_strict_witness_bruteforce,
    is_column_strict,
    left_justify,
    make_table,
    table_of,
    weight_of,
    word,
)

# a filling of the nested (4,2,1) pyramid, top row first
A_421 = make_table([[5], [-1, 3], [-3, 1, 1, 4]], [1, 0, -2])
A_SWAP = make_table([[3, 3, 5, 5], [4], [1, 2]])


def test_canonical_rows_sorts_within_rows():
    t = make_table([[5, 3, 3, 4]])
    assert canonical_rows(t).rows == (entries([3, 3, 4, 5]),)


def test_canonical_rows_blocks_cosets():
    row = canonical_rows(make_table([[1, "1/2", 0]])).rows[0]
    assert row == entries([0, 1, "1/2"])


def test_canonical_rows_is_idempotent_and_order_free():
    rc = canonical_rows(A_SWAP)
    assert canonical_rows(rc) == rc
    shuffled = make_table([[5, 3, 5, 3], [4], [2, 1]])
    assert canonical_rows(shuffled) == rc
    assert canonical_rows(A_SWAP).rows == A_SWAP.rows


def test_word_reads_rows_top_down():
    assert word(A_SWAP) == entries([3, 3, 5, 5, 4, 1, 2])
    assert word(make_table([["1/2"]])) == (entry("1/2"),)
    assert word(A_421) == entries([5, -1, 3, -3, 1, 1, 4])


def test_column_strictness_of_justified_pyramid_table():
    assert is_column_strict(left_justify(A_421))
    assert not is_column_strict(make_table([[0], [0]]))
    assert not is_column_strict(make_table([[0], ["1/2"]]))
    with pytest.raises(ValueError):
        is_column_strict(A_421)


def test_witness_examples():
    a = make_table([[4], [-2], [-3, 1, 3], [-4, -1, 2]])
    assert column_strict_witness(a) is not None
    moved = make_table([[-2, 1, 4], [3], [-3], [-4, -1, 2]])
    assert column_strict_witness(moved) is None
    w = column_strict_witness(make_table([[1, 2], [-2, -1]]))
    assert w is not None and is_column_strict(w)


def test_column_greedy_is_not_enough():
    # Filling column 1 bottom-up with the smallest feasible entries gives
    # 1 < 5 < 10 and leaves 2 above 4 in column 2.  Starting from 4 works.
    t = make_table([[10, 2], [5], [1, 4]])
    assert column_strict_witness(t) is not None
    assert column_strict_witness_bruteforce(t) is not None


def _random_justified(rng, alphabet):
    m = rng.randint(1, 4)
    lengths = [rng.randint(1, 3) for _ in range(m)]
    rows = [[rng.choice(alphabet) for _ in range(l)] for l in lengths]
    return make_table(rows)


@pytest.mark.parametrize("seed", range(5))
def test_witness_matches_bruteforce(seed):
    rng = random.Random(seed)
    for _ in range(300):
        t = _random_justified(rng, [-2, -1, 0, 1, 2, "1/2", "-1/2"])
        fast = column_strict_witness(t)
        slow = column_strict_witness_bruteforce(t)
        assert (fast is None) == (slow is None), t
        if fast is not None:
            assert is_column_strict(fast)
            assert canonical_rows(fast) == canonical_rows(t)


def test_weight_of_uses_coordinate_table():
    coords = coordinate_table(A_421.frame)
    assert coords == [[1], [2, 3], [4, 5, 6, 7]]
    assert weight_of(A_421, coords) == entries([5, -1, 3, -3, 1, 1, 4])
    assert table_of(weight_of(A_421, coords), coords, A_421.frame) == A_421
    zero = Table(A_421.frame, tuple(tuple(entry(0) for _ in r) for r in A_421.rows))
    assert set(weight_of(zero, coords)) == {entry(0)}


def test_weight_of_rejects_mismatched_frames():
    with pytest.raises(ValueError):
        weight_of(A_421, [[1, 2]])


@settings(max_examples=60)
@given(st.lists(st.integers(-3, 3), min_size=7, max_size=7))
def test_weight_round_trip(values):
    frame = pyramid([4, 2, 1])
    coords = coordinate_table(frame)
    t = table_of(values, coords, frame)
    assert weight_of(t, coords) == entries(values)


def test_row_length_mismatch_is_rejected():
    with pytest.raises(ValueError):
        Table(validate_frame([(0, 2)]), (entries([1]),))


def test_small_exhaustive_witness_agreement():
    for vals in product([-1, 0, 1], repeat=3):
        t = make_table([list(vals[:2]), [vals[2]]])
        assert (column_strict_witness(t) is None) == (column_strict_witness_bruteforce(t) is None)
