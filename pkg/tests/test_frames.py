import pytest
from hypothesis import given
from hypothesis import strategies as st

from wtab import perms
from wtab.frames import (
    FrameError,
    Partition,
    coordinate_table,
    left_justify,
    permute_rows,
    pyramid,
    symmetric_pyramid,
    validate_frame,
    validate_sframe,
)

# the (4,2,1) pyramid drawn with nested rows, top row first
NESTED_421 = [(1, 1), (0, 2), (-2, 4)]


def test_nested_pyramid_is_valid():
    frame = validate_frame(NESTED_421)
    assert frame.is_pyramid
    assert frame.partition() == (4, 2, 1)


def test_single_row_any_offset():
    assert validate_frame([(17, 3)]).m == 1


def test_disconnected_rows_rejected_with_box():
    with pytest.raises(FrameError) as err:
        validate_frame([(0, 1), (6, 1)])
    assert err.value.box is not None


def test_unsorted_rows_can_still_be_a_frame():
    frame = validate_frame([(0, 4), (0, 1), (0, 2)])
    assert not frame.is_pyramid
    assert frame.partition() == (4, 2, 1)


def test_empty_or_zero_rows_rejected():
    with pytest.raises(FrameError):
        validate_frame([])
    with pytest.raises(FrameError):
        validate_frame([(0, 0)])


def test_coordinate_table_of_pyramid():
    assert coordinate_table(pyramid([4, 2, 1])) == [[1], [2, 3], [4, 5, 6, 7]]
    assert coordinate_table(pyramid([1])) == [[1]]


def test_coordinate_table_of_symmetric_pyramid():
    sf = symmetric_pyramid([3, 3, 2, 2])
    assert coordinate_table(sf) == [[1, 2], [3, 4, 5], [-5, -4, -3], [-2, -1]]


def test_permute_rows_carries_offsets():
    frame = validate_frame(NESTED_421)
    moved = permute_rows(frame, perms.parse_cycles("(1 2 3)", 3))
    assert moved.rows == ((-2, 4), (1, 1), (0, 2))
    assert permute_rows(frame, perms.identity(3)) == frame
    s1 = perms.simple(1, 3)
    assert permute_rows(permute_rows(frame, s1), s1) == frame


@given(st.permutations([1, 2, 3, 4]), st.permutations([1, 2, 3, 4]))
def test_permute_rows_is_an_action(sigma, tau):
    frame = pyramid([4, 3, 2, 1])
    lhs = permute_rows(permute_rows(frame, sigma), tau)
    assert lhs == permute_rows(frame, perms.compose(tau, sigma))


def test_left_justify_is_idempotent():
    frame = left_justify(validate_frame(NESTED_421))
    assert frame.is_justified
    assert left_justify(frame) == frame
    assert frame.lengths == (1, 2, 4)


def test_sframe_is_centrally_symmetric():
    sf = symmetric_pyramid([3, 3, 2, 2])
    boxes = set(sf.full().boxes())
    # boxes() puts the bottom row at y = 0; shift so the centre is the origin
    ys = [y for _, y in boxes]
    mid = (max(ys) + min(ys)) // 2
    centred = {(x, y - mid) for x, y in boxes}
    assert centred == {(-x, -y) for x, y in centred}


def test_sframe_rejects_bad_support():
    with pytest.raises(FrameError):
        validate_sframe([(5, 1), (-2, 3)])


def test_partition_helpers():
    p = Partition([3, 3, 2, 2])
    assert p.size == 10 and p.has_even_multiplicity()
    assert p.halved() == (3, 2)
    with pytest.raises(ValueError):
        Partition([3, 3, 2]).halved()
    with pytest.raises(ValueError):
        Partition([1, 2])
