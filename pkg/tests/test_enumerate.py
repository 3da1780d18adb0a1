import pytest

from wtab.enumerate import EnumerationCapError, count_tables, enumerate_stables, enumerate_tables, max_enum
from wtab.frames import pyramid, symmetric_pyramid, validate_frame
from wtab.entry import entries
from wtab.stables import is_fd_evenmult
from wtab.swaps import is_fd_typeA
from wtab.tables import column_strict_witness_bruteforce, left_justify


def test_counts_for_small_pyramid():
    tables = list(enumerate_tables(pyramid([2, 1]), [0, 1, 2]))
    assert len(tables) == 27 == count_tables([2, 1], 3, False)
    fd = list(enumerate_tables(pyramid([2, 1]), [0, 1, 2], fd=True))
    assert len(fd) == 13
    assert len(list(enumerate_tables(pyramid([2, 1]), [0, 1, 2], row_classes=True))) == 18


def test_fd_filter_matches_bruteforce():
    frame = pyramid([3, 1])
    kept = set(enumerate_tables(frame, [-1, 0, 1], fd=True))
    for t in enumerate_tables(frame, [-1, 0, 1]):
        assert (t in kept) == (column_strict_witness_bruteforce(left_justify(t)) is not None)
        assert (t in kept) == is_fd_typeA(t)


def test_fd_needs_pyramid():
    with pytest.raises(ValueError):
        list(enumerate_tables(validate_frame([(0, 2), (0, 1)]), [0], fd=True))


def test_single_coset():
    items = list(enumerate_tables(pyramid([1, 1]), [0, "1/2"], single_coset=True))
    assert len(items) == 2


def test_cap(monkeypatch):
    with pytest.raises(EnumerationCapError):
        list(enumerate_tables(pyramid([2, 1]), [0, 1, 2], cap=26))
    monkeypatch.setenv("WTAB_MAX_ENUM", "10")
    assert max_enum() == 10
    with pytest.raises(EnumerationCapError):
        next(enumerate_tables(pyramid([2, 1]), [0, 1, 2]))
    monkeypatch.setenv("WTAB_MAX_ENUM", "lots")
    with pytest.raises(EnumerationCapError):
        max_enum()


def test_repeated_alphabet():
    with pytest.raises(ValueError):
        list(enumerate_tables(pyramid([1]), [0, 0]))


def test_stables_are_sorted_and_respect_phi():
    sf = symmetric_pyramid([2, 2])
    out = list(enumerate_stables(sf, [-1, 0, "1/2", 1], "-"))
    assert out and all(a.is_sorted and a.phi == -1 for a in out)
    assert all(x.re.denominator == 1 for a in out for r in a.half_rows for x in r)
    every = list(enumerate_stables(sf, [-1, 0, 1], "-", sorted_only=False))
    assert len(every) == 9 and len(out) == 6


def test_stable_fd_filter():
    sf = symmetric_pyramid([3, 3, 2, 2])
    kept = set(enumerate_stables(sf, range(-2, 3), "-", fd=True))
    assert kept
    for a in enumerate_stables(sf, range(-2, 3), "-"):
        assert (a in kept) == is_fd_evenmult(a)


def test_stable_rows_come_from_alphabet():
    sf = symmetric_pyramid([2, 2])
    seen = [a.half_rows for a in enumerate_stables(sf, [0, 1], "-", sorted_only=False)]
    assert len(seen) == len(set(seen)) == 4
    assert {x for rows in seen for r in rows for x in r} == set(entries([0, 1]))
