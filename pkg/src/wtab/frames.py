"""Box geometry: pyramids, frames, s-frames and coordinate tables.

Boxes are 2 units wide; a row is stored as ``(offset, length)`` where
``offset`` is the x-coordinate of the centre of its leftmost box.  Frame
rows are listed top to bottom.  An :class:`SFrame` stores only the rows
labelled ``1..m`` (outermost first, i.e. bottom row first); the rows
``-1..-m`` are their mirror images through the origin.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "FrameError",
    "Frame",
    "SFrame",
    "Partition",
    "validate_frame",
    "pyramid",
    "symmetric_pyramid",
    "coordinate_table",
    "permute_rows",
    "left_justify",
]

Row = tuple[int, int]


class FrameError(ValueError):
    """Raised for box diagrams that are not frames."""

    def __init__(self, message: str, box: tuple[int, int] | None = None):
        super().__init__(message)
        self.box = box


@dataclass(frozen=True)
class Frame:
    rows: tuple[Row, ...]

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(length for _, length in self.rows)

    @property
    def n(self) -> int:
        return sum(self.lengths)

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(offset for offset, _ in self.rows)

    @property
    def is_justified(self) -> bool:
        return len(set(self.offsets)) <= 1

    @property
    def is_pyramid(self) -> bool:
        """Rows weakly lengthen downwards and satisfy the support condition."""
        lengths = self.lengths
        if any(a > b for a, b in zip(lengths, lengths[1:])):
            return False
        return _support_violation(self.rows) is None

    def partition(self) -> "Partition":
        return Partition(sorted(self.lengths, reverse=True))

    def boxes(self) -> list[tuple[int, int]]:
        """Box centres ``(x, y)``; the bottom row sits at ``y = 0``."""
        out = []
        for i, (offset, length) in enumerate(self.rows):
            y = 2 * (self.m - 1 - i)
            out.extend((offset + 2 * j, y) for j in range(length))
        return out


@dataclass(frozen=True)
class SFrame:
    """Centrally symmetric frame with ``2m`` rows.

    ``half_rows[i - 1]`` is the row labelled ``i``; label 1 is the bottom
    row and label ``m`` the lower of the two central rows.
    """

    half_rows: tuple[Row, ...]

    @property
    def m(self) -> int:
        return len(self.half_rows)

    @property
    def half_lengths(self) -> tuple[int, ...]:
        return tuple(length for _, length in self.half_rows)

    @property
    def n(self) -> int:
        return sum(self.half_lengths)

    def row(self, label: int) -> Row:
        offset, length = self.half_rows[abs(label) - 1]
        if label > 0:
            return (offset, length)
        return (_mirror_offset(offset, length), length)

    def full(self) -> Frame:
        """The whole diagram as a :class:`Frame`, rows top to bottom."""
        labels = list(range(-1, -self.m - 1, -1)) + list(range(self.m, 0, -1))
        return Frame(tuple(self.row(label) for label in labels))

    def top_half(self) -> Frame:
        return Frame(tuple(self.row(-i) for i in range(1, self.m + 1)))

    def partition(self) -> "Partition":
        return Partition(sorted(self.half_lengths * 2, reverse=True))


def _mirror_offset(offset: int, length: int) -> int:
    return -offset - 2 * (length - 1)


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def has_even_multiplicity(self) -> bool:
        return all(c % 2 == 0 for c in Counter(self).values())

    def halved(self) -> "Partition":
        """``(p_1, .., p_r)`` from ``(p_1^2, .., p_r^2)``."""
        if not self.has_even_multiplicity():
            raise ValueError(f"partition {tuple(self)} has an odd multiplicity")
        return Partition(self[::2])


def _support_violation(rows: Sequence[Row]) -> tuple[int, int] | None:
    """First box (top-down scan) lacking support, for rows listed top-down."""
    m = len(rows)
    for i in range(m - 1):
        below = {rows[i + 1][0] + 2 * j for j in range(rows[i + 1][1])}
        offset, length = rows[i]
        y = 2 * (m - 1 - i)
        for j in range(length):
            x = offset + 2 * j
            if x in below or (x - 1 in below and x + 1 in below):
                continue
            return (x, y)
    return None


def validate_frame(rows: Sequence[Sequence[int]] | Frame) -> Frame:
    """Check that some reordering of ``rows`` is a pyramid.

    Rows are sorted by length, longest at the bottom, carrying their
    offsets; the support condition is then checked box by box.
    """
    if isinstance(rows, Frame):
        rows = rows.rows
    rows = tuple((int(o), int(l)) for o, l in rows)
    if not rows:
        raise FrameError("a frame needs at least one row")
    for offset, length in rows:
        if length < 1:
            raise FrameError(f"row lengths must be positive, got {length}")
    ordered = sorted(rows, key=lambda r: r[1])
    bad = _support_violation(ordered)
    if bad is not None:
        raise FrameError(f"box centred at {bad} is unsupported", bad)
    return Frame(rows)


def pyramid(parts: Iterable[int], *, centered: bool = False) -> Frame:
    """Pyramid with the given row lengths (longest row at the bottom).

    Left-justified by default; ``centered=True`` centres every row on
    ``x = 0`` (the Dynkin pyramid).
    """
    lengths = sorted(Partition(sorted(parts, reverse=True)))
    if centered:
        rows = tuple((-(l - 1), l) for l in lengths)
    else:
        rows = tuple((0, l) for l in lengths)
    return validate_frame(rows)


def symmetric_pyramid(parts: Iterable[int]) -> SFrame:
    """Symmetric pyramid of an even-multiplicity partition.

    ``parts`` may be given in full, ``(3, 3, 2, 2)``, and is halved.
    """
    half = Partition(sorted(parts, reverse=True)).halved()
    rows = tuple((-(l - 1), l) for l in sorted(half))
    return validate_sframe(rows)


def validate_sframe(half_rows: Sequence[Sequence[int]] | SFrame) -> SFrame:
    if isinstance(half_rows, SFrame):
        half_rows = half_rows.half_rows
    sf = SFrame(tuple((int(o), int(l)) for o, l in half_rows))
    if sf.m == 0:
        raise FrameError("an s-frame needs at least one row pair")
    validate_frame(sf.full())
    return sf


def coordinate_table(frame: Frame | SFrame) -> list[list[int]]:
    """Number the boxes row by row, top to bottom and left to right.

    For an s-frame the top half carries ``1..n`` and the bottom half the
    centrally symmetric negatives.
    """
    if isinstance(frame, SFrame):
        top, k = [], 1
        for offset, length in frame.top_half().rows:
            top.append(list(range(k, k + length)))
            k += length
        bottom = [[-x for x in reversed(row)] for row in reversed(top)]
        return top + bottom
    out, k = [], 1
    for _, length in frame.rows:
        out.append(list(range(k, k + length)))
        k += length
    return out


def permute_rows(frame: Frame, sigma: Sequence[int]) -> Frame:
    """Row ``i`` moves to position ``sigma(i)`` (one-line, 1-based images)."""
    m = frame.m
    if sorted(sigma) != list(range(1, m + 1)):
        raise ValueError(f"{tuple(sigma)} is not a permutation of 1..{m}")
    rows: list[Row | None] = [None] * m
    for i, image in enumerate(sigma):
        rows[image - 1] = frame.rows[i]
    return Frame(tuple(rows))


def left_justify(frame: Frame) -> Frame:
    low = min(frame.offsets)
    return Frame(tuple((low, length) for _, length in frame.rows))
