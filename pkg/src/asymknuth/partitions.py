"""Integer partitions (Young diagrams), rectangles, and complementation.

Partitions are stored in canonical form: a weakly decreasing tuple of
positive parts with no trailing zeros.  Enumeration is lazy and always
yields partitions in lexicographically decreasing order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ContainmentError


class Partition(tuple):
    """An immutable integer partition, e.g. ``Partition((3, 1))``."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple) -> "Partition":
        # caller guarantees canonical form
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated form used on the command line ("" is empty)."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def first(self) -> int:
        return self[0] if self else 0

    def padded(self, d: int) -> tuple:
        """Parts padded with zeros to exactly ``d`` rows."""
        return tuple(self) + (0,) * (d - len(self))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


@dataclass(frozen=True)
class Rectangle:
    """The ``rows`` x ``cols`` rectangular diagram R(rows, cols)."""

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1:
            raise ValueError("rectangle needs at least one row")
        if self.cols < 0:
            raise ValueError("rectangle needs a nonnegative column count")

    @property
    def area(self) -> int:
        return self.rows * self.cols

    def as_partition(self) -> Partition:
        return Partition._trusted((self.cols,) * self.rows if self.cols else ())


def contains(rect: Rectangle, mu: Partition) -> bool:
    return len(mu) <= rect.rows and (not mu or mu[0] <= rect.cols)


def _fill(remaining: int, slots: int, cap: int, prefix: tuple) -> Iterator[tuple]:
    if remaining == 0:
        yield prefix
        return
    if slots == 0:
        return
    lo = -(-remaining // slots)
    for p in range(min(cap, remaining), lo - 1, -1):
        yield from _fill(remaining - p, slots - 1, p, prefix + (p,))


def first_parts(size: int, max_len: int, max_part: int | None = None) -> range:
    """Feasible values of the first part, in enumeration order.

    Fixing the first part splits an enumeration into contiguous blocks,
    which is how sums are distributed across workers.
    """
    if size == 0:
        return range(0, -1, -1)
    cap = size if max_part is None else min(size, max_part)
    lo = -(-size // max_len)
    return range(cap, lo - 1, -1)


def enumerate_block(size: int, max_len: int, max_part: int | None, first: int) -> Iterator[Partition]:
    """Partitions from :func:`enumerate_partitions` whose first part is ``first``."""
    if size == 0:
        if first == 0:
            yield Partition._trusted(())
        return
    if first < 1 or first > size or (max_part is not None and first > max_part):
        return
    for parts in _fill(size - first, max_len - 1, first, (first,)):
        yield Partition._trusted(parts)


def enumerate_partitions(size: int, max_len: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``size`` with at most ``max_len`` parts, each at most ``max_part``."""
    if size < 0 or max_len < 0:
        return
    if size == 0:
        yield Partition._trusted(())
        return
    if max_len == 0:
        return
    for first in first_parts(size, max_len, max_part):
        yield from enumerate_block(size, max_len, max_part, first)


def enumerate_bounded(size: int, max_len: int) -> Iterator[Partition]:
    """Partitions of ``size`` into at most ``max_len`` parts, lexicographically decreasing.

    >>> [tuple(p) for p in enumerate_bounded(4, 3)]
    [(4,), (3, 1), (2, 2), (2, 1, 1)]
    """
    return enumerate_partitions(size, max_len)


def enumerate_in_rectangle(size: int, rect: Rectangle) -> Iterator[Partition]:
    """Partitions of ``size`` that fit inside ``rect``."""
    if size > rect.area:
        return iter(())
    return enumerate_partitions(size, rect.rows, rect.cols)


def complement(mu: Partition, rect: Rectangle) -> Partition:
    """The complement (q - mu_d, ..., q - mu_1) of ``mu`` inside R(d, q)."""
    if not contains(rect, mu):
        raise ContainmentError(f"{tuple(mu)} does not fit in R({rect.rows},{rect.cols})")
    q = rect.cols
    padded = Partition.padded(mu, rect.rows)
    parts = tuple(q - p for p in reversed(padded))
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return Partition._trusted(parts[:end])


def is_self_complementary(mu: Partition, rect: Rectangle) -> bool:
    return complement(mu, rect) == mu
