"""First-principles oracles at small N: RSK row insertion, LIS/LDS, brute-force counts."""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from itertools import permutations
from typing import Iterator, Sequence

from .dims import dim_frobenius, dim_rectangle
from .errors import ScaleError
from .partitions import Partition, Rectangle, enumerate_in_rectangle

AVOIDER_GUARD = 9
INVOLUTION_GUARD = 10


def parse_permutation(text: str) -> tuple:
    """Parse one-line notation such as ``"2,1,4,3"`` and check it is a permutation."""
    sigma = tuple(int(tok) for tok in text.split(",") if tok.strip())
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"not a permutation of 1..{len(sigma)}: {text!r}")
    return sigma


def rsk_shape(sigma: Sequence[int]) -> Partition:
    """Shape of the insertion tableau from Schensted row insertion of ``sigma``."""
    rows: list[list[int]] = []
    for x in sigma:
        for row in rows:
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                break
            row[k], x = x, row[k]
        else:
            rows.append([x])
    return Partition._trusted(tuple(len(r) for r in rows))


def lis(sigma: Sequence[int]) -> int:
    """Longest strictly increasing subsequence, by patience sorting."""
    tails: list = []
    for x in sigma:
        k = bisect_left(tails, x)
        if k == len(tails):
            tails.append(x)
        else:
            tails[k] = x
    return len(tails)


def lds(sigma: Sequence[int]) -> int:
    """Longest strictly decreasing subsequence."""
    return lis([-x for x in sigma])


def count_avoiders_bruteforce(d: int, N: int, guard: int = AVOIDER_GUARD) -> int:
    """Number of permutations of 1..N whose longest decreasing subsequence is at most d."""
    if N > guard:
        raise ScaleError(f"brute force over S_{N} exceeds the guard N <= {guard}")
    return sum(1 for sigma in permutations(range(1, N + 1)) if lds(sigma) <= d)


def lds_histogram(N: int, guard: int = AVOIDER_GUARD) -> Counter:
    """Counts of permutations of 1..N by longest decreasing subsequence."""
    if N > guard:
        raise ScaleError(f"brute force over S_{N} exceeds the guard N <= {guard}")
    return Counter(lds(sigma) for sigma in permutations(range(1, N + 1)))


def involutions(m: int) -> Iterator[tuple]:
    """All involutions of 1..m in one-line notation, built as partial matchings."""
    image = [0] * (m + 1)

    def build(free: list) -> Iterator[tuple]:
        if not free:
            yield tuple(image[1:])
            return
        i, rest = free[0], free[1:]
        image[i] = i
        yield from build(rest)
        for k, j in enumerate(rest):
            image[i], image[j] = j, i
            yield from build(rest[:k] + rest[k + 1:])
        image[i] = 0

    yield from build(list(range(1, m + 1)))


def count_involutions(d: int, n: int, mode: str = "bruteforce", guard: int = INVOLUTION_GUARD) -> int:
    """Involutions of 1..2dn with LDS exactly d and LIS exactly 2n.

    ``mode="bruteforce"`` enumerates the involutions; ``mode="formula"``
    sums dim(lam) over shapes lam |- 2dn with exactly d rows and first row 2n.
    """
    m = 2 * d * n
    if mode == "bruteforce":
        if m > guard:
            raise ScaleError(f"involutions of S_{m} exceed the guard 2dn <= {guard}")
        return sum(1 for s in involutions(m) if lds(s) == d and lis(s) == 2 * n)
    if mode == "formula":
        rect = Rectangle(d, 2 * n)
        shapes = [lam for lam in enumerate_in_rectangle(m, rect)
                  if len(lam) == d and lam[0] == 2 * n]
        # d rows of length <= 2n holding 2dn cells forces every row to be full
        if shapes != [rect.as_partition()]:
            raise AssertionError(f"unexpected shapes {shapes} for (d, n) = ({d}, {n})")
        total = sum(dim_frobenius(lam, d) for lam in shapes)
        if total != dim_rectangle(d, 2 * n):
            raise AssertionError("formula-mode involution count disagrees with dim R(d, 2n)")
        return total
    raise ValueError(f"unknown mode {mode!r}")
