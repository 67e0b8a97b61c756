"""Log-space asymptotics and convergence ladders.

Everything here works with natural logarithms; values are exponentiated
only when a ratio is reported.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .dims import dim_rectangle, log_dim
from .errors import DomainError
from .mehta import regev_lemma_rhs
from .partitions import Partition
from .sums import SumSpec, mixed_sum, mixed_sum_exact, s_beta, s_exact, s_power_exact

LOG_2PI = math.log(2 * math.pi)
CSV_SCHEMA = "# schema=1"
CSV_COLUMNS = ("n", "lhs_log", "limit_log", "ratio", "abs_err")


@dataclass(frozen=True)
class Deviation:
    """Scaled row deviations y_1 > ... > y_d with zero sum."""

    y: tuple

    def __post_init__(self):
        y = tuple(float(v) for v in self.y)
        object.__setattr__(self, "y", y)
        if not y:
            raise DomainError("deviation needs at least one coordinate")
        _check_ordered(y)
        if abs(math.fsum(y)) > 1e-12:
            raise DomainError(f"deviations must sum to zero, got {math.fsum(y)!r}")

    @property
    def d(self) -> int:
        return len(self.y)

    def reflected(self) -> "Deviation":
        """(-y_d, ..., -y_1)."""
        return Deviation(tuple(-v for v in reversed(self.y)))


def _check_ordered(y: Sequence[float]) -> None:
    for a, b in zip(y, y[1:]):
        if not a > b:
            raise DomainError(f"coordinates must be strictly decreasing: {tuple(y)}")


def energy_w(dev) -> float:
    """Coulomb-gas energy 1/2 sum y_i^2 - sum_{i<j} log(y_i - y_j)."""
    y = dev.y if isinstance(dev, Deviation) else tuple(float(v) for v in dev)
    _check_ordered(y)
    out = 0.5 * math.fsum(v * v for v in y)
    for i in range(len(y)):
        for j in range(i + 1, len(y)):
            out -= math.log(y[i] - y[j])
    return out


def log_c(d: int, n: int) -> float:
    """log of C_{d,dn} = (2 pi)^{d/2} n^{dn + d(d+1)/4} / (Gamma(dn+1) e^{dn})."""
    return (0.5 * d * LOG_2PI
            + (d * n + d * (d + 1) / 4) * math.log(n)
            - math.lgamma(d * n + 1)
            - d * n)


def lattice_diagram(d: int, n: int, dev: Deviation) -> Partition:
    """The partition of dn nearest to (n + y_1 sqrt n, ..., n + y_d sqrt n).

    Rows 1..d-1 are rounded half-up; the last row takes the remainder so the
    size is exactly dn.
    """
    if dev.d != d:
        raise DomainError(f"deviation has {dev.d} coordinates, expected {d}")
    root = math.sqrt(n)
    rows = [n + math.floor(v * root + 0.5) for v in dev.y[:-1]]
    rows.append(d * n - sum(rows))
    if rows[-1] < 0:
        raise DomainError(f"rounded diagram has a negative row: {rows}")
    for a, b in zip(rows, rows[1:]):
        if not a > b:
            raise DomainError(f"rounded rows tie or invert at n={n}: {rows}")
    return Partition(rows)


def log_scaled_dim(d: int, n: int, dev: Deviation) -> float:
    return log_c(d, n) + log_dim(lattice_diagram(d, n, dev), d)


def scaled_dim(d: int, n: int, dev: Deviation) -> float:
    """C_{d,dn} dim(n + y sqrt n); tends to exp(-W(y)) as n grows."""
    return math.exp(log_scaled_dim(d, n, dev))


def _log_superfactorial(d: int) -> float:
    # log prod_{i=1..d} Gamma(i)
    return math.fsum(math.lgamma(i) for i in range(1, d + 1))


def rect_asym(d: int, q: int) -> float:
    """log of the Stirling asymptote of dim R(d, q)."""
    if q < 1:
        raise DomainError("rect_asym needs q >= 1")
    return (0.5 * (1 - d) * LOG_2PI + _log_superfactorial(d)
            + (d * q + 0.5) * math.log(d) + 0.5 * (1 - d * d) * math.log(q))


def regev_asym(d: int, N: int) -> float:
    """log of Regev's asymptote for S(d, N)."""
    if N < 1:
        raise DomainError("regev_asym needs N >= 1")
    return (0.5 * (1 - d) * LOG_2PI + _log_superfactorial(d)
            + (2 * N + 0.5 * d * d) * math.log(d) + 0.5 * (1 - d * d) * math.log(2 * N))


def riemann_lhs(d: int, n: int, beta: float, workers: int = 1) -> float:
    """log of n^{-(d-1)/2} C_{d,dn}^beta S(d, dn; beta)."""
    return (-0.5 * (d - 1) * math.log(n) + beta * log_c(d, n)
            + s_beta(d, n, beta, workers).log_value)


@dataclass(frozen=True)
class ConvergenceRow:
    """One rung of a convergence ladder.

    ``lhs`` and ``limit`` are natural logs, ``ratio`` is exp(lhs - limit) and
    ``abs_err`` is |lhs - limit|.  When both sides are exact integers the
    ratio and error are taken from the integers, so differences far below
    float resolution of the logs survive.
    """

    n: int
    lhs: float
    limit: float
    ratio: float
    abs_err: float

    def as_csv(self) -> list:
        return [self.n, repr(self.lhs), repr(self.limit), repr(self.ratio), repr(self.abs_err)]


KINDS = ("main", "regev", "lemma", "riemann", "theorem6")


def _row(n: int, lhs: float, limit: float) -> ConvergenceRow:
    return ConvergenceRow(n, lhs, limit, math.exp(lhs - limit), abs(lhs - limit))


def _exact_row(n: int, a: int, b: int) -> ConvergenceRow:
    return ConvergenceRow(n, math.log(a), math.log(b), a / b, abs(math.log1p((a - b) / b)))


def _is_int(x: float) -> bool:
    return float(x).is_integer()


def convergence_table(kind: str, d: int, ladder: Iterable[int], *, beta: float = 2.0,
                      alpha: float = 1.0, dev: Deviation | None = None,
                      workers: int = 1) -> list[ConvergenceRow]:
    """Evaluate one asymptotic statement along a ladder of n.

    kind      lhs                         limit
    main      log S(d, dn)                log dim R(d, 2n)
    regev     log S(d, N)  (ladder is N)  regev_asym(d, N)
    lemma     log scaled_dim(d, n, dev)   -W(dev)
    riemann   riemann_lhs(d, n, beta)     log of the Omega integral (closed form)
    theorem6  log S(d, dn; beta)          log mixed_sum(d, n, (alpha, beta))

    ``main`` and integer-exponent ``theorem6`` ladders are computed exactly.
    """
    rows = []
    ladder = sorted(int(n) for n in ladder)
    if kind == "main":
        for n in ladder:
            rows.append(_exact_row(n, s_exact(d, d * n, workers), dim_rectangle(d, 2 * n)))
    elif kind == "regev":
        for N in ladder:
            rows.append(_row(N, math.log(s_exact(d, N, workers)), regev_asym(d, N)))
    elif kind == "lemma":
        if dev is None:
            raise DomainError("kind 'lemma' needs a deviation")
        limit = -energy_w(dev)
        for n in ladder:
            rows.append(_row(n, log_scaled_dim(d, n, dev), limit))
    elif kind == "riemann":
        limit = regev_lemma_rhs(d, beta)
        for n in ladder:
            rows.append(_row(n, riemann_lhs(d, n, beta, workers), limit))
    elif kind == "theorem6":
        spec = SumSpec(alpha, beta)
        exact = _is_int(alpha) and _is_int(beta)
        for n in ladder:
            if exact:
                a = s_power_exact(d, d * n, int(beta), workers)
                b = mixed_sum_exact(d, n, int(alpha), int(beta), workers)
                rows.append(_exact_row(n, a, b))
                continue
            rows.append(_row(n, s_beta(d, n, beta, workers).log_value,
                             mixed_sum(d, n, spec, workers).log_value))
    else:
        raise ValueError(f"unknown kind {kind!r}; choose from {KINDS}")
    return rows


def write_csv(rows: Sequence[ConvergenceRow], out: TextIO) -> None:
    out.write(CSV_SCHEMA + "\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv())


def tail_decreasing(errors: Sequence[float], k: int = 3) -> bool:
    """True when the last ``k`` values are strictly decreasing."""
    tail = list(errors)[-k:]
    return len(tail) == k and all(a > b for a, b in zip(tail, tail[1:]))
