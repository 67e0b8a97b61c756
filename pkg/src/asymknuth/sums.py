"""Partition sums: S(d, N), the rectangle decomposition, E(d, n), beta-sums.

Exact sums are Python integers.  Real-exponent sums are returned as
:class:`LogReal`.  Every sum is split into blocks by the first part of the
partition; blocks are evaluated in order (optionally in worker processes)
and merged in that same order, so the result does not depend on the worker
count.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .dims import dim_frobenius, log_dims_array
from .errors import InexactDivisionError, SpecError
from .partitions import (
    Rectangle,
    complement,
    enumerate_block,
    first_parts,
)


@dataclass(frozen=True)
class LogReal:
    """A nonnegative real stored as its natural log; ``-inf`` encodes zero."""

    log_value: float

    @classmethod
    def zero(cls) -> "LogReal":
        return cls(-math.inf)

    @classmethod
    def from_int(cls, k: int) -> "LogReal":
        if k < 0:
            raise ValueError("LogReal holds nonnegative values only")
        return cls(math.log(k)) if k else cls.zero()

    @property
    def is_zero(self) -> bool:
        return self.log_value == -math.inf

    def __add__(self, other: "LogReal") -> "LogReal":
        return LogReal(float(np.logaddexp(self.log_value, other.log_value)))

    def __mul__(self, other: "LogReal") -> "LogReal":
        if self.is_zero or other.is_zero:
            return LogReal.zero()
        return LogReal(self.log_value + other.log_value)

    def __pow__(self, beta: float) -> "LogReal":
        return LogReal.zero() if self.is_zero else LogReal(beta * self.log_value)

    def __float__(self) -> float:
        return math.exp(self.log_value)


@dataclass(frozen=True)
class SumSpec:
    """Exponents of the mixed sum: (dim mu)^alpha (dim mu*)^(beta - alpha)."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not self.beta > 0:
            raise SpecError(f"beta must be positive, got {self.beta}")
        if not 0 <= self.alpha <= self.beta:
            raise SpecError(f"need 0 <= alpha <= beta, got alpha={self.alpha}, beta={self.beta}")


def log_sum_exp(x: np.ndarray) -> float:
    """Max-shifted log-sum-exp; numpy's pairwise summation fixes the reduction order."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    if x.size == 0:
        return -math.inf
    m = float(x.max())
    if m == -math.inf:
        return m
    return m + math.log(float(np.sum(np.exp(x - m))))


def _run_blocks(fn: Callable, jobs: Sequence[tuple], workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*jobs)))


# --- block kernels (module level so worker processes can pickle them) ---

def _block_power_exact(d: int, size: int, max_part, first: int, power: int) -> int:
    total = 0
    for lam in enumerate_block(size, d, max_part, first):
        total += dim_frobenius(lam, d) ** power
    return total


def _block_rows(d: int, size: int, max_part, first: int) -> np.ndarray:
    rows = [lam.padded(d) for lam in enumerate_block(size, d, max_part, first)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), d)


def _block_log_dims(d: int, size: int, max_part, first: int) -> np.ndarray:
    rows = _block_rows(d, size, max_part, first)
    if size == 0:
        return np.zeros(len(rows))
    return log_dims_array(rows, size)


def _block_mixed_terms(d: int, q: int, size: int, first: int, alpha: float, beta: float) -> np.ndarray:
    rows = _block_rows(d, size, q, first)
    if size == 0:
        return np.zeros(len(rows))
    comp = q - rows[:, ::-1]
    terms = alpha * log_dims_array(rows, size)
    if beta != alpha:
        terms = terms + (beta - alpha) * log_dims_array(comp, size)
    return terms


def _block_mixed_exact(d: int, q: int, size: int, first: int, alpha: int, beta: int) -> int:
    rect = Rectangle(d, q)
    total = 0
    for mu in enumerate_block(size, d, q, first):
        term = dim_frobenius(mu, d) ** alpha
        if beta != alpha:
            term *= dim_frobenius(complement(mu, rect), d) ** (beta - alpha)
        total += term
    return total


def _block_decomposition(d: int, q: int, size: int, first: int) -> tuple:
    """(sum of dim mu * dim mu*, sum of (dim mu - dim mu*)^2) over one block."""
    rect = Rectangle(d, q)
    cross = 0
    diff_sq = 0
    for mu in enumerate_block(size, d, q, first):
        a = dim_frobenius(mu, d)
        b = dim_frobenius(complement(mu, rect), d)
        cross += a * b
        diff_sq += (a - b) ** 2
    return cross, diff_sq


# --- public sums ---

def s_power_exact(d: int, N: int, power: int = 2, workers: int = 1) -> int:
    """Exact sum of (dim lam)^power over lam |- N with at most d rows."""
    jobs = [(d, N, None, f, power) for f in first_parts(N, d)]
    return sum(_run_blocks(_block_power_exact, jobs, workers))


def s_exact(d: int, N: int, workers: int = 1) -> int:
    """S(d, N): permutations of N with no decreasing subsequence of length d + 1.

    Counted through RSK as the sum of (dim lam)^2 over lam |- N with at most d rows.
    """
    return s_power_exact(d, N, 2, workers)


def _decomposition_parts(d: int, n: int, workers: int) -> tuple:
    q, size = 2 * n, d * n
    jobs = [(d, q, size, f) for f in first_parts(size, d, q)]
    blocks = _run_blocks(_block_decomposition, jobs, workers)
    return sum(b[0] for b in blocks), sum(b[1] for b in blocks)


def rectangle_decomposition(d: int, n: int, workers: int = 1) -> int:
    """Sum over mu |- dn inside R(d, 2n) of dim(mu) * dim(mu*); equals dim R(d, 2n)."""
    return _decomposition_parts(d, n, workers)[0]


def error_term(d: int, n: int, workers: int = 1) -> int:
    """E(d, n) with S(d, dn) = dim R(d, 2n) + E(d, n).

    Half the squared dimension mismatch between each mu inside R(d, 2n) and
    its complement, plus the squared dimensions of the diagrams that
    overflow the rectangle's first row.
    """
    _, diff_sq = _decomposition_parts(d, n, workers)
    if diff_sq % 2:
        raise InexactDivisionError(f"odd mismatch sum {diff_sq} for (d, n) = ({d}, {n})")
    size, q = d * n, 2 * n
    overflow_jobs = [(d, size, None, f, 2) for f in first_parts(size, d) if f > q]
    overflow = sum(_run_blocks(_block_power_exact, overflow_jobs, workers))
    return diff_sq // 2 + overflow


def s_beta(d: int, n: int, beta: float, workers: int = 1) -> LogReal:
    """S(d, dn; beta) = sum of (dim lam)^beta over lam |- dn with at most d rows."""
    if not beta > 0:
        raise SpecError(f"beta must be positive, got {beta}")
    size = d * n
    jobs = [(d, size, None, f) for f in first_parts(size, d)]
    logs = np.concatenate(_run_blocks(_block_log_dims, jobs, workers))
    return LogReal(log_sum_exp(beta * logs))


def mixed_sum(d: int, n: int, spec: SumSpec, workers: int = 1) -> LogReal:
    """Sum over mu |- dn inside R(d, 2n) of (dim mu)^alpha (dim mu*)^(beta - alpha)."""
    if not isinstance(spec, SumSpec):
        spec = SumSpec(*spec)
    q, size = 2 * n, d * n
    jobs = [(d, q, size, f, spec.alpha, spec.beta) for f in first_parts(size, d, q)]
    terms = np.concatenate(_run_blocks(_block_mixed_terms, jobs, workers))
    return LogReal(log_sum_exp(terms))


def mixed_sum_exact(d: int, n: int, alpha: int, beta: int, workers: int = 1) -> int:
    """Integer-exponent mixed sum evaluated exactly."""
    SumSpec(alpha, beta)
    if int(alpha) != alpha or int(beta) != beta:
        raise SpecError("exact mixed sums need integer exponents")
    q, size = 2 * n, d * n
    jobs = [(d, q, size, f, int(alpha), int(beta)) for f in first_parts(size, d, q)]
    return sum(_run_blocks(_block_mixed_exact, jobs, workers))
