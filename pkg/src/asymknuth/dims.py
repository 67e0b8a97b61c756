"""Dimensions of Young diagrams: the number of standard Young tableaux.

``dim_frobenius`` is the production path (Frobenius' determinantal
formula over exact integers).  ``dim_hook`` is an independent cross-check
via the hook-length product.  ``log_dim`` evaluates the same Frobenius
expression with log-gamma for the asymptotic code.
"""
from __future__ import annotations

import math
import threading

import numpy as np
from scipy.special import gammaln

from .errors import InexactDivisionError, LengthError


class FactorialTable:
    """Grow-only table of exact factorials; safe for concurrent readers."""

    def __init__(self, upto: int = 64):
        self._table = [1]
        self._lock = threading.Lock()
        self.ensure(upto)

    def ensure(self, m: int) -> None:
        if m < len(self._table):
            return
        with self._lock:
            if m < len(self._table):
                return
            # build a new list and swap it in so readers never see a partial one
            grown = list(self._table)
            for k in range(len(grown), m + 1):
                grown.append(grown[-1] * k)
            self._table = grown

    def __getitem__(self, m: int) -> int:
        table = self._table
        if m >= len(table):
            self.ensure(max(m, 2 * len(table)))
            table = self._table
        return table[m]


FACTORIALS = FactorialTable()


def _check_len(lam, d: int) -> None:
    if len(lam) > d:
        raise LengthError(f"partition {tuple(lam)} has more than {d} rows")


def _vandermonde(rows) -> int:
    # product of (l_i - l_j) over i < j for the shifted rows l_i = lambda_i + d - i
    prod = 1
    d = len(rows)
    for i in range(d):
        ri = rows[i]
        for j in range(i + 1, d):
            prod *= ri - rows[j]
    return prod


def dim_frobenius(lam, d: int | None = None) -> int:
    """Exact dim(lam) by Frobenius' formula with ``lam`` zero-padded to ``d`` rows."""
    if d is None:
        d = len(lam)
    _check_len(lam, d)
    parts = tuple(lam) + (0,) * (d - len(lam))
    size = sum(parts)
    # shifted rows l_i = lambda_i + d - i (1-based i), so Gamma(l_i + 1) = l_i!
    shifted = [p + d - 1 - i for i, p in enumerate(parts)]
    fact = FACTORIALS
    num = fact[size] * _vandermonde(shifted)
    den = 1
    for s in shifted:
        den *= fact[s]
    q, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f"Frobenius division inexact for {parts}")
    return q


def dim_hook(lam) -> int:
    """Exact dim(lam) as |lam|! divided by the product of hook lengths."""
    parts = tuple(lam)
    if not parts:
        return 1
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0])]
    hooks = 1
    for i, p in enumerate(parts):
        for j in range(p):
            hooks *= (p - j - 1) + (conj[j] - i - 1) + 1
    q, r = divmod(math.factorial(sum(parts)), hooks)
    if r:
        raise InexactDivisionError(f"hook-length division inexact for {parts}")
    return q


def dim_rectangle(d: int, q: int) -> int:
    """Exact dim R(d, q) = (dq)! / prod_{i=1..d} ((q+i-1)!/(i-1)!)."""
    fact = FACTORIALS
    den = 1
    for i in range(1, d + 1):
        den *= fact[q + i - 1] // fact[i - 1]
    num, r = divmod(fact[d * q], den)
    if r:
        raise InexactDivisionError(f"rectangle division inexact for R({d},{q})")
    return num


def log_dim(lam, d: int | None = None) -> float:
    """Natural log of dim(lam), via log-gamma."""
    if d is None:
        d = len(lam)
    _check_len(lam, d)
    parts = tuple(lam) + (0,) * (d - len(lam))
    shifted = [p + d - 1 - i for i, p in enumerate(parts)]
    out = math.lgamma(sum(parts) + 1)
    for s in shifted:
        out -= math.lgamma(s + 1)
    for i in range(d):
        for j in range(i + 1, d):
            out += math.log(shifted[i] - shifted[j])
    return out


def log_dims_array(rows: np.ndarray, size: int) -> np.ndarray:
    """Vectorised ``log_dim`` for an (m, d) integer array of padded partitions of ``size``."""
    rows = np.asarray(rows, dtype=np.float64)
    m, d = rows.shape
    shifted = rows + (d - 1 - np.arange(d, dtype=np.float64))
    out = np.full(m, math.lgamma(size + 1))
    out -= gammaln(shifted + 1.0).sum(axis=1)
    for i in range(d):
        for j in range(i + 1, d):
            out += np.log(shifted[:, i] - shifted[:, j])
    return out
