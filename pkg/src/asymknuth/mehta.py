"""Mehta's integral, the ordered zero-sum region integral, and a Monte Carlo check.

The region is Omega_{d-1} = {(y_1..y_{d-1}) : y_1 > ... > y_d}, with
y_d = -(y_1 + ... + y_{d-1}), and the integrand is exp(-beta W(y)).
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import DomainError, SampleError
from .sums import _run_blocks

MIN_SAMPLES = 10_000
BLOCK = 1 << 16
_U64 = (1 << 64) - 1


def mehta_closed(d: int, beta: float) -> float:
    """log Psi(d; beta) from the Dyson-Mehta product formula."""
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    out = 0.5 * d * math.log(2 * math.pi)
    out -= (0.5 * d + beta * d * (d - 1) / 4) * math.log(beta)
    g = math.lgamma(1 + beta / 2)
    out += math.fsum(math.lgamma(1 + i * beta / 2) - g for i in range(1, d + 1))
    return out


def psi2_closed(d: int) -> float:
    """log Psi(d; 2) = log((2 pi)^{d/2} 2^{-d^2/2} prod_{i=1..d+1} Gamma(i))."""
    return (0.5 * d * math.log(2 * math.pi) - 0.5 * d * d * math.log(2)
            + math.fsum(math.lgamma(i) for i in range(1, d + 2)))


def regev_lemma_rhs(d: int, beta: float) -> float:
    """log of the Omega integral: Psi(d; beta) sqrt(beta / (2 pi d)) / d!."""
    return (mehta_closed(d, beta) + 0.5 * math.log(beta / (2 * math.pi * d))
            - math.lgamma(d + 1))


@dataclass(frozen=True)
class Estimate:
    mean: float
    std_error: float
    samples: int
    seed: int

    def z_score(self, target: float) -> float:
        return (self.mean - target) / self.std_error if self.std_error > 0 else math.inf

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def _log_weights(y: np.ndarray, beta: float) -> np.ndarray:
    """-beta W(y) for ordered rows, -inf elsewhere."""
    gaps = y[:, :-1] - y[:, 1:]
    ordered = np.all(gaps > 0, axis=1)
    d = y.shape[1]
    logvan = np.zeros(len(y))
    for i in range(d):
        for j in range(i + 1, d):
            diff = y[:, i] - y[:, j]
            logvan += np.log(np.where(ordered, diff, 1.0))
    energy = 0.5 * np.sum(y * y, axis=1) - logvan
    return np.where(ordered, -beta * energy, -np.inf)


def _mc_block(d: int, beta: float, seed: int, index: int, size: int, var: float) -> tuple:
    rng = np.random.Generator(np.random.Philox(key=np.array([seed & _U64, index], dtype=np.uint64)))
    sd = math.sqrt(var)
    z = rng.standard_normal((size, d - 1)) * sd
    y = np.concatenate([z, -z.sum(axis=1, keepdims=True)], axis=1)
    log_q = -0.5 * (d - 1) * math.log(2 * math.pi * var) - np.sum(z * z, axis=1) / (2 * var)
    w = np.exp(_log_weights(y, beta) - log_q)
    mean = float(np.mean(w))
    m2 = float(np.sum((w - mean) ** 2))
    return size, mean, m2


def omega_integral_mc(d: int, beta: float, samples: int, seed: int,
                      proposal_var: float | None = None, workers: int = 1) -> Estimate:
    """Importance-sampling estimate of the integral of exp(-beta W) over Omega_{d-1}.

    Draws (y_1..y_{d-1}) from independent centred Gaussians (variance
    ``1/beta`` unless ``proposal_var`` is given); draws outside the ordered
    region carry zero weight.  Randomness is keyed by (seed, block index) so
    the estimate is identical for any worker count.
    """
    if d < 2:
        raise DomainError("the Monte Carlo estimator needs d >= 2")
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    if samples < MIN_SAMPLES:
        raise SampleError(f"need at least {MIN_SAMPLES} samples, got {samples}")
    var = 1.0 / beta if proposal_var is None else float(proposal_var)
    jobs = []
    for index, start in enumerate(range(0, samples, BLOCK)):
        jobs.append((d, beta, seed, index, min(BLOCK, samples - start), var))
    blocks = _run_blocks(_mc_block, jobs, workers)

    # merge block means and squared deviations (Chan et al.) in block order
    count, mean, m2 = 0, 0.0, 0.0
    for size, b_mean, b_m2 in blocks:
        total = count + size
        delta = b_mean - mean
        mean += delta * size / total
        m2 += b_m2 + delta * delta * count * size / total
        count = total
    variance = m2 / (count - 1)
    return Estimate(mean, math.sqrt(variance / count), count, seed)
