"""Seeded generators for pure states, Haar unitaries, and fixed-rank
density matrices.

The stream is pinned: PCG64 (numpy's default bit generator) drives an
explicit Box-Muller transform, so outputs depend only on the seed and
never on the platform's normal sampler.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import DensityMatrix, PureState, Unitary, numerical_rank
from .errors import RankOutOfRangeError, SamplingExhaustedError

MAX_TRIES = 1000


@dataclass(frozen=True)
class SamplerConfig:
    """Seed plus target shape for one draw."""

    seed: int
    n: int
    mu: Optional[int] = None

    def __post_init__(self):
        if self.mu is not None and not 1 <= self.mu <= self.n:
            raise RankOutOfRangeError(f"need 1 <= mu <= n, got n={self.n}, mu={self.mu}")


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def standard_normal(rng: np.random.Generator, count: int) -> np.ndarray:
    """Box-Muller normals over the uniform stream of ``rng``."""
    half = (count + 1) // 2
    # 1 - u keeps the log argument strictly positive
    u1 = 1.0 - rng.random(half)
    u2 = rng.random(half)
    radius = np.sqrt(-2.0 * np.log(u1))
    angle = 2.0 * np.pi * u2
    out = np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])
    return out[:count]


def complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard complex Gaussian array, unit variance per entry."""
    count = int(np.prod(shape))
    re = standard_normal(rng, count)
    im = standard_normal(rng, count)
    return ((re + 1.0j * im) / np.sqrt(2.0)).reshape(shape)


def random_pure(dim: int, seed) -> PureState:
    """Ray-uniform pure state on a bipartite space of total dimension ``dim``.

    ``dim`` must be a perfect square (the state lives on A (x) B with
    equal sides).
    """
    if dim < 1:
        raise RankOutOfRangeError(f"dim = {dim}")
    rng = _rng(seed)
    g = complex_normal(rng, dim)
    return PureState(g / np.linalg.norm(g))


def random_unitary(n: int, seed) -> Unitary:
    """Haar unitary via QR of a complex Gaussian with phase-fixed diagonal."""
    if n < 1:
        raise RankOutOfRangeError(f"n = {n}")
    rng = _rng(seed)
    g = complex_normal(rng, (n, n))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    return Unitary(q)


def _density_draw(rng, n: int, mu: int) -> np.ndarray:
    g = complex_normal(rng, (n, mu))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / float(np.trace(rho).real)


def random_density(n: int, mu: int, seed) -> DensityMatrix:
    """Rank-mu density matrix, rho = G G^dag / tr for Gaussian G (n x mu)."""
    if not 1 <= mu <= n:
        raise RankOutOfRangeError(f"need 1 <= mu <= n, got n={n}, mu={mu}")
    rng = _rng(seed)
    for _ in range(MAX_TRIES):
        rho = _density_draw(rng, n, mu)
        if numerical_rank(np.linalg.eigvalsh(rho), 1e-9) == mu:
            return DensityMatrix(rho)
    raise SamplingExhaustedError(f"no rank-{mu} draw in {MAX_TRIES} tries")


def random_generic_density(
    n: int, mu: int, seed, gap: float = 1e-3, max_tries: int = MAX_TRIES
) -> DensityMatrix:
    """Rank-mu density matrix whose nonzero eigenvalues are pairwise at
    least ``gap`` apart (and at least ``gap`` above the zero block when
    mu < n), suitable for tangent-space checks."""
    if not 1 <= mu <= n:
        raise RankOutOfRangeError(f"need 1 <= mu <= n, got n={n}, mu={mu}")
    rng = _rng(seed)
    for _ in range(max_tries):
        rho = _density_draw(rng, n, mu)
        lam = np.linalg.eigvalsh(rho)[::-1]
        top = lam[:mu]
        if mu > 1 and float(np.min(top[:-1] - top[1:])) < gap:
            continue
        if mu < n and top[-1] < gap:
            continue
        return DensityMatrix(rho)
    raise SamplingExhaustedError(
        f"no generic rank-{mu} spectrum with gap {gap:g} in {max_tries} tries"
    )
