"""Core matrix types, validation, and spectral utilities.

Conventions shared by the whole package:

* matrices are dense ``complex128`` numpy arrays,
* a density matrix is Hermitian, positive semidefinite, with unit trace,
* eigenvalues are reported in descending order,
* every eigenvector carries a fixed phase (its first component of
  modulus above ``PHASE_EPS`` is made real and positive), and vectors
  inside a degenerate eigenvalue cluster are ordered by descending
  lexicographic comparison of their real parts.

The phase and ordering rules make repeated decompositions of identical
input bit-identical, which the golden fixtures rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import (
    DecompositionFailureError,
    DimensionMismatchError,
    NotFiniteError,
    NotHermitianError,
    NotNormalizedError,
    NotPositiveError,
    NotSquareError,
    NotUnitaryError,
    TraceNotOneError,
)

#: default relative tolerance for rank decisions
RANK_TOL = 1e-9

#: vector components at or below this modulus are skipped by the phase rule
PHASE_EPS = 1e-8

#: eigenvalues closer than this form one degenerate cluster
CLUSTER_GAP = 1e-10

#: default tolerance for the validation entry points
VALIDATION_TOL = 1e-10


def _frozen(a, dtype=complex) -> np.ndarray:
    out = np.array(a, dtype=dtype)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive semidefinite matrix of unit trace.

    Instances are meant to be produced by :func:`validate_density` or by
    the operations in this package, all of which establish the
    invariants; the constructor itself only freezes the array.
    """

    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen(self.matrix))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class PureState:
    """State vector on a bipartite system A (x) B with dim A = dim B = N.

    The amplitude of ``|i_A>|j_B>`` sits at flat index ``i*N + j``, so the
    amplitudes reshape row-major into the N x N coefficient matrix C with
    ``C[i, j]`` equal to that amplitude.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "amplitudes", _frozen(self.amplitudes))
        n = isqrt(self.amplitudes.size)
        if n * n != self.amplitudes.size:
            raise NotSquareError(
                f"amplitude count {self.amplitudes.size} is not a perfect square"
            )

    @property
    def n(self) -> int:
        return isqrt(self.amplitudes.size)

    def coefficient_matrix(self) -> np.ndarray:
        """Return the N x N matrix C with C[i, j] = amplitude of |i_A>|j_B>."""
        n = self.n
        return self.amplitudes.reshape(n, n)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (descending) with paired orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues", _frozen(self.eigenvalues, dtype=float))
        object.__setattr__(self, "eigenvectors", _frozen(self.eigenvectors))

    @property
    def n(self) -> int:
        return self.eigenvalues.size

    def reconstruct(self) -> np.ndarray:
        """Return sum_i lambda_i v_i v_i^dag as a plain array."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


@dataclass(frozen=True)
class Unitary:
    """Square matrix with U^dag U = I within validation tolerance."""

    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen(self.matrix))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


def _require_finite(a: np.ndarray):
    if not np.all(np.isfinite(a)):
        raise NotFiniteError("entries must be finite (no NaN or Inf)")


def _eigh(m: np.ndarray):
    try:
        return np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise DecompositionFailureError(str(exc)) from exc


def check_density(m: np.ndarray, tol: float, psd_tol: float | None = None):
    """Run the density-matrix checks on a raw array without transforming it.

    Parameters
    ----------
    m : np.ndarray
        Square complex matrix.
    tol : float
        Tolerance applied to the Hermiticity and trace checks.
    psd_tol : float, optional
        Tolerance for the positivity check (how far below zero the
        smallest eigenvalue may sit); defaults to ``tol``.

    Raises
    ------
    NotSquareError, NotFiniteError, NotHermitianError, TraceNotOneError,
    NotPositiveError
        On the first failed check, in that order.
    """
    if psd_tol is None:
        psd_tol = tol
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSquareError(f"shape {m.shape}")
    _require_finite(m)
    herm_dev = float(np.max(np.abs(m - m.conj().T)))
    if herm_dev > tol:
        raise NotHermitianError(herm_dev)
    trace = complex(np.trace(m))
    if abs(trace - 1.0) > tol:
        raise TraceNotOneError(trace)
    try:
        smallest = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T))[0])
    except np.linalg.LinAlgError as exc:
        raise DecompositionFailureError(str(exc)) from exc
    if smallest < -psd_tol:
        raise NotPositiveError(smallest)


def validate_density(m, tol: float = VALIDATION_TOL) -> DensityMatrix:
    """Check and normalize a raw matrix into a :class:`DensityMatrix`.

    The input must be square, Hermitian within ``tol``, have trace within
    ``tol`` of one, and have no eigenvalue below ``-tol``.  The returned
    matrix is symmetrized as ``(M + M^dag)/2`` and trace-renormalized, so
    values that pass the checks only approximately are repaired rather
    than rejected.

    Parameters
    ----------
    m : array_like
        Square complex matrix.
    tol : float
        Validation tolerance.

    Returns
    -------
    DensityMatrix
    """
    a = np.asarray(m, dtype=complex)
    check_density(a, tol)
    h = 0.5 * (a + a.conj().T)
    tr = float(np.trace(h).real)
    # skip the division when the trace is already exact so that parsing an
    # emitted document reproduces the stored array bit for bit
    if tr != 1.0:
        h = h / tr
    return DensityMatrix(h)


def make_pure_state(amplitudes, tol: float = 1e-12) -> PureState:
    """Wrap a complex vector as a :class:`PureState` after a norm check.

    The vector is not renormalized; callers that construct states
    analytically should normalize first.
    """
    a = np.asarray(amplitudes, dtype=complex).reshape(-1)
    _require_finite(a)
    nrm = float(np.linalg.norm(a))
    if abs(nrm - 1.0) > tol:
        raise NotNormalizedError(f"norm = {nrm!r}")
    return PureState(a)


def make_unitary(matrix, tol: float = VALIDATION_TOL) -> Unitary:
    """Wrap a square matrix as a :class:`Unitary` after checking U^dag U = I."""
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquareError(f"shape {a.shape}")
    _require_finite(a)
    dev = float(np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0]))))
    if dev > tol:
        raise NotUnitaryError(f"max |U^dag U - I| = {dev:.3e}")
    return Unitary(a)


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    out = vectors.copy()
    for k in range(out.shape[1]):
        col = out[:, k]
        significant = np.flatnonzero(np.abs(col) > PHASE_EPS)
        if significant.size == 0:
            continue
        pivot = col[significant[0]]
        out[:, k] = col * (pivot.conjugate() / abs(pivot))
    return out


def _order_degenerate_clusters(values: np.ndarray, vectors: np.ndarray):
    # clusters are maximal runs of descending eigenvalues whose consecutive
    # gaps stay below CLUSTER_GAP; inside a cluster any basis is as good as
    # any other, so pick the one with descending lexicographic real parts.
    # Only the vectors move: the values stay exactly descending, and the
    # pairing error this can introduce is bounded by the cluster spread.
    n = values.size
    order = list(range(n))
    start = 0
    for stop in range(1, n + 1):
        if stop == n or values[stop - 1] - values[stop] >= CLUSTER_GAP:
            if stop - start > 1:
                block = sorted(
                    order[start:stop],
                    key=lambda k: tuple(vectors[:, k].real),
                    reverse=True,
                )
                order[start:stop] = block
            start = stop
    return values, vectors[:, order]


def spectral_decompose(rho: DensityMatrix) -> SpectralDecomposition:
    """Eigendecompose a density matrix under the package conventions.

    Eigenvalues come out descending; eigenvectors get the deterministic
    phase fix, and degenerate clusters are reordered as described in the
    module docstring.  Calling this twice on the same input yields
    bit-identical results.

    Parameters
    ----------
    rho : DensityMatrix

    Returns
    -------
    SpectralDecomposition
    """
    values, vectors = _eigh(rho.matrix)
    values = values[::-1].copy()
    vectors = vectors[:, ::-1]
    vectors = _fix_phases(vectors)
    values, vectors = _order_degenerate_clusters(values, vectors)
    return SpectralDecomposition(values, vectors)


def numerical_rank(values, tol: float = RANK_TOL) -> int:
    """Count entries above the relative threshold ``tol * max(largest, 1)``.

    Works for eigenvalue and singular-value vectors alike.  The floor of
    one in the threshold keeps the cutoff meaningful for spectra that sum
    to unity; an all-zero vector has rank 0.
    """
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        return 0
    threshold = tol * max(float(v.max()), 1.0)
    return int(np.count_nonzero(v > threshold))


def ray_distance(psi: PureState, phi: PureState) -> float:
    """Distance between the rays of two unit vectors, in [0, 1].

    Equals ``sqrt(1 - |<psi|phi>|^2)``, evaluated as the norm of
    ``phi - <psi|phi> psi``.  The two expressions agree exactly in
    arithmetic; the residual form avoids the cancellation that caps the
    naive one near ``sqrt(eps)`` for nearly identical rays, and it is
    zero precisely when the states agree up to a global phase.
    """
    if psi.amplitudes.size != phi.amplitudes.size:
        raise DimensionMismatchError(
            f"state dimensions {psi.amplitudes.size} and {phi.amplitudes.size}"
        )
    overlap = np.vdot(psi.amplitudes, phi.amplitudes)
    residual = float(np.linalg.norm(phi.amplitudes - overlap * psi.amplitudes))
    return min(max(residual, 0.0), 1.0)
