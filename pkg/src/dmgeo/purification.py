"""Purification, partial trace, Schmidt decomposition, and the unitary
connecting two purifications of the same density matrix.

Everything here works through the coefficient matrix C of a bipartite
state (see :class:`~dmgeo.core.PureState`): the partial trace over B is
C C^dag, a local unitary on A maps C to R C, and a local unitary on B
maps C to C v^T.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    RANK_TOL,
    DensityMatrix,
    PureState,
    Unitary,
    _eigh,
    _fix_phases,
    numerical_rank,
    spectral_decompose,
)
from .errors import (
    DecompositionFailureError,
    DimensionMismatchError,
    PartialTraceMismatchError,
)

#: eigenvalues below this (relative to the largest) are treated as exact
#: zeros when purifying; sqrt of eigensolver noise would otherwise inject
#: amplitudes of order 1e-8 into the state
PURIFY_CLAMP = 1e-13

#: relative support cutoff for the connecting-unitary construction; kept
#: far below rank tolerance because excluding a direction with eigenvalue
#: lam costs a residual of order sqrt(lam)
SUPPORT_CUT = 1e-14

#: default entrywise tolerance for the equal-partial-trace precondition
CONNECT_TOL = 1e-8


@dataclass(frozen=True)
class SchmidtDecomposition:
    """Schmidt data of a bipartite pure state.

    ``coefficients`` are the mu strictly positive Schmidt coefficients in
    descending order; ``basis_a`` and ``basis_b`` hold mu orthonormal
    columns each, with the state equal to
    ``sum_k coefficients[k] |basis_a[:,k]> (x) |basis_b[:,k]>``.
    """

    mu: int
    coefficients: np.ndarray
    basis_a: np.ndarray
    basis_b: np.ndarray

    def reconstruct(self) -> PureState:
        c = (self.basis_a * self.coefficients) @ self.basis_b.T
        return PureState(c.reshape(-1))


def purify(rho: DensityMatrix) -> PureState:
    """Canonical purification sum_i sqrt(lam_i) |i_A>|i_B>.

    The A-side vectors are the eigenvectors of ``rho`` under the package
    phase/ordering conventions and the ancilla side uses the computational
    basis, so the coefficient matrix is ``V diag(sqrt(lam))``.
    """
    dec = spectral_decompose(rho)
    lam = dec.eigenvalues.copy()
    lam[lam < PURIFY_CLAMP * lam[0]] = 0.0
    c = dec.eigenvectors * np.sqrt(lam)
    c = c / np.linalg.norm(c)
    return PureState(c.reshape(-1))


def partial_trace_b(psi: PureState) -> DensityMatrix:
    """Trace out the ancilla: returns C C^dag, symmetrized and renormalized."""
    c = psi.coefficient_matrix()
    rho = c @ c.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    tr = float(np.trace(rho).real)
    if tr != 1.0:
        rho = rho / tr
    return DensityMatrix(rho)


def schmidt(psi: PureState, tol: float = RANK_TOL) -> SchmidtDecomposition:
    """Schmidt decomposition via SVD of the coefficient matrix.

    With ``C = U diag(s) Vh`` the A-side basis is the left singular
    vectors and the B-side basis is the rows of ``Vh`` (the conjugated
    right singular vectors), which makes the tensor reconstruction hold
    without further conjugation.  The A-side columns get the same phase
    convention as :func:`~dmgeo.core.spectral_decompose`; the compensating
    phase moves to the B side so the state is unchanged.
    """
    c = psi.coefficient_matrix()
    try:
        u, s, vh = np.linalg.svd(c)
    except np.linalg.LinAlgError as exc:
        raise DecompositionFailureError(str(exc)) from exc
    mu = numerical_rank(s, tol)
    basis_a = u[:, :mu].copy()
    basis_b = vh[:mu, :].T.copy()
    fixed = _fix_phases(basis_a)
    # transfer the applied phase to the B side so a_k (x) b_k is unchanged
    for k in range(mu):
        j = int(np.argmax(np.abs(basis_a[:, k])))
        phase = fixed[j, k] / basis_a[j, k]
        basis_b[:, k] = basis_b[:, k] * phase.conjugate()
    return SchmidtDecomposition(mu, s[:mu].copy(), fixed, basis_b)


def schmidt_number(psi: PureState, tol: float = RANK_TOL) -> int:
    """Number of nonzero Schmidt coefficients at the given tolerance."""
    return schmidt(psi, tol).mu


def apply_local_b(psi: PureState, v: Unitary) -> PureState:
    """Apply I (x) v, i.e. map the coefficient matrix C to C v^T."""
    if v.n != psi.n:
        raise DimensionMismatchError(f"state side {psi.n}, unitary side {v.n}")
    c = psi.coefficient_matrix() @ v.matrix.T
    return PureState(c.reshape(-1))


def apply_local_a(psi: PureState, r: Unitary) -> PureState:
    """Apply r (x) I, i.e. map the coefficient matrix C to r C."""
    if r.n != psi.n:
        raise DimensionMismatchError(f"state side {psi.n}, unitary side {r.n}")
    c = r.matrix @ psi.coefficient_matrix()
    return PureState(c.reshape(-1))


def _orthonormal_frame(c: np.ndarray, support: np.ndarray, inv_sqrt: np.ndarray):
    # columns of raw span the same space as the right polar factor of C
    # restricted to the support; the SVD cleanup makes them exactly
    # orthonormal and hands back an orthonormal kernel basis for free
    mu = support.shape[1]
    raw = c.conj().T @ support * inv_sqrt
    x, _, yh = np.linalg.svd(raw, full_matrices=True)
    return x[:, :mu] @ yh, x[:, mu:]


def connecting_unitary(
    psi: PureState, phi: PureState, tol: float = CONNECT_TOL
) -> Unitary:
    """The special unitary v with (I (x) v) psi = phi as rays.

    Both states must have the same partial trace over B within ``tol``
    entrywise.  The construction diagonalizes the shared reduced matrix,
    builds the right polar factors of both coefficient matrices on its
    support, and glues ``v^T`` from the support match plus a kernel-basis
    match; one code path covers degenerate spectra, rank deficiency, and
    complex phases alike.  The result is normalized into SU(N) with the
    principal determinant root.
    """
    if psi.amplitudes.size != phi.amplitudes.size:
        raise DimensionMismatchError(
            f"state dimensions {psi.amplitudes.size} and {phi.amplitudes.size}"
        )
    n = psi.n
    c_psi = psi.coefficient_matrix()
    c_phi = phi.coefficient_matrix()
    rho_psi = c_psi @ c_psi.conj().T
    rho_phi = c_phi @ c_phi.conj().T
    deviation = float(np.max(np.abs(rho_psi - rho_phi)))
    if deviation > tol:
        raise PartialTraceMismatchError(deviation, tol)

    rho = 0.5 * (rho_psi + rho_phi)
    rho = 0.5 * (rho + rho.conj().T)
    lam, vec = _eigh(rho)
    lam = lam[::-1]
    vec = vec[:, ::-1]
    mu = int(np.count_nonzero(lam > SUPPORT_CUT * lam[0]))
    support = vec[:, :mu]
    inv_sqrt = 1.0 / np.sqrt(lam[:mu])

    try:
        b_psi, k_psi = _orthonormal_frame(c_psi, support, inv_sqrt)
        b_phi, k_phi = _orthonormal_frame(c_phi, support, inv_sqrt)
    except np.linalg.LinAlgError as exc:
        raise DecompositionFailureError(str(exc)) from exc

    v = (b_psi @ b_phi.conj().T + k_psi @ k_phi.conj().T).T
    det = complex(np.linalg.det(v))
    v = v * det ** (-1.0 / n)
    return Unitary(v)
