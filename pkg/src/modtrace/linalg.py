"""Dense Hermitian linear algebra: spectra, norms, matrix functions, fidelity, entropy.

All routines take and return plain ``numpy`` arrays. Hermitian inputs are
checked against an absolute tolerance and symmetrized as ``(A + A^dagger)/2``
before any spectral call.
"""

from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    NoConvergenceError,
    NotHermitianError,
    NotPSDError,
)

HERMITIAN_TOL = 1e-12
CLAMP_TOL = 1e-10
JACOBI_MAX_SWEEPS = 100
JACOBI_TOL = 1e-14


class HermitianEigen(NamedTuple):
    values: np.ndarray  # ascending, real
    vectors: np.ndarray  # columns are orthonormal eigenvectors


def _square(A) -> np.ndarray:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise DimensionMismatchError(f"expected a non-empty square matrix, got shape {A.shape}")
    return A


def hermitian_part(A, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Return ``(A + A^dagger)/2`` after checking ``max |A - A^dagger| <= tol``."""
    A = _square(A).astype(complex)
    asym = np.max(np.abs(A - A.conj().T))
    if asym > tol:
        raise NotHermitianError(f"matrix is not Hermitian: max |A - A^dagger| = {asym:.3e} > {tol:.1e}")
    return 0.5 * (A + A.conj().T)


def jacobi_eigh(A, max_sweeps: int = JACOBI_MAX_SWEEPS, tol: float = JACOBI_TOL) -> HermitianEigen:
    r'''Cyclic Jacobi diagonalization of a Hermitian matrix with complex rotations.

    Each pivot ``(p, q)`` is annihilated by a unitary that first rotates the
    phase of ``A[p, q]`` onto the positive real axis and then applies the
    real symmetric Jacobi rotation. Sweeps stop once the off-diagonal
    Frobenius mass is at most ``tol * ||A||_F``.

    Raises
    ------
    NoConvergenceError
        if ``max_sweeps`` sweeps do not reach the tolerance.
    '''
    A = hermitian_part(A)
    d = A.shape[0]
    V = np.eye(d, dtype=complex)
    scale = np.linalg.norm(A)
    if scale == 0.0:
        return HermitianEigen(np.zeros(d), V)
    off_mask = ~np.eye(d, dtype=bool)
    for _ in range(max_sweeps):
        if np.sqrt(np.sum(np.abs(A[off_mask]) ** 2)) <= tol * scale:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                b = A[p, q]
                mod = abs(b)
                if mod <= 1e-300:
                    continue
                phase = b / mod
                theta = (A[q, q].real - A[p, p].real) / (2.0 * mod)
                t = 1.0 if theta == 0.0 else np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                G = np.array([[c, s], [-np.conj(phase) * s, np.conj(phase) * c]])
                idx = [p, q]
                A[:, idx] = A[:, idx] @ G
                A[idx, :] = G.conj().T @ A[idx, :]
                V[:, idx] = V[:, idx] @ G
                A[p, q] = A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
    else:
        if np.sqrt(np.sum(np.abs(A[off_mask]) ** 2)) > tol * scale:
            raise NoConvergenceError(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")
    values = np.diag(A).real.copy()
    order = np.argsort(values, kind="stable")
    return HermitianEigen(values[order], V[:, order])


def eig_hermitian(A, method: str = "lapack") -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    ``method="lapack"`` uses ``numpy.linalg.eigh``; ``method="jacobi"`` uses
    the in-package cyclic Jacobi solver.
    """
    if method == "jacobi":
        return jacobi_eigh(A)
    if method != "lapack":
        raise ValueError(f"unknown eigensolver {method!r}")
    w, V = np.linalg.eigh(hermitian_part(A))
    return HermitianEigen(w, V)


def trace_norm(A) -> float:
    """Schatten-1 norm: sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.sum(np.abs(np.linalg.eigvalsh(hermitian_part(A)))))


def l1_entrywise(A) -> float:
    return float(np.sum(np.abs(np.asarray(A))))


def hs_norm(A) -> float:
    """Hilbert-Schmidt (Frobenius) norm ``sqrt(Tr(A^dagger A))``."""
    return float(np.linalg.norm(np.asarray(A)))


def matrix_sqrt(A) -> np.ndarray:
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in ``[-1e-10, 0)`` are clamped to zero; anything more
    negative raises ``NotPSDError``.
    """
    w, V = np.linalg.eigh(hermitian_part(A))
    if w[0] < -CLAMP_TOL:
        raise NotPSDError(f"matrix has eigenvalue {w[0]:.3e} < -{CLAMP_TOL:.0e}")
    B = (V * np.sqrt(np.clip(w, 0.0, None))) @ V.conj().T
    return 0.5 * (B + B.conj().T)


def fidelity(rho, sigma) -> float:
    r"""Uhlmann fidelity ``(Tr sqrt(sqrt(sigma) rho sqrt(sigma)))**2``.

    Evaluated as the squared nuclear norm of ``sqrt(rho) sqrt(sigma)``, which
    is the same quantity and avoids a second matrix square root.
    """
    rho = _square(rho)
    sigma = _square(sigma)
    if rho.shape != sigma.shape:
        raise DimensionMismatchError(f"shapes {rho.shape} and {sigma.shape} differ")
    s = np.linalg.svd(matrix_sqrt(rho) @ matrix_sqrt(sigma), compute_uv=False)
    return float(np.sum(s) ** 2)


def entropy_of_spectrum(w) -> float:
    """Shannon entropy (natural log) of a spectrum, ``0 ln 0 := 0``."""
    w = np.clip(np.asarray(w, dtype=float), 0.0, None)
    w = w[w > 0.0]
    return float(max(0.0, -np.sum(w * np.log(w))))


def vn_entropy(rho) -> float:
    """Von Neumann entropy in nats."""
    w = np.linalg.eigvalsh(hermitian_part(rho))
    if w[0] < -CLAMP_TOL:
        raise NotPSDError(f"matrix has eigenvalue {w[0]:.3e} < -{CLAMP_TOL:.0e}")
    return entropy_of_spectrum(w)
