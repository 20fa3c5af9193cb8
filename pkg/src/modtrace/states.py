"""State constructors and validators in the fixed computational basis."""

import numpy as np

from .errors import (
    BadParameterError,
    BlochOutOfBallError,
    IndexOutOfRangeError,
    InvalidStateError,
    NotHermitianError,
    WrongDimensionError,
)
from .linalg import CLAMP_TOL, HERMITIAN_TOL, hermitian_part

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def validate_density(rho, tol: float = CLAMP_TOL, hermitian_tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Check that ``rho`` is a density matrix and return its symmetrized copy.

    Conditions: square, Hermitian within ``hermitian_tol``, ``|Tr rho - 1| <= tol``
    and smallest eigenvalue ``>= -tol``. Raises ``InvalidStateError`` naming the
    violated condition (``NotHermitianError`` for the symmetry check).
    """
    A = np.asarray(rho)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise InvalidStateError(f"density matrix must be square, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise InvalidStateError("density matrix has non-finite entries")
    A = hermitian_part(A, hermitian_tol)
    tr = np.trace(A).real
    if abs(tr - 1.0) > tol:
        raise InvalidStateError(f"trace condition violated: Tr(rho) = {tr:.12g}")
    wmin = np.linalg.eigvalsh(A)[0]
    if wmin < -tol:
        raise InvalidStateError(f"positivity condition violated: min eigenvalue {wmin:.3e}")
    return A


def is_density(rho, tol: float = CLAMP_TOL) -> bool:
    try:
        validate_density(rho, tol)
    except (InvalidStateError, NotHermitianError):
        return False
    return True


def from_bloch(r) -> np.ndarray:
    r"""Qubit state ``(I + r . sigma)/2`` for a Bloch vector ``r = (r1, r2, r3)``."""
    r1, r2, r3 = (float(v) for v in r)
    if r1 * r1 + r2 * r2 + r3 * r3 > 1.0 + 1e-12:
        raise BlochOutOfBallError(f"|r| = {np.sqrt(r1*r1 + r2*r2 + r3*r3):.12g} exceeds 1")
    return 0.5 * np.array([[1 + r3, r1 - 1j * r2], [r1 + 1j * r2, 1 - r3]], dtype=complex)


def to_bloch(rho) -> np.ndarray:
    """Bloch vector ``(Tr(rho X), Tr(rho Y), Tr(rho Z))`` of a qubit state."""
    rho = np.asarray(rho)
    if rho.shape != (2, 2):
        raise WrongDimensionError(f"Bloch vectors need a 2x2 state, got shape {rho.shape}")
    return np.array([2 * rho[1, 0].real, 2 * rho[1, 0].imag, (rho[0, 0] - rho[1, 1]).real])


def max_coherent(d: int) -> np.ndarray:
    """Projector onto the uniform superposition of all basis states."""
    if d < 2:
        raise WrongDimensionError(f"max_coherent needs d >= 2, got {d}")
    return np.full((d, d), 1.0 / d, dtype=complex)


def mcms(d: int, p: float) -> np.ndarray:
    """Maximally coherent mixed state ``p |phi_d><phi_d| + (1 - p) I/d``, ``0 < p <= 1``."""
    if d < 2:
        raise WrongDimensionError(f"mcms needs d >= 2, got {d}")
    if not 0.0 < p <= 1.0:
        raise BadParameterError(f"mcms weight p must lie in (0, 1], got {p}")
    return p * max_coherent(d) + (1.0 - p) / d * np.eye(d, dtype=complex)


def shift_unitary(d: int, n: int) -> np.ndarray:
    """Cyclic shift ``U_n |k> = |k + n mod d>``."""
    if d < 2:
        raise WrongDimensionError(f"shift_unitary needs d >= 2, got {d}")
    if not 0 <= n < d:
        raise IndexOutOfRangeError(f"shift index {n} outside [0, {d - 1}]")
    U = np.zeros((d, d), dtype=complex)
    k = np.arange(d)
    U[(k + n) % d, k] = 1.0
    return U


def twirl(A) -> np.ndarray:
    """Average of ``U_n A U_n^dagger`` over all cyclic shifts."""
    A = np.asarray(A, dtype=complex)
    d = A.shape[0]
    out = np.zeros_like(A)
    for n in range(d):
        U = shift_unitary(d, n)
        out += U @ A @ U.conj().T
    return out / d


def random_density(d: int, rank: int | None = None, seed: int = 0) -> np.ndarray:
    """Ginibre-induced random state ``G G^dagger / Tr(G G^dagger)``.

    ``G`` is ``d x rank`` with i.i.d. standard complex Gaussian entries drawn
    from ``numpy.random.default_rng(seed)`` (PCG64): first the real parts,
    then the imaginary parts, both in row-major order.
    """
    rank = d if rank is None else rank
    if d < 1:
        raise WrongDimensionError(f"dimension must be >= 1, got {d}")
    if not 1 <= rank <= d:
        raise BadParameterError(f"rank must lie in [1, {d}], got {rank}")
    rng = np.random.default_rng(seed)
    G = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    rho = G @ G.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def dephase(rho) -> np.ndarray:
    """Diagonal of ``rho`` in the computational basis, as a probability vector."""
    return np.diag(np.asarray(rho)).real.copy()


def incoherent(probs) -> np.ndarray:
    """Diagonal density matrix from a probability vector."""
    probs = np.asarray(probs, dtype=float)
    if probs.ndim != 1 or np.any(probs < 0) or abs(probs.sum() - 1.0) > 1e-12:
        raise BadParameterError("incoherent state needs a nonnegative vector summing to 1")
    return np.diag(probs).astype(complex)


def derive_seed(base: int, index: int) -> int:
    """Independent 63-bit seed for item ``index`` of a corpus rooted at ``base``."""
    ss = np.random.SeedSequence([int(base), int(index)])
    return int(ss.generate_state(1, np.uint64)[0] >> np.uint64(1))
