"""Closed-form coherence and mixedness functionals."""

from typing import NamedTuple

import numpy as np

from .errors import BadParameterError, NoSignChangeError, WrongDimensionError
from .linalg import CLAMP_TOL, entropy_of_spectrum, matrix_sqrt, trace_norm, vn_entropy
from .states import dephase, mcms, to_bloch, validate_density


class HSBound(NamedTuple):
    value: float  # 1 - sum_i b_ii**2 with b = sqrt(rho)
    lam: float  # sum_i b_ii**2
    delta: np.ndarray  # b_ii**2 / lam


def c_l1(rho) -> float:
    """l1-norm of coherence: sum of the moduli of the off-diagonal entries."""
    rho = validate_density(rho)
    off = np.abs(rho)
    np.fill_diagonal(off, 0.0)
    return float(off.sum())


def c_r(rho) -> float:
    """Relative entropy of coherence ``S(diag rho) - S(rho)``, in nats."""
    rho = validate_density(rho)
    return max(0.0, entropy_of_spectrum(dephase(rho)) - vn_entropy(rho))


def c_tr_qubit(rho) -> float:
    """Modified trace-norm coherence of a qubit, ``sqrt(r1**2 + r2**2)``."""
    rho = validate_density(rho)
    if rho.shape != (2, 2):
        raise WrongDimensionError(f"qubit formula needs a 2x2 state, got shape {rho.shape}")
    r = to_bloch(rho)
    return float(np.hypot(r[0], r[1]))


def _check_mcms_args(d, p):
    if d < 2:
        raise WrongDimensionError(f"need d >= 2, got {d}")
    if not 0.0 < p <= 1.0:
        raise BadParameterError(f"p must lie in (0, 1], got {p}")


def c_tr_mcms(d: int, p: float) -> float:
    """Modified trace-norm coherence of ``mcms(d, p)``, which equals ``p``."""
    _check_mcms_args(d, p)
    return float(p)


def mcms_optimizer(d: int, p: float) -> tuple[float, np.ndarray]:
    """Minimizing multiplier and incoherent state for ``mcms(d, p)``: ``(1 - p, I/d)``."""
    _check_mcms_args(d, p)
    return 1.0 - p, np.full(d, 1.0 / d)


def m_l(rho) -> float:
    """Normalized linear entropy ``d/(d-1) (1 - Tr rho^2)``."""
    rho = validate_density(rho)
    d = rho.shape[0]
    if d < 2:
        raise WrongDimensionError("mixedness is undefined for d = 1")
    purity = float(np.sum(np.abs(rho) ** 2))
    return d / (d - 1) * (1.0 - purity)


def m_tr(rho) -> float:
    """Trace-norm mixedness ``1 - d/(2(d-1)) ||rho - I/d||_tr``, clamped at 0."""
    rho = validate_density(rho)
    d = rho.shape[0]
    if d < 2:
        raise WrongDimensionError("mixedness is undefined for d = 1")
    val = 1.0 - d / (2.0 * (d - 1)) * trace_norm(rho - np.eye(d) / d)
    if -CLAMP_TOL <= val < 0.0:
        val = 0.0
    return val


def hs_bound(rho) -> HSBound:
    """Hilbert-Schmidt quantity ``1 - sum_i b_ii**2`` with ``b = sqrt(rho)``.

    The value lower-bounds the modified trace-norm coherence and upper-bounds
    the geometric coherence. ``lam`` and ``delta`` are the multiplier and
    incoherent state minimizing ``||sqrt(rho) - sqrt(lam * delta)||_HS``.
    """
    rho = validate_density(rho)
    b2 = np.diag(matrix_sqrt(rho)).real ** 2
    lam = float(b2.sum())
    return HSBound(min(1.0, max(0.0, 1.0 - lam)), lam, b2 / lam)


def crossing_gap(d: int, p: float) -> float:
    """``C_r(mcms(d, p)) - p``; its root is where the two coherence curves cross."""
    return c_r(mcms(d, p)) - p


def find_crossing(d: int, lo: float = 0.5, hi: float = 1.0, width: float = 1e-7) -> float:
    """Bisect ``crossing_gap(d, .)`` on ``[lo, hi]`` down to ``width``.

    Only a sign change is required; either orientation is accepted.
    """
    g_lo, g_hi = crossing_gap(d, lo), crossing_gap(d, hi)
    if g_lo == 0.0:
        return lo
    if g_hi == 0.0:
        return hi
    if np.sign(g_lo) == np.sign(g_hi):
        raise NoSignChangeError(lo, hi, g_lo, g_hi)
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        g_mid = crossing_gap(d, mid)
        if np.sign(g_mid) == np.sign(g_lo):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
