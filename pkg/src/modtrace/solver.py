"""Numerical solvers for the modified trace-norm and geometric coherence.

``c_tr_modified`` minimizes ``||rho - D||_tr`` over the cone of real
nonnegative diagonal matrices ``D = lam * diag(delta)`` with Douglas-Rachford
splitting. ``c_g`` maximizes the fidelity to an incoherent state by
multi-start entropic mirror ascent. The ``grid_oracle_*`` functions are
brute-force references for small dimensions and share no code path with the
solvers beyond the basic norms.
"""

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import BadParameterError, DimensionTooLargeError, NoConvergenceError
from .linalg import fidelity, hermitian_part, matrix_sqrt, trace_norm
from .measures import hs_bound
from .states import dephase, validate_density

DEGENERATE_LAMBDA = 1e-12
FD_STEP = 1e-6
ASCENT_IMPROVEMENT_TOL = 1e-10


@dataclass(frozen=True)
class SolverConfig:
    step: float = 0.1
    tol: float = 1e-9
    max_iter: int = 20000
    restarts: int = 8
    seed: int = 0

    def __post_init__(self):
        if not self.step > 0:
            raise BadParameterError(f"step must be positive, got {self.step}")
        if not self.tol > 0:
            raise BadParameterError(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise BadParameterError(f"max_iter must be >= 1, got {self.max_iter}")
        if self.restarts < 1:
            raise BadParameterError(f"restarts must be >= 1, got {self.restarts}")


@dataclass
class SolverResult:
    """Outcome of the modified trace-norm minimization.

    ``value`` is ``||rho - lam * diag(delta)||_tr`` at the returned point;
    ``certificate`` is the absolute difference between ``value`` and an
    independent re-evaluation of that expression.
    """

    value: float
    lam: float
    delta: np.ndarray
    iterations: int
    residual: float
    converged: bool
    degenerate: bool = False
    certificate: float = 0.0


@dataclass
class AscentResult:
    value: float  # 1 - best fidelity
    fidelity: float
    delta: np.ndarray
    iterations: int
    converged: bool
    start_values: list = field(default_factory=list)


def prox_trace_norm(V, t: float) -> np.ndarray:
    """Proximal map of ``t * ||.||_tr``: soft-threshold the eigenvalues of ``V`` by ``t``."""
    if not t > 0:
        raise BadParameterError(f"prox parameter must be positive, got {t}")
    return _prox_trace_norm(hermitian_part(V), t)


def _prox_trace_norm(V, t):
    w, U = np.linalg.eigh(V)
    w = np.sign(w) * np.maximum(np.abs(w) - t, 0.0)
    return (U * w) @ U.conj().T


def project_nonneg_diag(V) -> np.ndarray:
    """Euclidean projection onto real nonnegative diagonal matrices."""
    return np.diag(np.maximum(np.diag(np.asarray(V)).real, 0.0)).astype(complex)


def _objective(rho, diag_entries):
    return float(np.sum(np.abs(np.linalg.eigvalsh(rho - np.diag(diag_entries)))))


def _slide_down(rho, x, value, slack):
    """Shift ``diag(x)`` along ``-I`` as far as the objective stays within ``slack``.

    The optimal set is not always a single point (for qubits it is a segment
    parallel to the identity), so this picks its smallest-multiplier end.
    """
    s_max = float(x.min())
    if s_max <= 0.0:
        return x, value
    f_max = _objective(rho, x - s_max)
    if f_max <= value + slack:
        return x - s_max, f_max
    if _objective(rho, x - min(1e-8, s_max)) > value + slack:
        return x, value
    lo, hi = 0.0, s_max
    while hi - lo > 1e-14:
        mid = 0.5 * (lo + hi)
        if _objective(rho, x - mid) <= value + slack:
            lo = mid
        else:
            hi = mid
    if lo == 0.0:
        return x, value
    return x - lo, _objective(rho, x - lo)


def c_tr_modified(rho, cfg: SolverConfig | None = None) -> SolverResult:
    r"""Modified trace-norm coherence ``min_{lam >= 0, delta incoherent} ||rho - lam delta||_tr``.

    Douglas-Rachford iteration on ``f(D) = ||rho - D||_tr`` and the indicator
    of the nonnegative diagonal cone, started from ``Z = diag(rho)``::

        X = rho - prox_{t||.||_tr}(rho - Z)
        Y = project_nonneg_diag(2X - Z)
        Z = Z + Y - X

    until ``||X - Y||_F <= tol``. When the minimizer is not unique the
    returned point has the smallest multiplier reachable along ``-I``.

    Parameters
    ----------
    rho : array_like
        density matrix.
    cfg : SolverConfig, optional
        step ``t``, tolerance and iteration budget.

    Returns
    -------
    SolverResult
        ``converged`` is False when ``max_iter`` is exhausted; the best
        feasible iterate seen is returned in that case.
    """
    cfg = cfg or SolverConfig()
    rho = validate_density(rho)
    d = rho.shape[0]
    t = cfg.step

    Z = np.diag(dephase(rho)).astype(complex)
    best_x, best_val = dephase(rho), np.inf
    residual = np.inf
    converged = False
    it = 0
    for it in range(1, cfg.max_iter + 1):
        X = rho - _prox_trace_norm(rho - Z, t)
        y = np.maximum(np.diag(2.0 * X - Z).real, 0.0)
        Y = np.diag(y)
        Z = Z + Y - X
        residual = float(np.linalg.norm(X - Y))
        if residual <= cfg.tol:
            converged = True
            break
        if it % 50 == 0:
            val = _objective(rho, y)
            if val < best_val:
                best_x, best_val = y, val

    val = _objective(rho, y)
    if converged or val <= best_val:
        x, value = y, val
    else:
        x, value = best_x, best_val
    x, value = _slide_down(rho, x, value, slack=1e-3 * cfg.tol)

    lam = float(x.sum())
    degenerate = lam <= DEGENERATE_LAMBDA
    delta = np.full(d, 1.0 / d) if degenerate else x / lam
    certificate = abs(trace_norm(rho - lam * np.diag(delta)) - value)
    return SolverResult(
        value=value,
        lam=lam,
        delta=delta,
        iterations=it,
        residual=residual,
        converged=converged,
        degenerate=degenerate,
        certificate=certificate,
    )


def _fidelity_to_diagonals(sqrt_rho, X):
    """Fidelity between ``rho`` and each row of ``X`` taken as a diagonal state."""
    M = sqrt_rho[None, :, :] * np.sqrt(np.clip(X, 0.0, None))[:, None, :]
    return np.linalg.svd(M, compute_uv=False).sum(axis=-1) ** 2


def _mirror_ascent(sqrt_rho, x0, max_iter):
    d = x0.size
    tangent = np.eye(d) - 1.0 / d
    x = x0.copy()
    f = _fidelity_to_diagonals(sqrt_rho, x[None])[0]
    step = 1.0
    for it in range(1, max_iter + 1):
        probes = np.vstack([x + FD_STEP * tangent, x - FD_STEP * tangent])
        fp = _fidelity_to_diagonals(sqrt_rho, probes)
        grad = (fp[:d] - fp[d:]) / (2.0 * FD_STEP)
        while True:
            y = x * np.exp(step * (grad - grad.max()))
            y /= y.sum()
            fy = _fidelity_to_diagonals(sqrt_rho, y[None])[0]
            if fy > f:
                break
            step *= 0.5
            if step < 1e-12:
                # no ascent direction left at this resolution
                return x, f, it, True
        gain = fy - f
        x, f = y, fy
        step = min(2.0 * step, 1e3)
        if gain < ASCENT_IMPROVEMENT_TOL:
            return x, f, it, True
    return x, f, max_iter, False


def geometric_coherence(rho, cfg: SolverConfig | None = None) -> AscentResult:
    """Geometric coherence ``1 - max_delta F(rho, delta)`` with the maximizer found.

    Start 0 is the Hilbert-Schmidt state ``b_ii**2 / sum b_ii**2``; the other
    ``restarts - 1`` starts are flat-Dirichlet draws seeded by
    ``(cfg.seed, start index)``, so the result does not depend on the order
    in which starts are evaluated.
    """
    cfg = cfg or SolverConfig()
    rho = validate_density(rho)
    d = rho.shape[0]
    bound = hs_bound(rho)
    B = matrix_sqrt(rho)

    starts = [bound.delta]
    for k in range(1, cfg.restarts):
        starts.append(np.random.default_rng([cfg.seed, k]).dirichlet(np.ones(d)))

    best = None
    total_iter = 0
    any_converged = False
    start_values = []
    for x0 in starts:
        x, f, it, ok = _mirror_ascent(B, x0, cfg.max_iter)
        total_iter += it
        any_converged |= ok
        start_values.append(1.0 - f)
        if best is None or f > best[1]:
            best = (x, f)
    if not any_converged:
        raise NoConvergenceError(f"all {cfg.restarts} ascent starts exhausted {cfg.max_iter} iterations")

    x, f = best
    value = max(0.0, 1.0 - f)
    if value > bound.value + 1e-4:
        raise RuntimeError(f"geometric coherence {value:.9g} exceeds its Hilbert-Schmidt bound {bound.value:.9g}")
    return AscentResult(value, float(f), x, total_iter, any_converged, start_values)


def c_g(rho, cfg: SolverConfig | None = None) -> float:
    return geometric_coherence(rho, cfg).value


def simplex_grid(d: int, steps: int) -> np.ndarray:
    """All points of the probability simplex with coordinates in ``{0, 1/steps, ..., 1}``."""
    pts = []
    for head in itertools.product(range(steps + 1), repeat=d - 1):
        rest = steps - sum(head)
        if rest >= 0:
            pts.append(head + (rest,))
    return np.array(pts, dtype=float) / steps


def grid_oracle_ctr(rho, lambda_max: float = 2.0, steps: int = 50) -> float:
    """Brute-force upper bound on the modified trace-norm coherence (``d <= 3``).

    Evaluates ``||rho - lam diag(x)||_tr`` for ``lam`` on ``steps + 1`` uniform
    points of ``[0, lambda_max]`` and ``x`` on the simplex grid of resolution
    ``1/steps``.
    """
    rho = validate_density(rho)
    d = rho.shape[0]
    if d > 3:
        raise DimensionTooLargeError(f"grid oracle supports d <= 3, got {d}")
    if not 1 <= steps <= 60:
        raise BadParameterError(f"steps must lie in [1, 60], got {steps}")
    lams = np.linspace(0.0, lambda_max, steps + 1)
    xs = simplex_grid(d, steps)
    D = (lams[:, None, None] * xs[None, :, :]).reshape(-1, d)
    diffs = np.broadcast_to(rho, (D.shape[0], d, d)).copy()
    idx = np.arange(d)
    diffs[:, idx, idx] -= D
    return float(np.abs(np.linalg.eigvalsh(diffs)).sum(axis=-1).min())


def grid_oracle_cg(rho, steps: int = 200) -> float:
    """Brute-force geometric coherence over the simplex grid (``d <= 3``)."""
    rho = validate_density(rho)
    d = rho.shape[0]
    if d > 3:
        raise DimensionTooLargeError(f"grid oracle supports d <= 3, got {d}")
    if not 1 <= steps <= 200:
        raise BadParameterError(f"steps must lie in [1, 200], got {steps}")
    best = max(fidelity(rho, np.diag(x)) for x in simplex_grid(d, steps))
    return max(0.0, 1.0 - best)
