"""Incoherent Kraus channels and monotonicity audits of coherence measures."""

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import BadParameterError, DimensionMismatchError, InvalidStateError, NotIncoherentError
from .measures import c_l1, c_r, hs_bound, m_l, m_tr
from .solver import SolverConfig, c_g, c_tr_modified
from .states import validate_density

COMPLETENESS_TOL = 1e-10


@dataclass
class KrausChannel:
    kraus: list
    dim: int = field(init=False)

    def __post_init__(self):
        self.kraus = [np.asarray(K, dtype=complex) for K in self.kraus]
        if not self.kraus:
            raise BadParameterError("a channel needs at least one Kraus operator")
        self.dim = self.kraus[0].shape[0]
        for K in self.kraus:
            if K.shape != (self.dim, self.dim):
                raise DimensionMismatchError(f"Kraus operator of shape {K.shape} in a d={self.dim} channel")
        res = self.completeness_residual
        if res > COMPLETENESS_TOL:
            raise InvalidStateError(f"Kraus completeness violated: ||sum K^dagger K - I||_F = {res:.3e}")

    @property
    def completeness_residual(self) -> float:
        S = sum(K.conj().T @ K for K in self.kraus)
        return float(np.linalg.norm(S - np.eye(self.dim)))

    @property
    def is_incoherent(self) -> bool:
        """True iff every Kraus operator has at most one nonzero entry per column."""
        return all(np.all(np.count_nonzero(K, axis=0) <= 1) for K in self.kraus)


def identity_channel(d: int) -> KrausChannel:
    return KrausChannel([np.eye(d)])


def dephasing_channel(d: int) -> KrausChannel:
    """Complete dephasing, Kraus operators ``|i><i|``."""
    return KrausChannel([np.diag(np.eye(d)[i]) for i in range(d)])


def _haar_isometry(rng, rows, cols):
    G = rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))
    Q, R = np.linalg.qr(G)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def random_incoherent_channel(d: int, n_kraus: int, seed: int, family: str = "permutation") -> KrausChannel:
    """Random incoherent channel, deterministic per ``seed``.

    The columns are split into groups; each Kraus operator sends every group
    to its own row, ``K_n = sum_g |r_{n,g}><v_{n,g}|`` with ``g -> r_{n,g}``
    injective and ``v_{n,g}`` supported on group ``g``. For each group the
    vectors ``v_{n,g}`` are the rows of a Haar-random ``n_kraus x |g|``
    isometry, so ``sum_n K_n^dagger K_n = I`` exactly and every ``K_n`` has one
    nonzero entry per column.

    ``family="permutation"`` uses singleton groups: ``K_n = P_n diag(a[n])``
    with random permutations ``P_n`` and a uniformly random unit vector
    ``a[:, j]`` per column. ``family="grouped"`` draws a random partition with
    group sizes at most ``n_kraus``, so several columns can share a row.
    """
    if d < 2:
        raise BadParameterError(f"need d >= 2, got {d}")
    if n_kraus < 1:
        raise BadParameterError(f"need n_kraus >= 1, got {n_kraus}")
    rng = np.random.default_rng(seed)
    if family == "permutation":
        groups = [[j] for j in range(d)]
    elif family == "grouped":
        order = rng.permutation(d)
        groups, pos = [], 0
        while pos < d:
            size = int(rng.integers(1, min(n_kraus, d - pos) + 1))
            groups.append(sorted(order[pos:pos + size]))
            pos += size
    else:
        raise BadParameterError(f"unknown channel family {family!r}")

    kraus = [np.zeros((d, d), dtype=complex) for _ in range(n_kraus)]
    isometries = [_haar_isometry(rng, n_kraus, len(g)) for g in groups]
    for n in range(n_kraus):
        rows = rng.permutation(d)[: len(groups)]
        for g, Q, r in zip(groups, isometries, rows):
            kraus[n][r, g] = Q[n]
    return KrausChannel(kraus)


def apply(ch: KrausChannel, rho) -> np.ndarray:
    """``sum_n K_n rho K_n^dagger``."""
    rho = validate_density(rho)
    if rho.shape[0] != ch.dim:
        raise DimensionMismatchError(f"channel acts on d={ch.dim}, state has d={rho.shape[0]}")
    out = sum(K @ rho @ K.conj().T for K in ch.kraus)
    return 0.5 * (out + out.conj().T)


@dataclass
class AuditRecord:
    measure: str
    before: float
    after: float
    slack: float
    tol: float
    passed: bool
    # solver diagnostics for the solver-based measure, one entry per evaluation
    certificates: list = field(default_factory=list)


@dataclass(frozen=True)
class Measure:
    name: str
    fn: Callable
    tol: float
    solver_based: bool = False


def _ctr_value(rho, cfg, log):
    res = c_tr_modified(rho, cfg)
    log.append({"value": res.value, "lam": res.lam, "residual": res.residual,
                "converged": res.converged, "certificate": res.certificate})
    return res.value


MEASURES = {
    "c_l1": Measure("c_l1", lambda rho, cfg, log: c_l1(rho), 1e-9),
    "c_r": Measure("c_r", lambda rho, cfg, log: c_r(rho), 1e-9),
    "c_tr_mod": Measure("c_tr_mod", _ctr_value, 1e-5, solver_based=True),
    "c_g": Measure("c_g", lambda rho, cfg, log: c_g(rho, cfg), 1e-5, solver_based=True),
    "hs_bound": Measure("hs_bound", lambda rho, cfg, log: hs_bound(rho).value, 1e-9),
    "m_l": Measure("m_l", lambda rho, cfg, log: m_l(rho), 1e-9),
    "m_tr": Measure("m_tr", lambda rho, cfg, log: m_tr(rho), 1e-9),
}


def _lookup(measure):
    if isinstance(measure, Measure):
        return measure
    try:
        return MEASURES[measure]
    except KeyError:
        raise BadParameterError(f"unknown measure {measure!r}; choose from {sorted(MEASURES)}") from None


def monotonicity_audit(measure, rho, ch: KrausChannel, cfg: SolverConfig | None = None) -> AuditRecord:
    """Check ``C(Lambda(rho)) <= C(rho)`` for an incoherent channel."""
    m = _lookup(measure)
    if not ch.is_incoherent:
        raise NotIncoherentError("monotonicity audits need an incoherent channel")
    log = []
    before = m.fn(rho, cfg, log)
    after = m.fn(apply(ch, rho), cfg, log)
    slack = before - after
    return AuditRecord(m.name, before, after, slack, m.tol, slack >= -m.tol, log)


def strong_monotonicity_audit(measure, rho, ch: KrausChannel, cfg: SolverConfig | None = None) -> AuditRecord:
    """Check ``sum_n p_n C(rho_n) <= C(rho)`` over the post-measurement ensemble.

    Outcomes with ``p_n <= 1e-12`` are dropped.
    """
    m = _lookup(measure)
    if not ch.is_incoherent:
        raise NotIncoherentError("monotonicity audits need an incoherent channel")
    rho = validate_density(rho)
    log = []
    before = m.fn(rho, cfg, log)
    after = 0.0
    for K in ch.kraus:
        out = K @ rho @ K.conj().T
        p = np.trace(out).real
        if p <= 1e-12:
            continue
        out = out / p
        after += p * m.fn(0.5 * (out + out.conj().T), cfg, log)
    slack = before - after
    return AuditRecord(m.name, before, after, slack, m.tol, slack >= -m.tol, log)
