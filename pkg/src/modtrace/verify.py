"""Seeded verification corpora for the closed forms, bounds and trade-off relations.

Each suite returns a :class:`SuiteReport` holding one :class:`Check` per
relation. A check records a *margin* per item (how far inside its tolerance
the item landed; negative means failure), the worst margin and the labels of
failing items. Item ``i`` of a corpus rooted at ``seed`` always uses
``derive_seed(seed, i)``, so reports do not depend on evaluation order.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from .channels import monotonicity_audit, random_incoherent_channel, strong_monotonicity_audit
from .errors import BadParameterError
from .measures import c_l1, c_tr_mcms, c_tr_qubit, hs_bound, m_l, m_tr
from .solver import SolverConfig, c_g, c_tr_modified, grid_oracle_cg, grid_oracle_ctr
from .states import derive_seed, from_bloch, mcms, random_density, to_bloch

MCMS_DIMS = tuple(range(2, 11))
MCMS_PS = tuple(round(0.1 * k, 10) for k in range(1, 11))


@dataclass
class Check:
    name: str
    total: int = 0
    worst: float = np.inf
    failures: list = field(default_factory=list)

    def record(self, margin: float, label):
        self.total += 1
        self.worst = min(self.worst, float(margin))
        if not margin >= 0.0:
            self.failures.append(label)

    def within(self, a, b, tol, label):
        """Record ``|a - b| <= tol``."""
        self.record(tol - abs(a - b), label)

    def at_most(self, a, b, tol, label):
        """Record ``a <= b + tol``."""
        self.record(b + tol - a, label)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.total - len(self.failures)}/{self.total} pass, worst margin {self.worst:.3e}"
        if self.failures:
            shown = ", ".join(str(f) for f in self.failures[:20])
            more = f" (+{len(self.failures) - 20} more)" if len(self.failures) > 20 else ""
            line += f"; failing: {shown}{more}"
        return line


@dataclass
class SuiteReport:
    name: str
    checks: dict = field(default_factory=dict)

    def check(self, name) -> Check:
        if name not in self.checks:
            self.checks[name] = Check(name)
        return self.checks[name]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def lines(self) -> list:
        return [c.summary() for c in self.checks.values()]


def _random_mixed_or_pure(d, i, seed):
    rank = 1 + (i // 4) % d if d > 2 else 1 + i % 2
    return random_density(d, rank, derive_seed(seed, i))


def suite_prop1(seed: int = 0, count: int = 1000, cfg: SolverConfig | None = None) -> SuiteReport:
    """Qubit closed form: solver value equals ``sqrt(r1**2 + r2**2)`` and ``C_l1``."""
    cfg = cfg or SolverConfig()
    rep = SuiteReport("prop1")
    for i in range(count):
        s = derive_seed(seed, i)
        rho = random_density(2, 1 + i % 2, s)
        r = to_bloch(rho)
        res = c_tr_modified(rho, cfg)
        rep.check("solver == sqrt(r1^2+r2^2) (1e-6)").within(res.value, np.hypot(r[0], r[1]), 1e-6, s)
        rep.check("solver == C_l1 (1e-6)").within(res.value, c_l1(rho), 1e-6, s)
        rep.check("certificate <= 5 tol").at_most(res.certificate, 0.0, 5 * cfg.tol, s)
    return rep


def suite_mcms(seed: int = 0, count: int | None = None, cfg: SolverConfig | None = None) -> SuiteReport:
    """MCMS grid ``d = 2..10``, ``p = 0.1..1.0``. The grid is fixed; ``seed`` and ``count`` are unused."""
    cfg = cfg or SolverConfig()
    rep = SuiteReport("mcms")
    for d in MCMS_DIMS:
        for p in MCMS_PS:
            label = f"d={d},p={p}"
            rho = mcms(d, p)
            res = c_tr_modified(rho, cfg)
            mtr = m_tr(rho)
            rep.check("solver == p (1e-6)").within(res.value, p, 1e-6, label)
            rep.check("lambda == 1-p (1e-5)").within(res.lam, 1.0 - p, 1e-5, label)
            rep.check("closed-form C'_tr + M_tr == 1 (1e-12)").within(c_tr_mcms(d, p) + mtr, 1.0, 1e-12, label)
            rep.check("solver C'_tr + M_tr == 1 (1e-6)").within(res.value + mtr, 1.0, 1e-6, label)
            lhs = c_l1(rho) ** 2 / (d - 1) ** 2 + m_l(rho)
            rep.check("C_l1^2/(d-1)^2 + M_l == 1 (1e-9)").within(lhs, 1.0, 1e-9, label)
    return rep


def suite_hierarchy(seed: int = 0, count: int = 500, cfg: SolverConfig | None = None) -> SuiteReport:
    """``hs_bound <= C'_tr <= C_l1`` and ``C_g <= hs_bound`` on random states, ``d = 2..5``."""
    cfg = cfg or SolverConfig()
    rep = SuiteReport("hierarchy")
    for i in range(count):
        d = 2 + i % 4
        s = derive_seed(seed, i)
        rho = random_density(d, 1 + (i // 4) % d, s)
        ctr = c_tr_modified(rho, cfg).value
        hs = hs_bound(rho).value
        cg = c_g(rho, replace(cfg, seed=s))
        rep.check("hs_bound <= C'_tr + 1e-6").at_most(hs, ctr, 1e-6, s)
        rep.check("C'_tr <= C_l1 + 1e-6").at_most(ctr, c_l1(rho), 1e-6, s)
        rep.check("C_g <= hs_bound + 1e-4").at_most(cg, hs, 1e-4, s)
    return rep


def _disk_qubit(rng):
    radius, angle = np.sqrt(rng.uniform()), rng.uniform(0.0, 2 * np.pi)
    return np.array([radius * np.cos(angle), radius * np.sin(angle), 0.0])


def _tilted_qubit(rng):
    # uniform in the ball, conditioned on |r3| >= 0.05 and |r| <= 0.99
    while True:
        r = rng.uniform(-1.0, 1.0, size=3)
        if abs(r[2]) >= 0.05 and np.linalg.norm(r) <= 0.99:
            return r


def suite_tradeoff(seed: int = 0, count: int = 200, cfg: SolverConfig | None = None) -> SuiteReport:
    """Qubit coherence-mixedness trade-off and the ``C_l1``/``M_l`` inequality."""
    cfg = cfg or SolverConfig()
    rep = SuiteReport("tradeoff")
    for i in range(count):
        s = derive_seed(seed, i)
        rng = np.random.default_rng(s)
        rho = from_bloch(_disk_qubit(rng))
        mt = m_tr(rho)
        rep.check("r3=0: |C'_tr + M_tr - 1| <= 1e-9 (closed form)").within(c_tr_qubit(rho) + mt, 1.0, 1e-9, s)
        rep.check("r3=0: |C'_tr + M_tr - 1| <= 1e-9 (solver)").within(c_tr_modified(rho, cfg).value + mt, 1.0, 1e-9, s)

        rho = from_bloch(_tilted_qubit(rng))
        mt = m_tr(rho)
        rep.check("|r3|>=0.05: C'_tr + M_tr <= 1 - 1e-9 (closed form)").at_most(c_tr_qubit(rho) + mt, 1.0, -1e-9, s)
        rep.check("|r3|>=0.05: C'_tr + M_tr <= 1 - 1e-9 (solver)").at_most(c_tr_modified(rho, cfg).value + mt, 1.0, -1e-9, s)

        d = 2 + i % 4
        rho = _random_mixed_or_pure(d, i, seed)
        rep.check("C_l1^2/(d-1)^2 + M_l <= 1 + 1e-9").at_most(c_l1(rho) ** 2 / (d - 1) ** 2 + m_l(rho), 1.0, 1e-9, s)
    return rep


AXIOM_MEASURES = ("c_l1", "c_r", "c_tr_mod")


def suite_axioms(seed: int = 0, count: int = 200, cfg: SolverConfig | None = None, dims=(2, 3, 4),
                 monotone=AXIOM_MEASURES, strong=AXIOM_MEASURES) -> SuiteReport:
    """Monotonicity (``monotone``) and strong monotonicity (``strong``) under random incoherent channels."""
    cfg = cfg or SolverConfig()
    rep = SuiteReport("axioms")
    for d in dims:
        root = derive_seed(seed, d)
        for i in range(count):
            s = derive_seed(root, i)
            rho = random_density(d, 1 + i % d, s)
            if i % 2:
                ch = random_incoherent_channel(d, 2 + i % 3, derive_seed(s, 1), family="grouped")
            else:
                ch = random_incoherent_channel(d, 1 + i % 3, derive_seed(s, 1))
            label = f"d={d},seed={s}"
            margin = 1e-10 - ch.completeness_residual if ch.is_incoherent else -1.0
            rep.check("channel completeness and incoherence").record(margin, label)
            for name in monotone:
                rec = monotonicity_audit(name, rho, ch, cfg)
                rep.check(f"monotonicity {name} (tol {rec.tol:g})").record(rec.slack + rec.tol, label)
            for name in strong:
                rec = strong_monotonicity_audit(name, rho, ch, cfg)
                rep.check(f"strong monotonicity {name} (tol {rec.tol:g})").record(rec.slack + rec.tol, label)
    return rep


def suite_oracle(seed: int = 0, count: int = 50, cfg: SolverConfig | None = None) -> SuiteReport:
    """Solvers against brute-force grids on small instances."""
    cfg = cfg or SolverConfig()
    rep = SuiteReport("oracle")
    for i in range(count):
        s = derive_seed(seed, i)
        d = 2 + i % 2
        rho = random_density(d, 1 + (i // 2) % d, s)
        v = c_tr_modified(rho, cfg).value
        o = grid_oracle_ctr(rho, lambda_max=2.0, steps=50)
        rep.check("grid C'_tr >= solver - 1e-6").at_most(v, o, 1e-6, s)
        rep.check("grid C'_tr <= solver + 0.03").at_most(o, v, 0.03, s)

        q = random_density(2, 1 + i % 2, derive_seed(s, 2))
        cg = c_g(q, replace(cfg, seed=s))
        rep.check("|C_g - grid C_g| <= 2e-4").within(cg, grid_oracle_cg(q, steps=200), 2e-4, s)
    return rep


SUITES = {
    "prop1": (suite_prop1, 1000),
    "mcms": (suite_mcms, 90),
    "hierarchy": (suite_hierarchy, 500),
    "tradeoff": (suite_tradeoff, 200),
    "axioms": (suite_axioms, 200),
    "oracle": (suite_oracle, 50),
}


def run_suite(name: str, seed: int = 0, count: int | None = None, cfg: SolverConfig | None = None) -> SuiteReport:
    try:
        fn, default_count = SUITES[name]
    except KeyError:
        raise BadParameterError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return fn(seed=seed, count=default_count if count is None else count, cfg=cfg)
