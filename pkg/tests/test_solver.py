import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modtrace.errors import BadParameterError, DimensionTooLargeError, NotHermitianError
from modtrace.linalg import trace_norm
from modtrace.measures import c_l1, c_tr_qubit, hs_bound
from modtrace.solver import (
    SolverConfig,
    c_g,
    c_tr_modified,
    geometric_coherence,
    grid_oracle_cg,
    grid_oracle_ctr,
    project_nonneg_diag,
    prox_trace_norm,
    simplex_grid,
)
from modtrace.states import from_bloch, incoherent, max_coherent, mcms, random_density

seeds = st.integers(min_value=0, max_value=2**32 - 1)
CFG = SolverConfig()


def test_prox_examples():
    assert np.allclose(prox_trace_norm(np.diag([3.0, -1.0]), 1.0), np.diag([2.0, 0.0]), atol=1e-14)
    V = random_density(3, 3, 0) - 0.4 * np.eye(3)
    assert np.allclose(prox_trace_norm(V, np.abs(np.linalg.eigvalsh(V)).max()), 0, atol=1e-14)
    assert np.abs(prox_trace_norm(V, 1e-15) - V).max() <= 1e-12
    with pytest.raises(NotHermitianError):
        prox_trace_norm(np.array([[0, 1], [0, 0]]), 1.0)
    with pytest.raises(BadParameterError):
        prox_trace_norm(V, 0.0)


@given(seed=seeds, t=st.floats(0.01, 2.0))
@settings(max_examples=40, deadline=None)
def test_prox_shrinks_spectrum(seed, t):
    V = random_density(4, 4, seed) - 0.25 * np.eye(4)
    mu = np.linalg.eigvalsh(V)
    out = np.linalg.eigvalsh(prox_trace_norm(V, t))
    assert np.allclose(np.sort(np.sign(mu) * np.maximum(np.abs(mu) - t, 0)), out, atol=1e-12)


def test_projection_examples():
    assert np.array_equal(project_nonneg_diag(np.array([[1, 5j], [-5j, -2]])), np.diag([1.0, 0.0]))
    D = np.diag([0.3, 0.0, 2.0])
    assert np.array_equal(project_nonneg_diag(D), D)
    assert np.array_equal(project_nonneg_diag(np.zeros((3, 3))), np.zeros((3, 3)))


def _check_certificate(rho, res, tol=CFG.tol):
    assert res.lam >= 0
    assert np.all(res.delta >= 0) and res.delta.sum() == pytest.approx(1.0, abs=1e-12)
    assert abs(trace_norm(rho - res.lam * np.diag(res.delta)) - res.value) <= 5 * tol
    if res.converged:
        assert res.residual <= tol


def test_c_tr_modified_qubit_example():
    rho = from_bloch((0.6, 0, 0.3))
    res = c_tr_modified(rho)
    assert res.converged
    assert res.value == pytest.approx(0.6, abs=1e-6)
    _check_certificate(rho, res)
    # the named optimizer is one point of an optimal segment
    assert trace_norm(rho - np.diag([0.65, 0.35])) == pytest.approx(res.value, abs=1e-6)
    assert 0.4 - 1e-6 <= res.lam <= 1.6 + 1e-6


def test_c_tr_modified_mcms_example():
    rho = mcms(4, 0.7)
    res = c_tr_modified(rho)
    assert res.value == pytest.approx(0.7, abs=1e-6)
    assert res.lam == pytest.approx(0.3, abs=1e-6)
    assert np.allclose(res.delta, 0.25, atol=1e-6)
    _check_certificate(rho, res)


def test_c_tr_modified_diagonal_example():
    probs = np.array([0.5, 0.3, 0.2])
    res = c_tr_modified(incoherent(probs))
    assert res.value == pytest.approx(0.0, abs=1e-9)
    assert res.lam == pytest.approx(1.0, abs=1e-9)
    assert np.allclose(res.delta, probs, atol=1e-9)


def test_c_tr_modified_max_coherent_is_degenerate():
    res = c_tr_modified(max_coherent(3))
    assert res.value == pytest.approx(1.0, abs=1e-6)
    assert res.lam == pytest.approx(0.0, abs=1e-6)
    if res.degenerate:
        assert np.allclose(res.delta, 1 / 3)
    _check_certificate(max_coherent(3), res)


def test_c_tr_modified_reports_non_convergence():
    rho = random_density(4, 4, 5)
    res = c_tr_modified(rho, SolverConfig(max_iter=1))
    assert not res.converged
    assert res.iterations == 1
    # the returned point is still feasible and certified
    _check_certificate(rho, res)
    assert res.value <= 1 + 1e-9


@given(seed=seeds, d=st.integers(2, 5))
@settings(max_examples=40, deadline=None)
def test_value_sandwich_and_certificate(seed, d):
    rho = random_density(d, 1 + seed % d, seed)
    res = c_tr_modified(rho)
    assert res.converged
    _check_certificate(rho, res)
    assert hs_bound(rho).value - 1e-6 <= res.value <= c_l1(rho) + 1e-6
    assert 0 <= res.value <= 1 + 1e-9


@given(seed=seeds)
@settings(max_examples=60, deadline=None)
def test_qubit_value_matches_closed_form(seed):
    rho = random_density(2, 1 + seed % 2, seed)
    assert abs(c_tr_modified(rho).value - c_tr_qubit(rho)) <= 1e-6


@given(seed=seeds, d=st.integers(2, 5))
@settings(max_examples=30, deadline=None)
def test_diagonal_unitary_invariance(seed, d):
    rho = random_density(d, d, seed)
    phases = np.exp(2j * np.pi * np.random.default_rng(seed).random(d))
    rotated = (phases[:, None] * rho) * phases.conj()[None, :]
    assert abs(c_tr_modified(rho).value - c_tr_modified(rotated).value) <= 1e-8


def test_solver_beats_every_oracle_grid_point():
    for seed in range(5):
        rho = random_density(3, 3, seed)
        value = c_tr_modified(rho).value
        assert grid_oracle_ctr(rho, 2.0, 30) >= value - 1e-6
        # a tight lambda range brackets the minimum within grid resolution
        assert grid_oracle_ctr(rho, 1.2, 40) - value <= 0.05


def test_grid_oracle_ctr_examples():
    assert grid_oracle_ctr(from_bloch((0.5, 0, 0)), 2.0, 50) == pytest.approx(0.5, abs=0.02)
    assert grid_oracle_ctr(mcms(3, 0.4), 2.0, 50) == pytest.approx(0.4, abs=0.02)
    assert grid_oracle_ctr(incoherent([0.2, 0.8]), 2.0, 50) == pytest.approx(0.0, abs=1e-12)
    assert grid_oracle_ctr(incoherent([0.31, 0.69]), 2.0, 50) == pytest.approx(0.0, abs=0.02)
    with pytest.raises(DimensionTooLargeError):
        grid_oracle_ctr(np.eye(4) / 4)
    with pytest.raises(BadParameterError):
        grid_oracle_ctr(np.eye(2) / 2, steps=61)


def test_simplex_grid():
    g = simplex_grid(3, 4)
    assert g.shape == (15, 3)
    assert np.allclose(g.sum(axis=1), 1)
    assert len({tuple(r) for r in g}) == 15


def test_c_g_examples():
    assert c_g(incoherent([0.1, 0.6, 0.3])) == pytest.approx(0.0, abs=1e-9)
    for d in (2, 3, 5):
        assert c_g(max_coherent(d)) == pytest.approx(1 - 1 / d, abs=1e-6)
    # qubit closed form (1 - sqrt(1 - |r_perp|^2)) / 2
    r = (0.3, 0.4, 0.5)
    assert c_g(from_bloch(r)) == pytest.approx((1 - np.sqrt(1 - 0.25)) / 2, abs=1e-7)


def test_c_g_random_qubit_matches_grid_oracle():
    rho = random_density(2, 2, 11)
    assert c_g(rho) == pytest.approx(grid_oracle_cg(rho, 200), abs=2e-4)


def test_grid_oracle_cg_examples():
    assert grid_oracle_cg(incoherent([0.25, 0.75]), 200) == pytest.approx(0.0, abs=1e-12)
    assert grid_oracle_cg(max_coherent(2), 200) == pytest.approx(0.5, abs=1e-4)
    with pytest.raises(DimensionTooLargeError):
        grid_oracle_cg(np.eye(4) / 4)
    with pytest.raises(BadParameterError):
        grid_oracle_cg(np.eye(2) / 2, steps=201)


@given(seed=seeds, d=st.integers(2, 4))
@settings(max_examples=25, deadline=None)
def test_c_g_sits_below_hs_bound_and_modified_trace(seed, d):
    rho = random_density(d, 1 + seed % d, seed)
    res = geometric_coherence(rho)
    assert res.converged
    assert -1e-9 <= res.value <= hs_bound(rho).value + 1e-9
    assert res.value <= c_tr_modified(rho).value + 1e-4
    assert res.value == pytest.approx(min(res.start_values))


def test_c_g_deterministic_for_a_seed():
    rho = random_density(4, 2, 9)
    a = geometric_coherence(rho, SolverConfig(seed=3))
    b = geometric_coherence(rho, SolverConfig(seed=3))
    assert a.value == b.value and a.start_values == b.start_values
    # each start depends only on (seed, index): fewer restarts reproduce a prefix
    c = geometric_coherence(rho, SolverConfig(seed=3, restarts=4))
    assert c.start_values == a.start_values[:4]


@pytest.mark.parametrize(
    "kwargs",
    [{"step": 0.0}, {"tol": -1.0}, {"max_iter": 0}, {"restarts": 0}],
)
def test_solver_config_validation(kwargs):
    with pytest.raises(BadParameterError):
        SolverConfig(**kwargs)
