import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modtrace.errors import (
    BadParameterError,
    BlochOutOfBallError,
    IndexOutOfRangeError,
    InvalidStateError,
    NotHermitianError,
    WrongDimensionError,
)
from modtrace.states import (
    dephase,
    derive_seed,
    from_bloch,
    incoherent,
    is_density,
    max_coherent,
    mcms,
    random_density,
    shift_unitary,
    to_bloch,
    twirl,
    validate_density,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_from_bloch_examples():
    assert np.allclose(from_bloch((0, 0, 0)), np.eye(2) / 2)
    assert np.allclose(from_bloch((1, 0, 0)), 0.5 * np.ones((2, 2)))
    pure = from_bloch((0.6, 0, 0.8))
    assert np.linalg.eigvalsh(pure)[0] == pytest.approx(0.0, abs=1e-15)
    r1, r2, r3 = 0.1, -0.3, 0.5
    expected = np.array([[(1 + r3) / 2, (r1 - 1j * r2) / 2], [(r1 + 1j * r2) / 2, (1 - r3) / 2]])
    assert np.array_equal(from_bloch((r1, r2, r3)), expected)
    with pytest.raises(BlochOutOfBallError):
        from_bloch((0.8, 0.8, 0))


def test_to_bloch_examples():
    assert np.allclose(to_bloch(np.eye(2) / 2), 0)
    assert np.allclose(to_bloch(from_bloch((1, 0, 0))), [1, 0, 0])
    with pytest.raises(WrongDimensionError):
        to_bloch(np.eye(3) / 3)


@given(seed=seeds, rank=st.integers(1, 2))
@settings(max_examples=50, deadline=None)
def test_bloch_round_trip(seed, rank):
    rho = random_density(2, rank, seed)
    assert np.abs(from_bloch(to_bloch(rho)) - rho).max() <= 1e-12


@pytest.mark.parametrize("d", [2, 3, 5])
def test_max_coherent(d):
    rho = max_coherent(d)
    assert np.allclose(rho, 1 / d)
    assert np.trace(rho @ rho).real == pytest.approx(1.0)
    assert np.linalg.matrix_rank(rho) == 1
    with pytest.raises(WrongDimensionError):
        max_coherent(1)


def test_mcms_examples():
    rho = mcms(3, 0.5)
    assert np.allclose(np.diag(rho), 1 / 3)
    assert np.allclose(rho[~np.eye(3, dtype=bool)], 1 / 6)
    assert np.allclose(mcms(2, 1.0), max_coherent(2))
    # largest eigenvalue p + (1 - p)/d
    assert np.linalg.eigvalsh(mcms(4, 0.7))[-1] == pytest.approx(0.775, abs=1e-12)
    for bad in (0.0, -0.1, 1.2):
        with pytest.raises(BadParameterError):
            mcms(3, bad)


@pytest.mark.parametrize("d,p", [(2, 0.3), (5, 0.9), (8, 0.01)])
def test_mcms_spectrum(d, p):
    w = np.linalg.eigvalsh(mcms(d, p))
    assert np.allclose(w[:-1], (1 - p) / d, atol=1e-14)
    assert w[-1] == pytest.approx(p + (1 - p) / d, abs=1e-14)


def test_shift_unitary_examples():
    assert np.array_equal(shift_unitary(4, 0), np.eye(4))
    e0 = np.array([1, 0, 0])
    assert np.array_equal(shift_unitary(3, 1) @ e0, [0, 1, 0])
    for d in (2, 3, 6):
        phi = np.ones(d) / np.sqrt(d)
        for n in range(d):
            U = shift_unitary(d, n)
            assert np.allclose(U @ U.conj().T, np.eye(d))
            assert np.allclose(U @ phi, phi)
    with pytest.raises(IndexOutOfRangeError):
        shift_unitary(3, 3)


@given(seed=seeds, d=st.integers(2, 6))
@settings(max_examples=40, deadline=None)
def test_twirl_maps_diagonals_to_maximally_mixed(seed, d):
    rho = random_density(d, 1 + seed % d, seed)
    delta = np.diag(dephase(rho))
    assert np.abs(twirl(delta) - np.eye(d) / d).max() <= 1e-12
    # the uniform superposition is fixed by every shift
    assert np.allclose(twirl(max_coherent(d)), max_coherent(d))


def test_random_density_examples():
    pure = random_density(2, 1, 123)
    assert np.trace(pure @ pure).real == pytest.approx(1.0, abs=1e-10)
    a, b = random_density(4, 4, 7), random_density(4, 4, 7)
    assert a.tobytes() == b.tobytes()
    validate_density(random_density(3, 2, 1))
    with pytest.raises(BadParameterError):
        random_density(3, 4, 0)


def test_random_density_full_rank_corpus():
    for seed in range(1000):
        d = 2 + seed % 4
        rho = validate_density(random_density(d, d, seed))
        assert np.linalg.eigvalsh(rho)[0] > 0


def test_dephase_examples():
    for p in (0.1, 0.5, 1.0):
        assert np.allclose(dephase(mcms(3, p)), 1 / 3)
    assert np.allclose(dephase(from_bloch((1, 0, 0))), 0.5)
    probs = np.array([0.2, 0.7, 0.1])
    assert np.allclose(dephase(incoherent(probs)), probs)


def test_validation_names_violated_condition():
    with pytest.raises(InvalidStateError, match="trace"):
        validate_density(np.eye(2))
    with pytest.raises(InvalidStateError, match="positivity"):
        validate_density(np.diag([1.5, -0.5]))
    with pytest.raises(NotHermitianError):
        validate_density(np.array([[0.5, 0.1], [0.0, 0.5]]))
    with pytest.raises(InvalidStateError):
        validate_density(np.ones(3))
    assert not is_density(np.eye(3))
    assert is_density(np.eye(3) / 3)
    with pytest.raises(BadParameterError):
        incoherent([0.5, 0.6])


def test_derive_seed_is_stable_and_spread():
    assert derive_seed(0, 1) == derive_seed(0, 1)
    assert len({derive_seed(5, i) for i in range(1000)}) == 1000
    assert derive_seed(0, 1) != derive_seed(1, 0)
