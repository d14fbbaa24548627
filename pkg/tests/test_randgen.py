import numpy as np
import pytest

from jrmt.empirics import EmpiricalSample, ks_distance
from jrmt.errors import ParameterError
from jrmt.randgen import SeededStream, complex_ginibre, haar_unitary, random_projector


def test_determinism_bit_identical():
    a = complex_ginibre(SeededStream(1, 5), 3, 4, 1.0)
    b = complex_ginibre(SeededStream(1, 5), 3, 4, 1.0)
    assert np.array_equal(a, b)
    u1 = haar_unitary(SeededStream(9, 0), 6)
    u2 = haar_unitary(SeededStream(9, 0), 6)
    assert np.array_equal(u1, u2)


def test_distinct_streams_differ():
    a = complex_ginibre(SeededStream(1, 0), 3, 3, 1.0)
    b = complex_ginibre(SeededStream(1, 1), 3, 3, 1.0)
    assert not np.allclose(a, b)


def test_ginibre_second_moment():
    vals = []
    for t in range(10_000):
        m = complex_ginibre(SeededStream(42, t), 2, 2, 1.0)
        vals.append(np.abs(m) ** 2)
    mean = float(np.mean(vals))
    assert mean == pytest.approx(1.0, abs=0.02)


def test_ginibre_zero_mean():
    acc = 0j
    trials = 20_000
    for t in range(trials):
        acc += complex_ginibre(SeededStream(7, t), 1, 1, 1.0)[0, 0]
    assert abs(acc / trials) < 0.02


def test_ginibre_rejects_bad_params():
    with pytest.raises(ParameterError):
        complex_ginibre(SeededStream(0), 0, 3, 1.0)
    with pytest.raises(ParameterError):
        complex_ginibre(SeededStream(0), 2, 2, 0.0)


def test_haar_unitarity():
    u = haar_unitary(SeededStream(3), 11)
    assert np.abs(u @ u.conj().T - np.eye(11)).max() < 1e-12
    assert abs(abs(np.linalg.det(u)) - 1.0) < 1e-10


def test_haar_column_moment():
    n, trials = 8, 10_000
    acc = 0.0
    for t in range(trials):
        u = haar_unitary(SeededStream(11, t), n)
        acc += abs(u[0, 0]) ** 2
    assert acc / trials == pytest.approx(1.0 / n, abs=0.01)


def test_haar_permutation_invariance():
    # |(PU)_{11}|^2 must be distributed like |U_{11}|^2 for a fixed
    # row permutation P
    n, trials = 8, 10_000
    direct, permuted = [], []
    for t in range(trials):
        u = haar_unitary(SeededStream(13, t), n)
        direct.append(abs(u[0, 0]) ** 2)
        permuted.append(abs(u[3, 0]) ** 2)  # P moves row 3 to the top
    d = ks_distance(
        EmpiricalSample.from_values(direct), EmpiricalSample.from_values(permuted)
    )
    assert d < 0.03


def test_projector_structure():
    p = random_projector(SeededStream(21), 5, 2)
    assert np.trace(p).real == pytest.approx(2.0, abs=1e-12)
    assert np.abs(p @ p - p).max() < 1e-12
    evs = np.linalg.eigvalsh(p)
    assert np.abs(np.sort(evs) - np.array([0, 0, 0, 1, 1])).max() < 1e-10


def test_projector_full_rank_is_identity():
    p = random_projector(SeededStream(2), 5, 5)
    assert np.abs(p - np.eye(5)).max() < 1e-12


def test_projector_rejects_bad_rank():
    with pytest.raises(ParameterError):
        random_projector(SeededStream(0), 4, 5)
    with pytest.raises(ParameterError):
        random_projector(SeededStream(0), 4, 0)
