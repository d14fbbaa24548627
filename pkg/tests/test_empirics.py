import numpy as np
import pytest

from jrmt.empirics import (
    EmpiricalSample,
    ExperimentSpec,
    interval_count,
    ks_against_cdf,
    ks_distance,
    run_experiment,
)
from jrmt.errors import ParameterError


def test_ks_identical_samples():
    s = EmpiricalSample.from_values([0.1, 0.5, 0.9])
    assert ks_distance(s, s) == 0.0


def test_ks_disjoint_supports():
    assert ks_distance(
        EmpiricalSample.from_values([1.0]), EmpiricalSample.from_values([2.0])
    ) == pytest.approx(1.0)


def test_ks_hand_value():
    s1 = EmpiricalSample.from_values([1.0, 3.0])
    s2 = EmpiricalSample.from_values([2.0])
    assert ks_distance(s1, s2) == pytest.approx(0.5)


def test_ks_symmetry_and_triangle():
    rng = np.random.default_rng(0)
    for _ in range(10):
        a = EmpiricalSample.from_values(rng.normal(size=40))
        b = EmpiricalSample.from_values(rng.normal(0.3, size=50))
        c = EmpiricalSample.from_values(rng.normal(-0.2, size=30))
        assert ks_distance(a, b) == ks_distance(b, a)
        assert ks_distance(a, c) <= ks_distance(a, b) + ks_distance(b, c) + 1e-15


def test_ks_one_sample_against_own_cdf():
    rng = np.random.default_rng(3)
    s = EmpiricalSample.from_values(rng.uniform(size=10_000))
    stat = ks_against_cdf(s, lambda x: np.clip(x, 0.0, 1.0))
    assert stat < 0.02  # 1.63/sqrt(N) bound at the 1% level


def test_ks_one_sample_single_point_at_median():
    s = EmpiricalSample.from_values([0.5])
    assert ks_against_cdf(s, lambda x: np.clip(x, 0.0, 1.0)) == pytest.approx(0.5)


def test_empty_sample_rejected():
    with pytest.raises(ParameterError):
        EmpiricalSample.from_values([])


def test_interval_count():
    s = EmpiricalSample.from_values([0.1, 0.2, 0.5, 0.9])
    assert interval_count(s, 0.0, 1.0) == 4
    assert interval_count(s, 0.6, 0.8) == 0
    assert interval_count(s, 0.2, 0.5) == 2
    with pytest.raises(ParameterError):
        interval_count(s, 0.9, 0.1)


def test_run_experiment_onepoint_errors_decrease():
    spec = ExperimentSpec(regime="onepoint", ns=(50, 100, 200), alpha=0.5, beta=0.25)
    report = run_experiment(spec)
    assert report.errors[0] > report.errors[1] > report.errors[2]
    assert report.errors[2] / report.errors[0] < 0.5


def test_run_experiment_bulk_slope():
    grid = tuple(np.linspace(-2.0, 2.0, 5))
    spec = ExperimentSpec(regime="bulk", ns=(50, 100, 200), alpha=0.5, beta=0.25, u_grid=grid)
    report = run_experiment(spec)
    assert -1.4 < report.slope < -0.6


def test_run_experiment_hard_slope():
    grid = tuple(np.linspace(0.5, 16.0, 4))
    spec = ExperimentSpec(
        regime="hard", ns=(50, 100, 200), alpha=0.5, bessel_order=2, u_grid=grid
    )
    report = run_experiment(spec)
    assert -1.4 < report.slope < -0.6


def test_run_experiment_deterministic():
    grid = tuple(np.linspace(-1.0, 1.0, 3))
    spec = ExperimentSpec(regime="bulk", ns=(50, 100), alpha=0.5, beta=0.25, u_grid=grid)
    r1 = run_experiment(spec)
    r2 = run_experiment(spec)
    assert r1 == r2


def test_run_experiment_rejects_unknown_regime():
    with pytest.raises(ParameterError):
        run_experiment(ExperimentSpec(regime="wat", ns=(10,), alpha=0.5, u_grid=(0.5,)))
