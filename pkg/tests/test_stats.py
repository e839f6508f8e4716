import numpy as np
import pytest

from randcones.errors import InvalidInputError
from randcones.sampling import Rng
from randcones.stats import (
    binomial_ci,
    bound_check,
    chi_square_gof,
    ks_two_sample,
    two_proportion_z,
    z_test,
)


def test_wilson_interval_basics():
    lo, hi = binomial_ci(50, 100, 0.99)
    assert lo < 0.5 < hi
    lo0, hi0 = binomial_ci(0, 100, 0.99)
    assert lo0 == 0.0 and hi0 > 0.0
    lo1, hi1 = binomial_ci(100, 100, 0.99)
    assert hi1 == 1.0
    with pytest.raises(InvalidInputError):
        binomial_ci(1, 0, 0.99)


def test_wilson_coverage():
    # 99% interval should cover p = 0.3 in roughly 99% of replications.
    p, n, reps = 0.3, 400, 2000
    gen = Rng(800, 0).generator
    covered = 0
    for x in gen.binomial(n, p, reps):
        lo, hi = binomial_ci(int(x), n, 0.99)
        covered += lo <= p <= hi
    assert covered / reps > 0.975


def test_ks_identical_samples():
    a = np.arange(100, dtype=float)
    report = ks_two_sample(a, a.copy())
    assert report.statistic == 0.0
    assert report.p_value == pytest.approx(1.0)


def test_ks_null_distribution():
    fails = 0
    seeds = 200
    for s in range(seeds):
        gen = Rng(801, s).generator
        a = gen.standard_normal(10_000)
        b = gen.standard_normal(10_000)
        if ks_two_sample(a, b).p_value <= 0.001:
            fails += 1
    assert fails <= seeds * 0.01 + 2


def test_ks_power():
    gen = Rng(802, 0).generator
    a = gen.standard_normal(10_000)
    b = gen.standard_normal(10_000) + 1.0
    report = ks_two_sample(a, b)
    assert report.p_value < 1e-6 and not report.passed


def test_ks_monotone_invariance():
    gen = Rng(803, 0).generator
    a = gen.standard_normal(5000)
    b = gen.standard_normal(5000) * 1.3
    d1 = ks_two_sample(a, b).statistic
    d2 = ks_two_sample(np.exp(a), np.exp(b)).statistic
    assert d1 == pytest.approx(d2, abs=1e-12)


def test_ks_empty_input():
    with pytest.raises(InvalidInputError):
        ks_two_sample([], [1.0])


def test_chi_square_exact_proportions():
    report = chi_square_gof([25, 50, 25], [0.25, 0.5, 0.25])
    assert report.statistic == 0.0 and report.passed


def test_chi_square_power():
    report = chi_square_gof([2500, 5000, 2500], [0.5, 0.25, 0.25])
    assert report.p_value < 1e-6 and not report.passed


def test_chi_square_validation():
    with pytest.raises(InvalidInputError):
        chi_square_gof([1, 2], [0.5, 0.4])
    with pytest.raises(InvalidInputError):
        chi_square_gof([1, 2], [1.0, 0.0])


def test_p_values_in_unit_interval():
    gen = Rng(804, 0).generator
    for _ in range(20):
        a = gen.standard_normal(500)
        b = gen.standard_normal(500)
        r = ks_two_sample(a, b)
        assert 0.0 <= r.p_value <= 1.0


def test_z_and_proportion_tests():
    assert z_test(0.5, 0.5, 0.1).passed
    assert not z_test(1.0, 0.5, 0.1).passed
    assert two_proportion_z(50, 100, 52, 100).passed
    assert not two_proportion_z(20, 100, 80, 100).passed


def test_bound_check():
    assert bound_check(0.1, 0.5, 0.01).passed
    assert not bound_check(0.9, 0.5, 0.01).passed
