from math import comb, sqrt

import numpy as np
import pytest

from randcones.errors import BudgetExceededError, InvalidInputError
from randcones.exact import wendel_p
from randcones.limits import (
    concentration_check,
    independence_check,
    limit_law_comparison,
    make_qk_sampler,
    qk_laplace_k2,
    qk_theoretical_moments,
    sample_qk,
    simulate_fluctuation,
)
from randcones.sampling import Rng
from randcones.spectral import funk_hecke
from randcones.stats import chi_square_gof


def test_qk_sampler_structure():
    s1 = make_qk_sampler(1)
    assert s1.weights is None and s1.tail_mean_compensation == 0.0
    s3 = make_qk_sampler(3, 501)
    assert 0.0 < s3.tail_mean_compensation < 1.0
    assert s3.weights.partial_trace == pytest.approx(1.0 - s3.tail_mean_compensation)


def test_qk_k1_is_chi_square():
    x = sample_qk(make_qk_sampler(1), Rng(700, 0), size=100_000)
    assert abs(x.mean() - 1.0) < 3.0 * x.std(ddof=1) / sqrt(x.size)
    assert abs(x.var(ddof=1) - 2.0) < 0.1
    scalar = sample_qk(make_qk_sampler(1), Rng(700, 1))
    assert isinstance(scalar, float) and scalar > 0


def test_qk_moments():
    for k in (2, 3):
        x = sample_qk(make_qk_sampler(k, 801), Rng(701, k), size=40_000)
        mean_t, var_t = qk_theoretical_moments(k)
        assert abs(x.mean() - mean_t) < 3.0 * x.std(ddof=1) / sqrt(x.size)
        assert abs(x.var(ddof=1) - var_t) / var_t < 0.05
        assert x.min() > 0.0


def test_qk_theoretical_moments():
    assert qk_theoretical_moments(1) == (1.0, pytest.approx(2.0))
    assert qk_theoretical_moments(2)[1] == pytest.approx(2.0 / 3.0)
    variances = [qk_theoretical_moments(k)[1] for k in range(1, 21)]
    assert all(a > b for a, b in zip(variances, variances[1:]))


def test_qk_laplace_exact_values():
    assert qk_laplace_k2(0.0) == 1.0
    assert qk_laplace_k2(0.5) == pytest.approx(1.0 / np.cosh(1.0))


def test_qk_truncation_stability():
    # Couple the truncations through shared per-degree draws.
    seq = funk_hecke(2, 2001)
    gen = Rng(702, 0).generator
    n = 50_000
    short_terms = seq.degrees <= 201
    draws_short = gen.gamma(seq.dims[short_terms, None] / 2.0, 2.0, (int(short_terms.sum()), n))
    q_short_body = seq.lam[short_terms] @ draws_short
    draws_rest = gen.gamma(seq.dims[~short_terms, None] / 2.0, 2.0, (int((~short_terms).sum()), n))
    q_long_body = q_short_body + seq.lam[~short_terms] @ draws_rest
    comp_short = 1.0 - float((seq.dims[short_terms] * seq.lam[short_terms]).sum())
    comp_long = 1.0 - seq.partial_trace
    q_short = q_short_body + comp_short
    q_long = q_long_body + comp_long
    assert abs(q_short.mean() - q_long.mean()) < 1e-2
    assert abs(q_short.var(ddof=1) - q_long.var(ddof=1)) < 1e-3


def test_fluctuation_k1_exact_distribution():
    # d = 3: f = n+ n- over 4 signs has support {0, 3, 4} with mass (2, 8, 6)/16.
    reps = 50_000
    fl = simulate_fluctuation(3, 1, 1, reps, Rng(703, 0))
    f = np.rint(fl.u_stats * comb(4, 2)).astype(int)
    observed = [(f == 0).sum(), (f == 3).sum(), (f == 4).sum()]
    assert sum(observed) == reps
    report = chi_square_gof(observed, [2 / 16, 8 / 16, 6 / 16])
    assert report.passed


def test_fluctuation_mean_identity():
    # The (3, 2, 2) case doubles as the one-face expectation of the cone on
    # five points in R^3: E f_1 = 5 p(4, 2) = 5/2.
    for d, k, q in [(8, 1, 1), (10, 2, 1), (8, 3, 2), (3, 2, 2)]:
        reps = 20_000
        fl = simulate_fluctuation(d, k, q, reps, Rng(704, 10 * k + q))
        target = float(wendel_p(k + q, k))
        se = fl.u_stats.std(ddof=1) / sqrt(reps)
        assert abs(fl.u_stats.mean() - target) < 4.0 * se


def test_fluctuation_generic_k_path():
    # k = 4 exercises the LP-backed enumeration route.
    fl = simulate_fluctuation(4, 4, 1, 60, Rng(705, 0))
    target = float(wendel_p(5, 4))
    assert 0.0 <= fl.u_stats.min() and fl.u_stats.max() <= 1.0
    assert abs(fl.u_stats.mean() - target) < 5.0 * max(fl.u_stats.std(ddof=1) / sqrt(60), 0.02)


def test_fluctuation_budget_and_validation():
    with pytest.raises(BudgetExceededError):
        simulate_fluctuation(60, 20, 10, 10, Rng(0, 0))
    with pytest.raises(InvalidInputError):
        simulate_fluctuation(3, 1, 3, 10, Rng(0, 0))


def test_limit_law_comparison_identical_inputs():
    # When the scaled fluctuations are exactly the transformed Q draws, the
    # KS distance is zero.
    from randcones.limits import FluctuationResult
    from randcones.ustat import limit_constant

    qk = sample_qk(make_qk_sampler(1), Rng(706, 0), size=2000)
    scaled = limit_constant(1, 1) * (1.0 - qk)
    fl = FluctuationResult(10, 1, 1, u_stats=np.full_like(scaled, 0.5), scaled=scaled)
    report = limit_law_comparison(fl, qk, 1, 1)
    assert report.statistic == 0.0
    assert report.p_value == pytest.approx(1.0)


def test_limit_law_ks_small_case():
    fl = simulate_fluctuation(400, 1, 1, 20_000, Rng(707, 0))
    qk = sample_qk(make_qk_sampler(1), Rng(707, 1), size=100_000)
    report = limit_law_comparison(fl, qk, 1, 1)
    assert report.statistic < 0.08


def test_limit_law_ks_k2_finite_d():
    # At k = 2, d = 100 the distance reflects O(1/d) bias; observed ~0.01,
    # comfortably below the documented 0.05 expectation.
    fl = simulate_fluctuation(100, 2, 1, 10_000, Rng(711, 0))
    qk = sample_qk(make_qk_sampler(2, 2001), Rng(711, 1), size=50_000)
    report = limit_law_comparison(fl, qk, 2, 1)
    assert report.statistic < 0.05


def test_independence_check_validation():
    with pytest.raises(InvalidInputError):
        independence_check(7, 5, [0, 1, 2], [4, 5, 6], 100, Rng(0, 0))  # no cover
    with pytest.raises(InvalidInputError):
        independence_check(7, 5, [0, 1, 2, 3, 4], [3, 4, 5, 6], 100, Rng(0, 0))
    with pytest.raises(InvalidInputError):
        independence_check(7, 2, [0], [0, 1, 2, 3, 4, 5, 6], 100, Rng(0, 0))


def test_independence_check_small_run():
    report = independence_check(7, 5, [0, 1, 2, 3], [3, 4, 5, 6], 30_000, Rng(708, 0))
    assert report.all_pass
    assert report.marginal_target == (0.25, 0.25)


def test_independence_generic_route():
    # A set smaller than d-1 forces the LP route; marginals still match.
    report = independence_check(7, 5, [0, 1, 2], [3, 4, 5, 6], 600, Rng(709, 0))
    t1, t2 = report.marginal_target
    assert t1 == float(wendel_p(4, 2))
    assert t2 == float(wendel_p(3, 2))
    se = sqrt(t1 * (1 - t1) / 600)
    assert abs(report.p1 - t1) < 4 * se


def test_concentration_check_small():
    report = concentration_check(8, 6, 4, [0.1, 0.5, 1.0], 5000, Rng(710, 0))
    assert report.all_pass
    # t = 1 exceedance is impossible for a [0,1]-valued statistic.
    assert report.empirical[-1] == 0.0


def test_concentration_check_near_square_regime():
    # n = 40, d = 38, ell = 36: floor(40/4) = 10, bound 2 exp(-0.2) at t=0.1.
    report = concentration_check(40, 38, 36, [0.1], 2000, Rng(712, 0))
    assert report.bounds[0] == pytest.approx(2.0 * np.exp(-0.2))
    assert report.all_pass
