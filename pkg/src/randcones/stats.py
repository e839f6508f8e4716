"""Statistical verdicts shared by all experiments.

Every Monte Carlo comparison in this package funnels through the helpers
here: Wilson confidence intervals for proportions, two-sample
Kolmogorov-Smirnov, chi-square goodness of fit, and z-scores against known
targets.  The package-wide acceptance level is alpha = 0.001 per test; the
number of tests per experiment is documented in its report rather than
corrected for automatically.
"""

from dataclasses import dataclass
from math import erfc, sqrt

import numpy as np
from scipy import stats as sps
from scipy.special import ndtri

from .errors import InvalidInputError

DEFAULT_ALPHA = 1e-3


@dataclass(frozen=True)
class TestReport:
    """One statistical verdict: statistic, p-value, and pass flag at alpha."""

    statistic: float
    p_value: float
    passed: bool
    alpha: float
    description: str

    def as_dict(self) -> dict:
        return {
            "statistic": self.statistic,
            "p_value": self.p_value,
            "pass": self.passed,
            "alpha": self.alpha,
            "description": self.description,
        }


def binomial_ci(successes: int, trials: int, level: float = 0.99) -> tuple:
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise InvalidInputError("trials must be positive")
    if not 0 <= successes <= trials:
        raise InvalidInputError("successes out of range")
    if not 0.0 < level < 1.0:
        raise InvalidInputError("level must be in (0, 1)")
    z = float(ndtri(0.5 + level / 2.0))
    p_hat = successes / trials
    denom = 1.0 + z * z / trials
    center = (p_hat + z * z / (2.0 * trials)) / denom
    half = z * sqrt(p_hat * (1.0 - p_hat) / trials + z * z / (4.0 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def ks_two_sample(a, b, alpha: float = DEFAULT_ALPHA, description: str = "") -> TestReport:
    """Two-sample Kolmogorov-Smirnov test with asymptotic p-value."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.size == 0 or b.size == 0:
        raise InvalidInputError("both samples must be nonempty")
    res = sps.ks_2samp(a, b, method="asymp")
    stat = float(res.statistic)
    p = float(res.pvalue)
    return TestReport(stat, p, p >= alpha, alpha, description or "two-sample KS")


def chi_square_gof(observed, expected_probs, alpha: float = DEFAULT_ALPHA, description: str = "") -> TestReport:
    """Pearson chi-square goodness of fit against given cell probabilities."""
    obs = np.asarray(observed, dtype=float)
    exp_p = np.asarray(expected_probs, dtype=float)
    if obs.shape != exp_p.shape or obs.ndim != 1:
        raise InvalidInputError("observed and expected must be equal-length vectors")
    if np.any(exp_p <= 0.0):
        raise InvalidInputError("expected probabilities must be strictly positive")
    if abs(exp_p.sum() - 1.0) > 1e-12:
        raise InvalidInputError("expected probabilities must sum to 1")
    total = obs.sum()
    if total <= 0:
        raise InvalidInputError("observed counts must be positive in total")
    expected = total * exp_p
    stat = float(((obs - expected) ** 2 / expected).sum())
    dof = obs.size - 1
    p = float(sps.chi2.sf(stat, dof))
    return TestReport(stat, p, p >= alpha, alpha, description or "chi-square GOF")


def z_score(estimate: float, target: float, stderr: float) -> float:
    """Standardized deviation of an estimate from its target."""
    if stderr <= 0.0:
        return 0.0 if estimate == target else float("inf")
    return (estimate - target) / stderr


def z_test(estimate: float, target: float, stderr: float, sigmas: float = 3.0,
           alpha: float = DEFAULT_ALPHA, description: str = "") -> TestReport:
    """Two-sided z comparison; passes when |z| <= sigmas."""
    z = z_score(estimate, target, stderr)
    p = erfc(abs(z) / sqrt(2.0))
    return TestReport(float(z), float(p), abs(z) <= sigmas, alpha,
                      description or f"z-test vs {target}")


def two_proportion_z(x1: int, n1: int, x2: int, n2: int, sigmas: float = 3.0,
                     alpha: float = DEFAULT_ALPHA, description: str = "") -> TestReport:
    """Two-sided pooled z-test for equality of two proportions."""
    if n1 <= 0 or n2 <= 0:
        raise InvalidInputError("sample sizes must be positive")
    p1, p2 = x1 / n1, x2 / n2
    pooled = (x1 + x2) / (n1 + n2)
    se = sqrt(pooled * (1.0 - pooled) * (1.0 / n1 + 1.0 / n2))
    z = 0.0 if se == 0.0 else (p1 - p2) / se
    p = erfc(abs(z) / sqrt(2.0))
    return TestReport(float(z), float(p), abs(z) <= sigmas, alpha,
                      description or "two-proportion z-test")


def bound_check(empirical: float, bound: float, stderr: float, alpha: float = DEFAULT_ALPHA,
                description: str = "") -> TestReport:
    """Pass when an empirical frequency stays below a bound plus 3 stderr."""
    slack = bound + 3.0 * stderr
    margin = slack - empirical
    return TestReport(float(margin), 1.0 if margin >= 0 else 0.0, margin >= 0.0, alpha,
                      description or "upper-bound check")
