from math import fsum, gamma, pi

import pytest

from randcones.errors import InvalidInputError
from randcones.special import gegenbauer, trigamma


def series_bracket(x, terms=2_000_000):
    """Direct series for trigamma with integral tail bounds.

    The tail sum_{j >= N} 1/(j+x)^2 lies between 1/(N+x) and 1/(N+x-1).
    fsum keeps the partial sum exactly rounded.
    """
    partial = fsum(1.0 / (j + x) ** 2 for j in range(terms))
    lo = partial + 1.0 / (terms + x)
    hi = partial + 1.0 / (terms + x - 1.0)
    return lo, hi


@pytest.mark.parametrize("x", [1.0, 0.5, 5.0, 2.5, 0.07, 13.25])
def test_trigamma_against_series_bracket(x):
    lo, hi = series_bracket(x)
    val = trigamma(x)
    assert lo - 1e-12 <= val <= hi + 1e-12


def test_trigamma_classical_values():
    assert trigamma(1.0) == pytest.approx(pi * pi / 6.0, abs=1e-12)
    assert trigamma(0.5) == pytest.approx(pi * pi / 2.0, abs=1e-12)
    # Recurrence psi_1(x+1) = psi_1(x) - 1/x^2.
    for x in (0.3, 1.7, 4.2):
        assert trigamma(x + 1.0) == pytest.approx(trigamma(x) - 1.0 / (x * x), abs=1e-12)


def test_trigamma_domain():
    with pytest.raises(InvalidInputError):
        trigamma(0.0)
    with pytest.raises(InvalidInputError):
        trigamma(-2.0)


def test_gegenbauer_base_cases():
    assert gegenbauer(0, 0.75, 0.3) == 1.0
    assert gegenbauer(1, 0.75, 0.3) == pytest.approx(2.0 * 0.75 * 0.3)


def test_gegenbauer_legendre():
    # alpha = 1/2 gives Legendre polynomials.
    for t in (-0.9, -0.2, 0.0, 0.4, 1.0):
        assert gegenbauer(2, 0.5, t) == pytest.approx((3.0 * t * t - 1.0) / 2.0, abs=1e-14)
        assert gegenbauer(3, 0.5, t) == pytest.approx((5.0 * t**3 - 3.0 * t) / 2.0, abs=1e-14)


def test_gegenbauer_value_at_one():
    for n in range(0, 8):
        for alpha in (0.5, 1.0, 1.5, 2.0):
            expected = gamma(n + 2 * alpha) / (gamma(2 * alpha) * gamma(n + 1))
            assert gegenbauer(n, alpha, 1.0) == pytest.approx(expected, rel=1e-12)


def test_gegenbauer_degenerate_alpha_zero():
    assert gegenbauer(0, 0.0, 0.5) == 1.0
    assert gegenbauer(3, 0.0, 0.5) == 0.0
