"""Closed forms for the degenerate U-statistic behind normalized face counts.

The fraction of (k+q)-subsets of n uniform points on S^{k-1} that
positively span R^k is a U-statistic of order m = k + q whose first
projection kernel is constant.  Its second projection kernel is an affine
image of the arcsin kernel, which makes the variance and the limit law
explicit.
"""

from math import asin, comb, pi

from .errors import InvalidInputError
from .exact import wendel_p
from .special import trigamma


def g2_centered(t: float, m: int, k: int) -> float:
    """Centered order-2 projection kernel at inner product t.

    Equals -2^(1-m) C(m-2, k-1) (2/pi) arcsin(t); requires k + 1 <= m and
    |t| < 1 (antipodal and equal pairs are excluded).
    """
    if not 2 <= k + 1 <= m:
        raise InvalidInputError("requires 2 <= k + 1 <= m")
    if not -1.0 < t < 1.0:
        raise InvalidInputError("inner product must satisfy |t| < 1")
    return -(2.0 ** (1 - m)) * comb(m - 2, k - 1) * (2.0 / pi) * asin(t)


def g2_kernel(t: float, m: int, k: int) -> float:
    """Order-2 projection kernel: the conditional spanning probability of a
    subset given two of its members at inner product t."""
    return float(wendel_p(m, k)) + g2_centered(t, m, k)


def zeta2(m: int, k: int) -> float:
    """Variance of the order-2 projection kernel.

    zeta_2 = 2^(3-2m) pi^(-2) C(m-2, k-1)^2 trigamma(k/2).
    """
    if not 2 <= k + 1 <= m:
        raise InvalidInputError("requires 2 <= k + 1 <= m")
    return 2.0 ** (3 - 2 * m) / (pi * pi) * comb(m - 2, k - 1) ** 2 * trigamma(k / 2.0)


def ustat_variance_exact(n: int, m: int, zetas) -> float:
    """Finite-n variance of an order-m U-statistic from projection variances.

    Var U_n = sum_{c=1}^{m} C(m, c) C(n-m, m-c) / C(n, m) * zeta_c, with
    zetas = (zeta_1, ..., zeta_m).
    """
    zetas = list(zetas)
    if len(zetas) != m:
        raise InvalidInputError("need exactly m projection variances")
    if n < m:
        raise InvalidInputError("requires n >= m")
    denom = comb(n, m)
    return sum(
        comb(m, c) * comb(n - m, m - c) / denom * zetas[c - 1] for c in range(1, m + 1)
    )


def limit_constant(k: int, q: int) -> float:
    """Scale factor of the face-count fluctuation limit:
    C(k+q, 2) C(k+q-2, k-1) / 2^(k+q-1)."""
    if k < 1 or q < 1:
        raise InvalidInputError("k and q must be positive")
    return comb(k + q, 2) * comb(k + q - 2, k - 1) / 2.0 ** (k + q - 1)


def variance_asymptotic(k: int, q: int, d: int) -> float:
    """Leading-order variance of the normalized (d-q)-face count of the cone
    on d+k points: limit_constant^2 * (4/pi^2) trigamma(k/2) / d^2."""
    if d < 1:
        raise InvalidInputError("d must be positive")
    c = limit_constant(k, q)
    return c * c * (4.0 / (pi * pi)) * trigamma(k / 2.0) / (d * d)


def angle_moments(k: int) -> tuple:
    """Mean and variance of the angle between two uniform directions in R^k:
    (pi/2, trigamma(k/2) / 2)."""
    if k < 1:
        raise InvalidInputError("k must be positive")
    return pi / 2.0, 0.5 * trigamma(k / 2.0)
