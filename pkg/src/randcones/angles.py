"""Solid-angle moments of simplicial random cones and related densities.

The k-th moment m(d, k) of the solid angle of the cone on d uniform points
in R^d is symmetric in its arguments, m(d, k) = m(k, d).  The first two
moments have elementary closed forms; the third reduces to moments of the
spherical area S of a random spherical triangle, whose density f_S is
evaluated here with a series patch across its removable singularity.
"""

from fractions import Fraction
from math import asin, comb, cos, log, pi, sin, sqrt

import numpy as np

from .errors import InvalidInputError, UnsupportedCaseError
from .quadrature import adaptive_simpson

APERY = 1.2020569031595942854  # zeta(3)

# Taylor coefficients of f_S at x = pi (derived symbolically once; the
# leading term is 1/(4*pi) and the tail follows a Bernoulli-number pattern).
_FS_PATCH_COEFFS = (
    0.07957747154594767,
    -0.03333333333333333,
    0.013262911924324612,
    -0.003968253968253968,
    0.0011052426603603842,
    -0.0002777777777777778,
    6.631455962162305e-05,
    -1.5031265031265032e-05,
    3.289412679644001e-06,
    -6.975130983067491e-07,
    1.4431645470692093e-07,
    -2.9227459783015337e-08,
    5.814618373108082e-09,
    -1.138932579564388e-09,
    2.2010962486166336e-10,
    -4.2037359827536324e-11,
    7.944913663163523e-12,
    -1.4876101898137143e-12,
    2.7622060095317955e-13,
    -5.090318613404852e-14,
)
# Within this distance of pi the direct formula loses precision to
# cancellation (numerator ~ eps^4/4 computed from O(1) terms), so the
# series takes over; it is accurate to machine precision on this radius.
_FS_PATCH_RADIUS = 0.5

FS_AT_2PI = (12.0 - pi * pi) / (16.0 * pi)


def fs_density(x: float) -> float:
    """Density of the spherical area of a uniform random spherical triangle.

    Supported on [0, 2*pi]; the apparent singularity at pi is removable and
    handled by a stored Taylor expansion.
    """
    if not 0.0 <= x <= 2.0 * pi:
        raise InvalidInputError("fs_density is defined on [0, 2*pi]")
    eps = x - pi
    if abs(eps) < _FS_PATCH_RADIUS:
        acc = 0.0
        for c in reversed(_FS_PATCH_COEFFS):
            acc = acc * eps + c
        return acc
    q = x * x - 4.0 * pi * x + 3.0 * pi * pi
    num = -((q - 6.0) * cos(x) - 6.0 * (x - 2.0 * pi) * sin(x) - 2.0 * (q + 3.0))
    c = cos(0.5 * x)
    return num / (16.0 * pi * c**4)


def fs_integral(exponent: int = 0, tol: float = 1e-12) -> float:
    """Integral of x^exponent * f_S(x) over [0, 2*pi] by adaptive Simpson.

    The tolerance is absolute and scaled by the integrand's magnitude
    (2*pi)^exponent so that high moments stay above the float rounding floor.
    """
    scaled = tol * max(1.0, (2.0 * pi) ** exponent)
    if exponent == 0:
        return adaptive_simpson(fs_density, 0.0, 2.0 * pi, tol=scaled)
    return adaptive_simpson(lambda x: x**exponent * fs_density(x), 0.0, 2.0 * pi, tol=scaled)


def moment_m_exact(d: int, k: int) -> Fraction:
    """Exact rational m(d, k) for min(d, k) <= 2."""
    if d < 1 or k < 1:
        raise InvalidInputError("d and k must be positive")
    a, b = (d, k) if d <= k else (k, d)
    if a == 1:
        return Fraction(1, 2**b)
    if a == 2:
        return Fraction(1, 2**b * (b + 1))
    raise UnsupportedCaseError("exact moments available only for min(d, k) <= 2")


def moment_m(d: int, k: int) -> float:
    """k-th moment of the solid angle of the simplicial cone on d points.

    Symmetry m(d, k) = m(k, d) is applied first; min(d, k) <= 2 is exact,
    min(d, k) = 3 uses quadrature of the spherical-area density, and larger
    values are not available in closed form.
    """
    if d < 1 or k < 1:
        raise InvalidInputError("d and k must be positive")
    lo, hi = min(d, k), max(d, k)
    if lo <= 2:
        return float(moment_m_exact(d, k))
    if lo == 3:
        return fs_integral(exponent=hi) / (4.0 * pi) ** hi
    raise UnsupportedCaseError("moments with min(d, k) >= 4 are not available")


def third_moment_closed_form(d: int) -> float:
    """Closed-form m(d, 3) for d <= 5."""
    if d == 1:
        return 1.0 / 8.0
    if d == 2:
        return 1.0 / 32.0
    if d == 3:
        return 3.0 / 128.0 - 3.0 * log(2.0) / (16.0 * pi * pi)
    if d == 4:
        return (pi**4 - 6.0 * pi * pi * log(2.0) - 27.0 * APERY) / (64.0 * pi**4)
    if d == 5:
        return 5.0 / 512.0 - 15.0 * log(2.0) / (128.0 * pi * pi)
    raise UnsupportedCaseError("closed-form third moments stored for d <= 5 only")


def sylvester_simplex_probability(d: int, k: int) -> float:
    """Probability that the spherical hull of d+k uniform points on S^{d-1}
    is a spherical simplex: C(d+k, d) * m(d, k)."""
    if d < 2:
        raise InvalidInputError("requires d >= 2")
    if min(d, k) > 3:
        raise UnsupportedCaseError("requires min(d, k) <= 3")
    return comb(d + k, d) * moment_m(d, k)


def angle_second_moment_rhs(n: int, d: int, f1_samples) -> tuple:
    """Plug-in estimate of E[alpha^2] from one-face counts of the dual model.

    Given samples of f_1 for the cone on n+2 points in R^{n+2-d}, returns
    (estimate, stderr) of (E[f_1^2] - E[f_1]) / ((n+2)(n+1)).
    """
    if n < d:
        raise InvalidInputError("requires n >= d")
    f = np.asarray(f1_samples, dtype=float)
    if f.size == 0:
        raise InvalidInputError("need at least one sample")
    g = (f * f - f) / ((n + 2) * (n + 1))
    est = float(g.mean())
    stderr = float(g.std(ddof=1) / sqrt(g.size)) if g.size > 1 else float("inf")
    return est, stderr


def wedge_conic_volumes(angle: float) -> tuple:
    """Conic intrinsic volumes (v0, v1, v2) of a planar wedge of given angle."""
    if not 0.0 <= angle <= pi:
        raise InvalidInputError("wedge angle must be in [0, pi]")
    return (0.5 - angle / (2.0 * pi), 0.5, angle / (2.0 * pi))


def arcsin_kernel(t: float) -> float:
    """The zonal kernel (2/pi) arcsin(t) on [-1, 1]."""
    if not -1.0 <= t <= 1.0:
        raise InvalidInputError("kernel argument must lie in [-1, 1]")
    return 2.0 / pi * asin(t)
