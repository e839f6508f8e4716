"""Exact rational combinatorics of random cones.

All probabilities and expectations here are arbitrary-precision rationals
(fractions.Fraction), so identities can be asserted with equality rather
than tolerances.
"""

from fractions import Fraction
from math import comb, exp

from .errors import InvalidInputError


def wendel_p(n: int, d: int) -> Fraction:
    """Probability that n uniform sphere points positively span R^d.

    p(n, d) = 2^(1-n) * sum_{l=d}^{n-1} C(n-1, l); zero when d >= n.
    """
    if n < 1 or d < 1:
        raise InvalidInputError("n and d must be positive")
    if d >= n:
        return Fraction(0)
    total = sum(comb(n - 1, ell) for ell in range(d, n))
    return Fraction(total, 2 ** (n - 1))


def expected_face_count(n: int, d: int, ell: int) -> Fraction:
    """Expected number of ell-dimensional faces of the cone on n points in R^d.

    Equals C(n, ell) * p(n - ell, n - d) for n > d >= 2 and 0 <= ell <= d-1.
    """
    if not (n > d >= 2):
        raise InvalidInputError("requires n > d >= 2")
    if not (0 <= ell <= d - 1):
        raise InvalidInputError("ell must be in [0, d-1]")
    return comb(n, ell) * wendel_p(n - ell, n - d)


def face_event_probability(n: int, d: int, ell: int) -> Fraction:
    """Probability that a fixed ell-subset spans a face: p(n - ell, n - d)."""
    if not (n > d >= 2) or not (0 <= ell <= d - 1):
        raise InvalidInputError("requires n > d >= 2 and 0 <= ell <= d-1")
    return wendel_p(n - ell, n - d)


def expected_intrinsic_volumes(n: int, d: int):
    """Expected conic intrinsic volumes of the random cone on n points in R^d.

    For n <= d the list has entries 2^(-n) C(n, k) for k = 0..n; for n > d
    the top entry k = d absorbs the upper binomial tail.  The returned
    rationals sum to exactly 1.
    """
    if n < 1 or d < 1:
        raise InvalidInputError("n and d must be positive")
    denom = 2**n
    if n <= d:
        vols = [Fraction(comb(n, k), denom) for k in range(n + 1)]
    else:
        vols = [Fraction(comb(n, k), denom) for k in range(d)]
        vols.append(Fraction(sum(comb(n, ell) for ell in range(d, n + 1)), denom))
    assert sum(vols) == 1
    return vols


def chamber_count(n: int, d: int) -> int:
    """Number of chambers cut from R^d by n generic hyperplanes through 0."""
    if not (n > d >= 1):
        raise InvalidInputError("requires n > d >= 1")
    return 2 * sum(comb(n - 1, ell) for ell in range(d))


def d2_vertex_distribution(d: int):
    """Vertex-count law of the spherical hull of d+2 uniform points in R^d.

    Returns exact probabilities, in order, for: whole sphere, spherical
    simplex (d vertices), d+1 vertices, d+2 vertices.  They sum to 1.
    """
    if d < 2:
        raise InvalidInputError("requires d >= 2")
    denom = 2 ** (d + 1)
    full = Fraction(d + 2, denom)
    simplex = Fraction(d + 2, denom)
    d_plus_1 = Fraction((d - 2) * (d + 2), denom)
    d_plus_2 = 1 - Fraction(d * (d + 2), denom)
    dist = (full, simplex, d_plus_1, d_plus_2)
    assert sum(dist) == 1
    return dist


def pascal_recursion_holds(n: int, d: int) -> bool:
    """Whether p(n, d) = p(n-1, d-1)/2 + p(n-1, d)/2 (exact check).

    Uses the convention p(m, 0) = 1 for the d = 1 boundary.
    """
    if not (1 <= d < n):
        raise InvalidInputError("requires 1 <= d < n")
    prev_lower = Fraction(1) if d == 1 else wendel_p(n - 1, d - 1)
    return wendel_p(n, d) == (prev_lower + wendel_p(n - 1, d)) / 2


def hoeffding_bound(n: int, ell: int, t: float) -> float:
    """Concentration bound 2 exp(-2 t^2 floor(n / (n - ell)))."""
    if not (n > ell >= 0):
        raise InvalidInputError("requires n > ell >= 0")
    if t <= 0:
        raise InvalidInputError("t must be positive")
    return 2.0 * exp(-2.0 * t * t * (n // (n - ell)))
