"""Special functions: trigamma and Gegenbauer polynomials.

Self-contained implementations sized for this package's needs; accuracy
targets are absolute error <= 1e-12 for trigamma on x > 0 and recurrence
exactness for Gegenbauer values on [-1, 1].
"""

from .errors import InvalidInputError

_TRIGAMMA_SHIFT = 10.0
# Asymptotic tail coefficients B_{2n} for psi_1(y) ~ 1/y + 1/(2y^2) + sum B_{2n} y^{-2n-1}.
_BERNOULLI_TAIL = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)


def trigamma(x: float) -> float:
    """Second derivative of log Gamma at x > 0.

    Recurrence shifts the argument above 10, then an asymptotic Bernoulli
    series finishes; the first omitted term is below 1e-16 there.
    """
    if not x > 0:
        raise InvalidInputError("trigamma requires x > 0")
    acc = 0.0
    y = float(x)
    while y < _TRIGAMMA_SHIFT:
        acc += 1.0 / (y * y)
        y += 1.0
    inv = 1.0 / y
    inv2 = inv * inv
    tail = inv + 0.5 * inv2
    power = inv * inv2
    for b in _BERNOULLI_TAIL:
        tail += b * power
        power *= inv2
    return acc + tail


def gegenbauer(n: int, alpha: float, t: float) -> float:
    """Gegenbauer polynomial C_n^(alpha)(t) by the three-term recurrence.

    C_0 = 1, C_1 = 2 alpha t, and
    n C_n = 2 t (n + alpha - 1) C_{n-1} - (n + 2 alpha - 2) C_{n-2}.
    The alpha = 0 case degenerates under this normalization (C_n = 0 for
    n >= 1), which is the standard convention.
    """
    if n < 0:
        raise InvalidInputError("degree must be nonnegative")
    if alpha <= -0.5:
        raise InvalidInputError("alpha must exceed -1/2")
    if n == 0:
        return 1.0
    prev, cur = 1.0, 2.0 * alpha * t
    for j in range(2, n + 1):
        prev, cur = cur, (2.0 * t * (j + alpha - 1.0) * cur - (j + 2.0 * alpha - 2.0) * prev) / j
    return cur
