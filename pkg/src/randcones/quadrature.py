"""Adaptive Simpson quadrature.

Plain recursive bisection with Richardson extrapolation, driven by an
absolute tolerance and capped at a fixed number of subintervals.  The
integrands in this package are smooth (removable singularities are patched
at the density level), so the estimator's error control is reliable.
"""

from .errors import RandConesError


class QuadratureError(RandConesError):
    """Adaptive refinement hit the interval cap before reaching tolerance."""


def _simpson(f, a, fa, b, fb):
    m = 0.5 * (a + b)
    fm = f(m)
    return m, fm, (b - a) * (fa + 4.0 * fm + fb) / 6.0


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-12, max_intervals: int = 10**6) -> float:
    """Integral of f over [a, b] to absolute tolerance tol."""
    if b < a:
        return -adaptive_simpson(f, b, a, tol, max_intervals)
    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    m, fm, whole = _simpson(f, a, fa, b, fb)
    stack = [(a, fa, b, fb, m, fm, whole, tol)]
    total = 0.0
    used = 1
    while stack:
        a0, fa0, b0, fb0, m0, fm0, s0, eps = stack.pop()
        lm, flm, left = _simpson(f, a0, fa0, m0, fm0)
        rm, frm, right = _simpson(f, m0, fm0, b0, fb0)
        used += 2
        if used > max_intervals:
            raise QuadratureError("adaptive Simpson exceeded the interval cap")
        delta = left + right - s0
        if abs(delta) <= 15.0 * eps:
            total += left + right + delta / 15.0
        else:
            half = 0.5 * eps
            stack.append((a0, fa0, m0, fm0, lm, flm, left, half))
            stack.append((m0, fm0, b0, fb0, rm, frm, right, half))
    return total
