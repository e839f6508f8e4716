"""Funk-Hecke spectrum of the sign and arcsin zonal kernels on the sphere.

The convolution operator with kernel sign(<u, v>) on L^2(S^{k-1}) acts on
each space of degree-r spherical harmonics as multiplication by a scalar
tau_r; the arcsin-kernel operator (2/pi) arcsin(<u, v>) is its square, with
eigenvalues lambda_r = tau_r^2.  Even degrees are annihilated.  For odd r,

    tau_r = (-1)^((r-1)/2) Gamma(k/2) Gamma(r/2) / (pi Gamma((r+k)/2)),

evaluated in log space to stay overflow-free for r up to 1e6.  The full
trace of the arcsin operator is 1 and the trace of its square is
(2/pi^2) trigamma(k/2); partial sums approach these limits with a tail
O(1/r_max) and O(1/r_max^{k+1}) respectively.
"""

from dataclasses import dataclass
from math import comb, factorial, fsum, pi

import numpy as np
from scipy.special import gammaln

from .errors import InvalidInputError
from .quadrature import adaptive_simpson
from .special import gegenbauer, trigamma


def harmonic_dimension(r: int, k: int) -> int:
    """Dimension of the space of degree-r spherical harmonics on S^{k-1}."""
    if k < 2 or r < 0:
        raise InvalidInputError("requires k >= 2 and r >= 0")
    if r == 0:
        return 1
    if r == 1:
        return k
    return comb(r + k - 1, r) - comb(r + k - 3, r - 2)


@dataclass(frozen=True)
class SpectralSequence:
    """Truncated odd-degree spectrum (r, dim, tau_r, lambda_r) for one k.

    partial_trace sums dim * lambda over the stored degrees (an increasing
    sequence with limit 1); partial_trace_sq sums dim * lambda^2 (limit
    (2/pi^2) trigamma(k/2)).
    """

    k: int
    degrees: np.ndarray
    dims: np.ndarray
    tau: np.ndarray
    lam: np.ndarray

    @property
    def partial_trace(self) -> float:
        return fsum(self.dims * self.lam)

    @property
    def partial_trace_sq(self) -> float:
        return fsum(self.dims * self.lam * self.lam)

    @property
    def entries(self):
        return list(zip(self.degrees.tolist(), self.dims.tolist(), self.tau.tolist(), self.lam.tolist()))


def funk_hecke(k: int, r_max: int) -> SpectralSequence:
    """Spectral data for odd degrees r = 1, 3, ..., r_max on S^{k-1}.

    Requires k >= 2 and odd r_max.  Gamma ratios are evaluated via gammaln.
    """
    if k < 2:
        raise InvalidInputError("funk_hecke requires k >= 2")
    if r_max < 1 or r_max % 2 == 0:
        raise InvalidInputError("r_max must be a positive odd integer")
    r = np.arange(1, r_max + 1, 2, dtype=np.int64)
    log_tau = gammaln(k / 2.0) + gammaln(r / 2.0) - np.log(pi) - gammaln((r + k) / 2.0)
    magnitude = np.exp(log_tau)
    sign = np.where(((r - 1) // 2) % 2 == 0, 1.0, -1.0)
    tau = sign * magnitude
    lam = magnitude * magnitude
    dims = np.array([harmonic_dimension(int(rr), k) for rr in r], dtype=float)
    return SpectralSequence(k, r, dims, tau, lam)


def trace_identities(k: int, r_max: int) -> tuple:
    """(partial trace, partial trace of the square) at truncation r_max."""
    seq = funk_hecke(k, r_max if r_max % 2 == 1 else r_max - 1)
    return seq.partial_trace, seq.partial_trace_sq


def trace_tail_constant(k: int) -> float:
    """Constant C_k with 1 - partial_trace(k, r_max) <= C_k / r_max.

    From dim_{r,k} * lambda_r ~ a_k / r^2 with
    a_k = 2^{k+1} Gamma(k/2)^2 / ((k-2)! pi^2); the odd-degree tail sum is
    about a_k / (2 r_max), and a factor of 2 absorbs lower-order terms.
    """
    if k < 2:
        raise InvalidInputError("requires k >= 2")
    a_k = 2.0 ** (k + 1) * np.exp(2.0 * gammaln(k / 2.0)) / (factorial(k - 2) * pi * pi)
    return float(a_k)


def variance_theta(k: int) -> float:
    """Variance of the angle between two independent uniform directions."""
    return 0.5 * trigamma(k / 2.0)


def tau_by_quadrature(r: int, k: int, tol: float = 1e-11) -> float:
    """Funk-Hecke multiplier of the sign kernel by direct quadrature.

    Independent of the Gamma-ratio formula: integrates the sign kernel
    against the degree-r Gegenbauer polynomial with weight
    (1 - t^2)^{(k-3)/2}.  Requires k >= 3 so the weight stays integrable
    without endpoint care.
    """
    if k < 3:
        raise InvalidInputError("quadrature route implemented for k >= 3")
    alpha = (k - 2) / 2.0
    expo = alpha - 0.5

    def weighted(t: float) -> float:
        return gegenbauer(r, alpha, t) * (1.0 - t * t) ** expo

    # sign(t) splits the integral at 0.
    integral = adaptive_simpson(weighted, 0.0, 1.0, tol=tol) - adaptive_simpson(
        weighted, -1.0, 0.0, tol=tol
    )
    log_b = gammaln(alpha + 1.0) - 0.5 * np.log(pi) - gammaln(alpha + 0.5)
    log_cn1 = gammaln(r + 2.0 * alpha) - gammaln(2.0 * alpha) - gammaln(r + 1.0)
    return float(np.exp(log_b - log_cn1) * integral)
