"""Simulation lab for face-count fluctuations and their non-Gaussian limit.

The normalized (d-q)-face count of the cone on d+k uniform points is a
U-statistic over the k-dimensional dual sphere.  As d grows, d times its
centered value converges to limit_constant(k, q) * (1 - Q_k), where Q_k is
a weighted sum of independent chi-square variables with the Funk-Hecke
eigenvalues as weights.  This module samples both sides of that statement
and provides the independence and concentration experiments that share the
same machinery.
"""

from dataclasses import dataclass
from math import comb, sqrt

import numpy as np

from . import geometry
from .cones import DUAL_COUNT_BUDGET, dual_face_count, is_face
from .errors import BudgetExceededError, InvalidInputError
from .exact import face_event_probability, hoeffding_bound, wendel_p
from .sampling import Rng, SphereConfig, sample_sphere_points
from .spectral import SpectralSequence, funk_hecke
from .special import trigamma
from .stats import TestReport, ks_two_sample, z_test
from .ustat import limit_constant

DEFAULT_R_MAX = 2001
_CHUNK_SCALARS = 4 * 10**6


@dataclass(frozen=True)
class QkSampler:
    """Sampler for the chi-square-mixture limit variable Q_k.

    The series over odd degrees is truncated at r_max; the missing mean
    1 - partial_trace is added back as a deterministic compensation so the
    sampler keeps E Q_k = 1 exactly, while the discarded tail variance is
    O(1/r_max^3).  For k = 1 the law is exactly Gamma(1/2, rate 1/2) and no
    truncation is involved.
    """

    k: int
    r_max: int
    weights: SpectralSequence | None
    tail_mean_compensation: float

    def __post_init__(self):
        if not 0.0 <= self.tail_mean_compensation < 1.0:
            raise InvalidInputError("tail compensation must lie in [0, 1)")


def make_qk_sampler(k: int, r_max: int = DEFAULT_R_MAX) -> QkSampler:
    if k < 1:
        raise InvalidInputError("k must be positive")
    if k == 1:
        return QkSampler(1, r_max, None, 0.0)
    seq = funk_hecke(k, r_max if r_max % 2 == 1 else r_max - 1)
    return QkSampler(k, seq.degrees[-1], seq, 1.0 - seq.partial_trace)


def sample_qk(sampler: QkSampler, rng: Rng, size: int | None = None):
    """Draw from the truncated Q_k law; scalar when size is None."""
    n = 1 if size is None else int(size)
    if n < 1:
        raise InvalidInputError("size must be positive")
    gen = rng.generator
    if sampler.k == 1:
        out = gen.gamma(0.5, 2.0, n)
    else:
        lam = sampler.weights.lam
        shapes = sampler.weights.dims / 2.0
        out = np.full(n, sampler.tail_mean_compensation)
        chunk = max(1, _CHUNK_SCALARS // lam.size)
        for start in range(0, n, chunk):
            stop = min(n, start + chunk)
            draws = gen.gamma(shapes[:, None], 2.0, (lam.size, stop - start))
            out[start:stop] += lam @ draws
    return float(out[0]) if size is None else out


def qk_theoretical_moments(k: int) -> tuple:
    """(mean, variance) of Q_k: (1, (4/pi^2) trigamma(k/2))."""
    if k < 1:
        raise InvalidInputError("k must be positive")
    return 1.0, 4.0 / (np.pi * np.pi) * trigamma(k / 2.0)


def qk_laplace_k2(s: float) -> float:
    """Exact Laplace transform of Q_2 at s >= 0: 1 / cosh(sqrt(2 s))."""
    if s < 0:
        raise InvalidInputError("s must be nonnegative")
    return 1.0 / np.cosh(sqrt(2.0 * s))


@dataclass(frozen=True)
class FluctuationResult:
    """Sampled U-statistics U = f / C(n, m) and their scaled fluctuations
    d (U - p(k+q, k)) for the face-count experiment at fixed (d, k, q)."""

    d: int
    k: int
    q: int
    u_stats: np.ndarray
    scaled: np.ndarray

    @property
    def mean_target(self) -> float:
        return float(wendel_p(self.k + self.q, self.k))


def _comb_table(n: int, m: int) -> np.ndarray:
    vals = [comb(j, m) for j in range(n + 1)]
    if vals[-1] < 2**62:
        return np.array(vals, dtype=np.int64)
    return np.array(vals, dtype=float)


def simulate_fluctuation(d: int, k: int, q: int, reps: int, rng: Rng) -> FluctuationResult:
    """Sample the normalized (d-q)-face count via its dual representation.

    Each rep draws n = d + k i.i.d. uniform points on S^{k-1} and counts the
    m = (k+q)-subsets that positively span R^k.  Dimensions 1 through 3 use
    the exact counting shortcuts; higher k enumerates subsets through the LP
    predicate.
    """
    if d < 1 or k < 1 or q < 1 or q >= d:
        raise InvalidInputError("requires d > q >= 1 and k >= 1")
    if reps < 1:
        raise InvalidInputError("reps must be positive")
    n = d + k
    m = k + q
    if comb(n, m) > DUAL_COUNT_BUDGET:
        raise BudgetExceededError("fluctuation simulation exceeds subset budget")
    total = comb(n, m)
    gen = rng.generator

    if k == 1:
        table = _comb_table(n, m)
        f = np.empty(reps, dtype=float)
        chunk = max(1, _CHUNK_SCALARS // n)
        for start in range(0, reps, chunk):
            stop = min(reps, start + chunk)
            signs = gen.integers(0, 2, size=(stop - start, n))
            n_plus = signs.sum(axis=1)
            f[start:stop] = total - table[n_plus] - table[n - n_plus]
    elif k == 2:
        f = np.empty(reps, dtype=float)
        chunk = max(1, _CHUNK_SCALARS // n)
        for start in range(0, reps, chunk):
            stop = min(reps, start + chunk)
            angles = gen.uniform(0.0, 2.0 * np.pi, size=(stop - start, n))
            f[start:stop] = geometry.circle_spanning_subset_count_batch(angles, m)
    elif k == 3:
        f = np.empty(reps, dtype=float)
        # Per-sample scalars: pairwise cross/dot tensors plus the subset masks.
        per_sample = n**3 + n * (n - 1) * total
        chunk = max(1, min(5 * _CHUNK_SCALARS // per_sample, 4096))
        for start in range(0, reps, chunk):
            stop = min(reps, start + chunk)
            g = gen.standard_normal((stop - start, n, 3))
            g /= np.linalg.norm(g, axis=2, keepdims=True)
            f[start:stop] = geometry.sphere3_spanning_subset_count_batch(g, m)
    else:
        f = np.empty(reps, dtype=float)
        for i in range(reps):
            cfg = SphereConfig(sample_sphere_points(k, n, rng), k)
            f[i] = dual_face_count(cfg, m)

    u = f / total
    p0 = float(wendel_p(m, k))
    return FluctuationResult(d, k, q, u, d * (u - p0))


def limit_law_comparison(fluct: FluctuationResult, qk_samples, k: int, q: int,
                         alpha: float = 1e-3) -> TestReport:
    """Two-sample KS comparison of scaled fluctuations against the limit law.

    The Q_k samples are mapped through x -> limit_constant(k, q) (1 - x)
    before comparison.
    """
    qk = np.asarray(qk_samples, dtype=float)
    if fluct.scaled.size == 0 or qk.size == 0:
        raise InvalidInputError("both sample sets must be nonempty")
    transformed = limit_constant(k, q) * (1.0 - qk)
    return ks_two_sample(fluct.scaled, transformed, alpha=alpha,
                         description=f"face-count fluctuation vs limit law (k={k}, q={q})")


@dataclass
class IndependenceReport:
    """Empirical joint behavior of two face events."""

    p1: float
    p2: float
    joint: float
    reps: int
    marginal_target: tuple
    tests: list

    @property
    def all_pass(self) -> bool:
        return all(t.passed for t in self.tests)


def independence_check(n: int, d: int, idx1, idx2, reps: int, rng: Rng) -> IndependenceReport:
    """Empirically verify independence of two covering face events.

    Requires idx1 and idx2 (0-based) to cover all n indices, each of size at
    most d-1, with d >= 3; the dual complements are then disjoint, which is
    the structural source of independence.  Marginals are also compared to
    their exact values p(n - |I|, n - d).
    """
    i1 = sorted(set(int(i) for i in idx1))
    i2 = sorted(set(int(i) for i in idx2))
    if d < 3:
        raise InvalidInputError("requires d >= 3")
    if set(i1) | set(i2) != set(range(n)):
        raise InvalidInputError("index sets must cover all n indices")
    if len(i1) > d - 1 or len(i2) > d - 1:
        raise InvalidInputError("index sets must have at most d-1 elements")
    comp1 = [j for j in range(n) if j not in i1]
    comp2 = [j for j in range(n) if j not in i2]
    assert not set(comp1) & set(comp2)

    use_facet = len(i1) == d - 1 and len(i2) == d - 1
    if use_facet:
        hits1 = np.zeros(reps, dtype=bool)
        hits2 = np.zeros(reps, dtype=bool)
        chunk = max(1, _CHUNK_SCALARS // (n * d))
        gen = rng.generator
        done = 0
        while done < reps:
            b = min(chunk, reps - done)
            pts = gen.standard_normal((b, n, d))
            pts /= np.linalg.norm(pts, axis=2, keepdims=True)
            hits1[done : done + b] = geometry.facet_indicator_batch(pts, i1, comp1)
            hits2[done : done + b] = geometry.facet_indicator_batch(pts, i2, comp2)
            done += b
    else:
        hits1 = np.zeros(reps, dtype=bool)
        hits2 = np.zeros(reps, dtype=bool)
        for r in range(reps):
            cfg = SphereConfig(sample_sphere_points(d, n, rng), d)
            hits1[r] = is_face(cfg, i1)
            hits2[r] = is_face(cfg, i2)

    p1 = float(hits1.mean())
    p2 = float(hits2.mean())
    joint = float((hits1 & hits2).mean())
    target1 = float(face_event_probability(n, d, len(i1)))
    target2 = float(face_event_probability(n, d, len(i2)))

    se = lambda p: sqrt(max(p * (1 - p), 1e-12) / reps)
    tests = [
        z_test(p1, target1, se(target1), description="marginal 1 vs exact"),
        z_test(p2, target2, se(target2), description="marginal 2 vs exact"),
        z_test(joint, target1 * target2,
               sqrt(max(target1 * target2 * (1 - target1 * target2), 1e-12) / reps),
               description="joint vs product of exact marginals"),
        z_test(joint, p1 * p2,
               sqrt(max(p1 * p2 * (1 - p1 * p2), 1e-12) / reps) if p1 * p2 > 0 else 1.0,
               description="joint vs product of empirical marginals"),
    ]
    return IndependenceReport(p1, p2, joint, reps, (target1, target2), tests)


@dataclass
class ConcentrationReport:
    """Empirical exceedance frequencies against the Hoeffding-type bound."""

    n: int
    d: int
    ell: int
    t_grid: list
    empirical: list
    bounds: list
    tests: list

    @property
    def all_pass(self) -> bool:
        return all(t.passed for t in self.tests)


def concentration_check(n: int, d: int, ell: int, t_grid, reps: int, rng: Rng) -> ConcentrationReport:
    """Check P[|f_ell/C(n,ell) - p| >= t] <= 2 exp(-2 t^2 floor(n/(n-ell)))."""
    if not (n > d >= 2) or not (0 <= ell <= d - 1):
        raise InvalidInputError("requires n > d >= 2 and 0 <= ell <= d-1")
    k = n - d
    q = d - ell
    fluct = simulate_fluctuation(d, k, q, reps, rng)
    p0 = fluct.mean_target
    dev = np.abs(fluct.u_stats - p0)
    empirical, bounds, tests = [], [], []
    from .stats import bound_check

    for t in t_grid:
        emp = float((dev >= t).mean())
        bnd = hoeffding_bound(n, ell, float(t))
        stderr = sqrt(max(emp * (1 - emp), 1e-12) / reps)
        empirical.append(emp)
        bounds.append(bnd)
        tests.append(bound_check(emp, bnd, stderr, description=f"exceedance at t={t}"))
    return ConcentrationReport(n, d, ell, list(t_grid), empirical, bounds, tests)
