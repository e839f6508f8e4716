"""Geometric predicates and enumerations on cones spanned by unit vectors.

The positive hull pos(a_1..a_n) of a sphere configuration is examined
through three questions: does it fill the whole space, is the sub-cone on a
given index set a face, and how many faces of each dimension are there.
All predicates reduce to the LP feasibility kernel, with exact sign/angle
shortcuts for ambient dimension 1 and 2 and a cross-product hemisphere
witness for dimension 3 used by the subset-counting paths.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb, sqrt

import numpy as np

from . import geometry
from .errors import (
    BudgetExceededError,
    DegenerateInputError,
    InvalidInputError,
    UnsupportedCaseError,
)
from .lp import WITNESS_SLACK_TOL, face_witness, positive_dependence_margin
from .sampling import RANK_TOL, Rng, SphereConfig, sample_sphere_points

FVECTOR_BUDGET = 10**7
DUAL_COUNT_BUDGET = 10**8
NEIGHBORLINESS_BUDGET = 10**6


@dataclass(frozen=True)
class FVector:
    """Face counts f_0..f_{dim-1} of a cone, with a full-space flag.

    When the cone is all of R^dim its proper faces are undefined; by
    convention the counts are reported as zero and is_full_space is set.
    """

    counts: tuple
    is_full_space: bool


@dataclass(frozen=True)
class AngleEstimate:
    """Monte Carlo estimate of a solid angle, with binomial standard error."""

    value: float
    stderr: float
    n_samples: int

    def __post_init__(self):
        if not (self.value - 4 * self.stderr >= -0.01 and self.value + 4 * self.stderr <= 1.01):
            raise InvalidInputError("angle estimate outside plausible [0, 1] range")


@dataclass(frozen=True)
class VertexClass:
    """Vertex-count classification of the spherical polytope of a cone."""

    kind: str  # full_sphere | simplex | v_n_minus_1 | v_n | other
    vertex_count: int


def is_positive_spanning(config: SphereConfig) -> bool:
    """Whether pos(points) = R^dim.

    Dimension 1 reduces to both signs being present; otherwise the test is
    full linear rank plus a strictly positive dependence (LP margin).
    """
    pts = config.points
    dim = config.ambient_dim
    if dim == 1:
        return geometry.signs_span_line(pts[:, 0])
    if pts.shape[0] < dim:
        return False
    sv = np.linalg.svd(pts, compute_uv=False)
    if sv[dim - 1] <= RANK_TOL:
        return False
    return positive_dependence_margin(pts).feasible


def is_face(config: SphereConfig, face_indices) -> bool:
    """Whether pos(points[face_indices]) is a face of pos(all points).

    Requires len(face_indices) <= dim - 1 and general position (almost sure
    for random configurations).  Indices are 0-based.  The empty set tests
    whether the cone is pointed.
    """
    idx = sorted(set(int(i) for i in face_indices))
    n, dim = config.points.shape
    if len(idx) >= dim:
        raise UnsupportedCaseError("face test requires fewer than dim indices")
    verdict = face_witness(config, idx)
    if not verdict.feasible:
        return False
    # Guard for near-degenerate numeric input: the witness must keep every
    # non-face generator strictly positive.
    u = verdict.certificate
    rest = [j for j in range(n) if j not in idx]
    if rest and float(min(config.points[rest] @ u)) <= WITNESS_SLACK_TOL:
        return False
    return True


def f_vector(config: SphereConfig) -> FVector:
    """Exhaustive face counts f_0..f_{dim-1} by testing every index subset."""
    n, dim = config.points.shape
    total = sum(comb(n, ell) for ell in range(dim))
    if total > FVECTOR_BUDGET:
        raise BudgetExceededError("f_vector enumeration exceeds subset budget")
    if is_positive_spanning(config):
        return FVector(tuple(0 for _ in range(dim)), True)
    counts = []
    for ell in range(dim):
        c = sum(1 for idx in combinations(range(n), ell) if is_face(config, idx))
        counts.append(c)
    return FVector(tuple(counts), False)


def dual_face_count(config: SphereConfig, m: int) -> int:
    """Number of m-subsets of the points whose positive hull is R^dim.

    Closed form for dimension 1 (sign counts), gap counting for dimension 2,
    a cross-product hemisphere witness for dimension 3, and LP enumeration
    otherwise.  Raises BudgetExceededError when C(n, m) > 1e8.
    """
    pts = config.points
    n, dim = pts.shape
    if m > n:
        raise InvalidInputError("subset size exceeds number of points")
    if comb(n, m) > DUAL_COUNT_BUDGET:
        raise BudgetExceededError("dual_face_count exceeds subset budget")
    if dim == 1:
        n_plus = int((pts[:, 0] > 0).sum())
        n_minus = n - n_plus
        return comb(n, m) - comb(n_plus, m) - comb(n_minus, m)
    if dim == 2:
        return geometry.circle_spanning_subset_count(geometry.points2d_to_angles(pts), m)
    if dim == 3 and n <= 62:
        return geometry.sphere3_spanning_subset_count(pts, m)
    count = 0
    for idx in combinations(range(n), m):
        if is_positive_spanning(config.subset(idx)):
            count += 1
    return count


def solid_angle(config: SphereConfig, n_samples: int, rng: Rng) -> AngleEstimate:
    """Monte Carlo solid angle of a simplicial cone (n = dim generators).

    Membership of a uniform sphere point is exact: solve the dim x dim
    system and test the coefficients for nonnegativity.
    """
    pts = config.points
    n, dim = pts.shape
    if n != dim:
        raise InvalidInputError("solid_angle requires exactly dim generators")
    if n_samples < 1:
        raise InvalidInputError("need at least one sample")
    gen_matrix = pts.T
    sv = np.linalg.svd(gen_matrix, compute_uv=False)
    if sv[-1] <= RANK_TOL:
        raise DegenerateInputError("generators are linearly dependent")
    u = sample_sphere_points(dim, n_samples, rng)
    coeffs = np.linalg.solve(gen_matrix, u.T)
    inside = (coeffs >= 0.0).all(axis=0)
    p_hat = float(inside.mean())
    stderr = sqrt(p_hat * (1.0 - p_hat) / n_samples)
    return AngleEstimate(p_hat, stderr, n_samples)


def spherical_vertex_class(config: SphereConfig) -> VertexClass:
    """Classify the spherical polytope of the cone by its vertex count."""
    n, dim = config.points.shape
    if n < dim:
        raise InvalidInputError("need at least dim points")
    if is_positive_spanning(config):
        return VertexClass("full_sphere", 0)
    count = sum(1 for i in range(n) if is_face(config, [i]))
    if count == n:
        return VertexClass("v_n", count)
    if count == dim:
        return VertexClass("simplex", count)
    if count == n - 1:
        return VertexClass("v_n_minus_1", count)
    return VertexClass("other", count)


def neighborliness_events(config: SphereConfig, ell: int) -> tuple:
    """The pair of half-sphere covering events used in neighborliness laws.

    event_b: every (n - ell)-subset of the points positively spans R^dim,
    i.e. the corresponding closed half-spheres have empty intersection.
    event_c: the same test on the negated configuration.  For ell = n the
    events hold vacuously.
    """
    n, dim = config.points.shape
    if ell < 0 or ell > n:
        raise InvalidInputError("ell must be in [0, n]")
    size = n - ell
    if size == 0:
        return True, True
    if comb(n, size) > NEIGHBORLINESS_BUDGET:
        raise BudgetExceededError("neighborliness enumeration exceeds budget")

    def _all_span(cfg: SphereConfig) -> bool:
        for idx in combinations(range(n), size):
            if not is_positive_spanning(cfg.subset(idx)):
                return False
        return True

    return _all_span(config), _all_span(config.negated())


def schlafli_face_sample(d: int, k: int, q: int, rng: Rng) -> int:
    """One sample of the q-face count of a random Schlafli cone in R^d.

    Sampling runs entirely on the dual side: draw n = d + k uniform points
    on S^{k-1}, reject while their positive hull is not all of R^k (those
    outcomes correspond to the primal cone filling R^d), then count the
    (k+q)-subsets that positively span.  The rejection implements the
    conditioning of the Schlafli-cone law.
    """
    if d < 1 or k < 1:
        raise InvalidInputError("d and k must be positive")
    if q < 1 or q >= d:
        raise InvalidInputError("face dimension parameter q must satisfy 1 <= q < d")
    n = d + k
    m = k + q
    if comb(n, m) > DUAL_COUNT_BUDGET:
        raise BudgetExceededError("schlafli sample exceeds subset budget")
    while True:
        cfg = SphereConfig(sample_sphere_points(k, n, rng), k)
        if is_positive_spanning(cfg):
            return dual_face_count(cfg, m)
