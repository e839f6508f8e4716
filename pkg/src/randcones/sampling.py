"""Reproducible sampling primitives and the dense linear algebra they feed.

Randomness is organized around counter-based Philox streams keyed by a
``(seed, stream_id)`` pair.  Two Rng values with the same key replay the
same sequence bit for bit on every platform, and distinct stream ids give
statistically independent streams, so parallel workers can draw without
any coordination.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .errors import BudgetExceededError, DegenerateInputError, InvalidInputError

UNIT_NORM_TOL = 1e-12
RANK_TOL = 1e-10
GENERAL_POSITION_BUDGET = 10**6


@dataclass
class Rng:
    """Deterministic random stream keyed by (seed, stream_id).

    Wraps a Philox counter-based bit generator.  The underlying generator is
    created lazily and advances as the stream is consumed; recreate the Rng
    with the same key to replay the sequence from the start.
    """

    seed: int = 0
    stream_id: int = 0
    _gen: np.random.Generator = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if not (0 <= int(self.seed) < 2**64 and 0 <= int(self.stream_id) < 2**64):
            raise InvalidInputError("seed and stream_id must be 64-bit unsigned integers")

    @property
    def generator(self) -> np.random.Generator:
        if self._gen is None:
            key = np.array([self.seed, self.stream_id], dtype=np.uint64)
            self._gen = np.random.Generator(np.random.Philox(key=key))
        return self._gen

    def stream(self, stream_id: int) -> "Rng":
        """Fresh Rng with the same seed and a different stream id."""
        return Rng(self.seed, stream_id)


@dataclass(frozen=True)
class SphereConfig:
    """n labeled unit vectors in R^dim, stored as the rows of an (n, dim) array."""

    points: np.ndarray
    ambient_dim: int

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] < 1:
            raise InvalidInputError("points must be a nonempty (n, dim) array")
        if pts.shape[1] != self.ambient_dim:
            raise InvalidInputError("point dimension does not match ambient_dim")
        if not np.all(np.isfinite(pts)):
            raise InvalidInputError("points must be finite")
        norms = np.linalg.norm(pts, axis=1)
        if np.max(np.abs(norms - 1.0)) > UNIT_NORM_TOL:
            raise InvalidInputError("all points must have unit norm within 1e-12")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    def subset(self, indices) -> "SphereConfig":
        idx = list(indices)
        return SphereConfig(self.points[idx], self.ambient_dim)

    def negated(self) -> "SphereConfig":
        return SphereConfig(-self.points, self.ambient_dim)


def sample_unit_sphere(dim: int, rng: Rng) -> np.ndarray:
    """One point uniform on S^{dim-1}, via normalized Gaussians.

    For dim = 1 the sphere is the two-point set {+1, -1}.
    """
    return sample_sphere_points(dim, 1, rng)[0]


def sample_sphere_points(dim: int, n: int, rng: Rng) -> np.ndarray:
    """(n, dim) array of independent uniform points on S^{dim-1}."""
    if dim < 1:
        raise InvalidInputError("dim must be >= 1")
    if n < 1:
        raise InvalidInputError("n must be >= 1")
    g = rng.generator.standard_normal((n, dim))
    norms = np.linalg.norm(g, axis=1, keepdims=True)
    # Zero norm has probability 0; resample defensively if it ever occurs.
    while np.any(norms == 0.0):
        bad = norms[:, 0] == 0.0
        g[bad] = rng.generator.standard_normal((int(bad.sum()), dim))
        norms = np.linalg.norm(g, axis=1, keepdims=True)
    return g / norms


def sample_sphere_config(dim: int, n: int, rng: Rng) -> SphereConfig:
    return SphereConfig(sample_sphere_points(dim, n, rng), dim)


def sample_gaussian_matrix(rows: int, cols: int, rng: Rng) -> np.ndarray:
    """(rows, cols) matrix with i.i.d. standard Gaussian entries."""
    if rows < 1 or cols < 1:
        raise InvalidInputError("rows and cols must be >= 1")
    return rng.generator.standard_normal((rows, cols))


def orthonormal_nullspace_basis(m: np.ndarray) -> np.ndarray:
    """Orthonormal basis K of the right nullspace of a full-row-rank matrix.

    For M of shape (r, c) with r <= c, returns K of shape (c - r, c) with
    K @ M.T = 0 and K @ K.T = I.  Rank deficiency (a QR diagonal entry of
    M.T below 1e-10) raises DegenerateInputError.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2:
        raise InvalidInputError("expected a 2-d matrix")
    rows, cols = m.shape
    if rows > cols:
        raise InvalidInputError("matrix must have rows <= cols")
    q, r = np.linalg.qr(m.T, mode="complete")
    diag = np.abs(np.diag(r[:rows, :rows]))
    if diag.size and diag.min() <= RANK_TOL:
        raise DegenerateInputError("matrix is numerically rank-deficient")
    return q[:, rows:].T.copy()


def general_position_check(config: SphereConfig) -> bool:
    """Whether every min(n, dim)-subset of the points is linearly independent.

    Exhaustive over all subsets; raises BudgetExceededError when the subset
    count exceeds 10^6 (callers then rely on almost-sure general position).
    Independence is judged by |det| > 1e-10 for square subsets and by the
    smallest singular value otherwise (points are already unit vectors, so
    no further column scaling is needed).
    """
    pts = config.points
    n, dim = pts.shape
    s = min(n, dim)
    if comb(n, s) > GENERAL_POSITION_BUDGET:
        raise BudgetExceededError("too many subsets for exhaustive general-position check")
    if s == dim:
        for idx in combinations(range(n), s):
            if abs(np.linalg.det(pts[list(idx)])) <= RANK_TOL:
                return False
        return True
    for idx in combinations(range(n), s):
        sv = np.linalg.svd(pts[list(idx)], compute_uv=False)
        if sv[-1] <= RANK_TOL:
            return False
    return True
