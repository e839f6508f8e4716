"""Vectorized Monte Carlo kernels for the experiment suite.

These batch routines trade the generic LP predicates for exact linear
algebra and planar geometry so that 1e5 to 1e6 replications finish in
seconds.  Each one is pinned to its LP-based counterpart by agreement
tests on random inputs; they are implementations of the same predicates,
not approximations.
"""

import numpy as np

from . import geometry
from .errors import InvalidInputError
from .sampling import Rng


def sample_sphere_batch(rng: Rng, batch: int, n: int, dim: int) -> np.ndarray:
    """(batch, n, dim) array of independent uniform sphere points."""
    g = rng.generator.standard_normal((batch, n, dim))
    return g / np.linalg.norm(g, axis=2, keepdims=True)


def batch_positive_spanning(points: np.ndarray) -> np.ndarray:
    """Positive-spanning test for batches of n points in R^d with n - d <= 2.

    The strictly positive dependence lives in the nullspace of the
    transposed point matrix.  For corank 1 it exists iff the nullvector has
    entries of one strict sign; for corank 2 iff the per-point coordinate
    pairs fit in an open half-plane.
    """
    pts = np.asarray(points, dtype=float)
    b, n, d = pts.shape
    corank = n - d
    if corank not in (1, 2):
        raise InvalidInputError("batch spanning test supports n - d in {1, 2}")
    u, s, _ = np.linalg.svd(pts, full_matrices=True)
    full_rank = s[:, d - 1] > 1e-10
    null_basis = u[:, :, d:]
    if corank == 1:
        v = null_basis[:, :, 0]
        pos = (v > 1e-13).all(axis=1) | (v < -1e-13).all(axis=1)
        return full_rank & pos
    return full_rank & geometry.positive_vector_in_plane_span(null_basis)


def batch_vertex_counts_3d(points: np.ndarray) -> np.ndarray:
    """Vertex counts of the cones over batches of points on S^2.

    A generator is a vertex (an extreme ray) iff the other points, projected
    onto its orthogonal plane, fit strictly inside an open half-plane.
    Returns 0 for configurations whose positive hull is all of R^3.
    """
    pts = np.asarray(points, dtype=float)
    b, n, d = pts.shape
    if d != 3:
        raise InvalidInputError("vertex-count kernel is specific to R^3")
    counts = np.zeros(b, dtype=np.int64)
    # Per-generator orthonormal plane basis, robust to axis alignment.
    for i in range(n):
        a = pts[:, i, :]
        helper = np.zeros_like(a)
        smallest = np.argmin(np.abs(a), axis=1)
        helper[np.arange(b), smallest] = 1.0
        b1 = np.cross(a, helper)
        b1 /= np.linalg.norm(b1, axis=1, keepdims=True)
        b2 = np.cross(a, b1)
        others = np.delete(pts, i, axis=1)
        x = np.einsum("bkd,bd->bk", others, b1)
        y = np.einsum("bkd,bd->bk", others, b2)
        ang = np.sort(np.arctan2(y, x), axis=1)
        gaps = np.diff(ang, axis=1, append=ang[:, :1] + 2.0 * np.pi)
        counts += gaps.max(axis=1) > np.pi
    if n - d in (1, 2):
        spans = batch_positive_spanning(pts)
        counts[spans] = 0
    return counts


def batch_simplex_membership_fraction(rng: Rng, dim: int, extra: int, reps: int,
                                      chunk: int = 100_000) -> tuple:
    """Fraction of replications where `extra` further uniform points all land
    in the cone of the first `dim` points (membership by exact solve).

    Returns (hits, reps); hits / reps estimates the `extra`-th moment of the
    solid angle of the simplicial cone on `dim` points.
    """
    if dim < 1 or extra < 1 or reps < 1:
        raise InvalidInputError("dim, extra, reps must be positive")
    gen = rng.generator
    hits = 0
    done = 0
    while done < reps:
        bsz = min(chunk, reps - done)
        g = gen.standard_normal((bsz, dim, dim))
        g /= np.linalg.norm(g, axis=2, keepdims=True)
        probes = gen.standard_normal((bsz, extra, dim))
        probes /= np.linalg.norm(probes, axis=2, keepdims=True)
        # Coefficients of each probe in the generator basis; inside the cone
        # iff all coefficients are nonnegative.
        mats = np.swapaxes(g, 1, 2)
        coeff = np.linalg.solve(mats[:, None, :, :], probes[..., None])[..., 0]
        inside = (coeff >= 0.0).all(axis=2).all(axis=1)
        hits += int(inside.sum())
        done += bsz
    return hits, reps


def batch_wedge_alpha_squared(rng: Rng, n: int, reps: int, chunk: int = 200_000) -> np.ndarray:
    """Samples of alpha(cone of n uniform circle points)^2, alpha in (0, 1].

    The planar solid angle is exact: 1 when the points span, otherwise the
    normalized arc length (2 pi - largest gap) / (2 pi).
    """
    gen = rng.generator
    out = np.empty(reps)
    done = 0
    while done < reps:
        bsz = min(chunk, reps - done)
        ang = np.sort(gen.uniform(0.0, 2.0 * np.pi, (bsz, n)), axis=1)
        gaps = np.diff(ang, axis=1, append=ang[:, :1] + 2.0 * np.pi)
        biggest = gaps.max(axis=1)
        alpha = np.where(biggest > np.pi, (2.0 * np.pi - biggest) / (2.0 * np.pi), 1.0)
        out[done : done + bsz] = alpha * alpha
        done += bsz
    return out


def batch_circle_subset_spanning_counts(rng: Rng, n: int, m: int, reps: int,
                                        chunk: int = 50_000) -> np.ndarray:
    """Per-replication counts of m-subsets of n uniform circle points that
    positively span the plane."""
    gen = rng.generator
    out = np.empty(reps)
    done = 0
    while done < reps:
        bsz = min(chunk, reps - done)
        ang = gen.uniform(0.0, 2.0 * np.pi, (bsz, n))
        out[done : done + bsz] = geometry.circle_spanning_subset_count_batch(ang, m)
        done += bsz
    return out


def batch_all_subsets_span_circle(rng: Rng, n: int, subset_size: int, reps: int,
                                  negate: bool = False, chunk: int = 50_000) -> np.ndarray:
    """Indicator per replication that every subset of the given size of n
    uniform circle points positively spans the plane."""
    from math import comb

    gen = rng.generator
    target = comb(n, subset_size)
    out = np.empty(reps, dtype=bool)
    done = 0
    while done < reps:
        bsz = min(chunk, reps - done)
        ang = gen.uniform(0.0, 2.0 * np.pi, (bsz, n))
        if negate:
            ang = ang + np.pi
        counts = geometry.circle_spanning_subset_count_batch(ang, subset_size)
        out[done : done + bsz] = counts == target
        done += bsz
    return out
