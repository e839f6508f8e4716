"""Exact low-dimensional geometric predicates.

These routines decide positive-spanning and half-space questions for points
on S^0, S^1, and S^2 by direct geometry (sign counts, angular gaps, and
cross-product witnesses) instead of linear programming.  They serve two
roles: independent oracles for the LP-based predicates in the test suite,
and fast vectorized paths for Monte Carlo experiments.  All of them assume
general position (no coincident or antipodal pairs, no three coplanar with
the origin on S^2), which holds almost surely for the random inputs used.
"""

from math import comb

import numpy as np

SIGN_TOL = 1e-12


def max_angular_gap(angles: np.ndarray) -> float:
    """Largest circular gap (radians) between consecutive sorted angles."""
    a = np.sort(np.asarray(angles, dtype=float))
    if a.size == 1:
        return 2.0 * np.pi
    gaps = np.diff(a, append=a[0] + 2.0 * np.pi)
    return float(gaps.max())


def circle_points_span(angles: np.ndarray) -> bool:
    """Whether points at the given angles positively span the plane.

    Equivalent to the largest angular gap being below pi.
    """
    return max_angular_gap(angles) < np.pi


def points2d_to_angles(points: np.ndarray) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    return np.arctan2(pts[..., 1], pts[..., 0])


def wedge_fraction(angles: np.ndarray) -> float:
    """Normalized angular measure of the positive hull of circle points.

    Returns 1.0 when the points positively span the plane, otherwise the arc
    fraction (2*pi - largest gap) / (2*pi).
    """
    g = max_angular_gap(angles)
    if g < np.pi:
        return 1.0
    return (2.0 * np.pi - g) / (2.0 * np.pi)


def signs_span_line(values: np.ndarray) -> bool:
    """Whether points of S^0 (signs) positively span R^1: both signs present."""
    v = np.asarray(values, dtype=float).ravel()
    return bool((v > 0).any() and (v < 0).any())


def halfplane_start_counts(sorted_angles: np.ndarray) -> np.ndarray:
    """For each point, the number of other points within the open arc of
    length pi that starts just after it (counterclockwise).

    Input must be sorted ascending.  Vectorized over a trailing axis of
    shape (..., n).
    """
    a = np.asarray(sorted_angles, dtype=float)
    n = a.shape[-1]
    flat = a.reshape(-1, n)
    ext = np.concatenate([flat, flat + 2.0 * np.pi], axis=1)
    counts = np.empty_like(flat, dtype=np.int64)
    for r in range(flat.shape[0]):
        # Points j != i with angle in (theta_i, theta_i + pi).
        counts[r] = np.searchsorted(ext[r], flat[r] + np.pi, side="left") - np.arange(n) - 1
    return counts.reshape(a.shape)


def circle_spanning_subset_count(angles: np.ndarray, m: int) -> int:
    """Number of m-subsets of circle points that positively span the plane.

    Counts the complement: a non-spanning subset lies in an open arc of
    length pi and has a unique first member i (the point after the subset's
    big gap), contributing C(c_i, m-1) subsets where c_i counts points in
    the arc (theta_i, theta_i + pi).
    """
    a = np.sort(np.asarray(angles, dtype=float).ravel())
    n = a.size
    if m > n:
        return 0
    counts = halfplane_start_counts(a)
    nonspanning = sum(comb(int(c), m - 1) for c in counts)
    return comb(n, m) - nonspanning


def circle_spanning_subset_count_batch(angle_rows: np.ndarray, m: int) -> np.ndarray:
    """Vectorized circle_spanning_subset_count over rows of angles."""
    a = np.sort(np.asarray(angle_rows, dtype=float), axis=1)
    reps, n = a.shape
    if m > n:
        return np.zeros(reps, dtype=np.int64)
    counts = halfplane_start_counts(a)
    table = np.array([comb(c, m - 1) for c in range(n)], dtype=np.int64)
    return comb(n, m) - table[counts].sum(axis=1)


def open_halfplane_exists(points2d: np.ndarray) -> bool:
    """Whether all planar points lie strictly inside some open half-plane."""
    return max_angular_gap(points2d_to_angles(points2d)) > np.pi


def positive_vector_in_plane_span(basis_pairs: np.ndarray) -> np.ndarray:
    """Batched test: does span{b1, b2} contain a strictly positive vector?

    basis_pairs has shape (..., n, 2): row i holds the two basis coordinates
    of coordinate i.  A strictly positive combination exists iff the rows,
    read as plane vectors, fit in an open half-plane.
    """
    b = np.asarray(basis_pairs, dtype=float)
    ang = np.arctan2(b[..., 1], b[..., 0])
    s = np.sort(ang, axis=-1)
    gaps = np.diff(s, axis=-1, append=s[..., :1] + 2.0 * np.pi)
    return gaps.max(axis=-1) > np.pi


def sphere3_in_closed_hemisphere(points: np.ndarray) -> bool:
    """Whether points on S^2 all lie in some closed hemisphere.

    Witness search over extreme rays: a nonzero feasibility cone for generic
    points has an extreme ray orthogonal to two of them, so it suffices to
    test the cross product of every ordered pair.
    """
    pts = np.asarray(points, dtype=float)
    n = pts.shape[0]
    if n <= 2:
        return True
    cross = np.cross(pts[:, None, :], pts[None, :, :])
    dots = np.einsum("ijk,lk->ijl", cross, pts)
    ok = (dots >= -SIGN_TOL).all(axis=2)
    ok[np.arange(n), np.arange(n)] = False
    return bool(ok.any())


def sphere3_spans(points: np.ndarray) -> bool:
    """Whether points on S^2 positively span R^3 (generic position)."""
    return not sphere3_in_closed_hemisphere(points)


def sphere3_spanning_subset_count(points: np.ndarray, m: int) -> int:
    """Number of m-subsets of S^2 points that positively span R^3."""
    return int(sphere3_spanning_subset_count_batch(np.asarray(points)[None, :, :], m)[0])


def sphere3_spanning_subset_count_batch(point_batches: np.ndarray, m: int) -> np.ndarray:
    """Vectorized subset-spanning count for batches of S^2 configurations.

    point_batches has shape (B, n, 3) with n <= 62.  For each batch entry,
    counts m-subsets whose positive hull is R^3 by eliminating subsets that
    admit a closed-hemisphere witness from an ordered pair's cross product.
    """
    pts = np.asarray(point_batches, dtype=float)
    b, n, _ = pts.shape
    if n > 62:
        raise ValueError("bitmask subset counting supports at most 62 points")
    if m > n:
        return np.zeros(b, dtype=np.int64)
    total = comb(n, m)

    pair_i, pair_j = np.where(~np.eye(n, dtype=bool))
    cross = np.cross(pts[:, pair_i, :], pts[:, pair_j, :])
    dots = np.einsum("bpk,bnk->bpn", cross, pts)
    weights = np.int64(1) << np.arange(n, dtype=np.int64)
    badmask = (dots < -SIGN_TOL).astype(np.int64) @ weights

    from itertools import combinations

    submasks = np.fromiter(
        (sum(1 << i for i in idx) for idx in combinations(range(n), m)),
        dtype=np.int64,
        count=total,
    )
    pairmasks = ((np.int64(1) << pair_i.astype(np.int64)) | (np.int64(1) << pair_j.astype(np.int64)))

    nonspanning = np.zeros(b, dtype=np.int64)
    covered = np.zeros((b, total), dtype=bool)
    for p in range(pair_i.size):
        eligible = (pairmasks[p] & ~submasks) == 0
        hits = (badmask[:, p : p + 1] & submasks[None, :]) == 0
        covered |= hits & eligible[None, :]
    nonspanning = covered.sum(axis=1)
    return total - nonspanning


def facet_indicator_batch(points: np.ndarray, face_idx, rest_idx) -> np.ndarray:
    """Batched facet test for index sets of size dim-1.

    points has shape (B, n, dim); face_idx lists dim-1 indices and rest_idx
    the complement.  The witness direction is the nullvector of the face
    rows; the set is a facet iff the remaining points all lie strictly on
    one side of it.
    """
    pts = np.asarray(points, dtype=float)
    bsz, n, dim = pts.shape
    face_idx = list(face_idx)
    rest_idx = list(rest_idx)
    if len(face_idx) != dim - 1:
        raise ValueError("facet test needs exactly dim-1 indices")
    sub = pts[:, face_idx, :]
    # Witness direction: right-singular vector of the smallest singular value.
    _, _, vh = np.linalg.svd(sub)
    u = vh[:, -1, :]
    dots = np.einsum("bd,bkd->bk", u, pts[:, rest_idx, :])
    pos = (dots > SIGN_TOL).all(axis=1)
    neg = (dots < -SIGN_TOL).all(axis=1)
    return pos | neg
