"""Coupled construction and verification of linearly Gale-dual configurations.

A Gaussian matrix A of shape (d, d+k) and an orthonormal basis B of its
right nullspace (rotated by a Haar-random k x k orthogonal matrix so the
dual points are not axis-aligned artifacts of the QR factorization) give
two vector configurations with orthogonal complementary row spaces.  The
normalized columns of A are i.i.d. uniform on S^{d-1}; faces of their cone
correspond, outcome by outcome, to complements that positively span on the
dual side.  The marginal law of the dual points under this construction is
not claimed to be i.i.d. uniform; distributional experiments sample the
dual sphere directly.
"""

from dataclasses import dataclass, field

import numpy as np

from .cones import is_face, is_positive_spanning
from .errors import InvalidInputError
from .sampling import Rng, SphereConfig, orthonormal_nullspace_basis, sample_gaussian_matrix

ORTHOGONALITY_TOL = 1e-9


@dataclass(frozen=True)
class GaleDualPair:
    """Primal and dual sphere configurations with their generator matrices.

    Column i of A is scales_primal[i] times primal point i, and likewise
    for B; A @ B.T vanishes and both matrices have full row rank.
    """

    primal: SphereConfig
    dual: SphereConfig
    a: np.ndarray
    b: np.ndarray
    scales_primal: np.ndarray
    scales_dual: np.ndarray

    @property
    def n(self) -> int:
        return self.primal.n


@dataclass
class CorrespondenceReport:
    """Per-subset agreement record for the face correspondence."""

    subsets: list = field(default_factory=list)
    primal_face: list = field(default_factory=list)
    dual_spanning: list = field(default_factory=list)

    @property
    def disagreements(self) -> list:
        return [
            s
            for s, pf, ds in zip(self.subsets, self.primal_face, self.dual_spanning)
            if pf != ds
        ]

    @property
    def all_agree(self) -> bool:
        return not self.disagreements


def haar_orthogonal(dim: int, rng: Rng) -> np.ndarray:
    """Haar-distributed orthogonal matrix via QR of a Gaussian matrix."""
    g = sample_gaussian_matrix(dim, dim, rng)
    q, r = np.linalg.qr(g)
    return q * np.sign(np.diag(r))


def coupled_sample(d: int, k: int, rng: Rng, max_retries: int = 8) -> GaleDualPair:
    """Draw a coupled Gale-dual pair with n = d + k points on each side.

    Resamples internally on (probability zero) numerical rank deficiency.
    """
    if d < 1 or k < 1:
        raise InvalidInputError("d and k must be positive")
    n = d + k
    for _ in range(max_retries):
        a = sample_gaussian_matrix(d, n, rng)
        try:
            kernel = orthonormal_nullspace_basis(a)
        except Exception:
            continue
        b = haar_orthogonal(k, rng) @ kernel
        scales_a = np.linalg.norm(a, axis=0)
        scales_b = np.linalg.norm(b, axis=0)
        if scales_a.min() <= 0 or scales_b.min() <= 0:
            continue
        primal = SphereConfig((a / scales_a).T, d)
        dual = SphereConfig((b / scales_b).T, k)
        return GaleDualPair(primal, dual, a, b, scales_a, scales_b)
    raise InvalidInputError("could not draw a nondegenerate coupled sample")


def verify_duality(pair: GaleDualPair) -> bool:
    """Check the defining properties: orthogonality, ranks, column scaling."""
    a, b = pair.a, pair.b
    d, n = a.shape
    k = b.shape[0]
    if n != d + k or b.shape[1] != n:
        return False
    if np.max(np.abs(a @ b.T)) > ORTHOGONALITY_TOL:
        return False
    if np.linalg.matrix_rank(a) != d or np.linalg.matrix_rank(b) != k:
        return False
    recon_a = pair.scales_primal * pair.primal.points.T
    recon_b = pair.scales_dual * pair.dual.points.T
    return bool(
        np.max(np.abs(recon_a - a)) <= 1e-9 and np.max(np.abs(recon_b - b)) <= 1e-9
    )


def verify_face_correspondence(pair: GaleDualPair, subsets) -> CorrespondenceReport:
    """Evaluate the primal face test against the dual spanning test.

    For each index set I with |I| <= d - 1, records whether the primal
    sub-cone is a face and whether the dual complement positively spans.
    Disagreements are data, surfaced in the report.
    """
    n = pair.n
    d = pair.primal.ambient_dim
    report = CorrespondenceReport()
    for subset in subsets:
        idx = sorted(set(int(i) for i in subset))
        if len(idx) > d - 1:
            raise InvalidInputError("subsets must have at most d-1 indices")
        complement = [j for j in range(n) if j not in idx]
        report.subsets.append(tuple(idx))
        report.primal_face.append(is_face(pair.primal, idx))
        report.dual_spanning.append(is_positive_spanning(pair.dual.subset(complement)))
    return report
