from itertools import combinations
from math import comb

import numpy as np

from randcones import geometry, mc
from randcones.cones import is_positive_spanning, spherical_vertex_class
from randcones.sampling import Rng, SphereConfig, sample_sphere_config


def brute_spanning_2d(angles, idx):
    pts = np.stack([np.cos(angles[list(idx)]), np.sin(angles[list(idx)])], axis=1)
    return is_positive_spanning(SphereConfig(pts / np.linalg.norm(pts, axis=1, keepdims=True), 2))


def test_circle_subset_count_vs_lp_enumeration():
    for t in range(15):
        gen = Rng(200, t).generator
        n = int(gen.integers(4, 9))
        m = int(gen.integers(2, n + 1))
        angles = gen.uniform(0, 2 * np.pi, n)
        fast = geometry.circle_spanning_subset_count(angles, m)
        slow = sum(1 for idx in combinations(range(n), m) if brute_spanning_2d(angles, idx))
        assert fast == slow


def test_circle_subset_count_batch_matches_scalar():
    gen = Rng(201, 0).generator
    rows = gen.uniform(0, 2 * np.pi, (30, 7))
    batch = geometry.circle_spanning_subset_count_batch(rows, 3)
    for r in range(30):
        assert batch[r] == geometry.circle_spanning_subset_count(rows[r], 3)


def test_sphere3_witness_vs_lp():
    for t in range(40):
        cfg = sample_sphere_config(3, 6, Rng(202, t))
        assert geometry.sphere3_spans(cfg.points) == is_positive_spanning(cfg)


def test_sphere3_subset_count_vs_lp_enumeration():
    for t in range(10):
        cfg = sample_sphere_config(3, 7, Rng(203, t))
        for m in (3, 4, 5):
            fast = geometry.sphere3_spanning_subset_count(cfg.points, m)
            slow = sum(
                1
                for idx in combinations(range(7), m)
                if is_positive_spanning(cfg.subset(idx))
            )
            assert fast == slow


def test_batch_positive_spanning_matches_lp():
    for corank in (1, 2):
        for t in range(60):
            d = 3
            n = d + corank
            cfg = sample_sphere_config(d, n, Rng(204, 10 * corank + t))
            batch = mc.batch_positive_spanning(cfg.points[None, :, :])[0]
            assert bool(batch) == is_positive_spanning(cfg)


def test_batch_vertex_counts_match_classifier():
    for t in range(120):
        cfg = sample_sphere_config(3, 5, Rng(205, t))
        fast = int(mc.batch_vertex_counts_3d(cfg.points[None, :, :])[0])
        assert fast == spherical_vertex_class(cfg).vertex_count


def test_facet_indicator_matches_face_witness():
    from randcones.cones import is_face

    n, d = 7, 5
    face = [0, 1, 2, 3]
    rest = [4, 5, 6]
    for t in range(120):
        cfg = sample_sphere_config(d, n, Rng(206, t))
        fast = bool(geometry.facet_indicator_batch(cfg.points[None, :, :], face, rest)[0])
        assert fast == is_face(cfg, face)


def test_wedge_fraction():
    # Quarter-plane wedge spans a quarter of the circle.
    angles = np.array([0.0, np.pi / 2.0])
    assert geometry.wedge_fraction(angles) == 0.25
    spanning = np.array([0.0, 2.0, 4.0])
    assert geometry.wedge_fraction(spanning) == 1.0


def test_signs_span_line():
    assert geometry.signs_span_line(np.array([1.0, -1.0]))
    assert not geometry.signs_span_line(np.array([1.0, 1.0]))


def test_halfplane_counts_total():
    gen = Rng(207, 0).generator
    angles = np.sort(gen.uniform(0, 2 * np.pi, 9))
    counts = geometry.halfplane_start_counts(angles)
    # Each of the 36 unordered pairs is separated by an arc < pi on exactly
    # one side, so the c_i counts sum to the number of pairs.
    assert counts.sum() == comb(9, 2)
