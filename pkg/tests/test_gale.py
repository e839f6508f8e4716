from itertools import combinations

import numpy as np

from randcones.cones import is_face
from randcones.gale import GaleDualPair, coupled_sample, verify_duality, verify_face_correspondence
from randcones.sampling import Rng, general_position_check


def test_coupled_sample_duality_axioms():
    rng = Rng(400, 0)
    for _ in range(1000):
        pair = coupled_sample(3, 2, rng)
        assert verify_duality(pair)
        assert np.max(np.abs(pair.a @ pair.b.T)) <= 1e-9


def test_verify_duality_negative_cases():
    pair = coupled_sample(3, 2, Rng(401, 0))
    zeroed = GaleDualPair(pair.primal, pair.dual, pair.a,
                          np.vstack([pair.b[:1], np.zeros((1, pair.n))]),
                          pair.scales_primal, pair.scales_dual)
    assert not verify_duality(zeroed)
    perturbed_b = pair.b.copy()
    perturbed_b[0, 0] += 1e-3
    perturbed = GaleDualPair(pair.primal, pair.dual, pair.a, perturbed_b,
                             pair.scales_primal, pair.scales_dual)
    assert not verify_duality(perturbed)


def test_face_correspondence_all_small_subsets():
    rng = Rng(402, 0)
    for _ in range(30):
        pair = coupled_sample(3, 2, rng)
        subsets = [list(t) for size in range(0, 3) for t in combinations(range(5), size)]
        report = verify_face_correspondence(pair, subsets)
        assert report.all_agree


def test_empty_set_correspondence():
    # Pointedness of the primal cone matches the dual spanning the space.
    rng = Rng(403, 0)
    for _ in range(50):
        pair = coupled_sample(4, 2, rng)
        report = verify_face_correspondence(pair, [[]])
        assert report.all_agree


def test_sign_pattern_oracle_d2_k1():
    # With a one-dimensional dual, a singleton is a face exactly when the
    # other two dual values carry opposite signs.
    rng = Rng(404, 0)
    for _ in range(100):
        pair = coupled_sample(2, 1, rng)
        dual_vals = pair.dual.points[:, 0]
        for i in range(3):
            others = [j for j in range(3) if j != i]
            expected = dual_vals[others[0]] * dual_vals[others[1]] < 0
            assert is_face(pair.primal, [i]) == expected


def test_general_position_transfer():
    rng = Rng(405, 0)
    for _ in range(1000):
        pair = coupled_sample(3, 2, rng)
        assert general_position_check(pair.primal)
        assert general_position_check(pair.dual)


def test_primal_marginal_is_uniform():
    # Normalized Gaussian columns: first coordinate of each primal point is
    # symmetric around zero.
    rng = Rng(406, 0)
    firsts = []
    for _ in range(2000):
        pair = coupled_sample(3, 2, rng)
        firsts.extend(pair.primal.points[:, 0].tolist())
    arr = np.asarray(firsts)
    assert abs(arr.mean()) < 4.0 / np.sqrt(arr.size)
