import numpy as np
import pytest

from randcones.errors import InvalidInputError, UnboundedProblemError
from randcones.gale import coupled_sample
from randcones.lp import face_witness, positive_dependence_margin, solve_lp
from randcones.sampling import Rng, SphereConfig, sample_sphere_config


def test_symmetric_split():
    # max t with l1 + l2 = 1, l_i >= t: optimum at t = 1/2.
    res = positive_dependence_margin(np.array([[1.0], [-1.0]]))
    assert res.feasible
    assert res.margin == pytest.approx(0.5, abs=1e-12)
    assert np.allclose(res.certificate, [0.5, 0.5])


def test_infeasible_equalities():
    # x = 2 with x <= 1 encoded through a shifted bound.
    res = solve_lp([0.0], [[1.0]], [2.0], [3.0])
    assert not res.feasible


def test_unbounded_detected():
    with pytest.raises(UnboundedProblemError):
        solve_lp([1.0, 0.0], [[0.0, 1.0]], [1.0], [-np.inf, 0.0])


def test_dimension_mismatch():
    with pytest.raises(InvalidInputError):
        solve_lp([1.0, 2.0], [[1.0]], [1.0], [0.0, 0.0])


def test_random_feasible_residuals():
    for t in range(25):
        rng = Rng(100, t).generator
        a = rng.standard_normal((3, 5))
        x0 = rng.random(5) + 0.05
        b = a @ x0
        c = -rng.random(5)  # bounded maximization over the feasible polytope
        res = solve_lp(c, a, b, np.zeros(5))
        assert res.feasible
        assert np.max(np.abs(a @ res.certificate - b)) < 1e-8
        assert res.certificate.min() > -1e-10
        assert res.dual_residual < 1e-8


def test_positive_dependence_examples():
    spanning = positive_dependence_margin(np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, -1.0]]))
    assert spanning.feasible
    assert spanning.margin == pytest.approx(1.0 / 3.0, abs=1e-10)
    nope = positive_dependence_margin(np.eye(2))
    assert not nope.feasible
    line = positive_dependence_margin(np.array([[1.0], [-1.0]]))
    assert line.feasible and line.margin == pytest.approx(0.5)


def test_face_witness_examples():
    cfg = SphereConfig(np.eye(2), 2)
    w = face_witness(cfg, [0])
    assert w.feasible
    # Witness vanishes on e1 and is >= 1 on e2.
    assert abs(w.certificate @ np.array([1.0, 0.0])) <= 1e-8
    assert w.certificate @ np.array([0.0, 1.0]) >= 1.0 - 1e-8

    line = SphereConfig(np.array([[1.0], [-1.0]]), 1)
    assert not face_witness(line, []).feasible

    s = 1.0 / np.sqrt(2.0)
    interior = SphereConfig(np.array([[1.0, 0.0], [0.0, 1.0], [s, s]]), 2)
    assert not face_witness(interior, [2]).feasible


def test_face_witness_full_index_set_boundary():
    cfg = SphereConfig(np.eye(2), 2)
    res = face_witness(cfg, [0, 1])
    assert res.feasible and res.margin == np.inf


def test_certificates_satisfy_system():
    for t in range(40):
        cfg = sample_sphere_config(3, 6, Rng(101, t))
        res = face_witness(cfg, [0])
        if res.feasible:
            u = res.certificate
            assert abs(cfg.points[0] @ u) <= 1e-8
            assert min(cfg.points[1:] @ u) >= 1.0 - 1e-8
        dep = positive_dependence_margin(cfg.points)
        if dep.feasible:
            lam = dep.certificate
            assert np.max(np.abs(lam @ cfg.points)) <= 1e-8
            assert abs(lam.sum() - 1.0) <= 1e-8
            assert lam.min() >= dep.margin - 1e-8


def test_scale_invariance():
    for t in range(50):
        rng = Rng(102, t).generator
        vecs = rng.standard_normal((5, 3))
        a = positive_dependence_margin(vecs)
        b = positive_dependence_margin(2.0 * vecs)
        assert a.feasible == b.feasible


def test_exact_mode_agrees_with_float():
    for t in range(60):
        rng = Rng(103, t).generator
        m = int(rng.integers(2, 7))
        dim = int(rng.integers(1, 4))
        vecs = rng.standard_normal((m, dim))
        fast = positive_dependence_margin(vecs)
        slow = positive_dependence_margin(vecs, exact=True)
        assert fast.feasible == slow.feasible
        if fast.feasible:
            assert fast.margin == pytest.approx(slow.margin, abs=1e-9)


def test_exact_mode_face_witness():
    for t in range(30):
        cfg = sample_sphere_config(3, 6, Rng(104, t))
        for idx in ([], [0], [1, 4]):
            assert face_witness(cfg, idx).feasible == face_witness(cfg, idx, exact=True).feasible


def test_duality_consistency_on_coupled_pairs():
    # Primal witness feasibility must match dual positive-spanning feasibility.
    from itertools import combinations

    rng = Rng(105, 0)
    disagreements = 0
    for s in range(60):
        pair = coupled_sample(3, 2, rng)
        n = pair.n
        for size in range(0, 3):
            for idx in combinations(range(n), size):
                primal = face_witness(pair.primal, idx).feasible
                comp = [j for j in range(n) if j not in idx]
                dual = positive_dependence_margin(pair.dual.points[comp]).feasible
                disagreements += primal != dual
    assert disagreements == 0


def test_2d_sweep_oracle_matches_witness():
    # Interior-generator test against the exact angular characterization.
    for t in range(200):
        cfg = sample_sphere_config(2, 5, Rng(106, t))
        angles = np.arctan2(cfg.points[:, 1], cfg.points[:, 0])
        for i in range(5):
            others = np.delete(angles, i)
            rel = np.mod(others - angles[i], 2.0 * np.pi)
            # Witness for {i} exists iff the other points fit strictly within
            # a half-circle touching i's normal direction, i.e. all relative
            # angles lie strictly inside (0, pi) or strictly inside (pi, 2pi).
            inside = bool(np.all(rel < np.pi) or np.all(rel > np.pi))
            assert face_witness(cfg, [i]).feasible == inside
