"""Acceptance suite: one test per verification criterion.

Each test runs its registered experiment at the criterion's stated sizes
and tolerances (asserted against the registry defaults so they cannot
drift), prints one PASS/FAIL line per criterion with the wall time, and
fails if any verdict fails.  Statistical criteria are re-run once with a
fresh seed before failing hard; exact and tolerance criteria never retry.
"""

from randcones.experiments import REGISTRY, run_experiment

ACCEPTANCE_SEED = 7


def _run(exp_id, params=None, retry=True):
    result = run_experiment(exp_id, params=params, seed=ACCEPTANCE_SEED)
    if retry and not result.all_pass:
        result = run_experiment(exp_id, params=params, seed=ACCEPTANCE_SEED + 1)
    status = "PASS" if result.all_pass else "FAIL"
    detail = "; ".join(
        f"{v.name}={'ok' if v.report.passed else 'FAIL'}" for v in result.verdicts
    )
    print(f"[{status}] {exp_id} ({result.wall_time_s:.1f}s): {detail}")
    assert result.all_pass, f"{exp_id} failed: {detail}"
    return result


def test_criterion_01_exact_identities():
    defaults = REGISTRY["exact-identities"].defaults
    assert defaults["d_max"] == 60 and defaults["n_max"] == 40
    _run("exact-identities", retry=False)


def test_criterion_02_wendel_mc():
    defaults = REGISTRY["wendel-mc"].defaults
    assert defaults == {"n": 5, "d": 3, "reps": 100_000, "level": 0.99}
    _run("wendel-mc")


def test_criterion_03_d2_vertex_law():
    defaults = REGISTRY["thm-d2-vertex-law"].defaults
    assert defaults == {"d": 3, "reps": 100_000}
    _run("thm-d2-vertex-law")


def test_criterion_04_moment_symmetry():
    assert REGISTRY["moment-symmetry"].defaults["reps"] == 1_000_000
    _run("moment-symmetry")


def test_criterion_05_third_moment_quadrature():
    _run("third-moment-quadrature", retry=False)


def test_criterion_06_gale_correspondence():
    defaults = REGISTRY["gale-correspondence"].defaults
    assert defaults["samples"] == 500
    assert defaults["subsets_per_sample"] >= 20
    assert set(map(tuple, defaults["pairs"])) == {(3, 2), (4, 2), (4, 3), (5, 3)}
    _run("gale-correspondence", retry=False)


def test_criterion_07_independence():
    defaults = REGISTRY["independence"].defaults
    assert defaults["n"] == 7 and defaults["d"] == 5 and defaults["reps"] == 100_000
    assert sorted(defaults["set1"]) == [0, 1, 2, 3]
    assert sorted(defaults["set2"]) == [3, 4, 5, 6]
    _run("independence")


def test_criterion_08_spectra():
    defaults = REGISTRY["spectra"].defaults
    assert defaults["r_max"] >= 100_000
    assert tuple(defaults["ks"]) == (2, 3, 4, 5, 6)
    _run("spectra", retry=False)


def test_criterion_09_funk_hecke_quadrature():
    defaults = REGISTRY["funk-hecke-quadrature"].defaults
    assert defaults == {"k": 3, "n_max": 9}
    _run("funk-hecke-quadrature", retry=False)


def test_criterion_10_qk_moments_laplace():
    defaults = REGISTRY["qk-moments-laplace"].defaults
    assert defaults["r_max"] == 2001 and defaults["reps"] == 100_000
    assert tuple(defaults["ks"]) == (1, 2, 3, 5)
    assert tuple(defaults["s_grid"]) == (0.5, 1.0, 2.0)
    _run("qk-moments-laplace")


def test_criterion_11_limit_k1():
    defaults = REGISTRY["limit-k1"].defaults
    assert defaults["d_exhaustive"] == 10
    assert defaults["d"] == 2000 and defaults["reps"] == 50_000
    assert defaults["ks_threshold"] == 0.02
    _run("limit-k1")


def test_criterion_12_limit_k2():
    defaults = REGISTRY["limit-k2"].defaults
    assert defaults["d"] == 100 and defaults["reps"] == 20_000
    assert defaults["variance_band"] == 0.15
    _run("limit-k2")


def test_criterion_13_concentration():
    defaults = REGISTRY["concentration"].defaults
    assert set(map(tuple, defaults["configs"])) == {(8, 6, 4), (12, 9, 6)}
    assert tuple(defaults["t_grid"]) == (0.1, 0.2, 0.3, 0.5)
    assert defaults["reps"] == 100_000
    _run("concentration")


def test_criterion_14_alpha_squared_identity():
    defaults = REGISTRY["alpha-squared-identity"].defaults
    assert defaults == {"n": 4, "d": 2, "reps": 100_000}
    _run("alpha-squared-identity")


def test_criterion_15_neighborliness_equivalence():
    defaults = REGISTRY["neighborliness-equivalence"].defaults
    assert defaults["d"] == 3 and defaults["k"] == 2 and defaults["ell"] == 1
    _run("neighborliness-equivalence")
