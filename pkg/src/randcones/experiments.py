"""Registry of verification experiments.

Each experiment checks one distributional claim about random polyhedral
cones, producing estimates, targets (exact rationals, quadrature values,
or asymptotic constants), and pass/fail verdicts.  Experiments are
deterministic functions of (params, seed); replications draw from
counter-based streams keyed by the seed and fixed stream offsets, so the
thread count changes scheduling only, never output.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import pi, sqrt

import numpy as np

from . import mc
from .angles import (
    fs_integral,
    moment_m,
    moment_m_exact,
    angle_second_moment_rhs,
    sylvester_simplex_probability,
    third_moment_closed_form,
)
from .cones import dual_face_count, is_face, is_positive_spanning
from .errors import InvalidInputError
from .exact import (
    d2_vertex_distribution,
    face_event_probability,
    pascal_recursion_holds,
    wendel_p,
)
from .gale import coupled_sample, verify_duality, verify_face_correspondence
from .limits import (
    concentration_check,
    independence_check,
    limit_law_comparison,
    make_qk_sampler,
    qk_laplace_k2,
    qk_theoretical_moments,
    sample_qk,
    simulate_fluctuation,
)
from .sampling import Rng, SphereConfig
from .spectral import funk_hecke, tau_by_quadrature, trace_identities, trace_tail_constant
from .special import trigamma
from .stats import TestReport, binomial_ci, chi_square_gof, two_proportion_z, z_test
from .ustat import limit_constant

VERSION = "0.1.0"


@dataclass(frozen=True)
class Estimate:
    name: str
    value: float
    stderr: float


@dataclass(frozen=True)
class Target:
    name: str
    value: str  # decimal string, or "num/den" for exact rationals
    provenance: str  # exact | quadrature | asymptotic


@dataclass(frozen=True)
class Verdict:
    name: str
    report: TestReport


@dataclass
class ExperimentResult:
    id: str
    params: dict
    seed: int
    estimates: list
    targets: list
    verdicts: list
    wall_time_s: float
    version: str = VERSION
    info: list = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(v.report.passed for v in self.verdicts)

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "params": self.params,
            "seed": self.seed,
            "estimates": [
                {"name": e.name, "value": e.value, "stderr": e.stderr} for e in self.estimates
            ],
            "targets": [
                {"name": t.name, "value": t.value, "provenance": t.provenance}
                for t in self.targets
            ],
            "verdicts": [{"name": v.name, **v.report.as_dict()} for v in self.verdicts],
            "wall_time_s": self.wall_time_s,
            "version": self.version,
        }

    def to_csv_rows(self) -> list:
        targets = {t.name: t for t in self.targets}
        verdicts = {v.name: v for v in self.verdicts}
        rows = []
        for e in self.estimates:
            t = targets.get(e.name)
            v = verdicts.get(e.name)
            rows.append(
                [
                    self.id,
                    e.name,
                    repr(e.value),
                    repr(e.stderr),
                    t.value if t else "",
                    t.provenance if t else "",
                    "" if v is None else str(v.report.passed).lower(),
                ]
            )
        return rows


@dataclass(frozen=True)
class ExperimentDef:
    id: str
    claim: str
    defaults: dict
    fn: object
    exploratory: bool = False


def _frac_target(name: str, value: Fraction) -> Target:
    return Target(name, f"{value.numerator}/{value.denominator}", "exact")


def _exact_pass(name: str, failures: int, total: int) -> Verdict:
    report = TestReport(
        statistic=float(failures),
        p_value=1.0 if failures == 0 else 0.0,
        passed=failures == 0,
        alpha=0.0,
        description=f"{total} exact identities, {failures} failures",
    )
    return Verdict(name, report)


def _tolerance_verdict(name: str, err: float, tol: float) -> Verdict:
    report = TestReport(
        statistic=float(err),
        p_value=1.0 if err <= tol else 0.0,
        passed=err <= tol,
        alpha=0.0,
        description=f"absolute error {err:.3e} vs tolerance {tol:.1e}",
    )
    return Verdict(name, report)


# ---------------------------------------------------------------------------
# exact identities
# ---------------------------------------------------------------------------

def _run_exact_identities(params, seed, threads):
    d_max = int(params["d_max"])
    n_max = int(params["n_max"])
    failures = 0
    total = 0
    for d in range(1, d_max + 1):
        total += 1
        if wendel_p(d + 2, d) != Fraction(d + 2, 2 ** (d + 1)):
            failures += 1
    vertex_failures = 0
    for d in range(2, d_max + 1):
        total += 1
        if sum(d2_vertex_distribution(d)) != 1:
            vertex_failures += 1
    pascal_failures = 0
    for n in range(2, n_max + 1):
        for d in range(1, n):
            total += 1
            if not pascal_recursion_holds(n, d):
                pascal_failures += 1
    verdicts = [
        _exact_pass("wendel-d-plus-2", failures, d_max),
        _exact_pass("vertex-law-sums-to-one", vertex_failures, d_max - 1),
        _exact_pass("pascal-recursion", pascal_failures, total),
    ]
    targets = [_frac_target("p(5,3)", wendel_p(5, 3))]
    return [], targets, verdicts, []


# ---------------------------------------------------------------------------
# wendel monte carlo
# ---------------------------------------------------------------------------

def _run_wendel_mc(params, seed, threads):
    n, d, reps = int(params["n"]), int(params["d"]), int(params["reps"])
    level = float(params["level"])
    rng = Rng(seed, 1)
    if n - d in (1, 2):
        pts = mc.sample_sphere_batch(rng, reps, n, d)
        hits = int(mc.batch_positive_spanning(pts).sum())
    else:
        hits = 0
        for r in range(reps):
            cfg = SphereConfig(mc.sample_sphere_batch(rng, 1, n, d)[0], d)
            hits += is_positive_spanning(cfg)
    p_hat = hits / reps
    stderr = sqrt(max(p_hat * (1 - p_hat), 1e-12) / reps)
    target = wendel_p(n, d)
    lo, hi = binomial_ci(hits, reps, level)
    inside = lo <= float(target) <= hi
    verdicts = [
        Verdict(
            "spanning-probability",
            TestReport(p_hat, 1.0 if inside else 0.0, inside, 1 - level,
                       f"Wilson {level:.0%} CI [{lo:.5f}, {hi:.5f}] vs exact {float(target):.5f}"),
        )
    ]
    estimates = [Estimate("spanning-probability", p_hat, stderr)]
    targets = [_frac_target("spanning-probability", target)]
    return estimates, targets, verdicts, []


# ---------------------------------------------------------------------------
# vertex-class law for d+2 points
# ---------------------------------------------------------------------------

def _run_d2_vertex_law(params, seed, threads):
    d, reps = int(params["d"]), int(params["reps"])
    if d != 3:
        raise InvalidInputError("the vectorized vertex-law experiment is built for d = 3")
    n = d + 2
    rng = Rng(seed, 2)
    counts = {0: 0, d: 0, d + 1: 0, d + 2: 0}
    done = 0
    while done < reps:
        bsz = min(50_000, reps - done)
        pts = mc.sample_sphere_batch(rng, bsz, n, d)
        vc = mc.batch_vertex_counts_3d(pts)
        for key in counts:
            counts[key] += int((vc == key).sum())
        done += bsz
    observed = [counts[0], counts[d], counts[d + 1], counts[d + 2]]
    if sum(observed) != reps:
        raise InvalidInputError("unexpected vertex count outside the d+2 classes")
    expected = [float(x) for x in d2_vertex_distribution(d)]
    report = chi_square_gof(observed, expected, description="vertex-class chi-square GOF")
    verdicts = [Verdict("vertex-class-gof", report)]
    estimates = [
        Estimate(name, c / reps, sqrt(max(c / reps * (1 - c / reps), 1e-12) / reps))
        for name, c in zip(
            ("full-sphere", "simplex", "d-plus-1-vertices", "d-plus-2-vertices"), observed
        )
    ]
    targets = [
        _frac_target(name, x)
        for name, x in zip(
            ("full-sphere", "simplex", "d-plus-1-vertices", "d-plus-2-vertices"),
            d2_vertex_distribution(d),
        )
    ]
    return estimates, targets, verdicts, []


# ---------------------------------------------------------------------------
# moment symmetry m(3,2) = m(2,3)
# ---------------------------------------------------------------------------

def _run_moment_symmetry(params, seed, threads):
    reps = int(params["reps"])
    hits32, _ = mc.batch_simplex_membership_fraction(Rng(seed, 3), 3, 2, reps)
    hits23, _ = mc.batch_simplex_membership_fraction(Rng(seed, 4), 2, 3, reps)
    p32, p23 = hits32 / reps, hits23 / reps
    se32 = sqrt(max(p32 * (1 - p32), 1e-12) / reps)
    se23 = sqrt(max(p23 * (1 - p23), 1e-12) / reps)
    target = moment_m_exact(3, 2)
    verdicts = [
        Verdict("m(3,2)", z_test(p32, float(target), se32, description="m(3,2) vs 1/32")),
        Verdict("m(2,3)", z_test(p23, float(target), se23, description="m(2,3) vs 1/32")),
        Verdict(
            "symmetry",
            z_test(p32 - p23, 0.0, sqrt(se32**2 + se23**2),
                   description="m(3,2) - m(2,3) vs 0"),
        ),
    ]
    estimates = [Estimate("m(3,2)", p32, se32), Estimate("m(2,3)", p23, se23)]
    targets = [_frac_target("m(3,2)", target), _frac_target("m(2,3)", target)]
    return estimates, targets, verdicts, []


# ---------------------------------------------------------------------------
# third-moment quadrature
# ---------------------------------------------------------------------------

def _run_third_moment(params, seed, threads):
    verdicts = []
    estimates = []
    targets = []
    mass = fs_integral(0)
    verdicts.append(_tolerance_verdict("density-mass", abs(mass - 1.0), 1e-10))
    estimates.append(Estimate("density-mass", mass, 0.0))
    targets.append(Target("density-mass", "1", "exact"))
    for d in (3, 4, 5):
        quad = moment_m(d, 3)
        closed = third_moment_closed_form(d)
        name = f"m({d},3)"
        verdicts.append(_tolerance_verdict(name, abs(quad - closed), 1e-8))
        estimates.append(Estimate(name, quad, 0.0))
        targets.append(Target(name, repr(closed), "quadrature"))
    syl = sylvester_simplex_probability(3, 3)
    verdicts.append(_tolerance_verdict("simplex-probability-6-3", abs(syl - 0.205385), 1e-6))
    estimates.append(Estimate("simplex-probability-6-3", syl, 0.0))
    targets.append(Target("simplex-probability-6-3", "0.205385", "quadrature"))
    return estimates, targets, verdicts, []


# ---------------------------------------------------------------------------
# gale correspondence
# ---------------------------------------------------------------------------

def _gale_chunk(args):
    seed, stream, d, k, n_samples, subsets_per = args
    rng = Rng(seed, stream)
    n = d + k
    disagreements = 0
    checks = 0
    duality_failures = 0
    for _ in range(n_samples):
        pair = coupled_sample(d, k, rng)
        if not verify_duality(pair):
            duality_failures += 1
        gen = rng.generator
        subsets = []
        for _ in range(subsets_per):
            size = int(gen.integers(0, d))
            subsets.append(sorted(gen.choice(n, size=size, replace=False).tolist()))
        report = verify_face_correspondence(pair, subsets)
        checks += len(report.subsets)
        disagreements += len(report.disagreements)
    return disagreements, checks, duality_failures


def _run_gale_correspondence(params, seed, threads):
    pairs = [tuple(p) for p in params["pairs"]]
    samples = int(params["samples"])
    subsets_per = int(params["subsets_per_sample"])
    n_chunks = 16
    jobs = []
    for pi_, (d, k) in enumerate(pairs):
        base = 100 + 1000 * pi_
        sizes = [samples // n_chunks + (1 if c < samples % n_chunks else 0) for c in range(n_chunks)]
        jobs.extend(
            (seed, base + c, d, k, sizes[c], subsets_per) for c in range(n_chunks) if sizes[c]
        )
    results = _map_jobs(_gale_chunk, jobs, threads)
    disagreements = sum(r[0] for r in results)
    checks = sum(r[1] for r in results)
    duality_failures = sum(r[2] for r in results)
    verdicts = [
        _exact_pass("face-correspondence", disagreements, checks),
        _exact_pass("duality-axioms", duality_failures, samples * len(pairs)),
    ]
    estimates = [Estimate("subset-checks", float(checks), 0.0)]
    return estimates, [], verdicts, []


def _map_jobs(fn, jobs, threads):
    if threads <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as ex:
        return list(ex.map(fn, jobs))


# ---------------------------------------------------------------------------
# independence of face events
# ---------------------------------------------------------------------------

def _run_independence(params, seed, threads):
    n, d, reps = int(params["n"]), int(params["d"]), int(params["reps"])
    idx1 = [int(i) for i in params["set1"]]
    idx2 = [int(i) for i in params["set2"]]
    report = independence_check(n, d, idx1, idx2, reps, Rng(seed, 5))
    t1, t2 = report.marginal_target
    frac1 = face_event_probability(n, d, len(idx1))
    frac2 = face_event_probability(n, d, len(idx2))
    estimates = [
        Estimate("marginal-1", report.p1, sqrt(max(t1 * (1 - t1), 1e-12) / reps)),
        Estimate("marginal-2", report.p2, sqrt(max(t2 * (1 - t2), 1e-12) / reps)),
        Estimate("joint", report.joint, sqrt(max(t1 * t2 * (1 - t1 * t2), 1e-12) / reps)),
    ]
    targets = [
        _frac_target("marginal-1", frac1),
        _frac_target("marginal-2", frac2),
        _frac_target("joint", frac1 * frac2),
    ]
    verdicts = [Verdict(f"independence-{i}", t) for i, t in enumerate(report.tests)]
    return estimates, targets, verdicts, []


# ---------------------------------------------------------------------------
# spectra and traces
# ---------------------------------------------------------------------------

def _run_spectra(params, seed, threads):
    r_max = int(params["r_max"])
    ks = [int(k) for k in params["ks"]]
    verdicts = []
    estimates = []
    targets = []
    seq2 = funk_hecke(2, r_max if r_max % 2 == 1 else r_max - 1)
    expected = 4.0 / (pi * pi * seq2.degrees.astype(float) ** 2)
    err = float(np.max(np.abs(seq2.lam - expected)))
    verdicts.append(_tolerance_verdict("k2-eigenvalues", err, 1e-14))
    tr2_err = abs(seq2.partial_trace_sq - 1.0 / 3.0)
    verdicts.append(_tolerance_verdict("k2-trace-squared-third", tr2_err, 1e-6))
    for k in ks:
        tr, tr_sq = trace_identities(k, r_max)
        ck = trace_tail_constant(k)
        in_window = 1.0 - ck / r_max <= tr <= 1.0
        verdicts.append(
            Verdict(
                f"k{k}-trace-window",
                TestReport(tr, 1.0 if in_window else 0.0, in_window, 0.0,
                           f"partial trace in [1 - {ck:.3f}/r_max, 1]"),
            )
        )
        target_sq = 2.0 / (pi * pi) * trigamma(k / 2.0)
        verdicts.append(_tolerance_verdict(f"k{k}-trace-squared", abs(tr_sq - target_sq), 1e-4))
        estimates.append(Estimate(f"k{k}-partial-trace", tr, 0.0))
        estimates.append(Estimate(f"k{k}-partial-trace-squared", tr_sq, 0.0))
        targets.append(Target(f"k{k}-partial-trace", "1", "exact"))
        targets.append(Target(f"k{k}-partial-trace-squared", repr(target_sq), "exact"))
    return estimates, targets, verdicts, []


def _run_funk_hecke_quadrature(params, seed, threads):
    k = int(params["k"])
    n_max = int(params["n_max"])
    seq = funk_hecke(k, n_max if n_max % 2 == 1 else n_max - 1)
    formula = {int(r): t for r, t in zip(seq.degrees, seq.tau)}
    worst = 0.0
    for r in range(n_max + 1):
        target = formula.get(r, 0.0)
        quad = tau_by_quadrature(r, k)
        worst = max(worst, abs(quad - target))
    verdicts = [_tolerance_verdict("sign-kernel-multipliers", worst, 1e-8)]
    estimates = [Estimate("max-multiplier-error", worst, 0.0)]
    return estimates, [], verdicts, []


# ---------------------------------------------------------------------------
# Q_k sampler moments and Laplace transform
# ---------------------------------------------------------------------------

def _run_qk_moments(params, seed, threads):
    reps = int(params["reps"])
    r_max = int(params["r_max"])
    ks = [int(k) for k in params["ks"]]
    s_grid = [float(s) for s in params["s_grid"]]
    verdicts = []
    estimates = []
    targets = []
    for j, k in enumerate(ks):
        sampler = make_qk_sampler(k, r_max)
        x = sample_qk(sampler, Rng(seed, 10 + j), size=reps)
        mean_t, var_t = qk_theoretical_moments(k)
        mean_hat = float(x.mean())
        se_mean = float(x.std(ddof=1) / sqrt(reps))
        var_hat = float(x.var(ddof=1))
        rel_err = abs(var_hat - var_t) / var_t
        verdicts.append(Verdict(f"k{k}-mean", z_test(mean_hat, mean_t, se_mean,
                                                     description=f"Q_{k} mean vs 1")))
        verdicts.append(
            Verdict(
                f"k{k}-variance",
                TestReport(rel_err, 1.0 if rel_err <= 0.05 else 0.0, rel_err <= 0.05, 0.0,
                           f"relative error {rel_err:.4f} vs 5% band"),
            )
        )
        estimates.append(Estimate(f"k{k}-mean", mean_hat, se_mean))
        estimates.append(Estimate(f"k{k}-variance", var_hat,
                                  float(x.var(ddof=1) * sqrt(2.0 / reps))))
        targets.append(Target(f"k{k}-mean", "1", "exact"))
        targets.append(Target(f"k{k}-variance", repr(var_t), "exact"))
        if k == 2:
            for s in s_grid:
                vals = np.exp(-s * x)
                emp = float(vals.mean())
                se = float(vals.std(ddof=1) / sqrt(reps))
                exact = qk_laplace_k2(s)
                verdicts.append(Verdict(f"laplace-s{s}", z_test(emp, exact, se,
                                                                description=f"E exp(-{s} Q_2)")))
                estimates.append(Estimate(f"laplace-s{s}", emp, se))
                targets.append(Target(f"laplace-s{s}", repr(exact), "exact"))
    return estimates, targets, verdicts, []


# ---------------------------------------------------------------------------
# limit laws
# ---------------------------------------------------------------------------

def _run_limit_k1(params, seed, threads):
    d_exhaustive = int(params["d_exhaustive"])
    d_big = int(params["d"])
    reps = int(params["reps"])
    qk_reps = int(params["qk_reps"])
    ks_threshold = float(params["ks_threshold"])

    mismatch = 0
    checked = 0
    for d in range(2, d_exhaustive + 1):
        n = d + 1
        for bits in range(2**n):
            signs = np.array([1.0 if (bits >> i) & 1 else -1.0 for i in range(n)])
            cfg = SphereConfig(signs[:, None], 1)
            n_plus = int((signs > 0).sum())
            expected = n_plus * (n - n_plus)
            checked += 1
            if dual_face_count(cfg, 2) != expected:
                mismatch += 1
    verdicts = [_exact_pass("sign-count-law", mismatch, checked)]

    fluct = simulate_fluctuation(d_big, 1, 1, reps, Rng(seed, 20))
    qk = sample_qk(make_qk_sampler(1), Rng(seed, 21), size=qk_reps)
    ks = limit_law_comparison(fluct, qk, 1, 1)
    passed = ks.statistic <= ks_threshold
    verdicts.append(
        Verdict(
            "ks-distance",
            TestReport(ks.statistic, ks.p_value, passed, 0.0,
                       f"KS distance {ks.statistic:.4f} vs threshold {ks_threshold}"),
        )
    )
    estimates = [Estimate("ks-distance", ks.statistic, 0.0)]
    targets = [Target("ks-distance", repr(ks_threshold), "asymptotic")]
    return estimates, targets, verdicts, []


def _run_limit_k2(params, seed, threads):
    d = int(params["d"])
    reps = int(params["reps"])
    k, q = 2, 1
    fluct = simulate_fluctuation(d, k, q, reps, Rng(seed, 22))
    scaled = fluct.scaled
    mean_hat = float(scaled.mean())
    se_mean = float(scaled.std(ddof=1) / sqrt(reps))
    var_hat = float(scaled.var(ddof=1))
    target_var = limit_constant(k, q) ** 2 * qk_theoretical_moments(k)[1]
    rel_err = abs(var_hat - target_var) / target_var
    band = float(params["variance_band"])
    verdicts = [
        Verdict("scaled-mean", z_test(mean_hat, 0.0, se_mean,
                                      description="mean of d (U - p) vs 0")),
        Verdict(
            "scaled-variance",
            TestReport(rel_err, 1.0 if rel_err <= band else 0.0, rel_err <= band, 0.0,
                       f"relative error {rel_err:.4f} vs {band:.0%} band"),
        ),
    ]
    estimates = [
        Estimate("scaled-mean", mean_hat, se_mean),
        Estimate("scaled-variance", var_hat, float(var_hat * sqrt(2.0 / reps))),
    ]
    targets = [
        Target("scaled-mean", "0", "exact"),
        Target("scaled-variance", repr(target_var), "asymptotic"),
    ]
    return estimates, targets, verdicts, []


# ---------------------------------------------------------------------------
# concentration
# ---------------------------------------------------------------------------

def _run_concentration(params, seed, threads):
    configs = [tuple(int(v) for v in c) for c in params["configs"]]
    t_grid = [float(t) for t in params["t_grid"]]
    reps = int(params["reps"])
    verdicts = []
    estimates = []
    targets = []
    for j, (n, d, ell) in enumerate(configs):
        rep = concentration_check(n, d, ell, t_grid, reps, Rng(seed, 30 + j))
        for t, emp, bnd, test in zip(rep.t_grid, rep.empirical, rep.bounds, rep.tests):
            name = f"n{n}-l{ell}-t{t}"
            verdicts.append(Verdict(name, test))
            estimates.append(Estimate(name, emp, sqrt(max(emp * (1 - emp), 1e-12) / reps)))
            targets.append(Target(name, repr(bnd), "exact"))
    return estimates, targets, verdicts, []


# ---------------------------------------------------------------------------
# second moment of the solid angle via one-face counts
# ---------------------------------------------------------------------------

def _run_alpha_squared(params, seed, threads):
    n, d = int(params["n"]), int(params["d"])
    reps = int(params["reps"])
    if d != 2:
        raise InvalidInputError("the planar-wedge route requires d = 2")
    lhs_samples = mc.batch_wedge_alpha_squared(Rng(seed, 40), n, reps)
    lhs = float(lhs_samples.mean())
    lhs_se = float(lhs_samples.std(ddof=1) / sqrt(reps))
    n_dual = n + 2
    d_dual = n + 2 - d
    m_dual = n_dual - 1  # one-dimensional faces: subsets of size n+1
    k_dual = n_dual - d_dual
    if k_dual != 2:
        raise InvalidInputError("dual counting route requires a planar dual sphere")
    f1 = mc.batch_circle_subset_spanning_counts(Rng(seed, 41), n_dual, m_dual, reps)
    rhs, rhs_se = angle_second_moment_rhs(n, d, f1)
    diff_se = sqrt(lhs_se**2 + rhs_se**2)
    verdicts = [
        Verdict("identity", z_test(lhs - rhs, 0.0, diff_se,
                                   description="E[alpha^2] direct vs dual route")),
    ]
    estimates = [
        Estimate("alpha-squared-direct", lhs, lhs_se),
        Estimate("alpha-squared-dual", rhs, rhs_se),
    ]
    return estimates, [], verdicts, []


# ---------------------------------------------------------------------------
# neighborliness equivalence
# ---------------------------------------------------------------------------

def _primal_neighborly_chunk(args):
    seed, stream, d, k, ell, n_samples = args
    rng = Rng(seed, stream)
    n = d + k
    hits = 0
    for _ in range(n_samples):
        pair = coupled_sample(d, k, rng)
        ok = all(is_face(pair.primal, list(idx)) for idx in combinations(range(n), ell))
        hits += ok
    return hits


def _run_neighborliness(params, seed, threads):
    d, k, ell = int(params["d"]), int(params["k"]), int(params["ell"])
    reps = int(params["reps"])
    primal_reps = int(params["primal_reps"])
    n = d + k
    if k != 2:
        raise InvalidInputError("vectorized half-sphere route requires k = 2")
    subset_size = n - ell
    event_b = mc.batch_all_subsets_span_circle(Rng(seed, 50), n, subset_size, reps)
    event_c = mc.batch_all_subsets_span_circle(Rng(seed, 51), n, subset_size, reps, negate=True)
    xb, xc = int(event_b.sum()), int(event_c.sum())

    n_chunks = 16
    sizes = [primal_reps // n_chunks + (1 if c < primal_reps % n_chunks else 0) for c in range(n_chunks)]
    jobs = [(seed, 60 + c, d, k, ell, sizes[c]) for c in range(n_chunks) if sizes[c]]
    primal_hits = sum(_map_jobs(_primal_neighborly_chunk, jobs, threads))

    pb, pc = xb / reps, xc / reps
    pp = primal_hits / primal_reps
    verdicts = [
        Verdict("b-vs-c", two_proportion_z(xb, reps, xc, reps,
                                           description="half-sphere events on V and -V")),
        Verdict("primal-vs-b", two_proportion_z(primal_hits, primal_reps, xb, reps,
                                                description="all-faces event vs event b")),
        Verdict("primal-vs-c", two_proportion_z(primal_hits, primal_reps, xc, reps,
                                                description="all-faces event vs event c")),
    ]
    estimates = [
        Estimate("event-b", pb, sqrt(max(pb * (1 - pb), 1e-12) / reps)),
        Estimate("event-c", pc, sqrt(max(pc * (1 - pc), 1e-12) / reps)),
        Estimate("all-subsets-are-faces", pp, sqrt(max(pp * (1 - pp), 1e-12) / primal_reps)),
    ]
    targets = []
    if ell == 1 and n == d + 2:
        exact = d2_vertex_distribution(d)[3]
        targets = [
            _frac_target("event-b", exact),
            _frac_target("event-c", exact),
            _frac_target("all-subsets-are-faces", exact),
        ]
        verdicts.append(
            Verdict("b-vs-exact", z_test(pb, float(exact),
                                         sqrt(float(exact) * (1 - float(exact)) / reps),
                                         description="event b vs exact vertex-law value")),
        )
    return estimates, targets, verdicts, []


# ---------------------------------------------------------------------------
# tables and exploratory output
# ---------------------------------------------------------------------------

def _run_wendel_table(params, seed, threads):
    n_max = int(params["n_max"])
    info = ["n d p(n,d)"]
    failures = 0
    total = 0
    for n in range(2, n_max + 1):
        for d in range(1, n):
            p = wendel_p(n, d)
            info.append(f"{n} {d} {p.numerator}/{p.denominator}")
            total += 1
            if not pascal_recursion_holds(n, d):
                failures += 1
    verdicts = [_exact_pass("pascal-consistency", failures, total)]
    return [], [], verdicts, info


def _run_exploratory_moments(params, seed, threads):
    d_max = int(params["d_max"])
    info = [
        "NON-ASSERTED exploratory table: conjectured scaling 2^d d m(d,k) -> c_k",
        "(c_2 = 1 and c_3 = (12 - pi^2)/8 are conjectural; nothing here is a test)",
        "d  2^d*d*m(d,2)  2^d*d*m(d,3)",
    ]
    c3 = (12 - pi * pi) / 8.0
    for d in range(2, d_max + 1):
        v2 = 2.0**d * d * float(moment_m_exact(d, 2))
        v3 = 2.0**d * d * moment_m(d, 3) if d <= 40 else float("nan")
        info.append(f"{d}  {v2:.6f}  {v3:.6f}")
    info.append(f"conjectured limits: c_2 = 1, c_3 = {c3:.6f}")
    return [], [], [], info


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

REGISTRY = {}


def _register(id_, claim, defaults, fn, exploratory=False):
    REGISTRY[id_] = ExperimentDef(id_, claim, defaults, fn, exploratory)


_register(
    "exact-identities",
    "spanning probability identities: p(d+2,d) value, vertex-law normalization, Pascal recursion",
    {"d_max": 60, "n_max": 40},
    _run_exact_identities,
)
_register(
    "wendel-mc",
    "Monte Carlo spanning probability P[pos of n uniform points = R^d] vs the exact formula",
    {"n": 5, "d": 3, "reps": 100_000, "level": 0.99},
    _run_wendel_mc,
)
_register(
    "thm-d2-vertex-law",
    "vertex-count distribution of the spherical hull of d+2 uniform points on S^{d-1}",
    {"d": 3, "reps": 100_000},
    _run_d2_vertex_law,
)
_register(
    "moment-symmetry",
    "solid-angle moment symmetry m(3,2) = m(2,3) = 1/32",
    {"reps": 1_000_000},
    _run_moment_symmetry,
)
_register(
    "third-moment-quadrature",
    "spherical-area density mass, third solid-angle moments, and the 6-point simplex probability",
    {},
    _run_third_moment,
)
_register(
    "gale-correspondence",
    "per-outcome equivalence of primal face tests and dual positive-spanning tests",
    {"pairs": [(3, 2), (4, 2), (4, 3), (5, 3)], "samples": 500, "subsets_per_sample": 20},
    _run_gale_correspondence,
)
_register(
    "independence",
    "independence of covering face events with small overlap",
    {"n": 7, "d": 5, "set1": (0, 1, 2, 3), "set2": (3, 4, 5, 6), "reps": 100_000},
    _run_independence,
)
_register(
    "spectra",
    "sign/arcsin kernel eigenvalues and the trace identities of the arcsin operator",
    {"r_max": 100_001, "ks": (2, 3, 4, 5, 6)},
    _run_spectra,
)
_register(
    "funk-hecke-quadrature",
    "direct quadrature of the sign kernel against Gegenbauer polynomials vs the Gamma-ratio formula",
    {"k": 3, "n_max": 9},
    _run_funk_hecke_quadrature,
)
_register(
    "qk-moments-laplace",
    "mean, variance, and (k=2) Laplace transform of the chi-square-mixture limit variable",
    {"reps": 100_000, "r_max": 2001, "ks": (1, 2, 3, 5), "s_grid": (0.5, 1.0, 2.0)},
    _run_qk_moments,
)
_register(
    "qk-laplace-k2",
    "Laplace transform of Q_2 against 1/cosh(sqrt(2s))",
    {"reps": 100_000, "r_max": 2001, "ks": (2,), "s_grid": (0.5, 1.0, 2.0)},
    _run_qk_moments,
)
_register(
    "limit-k1",
    "exact sign-count law for codimension-one face counts and the chi-square-1 limit",
    {"d_exhaustive": 10, "d": 2000, "reps": 50_000, "qk_reps": 1_000_000, "ks_threshold": 0.02},
    _run_limit_k1,
)
_register(
    "limit-k2",
    "scaled mean and variance of normalized face counts at k=2 against the limit law",
    {"d": 100, "reps": 20_000, "variance_band": 0.15},
    _run_limit_k2,
)
_register(
    "concentration",
    "exponential concentration of normalized face counts",
    {"configs": [(8, 6, 4), (12, 9, 6)], "t_grid": (0.1, 0.2, 0.3, 0.5), "reps": 100_000},
    _run_concentration,
)
_register(
    "alpha-squared-identity",
    "second solid-angle moment via planar wedges vs one-face counts of the dual model",
    {"n": 4, "d": 2, "reps": 100_000},
    _run_alpha_squared,
)
_register(
    "neighborliness-equivalence",
    "equal probabilities of the half-sphere covering events and the all-faces event",
    {"d": 3, "k": 2, "ell": 1, "reps": 100_000, "primal_reps": 4000},
    _run_neighborliness,
)
_register(
    "wendel-table",
    "exact spanning-probability table with Pascal-recursion audit",
    {"n_max": 20},
    _run_wendel_table,
)
_register(
    "exploratory-moment-asymptotics",
    "NON-ASSERTED: finite-d scaling of solid-angle moments vs conjectured constants",
    {"d_max": 25},
    _run_exploratory_moments,
    exploratory=True,
)


def default_threads() -> int:
    env = os.environ.get("RANDCONES_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def run_experiment(exp_id: str, params: dict | None = None, seed: int = 0,
                   threads: int | None = None) -> ExperimentResult:
    """Execute a registered experiment and assemble its result record."""
    import time

    if exp_id not in REGISTRY:
        raise KeyError(f"unknown experiment id: {exp_id}")
    exp = REGISTRY[exp_id]
    merged = dict(exp.defaults)
    for key, value in (params or {}).items():
        if key not in merged:
            raise InvalidInputError(f"unknown parameter {key!r} for experiment {exp_id}")
        merged[key] = value
    if threads is None:
        threads = default_threads()
    t0 = time.perf_counter()
    estimates, targets, verdicts, info = exp.fn(merged, int(seed), int(threads))
    wall = time.perf_counter() - t0
    return ExperimentResult(
        id=exp_id,
        params={k: _jsonable(v) for k, v in merged.items()},
        seed=int(seed),
        estimates=estimates,
        targets=targets,
        verdicts=verdicts,
        wall_time_s=wall,
        info=info,
    )


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating,)):
        return float(v)
    return v
