"""Vertex-count law for the spherical hull of d+2 uniform points.

On S^2, five uniform points produce a spherical triangle, quadrilateral,
or pentagon with probabilities 5/16, 5/16, 1/16, and cover the whole
sphere with probability 5/16.  The histogram below reproduces this law.
"""

from collections import Counter

from randcones import Rng, d2_vertex_distribution, sample_sphere_config, spherical_vertex_class
from randcones.stats import chi_square_gof

D = 3
REPS = 4000
SEED = 5


def main():
    counts = Counter()
    for t in range(REPS):
        cfg = sample_sphere_config(D, D + 2, Rng(SEED, t))
        counts[spherical_vertex_class(cfg).kind] += 1
    order = ["full_sphere", "simplex", "v_n_minus_1", "v_n"]
    labels = ["whole sphere", f"simplex ({D} vertices)", f"{D + 1} vertices", f"{D + 2} vertices"]
    exact = d2_vertex_distribution(D)
    print(f"{REPS} samples of {D + 2} uniform points on S^{D - 1}:")
    observed = []
    for kind, label, x in zip(order, labels, exact):
        observed.append(counts[kind])
        print(f"  {label:22s} observed {counts[kind] / REPS:.4f}   "
              f"exact {x.numerator}/{x.denominator} = {float(x):.4f}")
    report = chi_square_gof(observed, [float(x) for x in exact])
    print(f"chi-square GOF: statistic {report.statistic:.2f}, p = {report.p_value:.3f}")


if __name__ == "__main__":
    main()
