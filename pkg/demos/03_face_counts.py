"""Face counts of random cones: per-sample f-vectors and exact expectations.

f_vector enumerates faces by LP witness tests.  The expected counts have
the closed form E f_l = C(n, l) p(n - l, n - d), verified here by a small
simulation.
"""

import numpy as np

from randcones import Rng, expected_face_count, f_vector, sample_sphere_config

N, D = 5, 3
REPS = 400
SEED = 3


def main():
    totals = np.zeros(D)
    full = 0
    for t in range(REPS):
        cfg = sample_sphere_config(D, N, Rng(SEED, t))
        fv = f_vector(cfg)
        if fv.is_full_space:
            full += 1
        totals += np.array(fv.counts, dtype=float)
    print(f"{REPS} cones on {N} uniform points in R^{D}")
    print(f"fraction filling all of R^{D}: {full / REPS:.3f}")
    for ell in range(D):
        exact = expected_face_count(N, D, ell)
        print(
            f"  mean f_{ell} = {totals[ell] / REPS:.3f}   "
            f"exact E f_{ell} = {exact.numerator}/{exact.denominator} = {float(exact):.3f}"
        )
    print("(full-space samples contribute zero counts by convention)")


if __name__ == "__main__":
    main()
