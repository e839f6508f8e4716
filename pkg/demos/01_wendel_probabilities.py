"""Spanning probabilities of random cones: exact table vs Monte Carlo.

The positive hull of n uniform unit vectors in R^d is the whole space with
probability p(n, d) = 2^(1-n) sum_{l=d}^{n-1} C(n-1, l).  This script
prints a small exact table and then verifies one entry by simulation.
"""

from randcones import Rng, is_positive_spanning, sample_sphere_config, wendel_p
from randcones.stats import binomial_ci

N_MAX = 8
MC_N, MC_D, MC_REPS = 4, 2, 20_000
SEED = 1


def print_table():
    print("p(n, d) for n <= %d:" % N_MAX)
    for n in range(2, N_MAX + 1):
        row = []
        for d in range(1, n):
            p = wendel_p(n, d)
            row.append(f"p({n},{d}) = {p.numerator}/{p.denominator}")
        print("  " + "   ".join(row))


def monte_carlo():
    hits = 0
    for t in range(MC_REPS):
        cfg = sample_sphere_config(MC_D, MC_N, Rng(SEED, t))
        hits += is_positive_spanning(cfg)
    lo, hi = binomial_ci(hits, MC_REPS, 0.99)
    exact = wendel_p(MC_N, MC_D)
    print(f"\nMC estimate of P[pos of {MC_N} points = R^{MC_D}]: {hits / MC_REPS:.4f}")
    print(f"99% Wilson interval: [{lo:.4f}, {hi:.4f}]  exact value: {float(exact):.4f}")
    print("exact value inside interval:", lo <= float(exact) <= hi)


if __name__ == "__main__":
    print_table()
    monte_carlo()
