"""Concentration of normalized face counts, and independent face events.

The normalized face count deviates from its mean by more than t with
probability at most 2 exp(-2 t^2 floor(n / (n - l))).  Separately, face
events of index sets that jointly cover all points are independent; the
joint frequency matches the product of the marginals.
"""

from randcones import Rng, concentration_check, independence_check

SEED = 8


def main():
    rep = concentration_check(8, 6, 4, [0.1, 0.2, 0.3, 0.5], 20_000, Rng(SEED, 0))
    print("concentration for n=8, d=6, l=4:")
    for t, emp, bound in zip(rep.t_grid, rep.empirical, rep.bounds):
        print(f"  t={t:.1f}: empirical exceedance {emp:.4f} <= bound {bound:.4f}")

    ind = independence_check(7, 5, [0, 1, 2, 3], [3, 4, 5, 6], 40_000, Rng(SEED, 1))
    t1, t2 = ind.marginal_target
    print("\nindependence of two covering face events (n=7, d=5):")
    print(f"  marginals {ind.p1:.4f}, {ind.p2:.4f}  (exact {t1}, {t2})")
    print(f"  joint {ind.joint:.4f}  (product {t1 * t2})")
    print("  all verdicts pass:", ind.all_pass)


if __name__ == "__main__":
    main()
