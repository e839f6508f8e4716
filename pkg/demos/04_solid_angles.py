"""Solid-angle moments of simplicial random cones.

m(d, k), the k-th moment of the solid angle of the cone on d uniform
points in R^d, is symmetric in (d, k).  The first two moments are exact
rationals; the third comes from quadrature of the spherical-area density.
The simplex probability for d + k points is C(d+k, d) m(d, k).
"""

from randcones import Rng, moment_m, sample_sphere_config, solid_angle
from randcones.angles import moment_m_exact, sylvester_simplex_probability, third_moment_closed_form

SEED = 4


def main():
    est = solid_angle(sample_sphere_config(3, 3, Rng(SEED, 0)), 200_000, Rng(SEED, 1))
    print(f"solid angle of one random simplicial cone in R^3: {est.value:.4f} "
          f"(stderr {est.stderr:.4f})")

    print("\nmoment symmetry and closed forms:")
    for d, k in [(3, 1), (3, 2), (2, 3), (3, 3), (4, 3), (5, 3)]:
        value = moment_m(d, k)
        note = ""
        if min(d, k) <= 2:
            frac = moment_m_exact(d, k)
            note = f"  (= {frac.numerator}/{frac.denominator})"
        elif d in (3, 4, 5) and k == 3:
            note = f"  closed form {third_moment_closed_form(d):.10f}"
        print(f"  m({d},{k}) = {value:.10f}{note}")

    print("\nspherical simplex probabilities:")
    for d, k in [(3, 1), (3, 2), (3, 3), (4, 3), (5, 3)]:
        p = sylvester_simplex_probability(d, k)
        print(f"  P[{d + k} points on S^{d-1} span a spherical simplex] = {p:.6f}")


if __name__ == "__main__":
    main()
