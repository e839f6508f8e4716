"""Spectrum of the sign and arcsin zonal kernels on the sphere.

The sign-kernel operator multiplies degree-r spherical harmonics by tau_r
(zero for even r); its square, the arcsin-kernel operator, has eigenvalues
lambda_r = tau_r^2.  Summing dim * lambda over odd degrees approaches 1,
and the square-trace approaches (2/pi^2) trigamma(k/2).
"""

from math import pi

from randcones import funk_hecke, tau_by_quadrature, trace_identities, trigamma

K = 3
R_MAX_TABLE = 9
R_MAX_TRACE = 100_001


def main():
    seq = funk_hecke(K, R_MAX_TABLE)
    print(f"odd-degree spectrum on S^{K - 1}:")
    print("  r   dim   tau_r          lambda_r       tau_r by quadrature")
    for r, dim, tau, lam in seq.entries:
        quad = tau_by_quadrature(int(r), K)
        print(f"  {int(r)}   {int(dim):3d}   {tau:+.9f}   {lam:.9f}   {quad:+.9f}")

    tr, tr_sq = trace_identities(K, R_MAX_TRACE)
    target = 2.0 / (pi * pi) * trigamma(K / 2.0)
    print(f"\npartial trace at r <= {R_MAX_TRACE}: {tr:.8f}  (limit 1)")
    print(f"partial square-trace:        {tr_sq:.8f}  (limit {target:.8f})")


if __name__ == "__main__":
    main()
