"""Convergence study: Gram-matrix and energy errors vs quadrature order.

Gauss-Legendre in r and z converges spectrally for these smooth
integrands, so a handful of nodes per wavelength already reaches the
floor set by double precision.  Run with no arguments.
"""

import numpy as np

from cylcavity import (
    CavityGeometry,
    FieldState,
    check_vector_orthonormality,
    enumerate_modes,
    mode_sum_energy,
    quadrature_rule,
    total_energy,
)
from cylcavity.verify import default_nphi


def main():
    geom = CavityGeometry(a=0.9, L=1.3, c=1.0, eps0=1.0, hbar=1.0)
    modes = enumerate_modes(geom, 6.5)[:12]
    rng = np.random.default_rng(7)
    amps = rng.normal(size=len(modes)) + 1j * rng.normal(size=len(modes))
    state = FieldState(geom=geom, entries=tuple(zip(modes, amps)))
    closed = mode_sum_energy(state)
    nphi = default_nphi(modes)

    print(f"{len(modes)} modes, nphi = {nphi}")
    print(f"{'order':>6} {'max|G-I|':>12} {'energy rel err':>15}")
    for order in (4, 8, 12, 16, 24, 32, 48):
        rule = quadrature_rule(geom, nr=order, nphi=nphi, nz=order)
        gram = check_vector_orthonormality(modes, rule).max_deviation
        energy = abs(total_energy(state, rule) - closed) / closed
        print(f"{order:>6} {gram:>12.3e} {energy:>15.3e}")


if __name__ == "__main__":
    main()
