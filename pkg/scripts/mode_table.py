"""Print the lowest cavity modes and flag degenerate frequency clusters.

Usage: python scripts/mode_table.py [radius height omega_max]
Defaults to the unit-constant desk geometry (a=0.9, L=1.3, cutoff 6.5).
"""

import sys

from cylcavity import CavityGeometry, enumerate_modes

NAMES = {1: "TM", 2: "TE"}


def main(argv):
    a, length, omega_max = (float(v) for v in argv) if argv else (0.9, 1.3, 6.5)
    geom = CavityGeometry(a=a, L=length, c=1.0, eps0=1.0, hbar=1.0)
    modes = enumerate_modes(geom, omega_max)
    print(f"cavity a={a} L={length}: {len(modes)} modes with omega <= {omega_max}")
    print(f"{'idx':>3} {'pol':>3} {'m':>3} {'mu':>3} {'n':>3} "
          f"{'omega':>12} {'chi':>12} {'deg':>4}")
    cluster = 0
    for i, md in enumerate(modes):
        # mark members of near-degenerate frequency clusters
        degenerate = (
            (i > 0 and abs(md.omega - modes[i - 1].omega) < 1e-9 * md.omega)
            or (i + 1 < len(modes) and abs(md.omega - modes[i + 1].omega) < 1e-9 * md.omega)
        )
        if degenerate and not (i > 0 and abs(md.omega - modes[i - 1].omega) < 1e-9 * md.omega):
            cluster += 1
        tag = f"d{cluster}" if degenerate else ""
        idx = md.index
        print(f"{i:>3} {NAMES[idx.sigma]:>3} {idx.m:>3} {idx.mu:>3} {idx.n:>3} "
              f"{md.omega:>12.6f} {md.chi:>12.6f} {tag:>4}")


if __name__ == "__main__":
    main(sys.argv[1:])
