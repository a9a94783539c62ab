#!/usr/bin/env python3
"""Print the graded SU(2) S-matrix and the braiding/twist data of the
rank-one lattice cocycle, next to the unmodified symmetric category.

The negative entries in the twisted S-matrix are what distinguish the two
ribbon structures on the same fusion ring.
"""

import argparse

from twistcat.cocycle import build_cyclic
from twistcat.fusionring import su2_smatrix, su2_tensor


def print_matrix(title, matrix):
    print(title)
    width = max(len(str(int(x))) for row in matrix for x in row)
    for row in matrix:
        print("  " + " ".join(f"{int(x):{width}d}" for x in row))
    print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-spin", type=int, default=6)
    parser.add_argument("--twist-param", type=int, default=3, help="s of the Z/2 cocycle")
    args = parser.parse_args()

    lattice = build_cyclic(2, args.twist_param)
    trivial = build_cyclic(2, 0)

    print_matrix(
        f"twisted S-matrix (s = {args.twist_param}), spins 0..{args.max_spin}:",
        su2_smatrix(args.max_spin, lattice),
    )
    print_matrix(
        f"unmodified S-matrix, spins 0..{args.max_spin}:",
        su2_smatrix(args.max_spin, trivial),
    )

    print("braiding scalar on V(m) (x) V(n) (value of Omega(m mod 2, n mod 2)^-1):")
    for m in range(2):
        for n in range(2):
            scalar = lattice.omega((m,), (n,)).inverse()
            print(f"  parities ({m},{n}): {scalar.to_complex()}")
    print()
    print("twist on parity-a objects (Omega(a,a)^-1):")
    for a in range(2):
        print(f"  parity {a}: {lattice.omega((a,), (a,)).inverse().to_complex()}")
    print()
    print("sample fusion rules:")
    for m, n in [(1, 1), (2, 3), (4, 4)]:
        spins = ", ".join(f"V({k})" for k in su2_tensor(m, n).spins)
        print(f"  V({m}) (x) V({n}) = {spins}")


if __name__ == "__main__":
    main()
