"""Scan the third normal-form family over (psi, phi) in steps of pi/12.

For each grid point prints one character:
  Z  zeta vanishes (no invariant volume form)
  k  h is degenerate
  *  both
  .  neither
and then the stabilizer dimension at every special point.
"""

import argparse

from ndglie.nijenhuis import hermitian_form, ndg_normal_form, stabilizer, three_form


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--stabilizers", action="store_true", help="also list stabilizer dimensions")
    args = ap.parse_args()
    special = []
    print("psi\\phi " + "".join(f"{f % 10}" for f in range(24)))
    for psi in range(24):
        row = []
        for phi in range(24):
            N = ndg_normal_form(3, 1, phi, psi)
            hf = hermitian_form(N)
            z = not three_form(N, hf).is_volume
            k = bool(hf.kernel)
            row.append("*" if z and k else "Z" if z else "k" if k else ".")
            if z or k:
                special.append((psi, phi, N, len(hf.kernel), z))
        print(f"{psi:>7} " + "".join(row))
    print(f"\n{sum(1 for s in special if s[4])} points with zeta = 0, "
          f"{sum(1 for s in special if s[3])} with degenerate h")
    if args.stabilizers:
        for psi, phi, N, ker, z in special:
            print(f"psi={psi:>2} phi={phi:>2} ker h={ker} zeta0={z} stab={len(stabilizer(N))}")


if __name__ == "__main__":
    main()
