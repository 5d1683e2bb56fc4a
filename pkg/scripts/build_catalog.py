"""Regenerate src/ndglie/data/catalog.txt, including Jacobi witness points.

Witnesses are rational solutions of the Jacobi system of each solvable case,
found on random small parameter supports (the other parameters set to zero).
"""

import argparse
import random
from pathlib import Path

from ndglie.brackets import SOLVABLE_CASES, build_candidate, sample_witnesses, solution_algebra_ok
from ndglie.catalog import build_catalog, dumps, loads

OUT = Path(__file__).resolve().parents[1] / "src" / "ndglie" / "data" / "catalog.txt"


def witnesses_for(case: str, n_supports: int, seed: int):
    c = build_candidate(case)
    rng = random.Random(seed)
    if len(c.params) <= 8:
        supports = [list(c.params)] * 2
    else:
        supports = [rng.sample(c.params, rng.randint(3, 8)) for _ in range(n_supports)]
    points = []
    for k, s in enumerate(supports):
        for p in sample_witnesses(c, [s], per_support=2, seed=seed + k, max_pairs=400):
            if any(p.values()) and p not in points and solution_algebra_ok(c, p):
                points.append(p)
    return points


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--supports", type=int, default=40, help="random supports for the large cases")
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    data = {}
    for case in SOLVABLE_CASES.values():
        data[case] = witnesses_for(case, args.supports, args.seed)
        print(f"{case}: {len(data[case])} witness points", flush=True)
    text = dumps(build_catalog(data))
    if dumps(loads(text)) != text:
        raise SystemExit("catalog does not round-trip")
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(text)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
