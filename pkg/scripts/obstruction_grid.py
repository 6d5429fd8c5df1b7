"""Scan second-order feasibility over the default grid and compare with the quadrics."""
import argparse
import random
from fractions import Fraction

from gradedcone.deformation import DESIGNATED_POINTS, cone_problem, default_grid, obstruction_scan
from gradedcone.formats import RING_B, sample_d


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sample-d", action="store_true")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    D = sample_d(random.Random(args.seed), RING_B) if args.sample_d else RING_B.zero()
    rows = obstruction_scan(cone_problem(D), default_grid() + list(DESIGNATED_POINTS), D)
    mismatches = 0
    for r in rows:
        nz = {k: str(v) for k, v in r.point.as_dict().items() if Fraction(str(v))}
        flag = "" if r.feasible == r.predicted else "  MISMATCH"
        mismatches += bool(flag)
        print(f"feasible={r.feasible!s:5} predicted={r.predicted!s:5} {nz}{flag}")
    print(f"{len(rows)} points, {sum(r.feasible for r in rows)} feasible, {mismatches} mismatches")


if __name__ == "__main__":
    main()
