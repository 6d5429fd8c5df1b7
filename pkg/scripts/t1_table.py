"""Print dim V_k (all sixteen relations) next to the five-relation count."""
import argparse
import random

from gradedcone.deformation import five_syzygy_check, hom_graded_dim, rc2q_problem
from gradedcone.formats import RING_A, sample_d


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=9)
    ap.add_argument("--sample-d", action="store_true", help="use a random D instead of D = 0")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    D = sample_d(random.Random(args.seed), RING_A) if args.sample_d else RING_A.zero()
    P = rc2q_problem(D)
    print(f"{'k':>3} {'dim V_k':>8} {'five':>6}")
    for k in range(args.kmax + 1):
        print(f"{k:>3} {hom_graded_dim(P, k):>8} {five_syzygy_check(P, k):>6}")


if __name__ == "__main__":
    main()
