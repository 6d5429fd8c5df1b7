"""Run every registered scenario for D = 0 and a sampled D, and summarise."""
import argparse

from gradedcone.scenarios import SCENARIOS, ScenarioOptions, run_many


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=2)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    ok = True
    for d_poly in ("zero", "sample"):
        res = run_many(list(SCENARIOS), ScenarioOptions(d_poly=d_poly, seed=args.seed), jobs=args.jobs)
        for r in res["reports"]:
            print(f"{d_poly:6} {'PASS' if r['passed'] else 'FAIL'} {r['scenario']} ({res['timings'][r['scenario']]:.2f}s)")
        ok &= res["passed"]
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
