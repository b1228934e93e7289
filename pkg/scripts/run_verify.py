"""Run every randomised property suite with larger counts than the unit tests.

    python3 scripts/run_verify.py [--count 500] [--max-n 60] [--seed 1]
"""
import argparse
import sys
import time
from pathlib import Path

from chordspec.verification import VERIFY_FAMILIES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-n", type=int, default=60)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out-dir", default="verify-failures")
    args = ap.parse_args()

    ok = True
    for fam in VERIFY_FAMILIES:
        t0 = time.perf_counter()
        res = run_suite(fam, args.count, args.max_n, args.seed, out_dir=Path(args.out_dir))
        dt = time.perf_counter() - t0
        failed = sum(c[1] for c in res.counts.values())
        print(f"{fam:15s} {args.count} graphs  {len(res.counts)} properties  {failed} failures  {dt:.1f} s")
        ok &= res.ok
    sys.exit(0 if ok else 2)


if __name__ == "__main__":
    main()
