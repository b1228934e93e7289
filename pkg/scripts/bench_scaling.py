"""Structural pipeline vs dense oracle on random quasi-threshold graphs.

Writes bench.csv next to the working directory and prints the doubling ratios.

    python3 scripts/bench_scaling.py [--max-n 20000] [--oracle-max-n 512]
"""
import argparse

from chordspec.bench import bench_sizes, run_bench, write_csv


def ratios(rows, attr):
    by_n = {r.n: getattr(r, attr) for r in rows if getattr(r, attr) is not None}
    return [(n, by_n[2 * n] / by_n[n]) for n in sorted(by_n) if 2 * n in by_n and by_n[n] > 0]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=20000)
    ap.add_argument("--points", type=int, default=5)
    ap.add_argument("--oracle-max-n", type=int, default=512)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--csv", default="bench.csv")
    args = ap.parse_args()

    rows = run_bench(bench_sizes(args.max_n, args.points, args.oracle_max_n),
                     oracle_max_n=args.oracle_max_n, repeats=args.repeats)
    write_csv(rows, args.csv)
    for r in rows:
        print(r)
    for n, x in ratios(rows, "t_structural_ms"):
        print(f"structural {n:>6} -> {2 * n:<6} x{x:.2f}")
    for n, x in ratios(rows, "t_oracle_ms"):
        print(f"oracle     {n:>6} -> {2 * n:<6} x{x:.2f}")


if __name__ == "__main__":
    main()
