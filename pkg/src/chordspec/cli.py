"""Command-line front end.

Exit codes: 0 success, 1 input or usage error, 2 a structural prediction the
oracle does not confirm.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import bench_sizes, run_bench, write_csv
from .generators import generate, parse_params
from .graph import GraphFormatError, connected_components, format_edge_list, induced_subgraph, read_edge_list
from .oracle import INTEGER_TOL
from .report import analyze_graph, canonical_dumps, summary_text
from .structural import CLASSES, classify
from .verification import VERIFY_FAMILIES, run_suite

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _load(path: str):
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise GraphFormatError(f"{path} is not ASCII text") from exc


def _emit_json(text: str, dest: str | None) -> None:
    if dest is None:
        return
    if dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text, encoding="ascii")


def cmd_analyze(args) -> int:
    g = _load(args.file)
    report = analyze_graph(
        g, path=args.file, run_oracle=not args.no_oracle, tol=args.tol, force_oracle=args.force_oracle
    )
    if args.json != "-":
        print(summary_text(report))
    _emit_json(canonical_dumps(report), args.json)
    return EXIT_OK if report["status"] == "ok" else EXIT_MISMATCH


def cmd_classify(args) -> int:
    g = _load(args.file)
    out = []
    for i, comp in enumerate(connected_components(g)):
        sub = induced_subgraph(g, comp)
        cls = classify(sub)
        out.append(cls.to_json())
        if args.json != "-":
            members = [c for c in CLASSES if cls[c]]
            extra = " complete" if cls.complete else ""
            print(f"component {i + 1} (n={sub.n}):{extra} " + (" ".join(members) or "none"))
    _emit_json(canonical_dumps({"schema": 1, "components": out}), args.json)
    return EXIT_OK


def cmd_generate(args) -> int:
    params = parse_params(args.family, args.params)
    g = generate(args.family, params, args.seed)
    note = " ".join([args.family, *args.params]) + (f" seed={args.seed}" if args.family.startswith("random") else "")
    text = format_edge_list(g, comments=[note])
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    bad = [f for f in families if f not in VERIFY_FAMILIES]
    if bad:
        raise ValueError(f"unknown verify families: {', '.join(bad)}")
    ok = True
    out_dir = Path(args.out_dir)
    for fam in families:
        res = run_suite(fam, args.count, args.max_n, args.seed, out_dir=out_dir)
        print(f"[{fam}] {args.count} instances")
        for name, (passed, failed) in res.counts.items():
            mark = "ok" if failed == 0 else "FAIL"
            print(f"  {name:34s} {passed:5d} passed {failed:5d} failed  {mark}")
        for name, idx, path in res.failures[:10]:
            print(f"  failure: {name} on instance {idx}" + (f" -> {path}" if path else ""))
        ok &= res.ok
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_bench(args) -> int:
    sizes = bench_sizes(args.max_n, args.points, args.oracle_max_n)
    rows = run_bench(sizes, oracle_max_n=args.oracle_max_n, seed=args.seed, repeats=args.repeats)
    print(f"{'n':>8} {'m':>10} {'structural_ms':>14} {'oracle_ms':>12}")
    for r in rows:
        to = "-" if r.t_oracle_ms is None else f"{r.t_oracle_ms:.3f}"
        print(f"{r.n:>8} {r.m:>10} {r.t_structural_ms:>14.3f} {to:>12}")
    if args.csv:
        write_csv(rows, args.csv)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chordspec", description="Laplacian eigenvalues read off chordal structure, checked against a dense eigensolver.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="full structural analysis, checked against the eigensolver")
    a.add_argument("file")
    a.add_argument("--no-oracle", action="store_true", help="skip the dense eigensolver")
    a.add_argument("--force-oracle", action="store_true", help="run the eigensolver even for n > 2000")
    a.add_argument("--tol", type=float, default=INTEGER_TOL, help="integer-detection tolerance")
    a.add_argument("--json", metavar="PATH", help="write the JSON report ('-' for stdout)")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify", help="membership in the chordal subclass hierarchy")
    c.add_argument("file")
    c.add_argument("--json", metavar="PATH")
    c.set_defaults(func=cmd_classify)

    g = sub.add_parser("generate", help="write a graph family member as an edge list")
    g.add_argument("family")
    g.add_argument("params", nargs="*")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", metavar="PATH")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="randomised theorem-versus-oracle property suites")
    v.add_argument("--families", default="qt,chordal,kt-split", help=f"comma list from {','.join(VERIFY_FAMILIES)}")
    v.add_argument("--count", type=int, default=100)
    v.add_argument("--max-n", type=int, default=60)
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--out-dir", default=".", help="where failing instances are written")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="structural pipeline vs dense oracle timings")
    b.add_argument("--max-n", type=int, default=20000)
    b.add_argument("--points", type=int, default=8)
    b.add_argument("--oracle-max-n", type=int, default=512)
    b.add_argument("--repeats", type=int, default=3)
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--csv", metavar="PATH")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ValueError) as exc:
        print(f"chordspec: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
