"""Command-line front end.

Subcommands: ``check`` (compatibility verdict), ``supertree`` (emit a
displaying supertree as Newick), ``gen`` (seeded random profiles),
``bench`` (doubling-ladder timings), ``selftest`` (oracle-agreement fuzz
plus a dynamic-connectivity stress run).

Exit codes are stable API: 0 for compatible / success, 1 for
incompatible (or selftest failure), 2 for usage or parse errors.
Verdicts go to standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import random
import sys

from .bench import (DEFAULT_SHAPES, DEFAULT_SIZES, format_table, run_ladder,
                    write_csv)
from .buildg import buildg, check_only
from .dynconn import DynGraph
from .gen import GenConfig, gen_compatible, gen_perturbed
from .newick import NewickError, parse_profile, write_profile, write_tree
from .oracle import (NaiveConnectivity, brute_force_compatible, build_classic,
                     enumerate_trees)
from .phylo import displays
from .taxa import TaxonTable

EXIT_OK = 0
EXIT_INCOMPATIBLE = 1
EXIT_ERROR = 2


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_profile(path: str):
    name = "<stdin>" if path == "-" else path
    return parse_profile(_read_input(path), TaxonTable(), source_name=name)


# -- subcommands ---------------------------------------------------------


def cmd_check(args) -> int:
    p = _load_profile(args.input)
    if check_only(p):
        print("COMPATIBLE")
        return EXIT_OK
    print("INCOMPATIBLE")
    return EXIT_INCOMPATIBLE


def cmd_supertree(args) -> int:
    p = _load_profile(args.input)
    tree = buildg(p)
    if tree is None:
        print("INCOMPATIBLE")
        return EXIT_INCOMPATIBLE
    if args.verify:
        for idx, t in enumerate(p.trees):
            if not displays(tree, t):
                print(f"error: output fails to display input tree {idx + 1}",
                      file=sys.stderr)
                return EXIT_ERROR
    _write_output(args.output, write_tree(tree, p.taxa) + "\n")
    return EXIT_OK


def cmd_gen(args) -> int:
    cfg = GenConfig(seed=args.seed, n_species=args.species,
                    k_trees=args.trees, coverage=args.coverage,
                    resolution=args.shape, perturb=args.perturb)
    p = gen_perturbed(cfg) if cfg.perturb else gen_compatible(cfg)
    _write_output(args.output, write_profile(p))
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = ([int(s) for s in args.sizes.split(",")] if args.sizes
             else DEFAULT_SIZES)
    shapes = args.shapes.split(",") if args.shapes else DEFAULT_SHAPES
    for shape in shapes:
        if shape not in ("binary", "star", "mixed"):
            raise argparse.ArgumentTypeError(f"unknown shape {shape!r}")

    def progress(row):
        if not args.quiet:
            print(f"  {row.shape:8} m_p={row.m_p:>9}  {row.seconds:.3f}s",
                  file=sys.stderr)

    rows = run_ladder(sizes=sizes, shapes=shapes, seed=args.seed,
                      progress=progress)
    if not args.quiet:
        print(format_table(rows))
    if args.csv:
        write_csv(rows, args.csv)
    return EXIT_OK


def _selftest_dynconn(seed: int, n: int, ops: int) -> int:
    """Mixed-operation stress against the naive oracle; returns failures."""
    rng = random.Random(seed)
    g = DynGraph(n, seed=seed)
    naive = NaiveConnectivity(n)
    edges: list[tuple[int, int]] = []
    bad = 0
    for _ in range(ops):
        roll = rng.random()
        if edges and roll < 0.4:
            u, v = edges.pop(rng.randrange(len(edges)))
            report = g.delete_edge(u, v)
            naive.delete(u, v)
            if (report is None) != naive.connected(u, v):
                bad += 1
        elif roll < 0.85:
            u, v = rng.sample(range(n), 2)
            key = (u, v) if u < v else (v, u)
            if key in naive.edges:
                continue
            merged = g.insert_edge(u, v)
            if merged != (not naive.connected(u, v)):
                bad += 1
            naive.insert(u, v)
            edges.append(key)
        else:
            u, v = rng.sample(range(n), 2)
            if g.connected(u, v) != naive.connected(u, v):
                bad += 1
    return bad


def cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    failures = []

    counts = [sum(1 for _ in enumerate_trees(range(n))) for n in (2, 3, 4)]
    if counts != [1, 4, 26]:
        failures.append(f"tree enumeration counts {counts} != [1, 4, 26]")

    checked = 0
    for trial in range(520):
        tiny = trial % 4 == 0
        cfg = GenConfig(seed=rng.getrandbits(48),
                        n_species=rng.randint(3, 5 if tiny else 12),
                        k_trees=rng.randint(1, 4 if tiny else 5),
                        coverage=rng.uniform(0.5, 1.0),
                        resolution=rng.choice(("binary", "star", "mixed")),
                        perturb=rng.choice((0, 0, 1, 2)))
        p = gen_perturbed(cfg)
        tree = buildg(p)
        verdict = tree is not None
        if verdict != (build_classic(p) is not None):
            failures.append(f"buildg vs build_classic mismatch: {cfg}")
        if tiny and verdict != brute_force_compatible(p):
            failures.append(f"buildg vs brute force mismatch: {cfg}")
        if verdict and not all(displays(tree, t) for t in p.trees):
            failures.append(f"output fails display check: {cfg}")
        checked += 1
    if not args.quiet:
        print(f"oracle agreement: {checked} profiles", file=sys.stderr)

    bad = sum(_selftest_dynconn(args.seed + i, n, 1200)
              for i, n in enumerate((16, 48, 128)))
    if bad:
        failures.append(f"dynamic connectivity: {bad} oracle disagreements")
    if not args.quiet:
        print("connectivity stress: 3600 operations", file=sys.stderr)

    if failures:
        for f in failures:
            print(f"selftest FAIL: {f}", file=sys.stderr)
        print("FAIL")
        return EXIT_INCOMPATIBLE
    print("PASS")
    return EXIT_OK


# -- argument parsing ----------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="treecompat",
        description="Rooted tree compatibility testing and supertrees.")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def add_input(p):
        p.add_argument("--input", default="-", metavar="PATH",
                       help="Newick profile file, or - for stdin")

    p = sub.add_parser("check", help="print COMPATIBLE or INCOMPATIBLE")
    add_input(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("supertree", help="emit a displaying supertree")
    add_input(p)
    p.add_argument("--output", default=None, metavar="PATH",
                   help="write Newick here instead of stdout")
    p.add_argument("--verify", action="store_true",
                   help="re-check the output against every input tree")
    p.set_defaults(func=cmd_supertree)

    p = sub.add_parser("gen", help="generate a seeded random profile")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--species", type=int, default=16, metavar="N")
    p.add_argument("--trees", type=int, default=3, metavar="K")
    p.add_argument("--shape", choices=("binary", "star", "mixed"),
                   default="binary")
    p.add_argument("--coverage", type=float, default=0.75)
    p.add_argument("--perturb", type=int, default=0,
                   help="leaf-label swaps in one tree (may break "
                        "compatibility)")
    p.add_argument("--output", default=None, metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="doubling-ladder timing runs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sizes", default=None,
                   help="comma-separated size targets (default 2^15..2^21)")
    p.add_argument("--shapes", default=None,
                   help="comma-separated shapes (default binary,star)")
    p.add_argument("--csv", default=None, metavar="PATH")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="oracle-agreement fuzz suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_selftest)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    try:
        return args.func(args)
    except NewickError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except argparse.ArgumentTypeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
