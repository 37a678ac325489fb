"""Command-line front end.

Subcommands: gen, count, dump, scan, verify, optimize.  Exit codes:
0 success, 1 failed verification, 2 bad family/weight/statistic spec,
3 malformed tree input, 4 enumeration cap exceeded.

Flags mirror environment variables with the TREEMATCH_ prefix
(TREEMATCH_THREADS, TREEMATCH_CAP, TREEMATCH_SEED); explicit flags win.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import spideropt
from .counting import (
    count_apm,
    count_k_sapm,
    count_maximal_matchings,
    count_sapm,
    matching_profile,
)
from .errors import (
    BadFamilyParams,
    NotATree,
    OrderTooLarge,
    SpecParseError,
    TreematchError,
)
from .extremal import battery_json, run_theorem_battery, scan
from .families import FAMILY_HELP, parse_family_tree
from .hosoya import parse_weight_family, weighted_hosoya_numeric
from .treegen import enumerate_trees
from .trees import diameter, format_edge_list, parse_edge_list

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_SPEC = 2
EXIT_BAD_TREE = 3
EXIT_CAP = 4


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(f"TREEMATCH_{name}")
    return int(raw) if raw else default


@dataclass
class RunConfig:
    """Validated configuration for the heavyweight subcommands."""

    subcommand: str
    n: int | None = None
    n_max: int | None = None
    statistic: str | None = None
    objective: str = "max"
    theorem: str = "all"
    threads: int = 1
    out_format: str = "json"
    output: str | None = None
    cap: int | None = None
    seed: int = spideropt.DEFAULT_SEED
    no_meta: bool = False

    def validate(self) -> None:
        if self.threads < 1:
            raise SpecParseError("--threads must be >= 1")
        if self.out_format not in ("json", "csv", "text"):
            raise SpecParseError(f"unknown format {self.out_format!r}")
        if self.subcommand == "scan" and (self.n is None or self.statistic is None):
            raise SpecParseError("scan needs -n and --stat")

    def to_args(self) -> list[str]:
        args = [self.subcommand]
        if self.n is not None:
            args += ["-n", str(self.n)]
        if self.n_max is not None:
            args += ["--n-max", str(self.n_max)]
        if self.statistic is not None:
            args += ["--stat", self.statistic]
        if self.subcommand == "scan":
            args += ["--max" if self.objective == "max" else "--min"]
        if self.subcommand == "verify":
            args += ["--theorem", self.theorem]
        args += ["--threads", str(self.threads), "--format", self.out_format]
        if self.output:
            args += ["--output", self.output]
        if self.cap is not None:
            args += ["--cap", str(self.cap)]
        if self.no_meta:
            args += ["--no-meta"]
        args += ["--seed", str(self.seed)]
        return args


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treematch",
        description="Exact matching statistics, extremal scans, and chain optimization on trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser(
        "gen",
        help="emit a named family as an edge list",
        epilog="family specs:\n  " + "\n  ".join(FAMILY_HELP.values()),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    g.add_argument("spec", help="family spec, e.g. spider:9, st:3,2,0, db:4,5")

    c = sub.add_parser("count", help="compute statistics of a tree read as an edge list")
    c.add_argument("--input", default="-", help="edge-list file, or - for stdin")
    c.add_argument("--order", action="store_true", help="print the vertex count")
    c.add_argument("--diameter", action="store_true")
    c.add_argument("--profile", action="store_true", help="print the full size profile")
    c.add_argument("--apm", action="store_true", help="almost-perfect matchings")
    c.add_argument("--sapm", action="store_true", help="strong almost-perfect matchings")
    c.add_argument("-k", type=int, default=None, help="avoided-leaf count for --sapm")
    c.add_argument("--maximal", action="store_true", help="maximal matchings")
    c.add_argument("--hosoya", metavar="FAMILY", default=None,
                   help="weighted index, e.g. phi1:c=2, golden16, table:@file; plain count if 'unit'")

    d = sub.add_parser("dump", help="write every tree of one order, blank-line separated")
    d.add_argument("-n", type=int, required=True)
    d.add_argument("--cap", type=int, default=None)

    s = sub.add_parser("scan", help="extremal value of a statistic over all classes of order n")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--stat", required=True,
                   help="apm | sapm | ksapm:K | mk:K | maximal | hosoya | golden | zsym:phiL")
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("--max", dest="objective", action="store_const", const="max", default="max")
    grp.add_argument("--min", dest="objective", action="store_const", const="min")
    _common_flags(s)

    v = sub.add_parser("verify", help="run the theorem battery")
    v.add_argument("--theorem", default="all", help="check name or 'all'")
    v.add_argument("--n-max", type=int, default=10)
    _common_flags(v)

    o = sub.add_parser("optimize", help="optimize a spider chain's leaf distribution")
    o.add_argument("--chain", type=int, required=True, help="number of spider centers")
    o.add_argument("--k", type=int, required=True, help="avoided leaf count")
    o.add_argument("--total", type=float, default=None, help="total legs (default: chain length)")
    o.add_argument("--symmetric", action="store_true")
    grp = o.add_mutually_exclusive_group()
    grp.add_argument("--continuous", dest="mode", action="store_const", const="continuous",
                     default="integer")
    grp.add_argument("--integer", dest="mode", action="store_const", const="integer")
    o.add_argument("--seed", type=int, default=None)
    o.add_argument("--output", default=None)

    return parser


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--format", dest="out_format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--output", default=None)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--no-meta", action="store_true", help="omit timings for byte-stable output")
    p.add_argument("--seed", type=int, default=None)


def _read_tree(source: str):
    text = sys.stdin.read() if source == "-" else open(source, "r", encoding="utf-8").read()
    return parse_edge_list(text)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_gen(args) -> int:
    t = parse_family_tree(args.spec)
    sys.stdout.write(format_edge_list(t))
    return EXIT_OK


def _cmd_count(args) -> int:
    t = _read_tree(args.input)
    shown = False
    if args.order:
        print(t.n)
        shown = True
    if args.diameter:
        print(diameter(t)[0])
        shown = True
    if args.profile:
        print(" ".join(str(x) for x in matching_profile(t)))
        shown = True
    if args.apm:
        print(count_apm(t))
        shown = True
    if args.sapm:
        print(count_k_sapm(t, args.k) if args.k is not None else count_sapm(t))
        shown = True
    if args.maximal:
        print(count_maximal_matchings(t))
        shown = True
    if args.hosoya is not None:
        if args.hosoya == "unit":
            print(sum(matching_profile(t)))
        else:
            print(weighted_hosoya_numeric(t, parse_weight_family(args.hosoya)))
        shown = True
    if not shown:
        print(sum(matching_profile(t)))  # default: the matching count
    return EXIT_OK


def _cmd_dump(args) -> int:
    for t in enumerate_trees(args.n, cap=args.cap):
        sys.stdout.write(format_edge_list(t) + "\n")
    return EXIT_OK


def _cmd_scan(args) -> int:
    cfg = RunConfig(
        subcommand="scan",
        n=args.n,
        statistic=args.stat,
        objective=args.objective,
        threads=args.threads if args.threads is not None else _env_int("THREADS", 1),
        out_format=args.out_format,
        output=args.output,
        cap=args.cap if args.cap is not None else (_env_int("CAP", 0) or None),
        no_meta=args.no_meta,
    )
    cfg.validate()
    rep = scan(cfg.n, cfg.statistic, cfg.objective, threads=cfg.threads, cap=cfg.cap)
    payload = rep.to_dict(meta=not cfg.no_meta)
    if cfg.out_format == "json":
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", cfg.output)
    elif cfg.out_format == "csv":
        _emit("n,statistic,objective,value,classes_scanned,argmax_size\n"
              f"{rep.n},{rep.statistic},{rep.objective},{rep.value_str},"
              f"{rep.classes_scanned},{len(rep.argmax)}\n", cfg.output)
    else:
        _emit(f"n={rep.n} {rep.statistic} {rep.objective}: value={rep.value_str} "
              f"argmax={len(rep.argmax)} classes={rep.classes_scanned}\n", cfg.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = RunConfig(
        subcommand="verify",
        n_max=args.n_max,
        theorem=args.theorem,
        threads=args.threads if args.threads is not None else _env_int("THREADS", 1),
        out_format=args.out_format,
        output=args.output,
        cap=args.cap if args.cap is not None else (_env_int("CAP", 0) or None),
        no_meta=args.no_meta,
    )
    cfg.validate()
    report = run_theorem_battery(cfg.n_max, cfg.theorem, threads=cfg.threads, cap=cfg.cap)
    for c in report.checks:
        mark = "pass" if c.passed else "FAIL"
        print(f"[{mark}] {c.theorem} n={c.n}: expected {c.expected}; observed {c.observed}")
    if cfg.out_format == "csv":
        _emit(report.to_csv(), cfg.output)
    elif cfg.output or cfg.out_format == "json":
        _emit(battery_json(report, meta=not cfg.no_meta), cfg.output)
    return EXIT_OK if report.all_pass else EXIT_VERIFY_FAILED


def _cmd_optimize(args) -> int:
    seed = args.seed if args.seed is not None else _env_int("SEED", spideropt.DEFAULT_SEED)
    total = args.total if args.total is not None else float(args.chain)
    if args.mode == "integer":
        total = int(total)
    res = spideropt.optimize_leaf_distribution(
        args.chain, total, args.k, mode=args.mode, symmetric=args.symmetric, seed=seed,
    )
    _emit(json.dumps(res.to_dict(), indent=2, sort_keys=True) + "\n", args.output)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "count": _cmd_count,
        "dump": _cmd_dump,
        "scan": _cmd_scan,
        "verify": _cmd_verify,
        "optimize": _cmd_optimize,
    }
    try:
        return handlers[args.command](args)
    except (SpecParseError, BadFamilyParams) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_SPEC
    except NotATree as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_TREE
    except OrderTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except TreematchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_SPEC


if __name__ == "__main__":
    raise SystemExit(main())
