"""Command-line front end.

Verbs: density, construct, witness, arrow, ramsey, experiment.  Every
randomized verb requires an explicit --seed; given a full flag set the
output (stdout and files) is byte-identical across runs.

Exit codes: 0 success or "arrows", 1 "notarrows", 2 inconclusive
(budget exhausted or undecided within bounds), 3 internal contradiction,
64 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrows import (
    NoGoodColoringError,
    RamseyUndecidedError,
    SearchBudgetExceeded,
    TargetList,
    arrows_decision,
    base_coloring_search,
    export_cnf,
    ramsey_number,
    verify_good_coloring,
)
from .construct import (
    InternalContradictionError,
    clean,
    lift_coloring,
    parse_probability,
    run_trials,
    sample_hypergraph,
)
from .covers import expected_cover_bound
from .fileio import FormatError, read_hypergraph, write_coloring, write_hypergraph
from .hypergraph import max_r_density_with_witness, clique_density

__all__ = ["main", "entry"]

EXIT_OK = 0
EXIT_NOT_ARROWS = 1
EXIT_INCONCLUSIVE = 2
EXIT_CONTRADICTION = 3
EXIT_USAGE = 64

# s-auto gives up unless the Ramsey number of the targets falls out of a
# small search; beyond this the caller must pass --s explicitly.
S_AUTO_MAX_VERTICES = 16
S_AUTO_MAX_NODES = 200_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want 64
        raise UsageError(message)


def _parse_targets(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse target list {text!r}, expected e.g. 3,3") from None
    if not sizes:
        raise UsageError("target list is empty")
    return sizes


def _emit_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _cmd_density(args) -> int:
    if (args.file is None) == (args.clique is None):
        raise UsageError("give exactly one of <file> or --clique t,r")
    if args.clique is not None:
        parts = _parse_targets(args.clique)
        if len(parts) != 2:
            raise UsageError("--clique expects 't,r'")
        t, r = parts
        value = clique_density(t, r)
        witness = tuple(range(1, t + 1))
        source = f"clique({t},{r})"
    else:
        F = read_hypergraph(args.file)
        value, witness = max_r_density_with_witness(F)
        source = args.file
    if args.format == "json":
        payload = {
            "kind": "density",
            "source": source,
            "density": str(value),
            "witness": list(witness) if witness is not None else None,
        }
        sys.stdout.write(_emit_json(payload))
    else:
        print(value)
        if witness is not None:
            print("witness:", " ".join(map(str, witness)))
    return EXIT_OK


def _cmd_construct(args) -> int:
    p = parse_probability(args.p, args.n)
    H = sample_hypergraph(args.n, args.s, float(p), args.seed)
    report = clean(H, args.r, args.t)
    uhg_path = f"{args.out}.uhg"
    write_hypergraph(report.result, uhg_path)
    payload = report.to_json_dict(result_file=uhg_path)
    payload["p"] = str(p)
    payload["seed"] = args.seed
    _write_text(f"{args.out}.json", _emit_json(payload))
    if args.format == "json":
        sys.stdout.write(_emit_json(payload))
    else:
        print(
            f"sampled {report.input_edges} edges, deleted {len(report.deleted)} "
            f"({report.num_linearity_violations} overlap pairs, "
            f"{report.num_cover_violations} cover violations), "
            f"deleted fraction {report.deleted_fraction}"
        )
        print(f"result: {report.result.num_edges} edges -> {uhg_path}")
    return EXIT_OK


def _cmd_witness(args) -> int:
    targets = TargetList(args.r, _parse_targets(args.targets))
    if args.s is not None:
        s = args.s
    else:
        try:
            s = ramsey_number(
                targets, S_AUTO_MAX_VERTICES, max_nodes=S_AUTO_MAX_NODES
            ) - 1
        except (SearchBudgetExceeded, RamseyUndecidedError) as exc:
            raise RamseyUndecidedError(
                "--s-auto could not decide the targets' Ramsey number within "
                f"the default budget ({exc}); pass --s explicitly"
            ) from exc
    t = min(targets.sizes)
    base = base_coloring_search(s, targets, max_nodes=args.max_nodes,
                                max_seconds=args.max_seconds)
    p = parse_probability(args.p, args.n)
    H = sample_hypergraph(args.n, s, float(p), args.seed)
    report = clean(H, args.r, t)
    lifted = lift_coloring(report.result, args.r, base)
    primal = lifted.host
    check = verify_good_coloring(primal, lifted, targets)
    if not check:
        raise InternalContradictionError(
            f"lifted coloring has a monochromatic clique {check.vertices} "
            f"in color {check.color}; the cleaning step must be wrong"
        )
    uhg_path = f"{args.out}.uhg"
    col_path = f"{args.out}.col"
    h0_path = f"{args.out}.h0.uhg"
    write_hypergraph(primal, uhg_path)
    write_coloring(lifted, col_path)
    write_hypergraph(report.result, h0_path)
    payload = {
        "kind": "witness",
        "n": args.n,
        "s": s,
        "r": args.r,
        "t": t,
        "targets": list(targets.sizes),
        "p": str(p),
        "seed": args.seed,
        "input_edges": report.input_edges,
        "deleted": len(report.deleted),
        "h0_edges": report.result.num_edges,
        "primal_edges": primal.num_edges,
        "verified": True,
        "files": {"primal": uhg_path, "coloring": col_path, "h0": h0_path},
    }
    _write_text(f"{args.out}.json", _emit_json(payload))
    if args.format == "json":
        sys.stdout.write(_emit_json(payload))
    else:
        print(
            f"s={s}: certified good {targets.num_colors}-coloring of the "
            f"primal graph ({primal.num_edges} edges) -> {uhg_path}, {col_path}"
        )
    return EXIT_OK


def _cmd_arrow(args) -> int:
    G = read_hypergraph(args.file)
    targets = TargetList(G.k, _parse_targets(args.targets))
    cnf_path = None
    if args.cnf is not None:
        _write_text(args.cnf, export_cnf(G, targets))
        cnf_path = args.cnf
    if args.skip_decision:
        if cnf_path is None:
            raise UsageError("--skip-decision without --cnf does nothing")
        print(f"wrote {cnf_path}; decision skipped")
        return EXIT_OK
    result = arrows_decision(
        G, targets, max_nodes=args.max_nodes, max_seconds=args.max_seconds
    )
    witness_path = None
    if result.verdict == "not_arrows" and args.witness_out is not None:
        write_coloring(result.witness, args.witness_out)
        witness_path = args.witness_out
    payload = {
        "kind": "arrow",
        "file": args.file,
        "n": G.n,
        "r": G.k,
        "targets": list(targets.sizes),
        "verdict": result.verdict,
        "exhausted": result.exhausted,
        "nodes_explored": result.nodes_explored,
        "witness_file": witness_path,
        "cnf_file": cnf_path,
    }
    if args.format == "json":
        sys.stdout.write(_emit_json(payload))
    else:
        print(f"{result.verdict} (nodes explored: {result.nodes_explored})")
    return EXIT_OK if result.verdict == "arrows" else EXIT_NOT_ARROWS


def _cmd_ramsey(args) -> int:
    targets = TargetList(args.r, _parse_targets(args.targets))
    value = ramsey_number(
        targets, args.nmax, max_nodes=args.max_nodes, max_seconds=args.max_seconds
    )
    if args.format == "json":
        payload = {
            "kind": "ramsey",
            "r": args.r,
            "targets": list(targets.sizes),
            "n_max": args.nmax,
            "value": value,
        }
        sys.stdout.write(_emit_json(payload))
    else:
        print(value)
    return EXIT_OK


def _cmd_experiment(args) -> int:
    p = parse_probability(args.p, args.n)
    stats = run_trials(args.n, args.s, args.r, args.t, p, args.trials, args.seed)
    payload = stats.to_json_dict()
    if args.lemma42:
        bound = expected_cover_bound(args.n, args.s, args.r, args.t, p)
        sub = bound.to_json_dict()
        del sub["kind"]
        payload["cover_bound"] = sub
    if args.csv is not None:
        _write_text(args.csv, stats.to_csv())
    if args.json is not None:
        _write_text(args.json, _emit_json(payload))
    if args.format == "json":
        sys.stdout.write(_emit_json(payload))
    else:
        print(
            f"{stats.trials} trials: mean edges {stats.mean_edges:.3f}, "
            f"mean deleted {stats.mean_deleted:.3f}, "
            f"violation/edge ratio {stats.violation_edge_ratio:.6f}"
        )
        if args.lemma42:
            ratio = bound.ratio
            print(
                f"cover-count bound {float(bound.total):.6g} vs reference "
                f"{float(bound.reference):.6g} (ratio {float(ratio):.6g})"
            )
    return EXIT_OK


def _add_budget_flags(sub) -> None:
    sub.add_argument("--max-nodes", type=int, default=None,
                     help="node budget for the search (default: unlimited)")
    sub.add_argument("--max-seconds", type=float, default=None,
                     help="time budget in seconds (default: unlimited)")


def _add_format_flag(sub) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text",
                     help="stdout report format (default: text)")


def build_parser() -> _Parser:
    parser = _Parser(prog="ramseykit", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subs = parser.add_subparsers(dest="verb", required=True)

    d = subs.add_parser("density", help="maximum r-density of a hypergraph")
    d.add_argument("file", nargs="?", default=None, help=".uhg input file")
    d.add_argument("--clique", metavar="T,R", default=None,
                   help="density of the complete R-graph on T vertices")
    _add_format_flag(d)
    d.set_defaults(handler=_cmd_density)

    c = subs.add_parser(
        "construct",
        help="sample H(n,s,p), delete bad configurations, write the survivor",
    )
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--s", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--p", required=True, help="decimal, a/b, or n^x")
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--out", required=True, help="output prefix (.json/.uhg)")
    _add_format_flag(c)
    c.set_defaults(handler=_cmd_construct)

    w = subs.add_parser(
        "witness",
        help="build a primal graph with a certified good coloring",
    )
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--r", type=int, required=True)
    w.add_argument("--targets", required=True, help="comma list, e.g. 3,3")
    group = w.add_mutually_exclusive_group(required=True)
    group.add_argument("--s", type=int, default=None,
                       help="edge size of the sampled hypergraph")
    group.add_argument("--s-auto", action="store_true",
                       help="set s to the targets' Ramsey number minus one "
                            "(only for cheaply decidable targets)")
    w.add_argument("--p", required=True, help="decimal, a/b, or n^x")
    w.add_argument("--seed", type=int, required=True)
    w.add_argument("--out", required=True,
                   help="output prefix (.json/.uhg/.col/.h0.uhg)")
    _add_budget_flags(w)
    _add_format_flag(w)
    w.set_defaults(handler=_cmd_witness)

    a = subs.add_parser("arrow", help="decide arrowing, optionally export CNF")
    a.add_argument("file", help=".uhg input file")
    a.add_argument("--targets", required=True, help="comma list, e.g. 3,3")
    a.add_argument("--cnf", default=None, help="write a DIMACS CNF here")
    a.add_argument("--skip-decision", action="store_true",
                   help="only export the CNF, do not run the search")
    a.add_argument("--witness-out", default=None,
                   help="write the good coloring here when not arrowing")
    _add_budget_flags(a)
    _add_format_flag(a)
    a.set_defaults(handler=_cmd_arrow)

    rm = subs.add_parser("ramsey", help="least n with K_n arrowing the targets")
    rm.add_argument("--targets", required=True, help="comma list, e.g. 3,3")
    rm.add_argument("--r", type=int, required=True)
    rm.add_argument("--nmax", type=int, required=True)
    _add_budget_flags(rm)
    _add_format_flag(rm)
    rm.set_defaults(handler=_cmd_ramsey)

    e = subs.add_parser(
        "experiment", help="repeated sample-and-clean trials with statistics"
    )
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--s", type=int, required=True)
    e.add_argument("--r", type=int, required=True)
    e.add_argument("--t", type=int, required=True)
    e.add_argument("--p", required=True, help="decimal, a/b, or n^x")
    e.add_argument("--trials", type=int, required=True)
    e.add_argument("--seed", type=int, required=True)
    e.add_argument("--csv", default=None, help="write per-trial rows here")
    e.add_argument("--json", default=None, help="write the JSON summary here")
    e.add_argument("--lemma42", action="store_true",
                   help="also evaluate the exact cover-count bound")
    _add_format_flag(e)
    e.set_defaults(handler=_cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchBudgetExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except RamseyUndecidedError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except InternalContradictionError as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except NoGoodColoringError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
