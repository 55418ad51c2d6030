"""Command-line pipeline: score, sweep, prune, truss, sparsify, betweenness,
eval, gen.

Every run echoes its resolved configuration (seed included) to stderr so
results can be reproduced; data goes to files or stdout ('-').
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from ._backend import BACKEND
from .baselines import edge_betweenness, sparsify_local, write_edge_values_csv
from .cohesion import read_scores_csv, score_all, write_scores_csv
from .evaluation import (
    BINARY_WEIGHT_COMBOS,
    GeneratorSpec,
    planted_partition,
    run_pipeline,
    write_reports_csv,
)
from .graph import EdgeListParseError, load_communities, load_edge_list, write_communities
from .pruning import mdcore_sweep, prune, write_density_curve
from .truss import maximal_community_truss, write_level_clusters, write_truss_communities

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2  # argparse's own code for unknown commands / bad flags
EXIT_MISSING_FILE = 3
EXIT_BAD_INPUT = 4


def _out(path: str):
    return sys.stdout if path == "-" else path


def _load_graph(args):
    return load_edge_list(
        args.input,
        drop_self_loops=args.drop_self_loops,
        symmetrize=args.symmetrize,
    )


def _echo_config(args) -> None:
    items = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    flat = " ".join(f"{k}={v}" for k, v in items.items())
    print(f"linkcohesion {__version__} backend={BACKEND} | {flat}", file=sys.stderr)


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument(
        "--drop-self-loops",
        action="store_true",
        help="drop self-loop lines instead of rejecting them",
    )
    p.add_argument(
        "--symmetrize",
        action="store_true",
        help="treat the input as directed; reciprocal pairs collapse",
    )


def _add_weights(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--weights",
        nargs=3,
        type=float,
        default=[1.0, 1.0, 1.0],
        metavar=("W1", "W2", "W3"),
        help="hop aggregation weights (default 1 1 1)",
    )


def cmd_score(args) -> int:
    g = _load_graph(args)
    table = score_all(g, tuple(args.weights))
    write_scores_csv(g, table, _out(args.output))
    return EXIT_OK


def cmd_sweep(args) -> int:
    g = _load_graph(args)
    truth = load_communities(args.truth, g)
    reports = []
    combos = []
    for combo in BINARY_WEIGHT_COMBOS:
        r = run_pipeline(g, truth, "mdcore", weights=combo)
        reports.append(r)
        combos.append(f"{combo[0]},{combo[1]},{combo[2]}")
    write_reports_csv(reports, _out(args.output), extra_header="w1,w2,w3", extra_rows=combos)
    return EXIT_OK


def cmd_prune(args) -> int:
    g = _load_graph(args)
    if args.scores:
        table = read_scores_csv(g, args.scores)
    else:
        table = score_all(g, tuple(args.weights))
    curve = mdcore_sweep(g, table)
    pruned = prune(g, table)
    pruned.write_edge_list(_out(args.output))
    if args.curve:
        write_density_curve(curve, args.curve)
    print(
        f"removed {curve.best_removed} of {g.edge_count} edges "
        f"(best rho {curve.best_rho:.4f})",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_truss(args) -> int:
    g = _load_graph(args)
    result = maximal_community_truss(g)
    write_truss_communities(result, g, _out(args.output))
    if args.levels:
        write_level_clusters(result, args.levels)
    print(
        f"chosen_level={result.chosen_level} clusters={result.cluster_count}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_sparsify(args) -> int:
    g = _load_graph(args)
    sparsify_local(g, args.exponent).write_edge_list(_out(args.output))
    return EXIT_OK


def cmd_betweenness(args) -> int:
    g = _load_graph(args)
    write_edge_values_csv(g, edge_betweenness(g), "betweenness", _out(args.output))
    return EXIT_OK


def cmd_eval(args) -> int:
    g = _load_graph(args)
    truth = load_communities(args.truth, g)
    report = run_pipeline(
        g, truth, args.method, weights=tuple(args.weights), exponent=args.exponent
    )
    print(report)
    if args.output:
        write_reports_csv([report], args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")] if args.sizes else args.communities
    spec = GeneratorSpec(
        n=args.n, communities=sizes, p_in=args.p_in, p_out=args.p_out, seed=args.seed
    )
    g, truth = planted_partition(spec)
    g.write_edge_list(_out(args.output))
    if args.truth_output:
        write_communities(truth, g, args.truth_output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkcohesion",
        description="Edge scoring, density pruning, and truss community pipelines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="cohesion score table as CSV")
    _add_graph_input(p)
    _add_weights(p)
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("sweep", help="binary weight ablation table (mdcore pipeline)")
    _add_graph_input(p)
    p.add_argument("--truth", required=True, help="ground-truth community file")
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("prune", help="maximum-density-core pruned edge list")
    _add_graph_input(p)
    _add_weights(p)
    p.add_argument("--scores", help="reuse a score CSV instead of rescoring")
    p.add_argument("--output", default="-")
    p.add_argument("--curve", help="also write the density curve CSV here")
    p.set_defaults(func=cmd_prune)

    p = sub.add_parser("truss", help="maximal-community truss membership")
    _add_graph_input(p)
    p.add_argument("--output", default="-", help="vertex,community CSV")
    p.add_argument("--levels", help="also write per-level cluster counts here")
    p.set_defaults(func=cmd_truss)

    p = sub.add_parser("sparsify", help="similarity-sparsified edge list")
    _add_graph_input(p)
    p.add_argument("--exponent", type=float, default=0.5)
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_sparsify)

    p = sub.add_parser("betweenness", help="edge betweenness as CSV")
    _add_graph_input(p)
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_betweenness)

    p = sub.add_parser("eval", help="run one pruning pipeline and score it")
    _add_graph_input(p)
    p.add_argument("--truth", required=True)
    p.add_argument("--method", choices=["original", "sparsify", "mdcore"], required=True)
    _add_weights(p)
    p.add_argument("--exponent", type=float, default=0.5)
    p.add_argument("--output", help="optional CSV report path")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("gen", help="planted-partition benchmark graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--communities", type=int, default=2)
    p.add_argument("--sizes", help="comma-separated sizes overriding --communities")
    p.add_argument("--p-in", type=float, required=True, dest="p_in")
    p.add_argument("--p-out", type=float, required=True, dest="p_out")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default="-")
    p.add_argument("--truth-output", dest="truth_output")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _echo_config(args)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: missing file: {exc.filename or exc}", file=sys.stderr)
        return EXIT_MISSING_FILE
    except (EdgeListParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
