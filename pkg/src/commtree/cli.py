"""Command-line front end.

Subcommands: tree, diagram, distance, tsn, verify. Output is fully
deterministic: given the same inputs (and the same --seed for randomized
commands) every run produces byte-identical bytes.

Exit codes: 0 success, 2 parse or usage error, 3 resource limit,
4 internal invariant breach (including a failed stability check).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .bottleneck import Matching, bottleneck_distance
from .cliques import DEFAULT_CLIQUE_CAP
from .errors import InconsistentTreeError, ParseError, ResourceLimitError, SelfLoopError
from .graph import Graph, load_graph, remove_vertex
from .random_graphs import gnp_graph, perturb_near_vertices
from .stability import DEFAULT_NODE_BUDGET, tsn, verify_stability
from .tree import (
    CommunityTree,
    community_tree,
    components,
    export_tree,
    persistence_diagram,
)

__all__ = ["main", "RunConfig"]


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, resolved from the parsed args."""

    inputs: tuple[str, ...]
    input_format: str
    output_format: str
    out: str | None
    clique_cap: int
    node_budget: int
    seed: int | None


def _half_str(value: Fraction) -> str:
    """Exact one-decimal rendering of an integer or half-integer."""
    doubled = int(value * 2)
    return f"{doubled // 2}.{5 if doubled % 2 else 0}"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load(cfg: RunConfig, which: int = 0) -> Graph:
    return load_graph(cfg.inputs[which], cfg.input_format)


def _tree_summary(tree: CommunityTree) -> str:
    lines = [
        f"nodes: {tree.node_count}",
        f"leaves: {len(tree.leaves())}",
        f"k_max: {tree.max_order()}",
    ]
    for node in tree.nodes:
        size = len(node.community.vertex_set)
        lines.append(f"  node {node.id}: k={node.order} size={size}")
    return "\n".join(lines) + "\n"


def cmd_tree(cfg: RunConfig) -> int:
    tree = community_tree(_load(cfg), cfg.clique_cap)
    if cfg.output_format in ("dot", "json"):
        _emit(export_tree(tree, cfg.output_format), cfg.out)
    else:
        _emit(_tree_summary(tree), cfg.out)
    return 0


def cmd_diagram(cfg: RunConfig) -> int:
    tree = community_tree(_load(cfg), cfg.clique_cap)
    diagram = persistence_diagram(components(tree))
    if cfg.output_format == "json":
        _emit(diagram.to_json(), cfg.out)
    else:
        lines = ["death birth mult"]
        for (death, birth), mult in sorted(diagram.multiplicities().items()):
            lines.append(f"{death} {birth} {mult}")
        _emit("\n".join(lines) + "\n", cfg.out)
    return 0


def _matching_lines(matching: Matching, pd1, pd2) -> list[str]:
    lines = []
    for i, j in matching.pairs:
        left = f"({pd1.points[i][0]},{pd1.points[i][1]})" if i is not None else "diagonal"
        right = f"({pd2.points[j][0]},{pd2.points[j][1]})" if j is not None else "diagonal"
        lines.append(f"  {left} -> {right}")
    return lines


def cmd_distance(cfg: RunConfig) -> int:
    tree1 = community_tree(_load(cfg, 0), cfg.clique_cap)
    tree2 = community_tree(_load(cfg, 1), cfg.clique_cap)
    pd1 = persistence_diagram(components(tree1))
    pd2 = persistence_diagram(components(tree2))
    distance, matching = bottleneck_distance(pd1, pd2)
    if cfg.output_format == "json":
        payload = {
            "distance": float(distance),
            "matching": [
                {
                    "from": list(pd1.points[i]) if i is not None else "diagonal",
                    "to": list(pd2.points[j]) if j is not None else "diagonal",
                }
                for i, j in matching.pairs
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", cfg.out)
    else:
        lines = [f"d_B = {_half_str(distance)}", "matching:"]
        lines.extend(_matching_lines(matching, pd1, pd2))
        _emit("\n".join(lines) + "\n", cfg.out)
    return 0


def cmd_tsn(cfg: RunConfig) -> int:
    stars = tsn(_load(cfg, 0), _load(cfg, 1), cfg.node_budget)
    if cfg.output_format == "json":
        _emit(json.dumps(stars.json_dict(), indent=2) + "\n", cfg.out)
    else:
        payload = stars.json_dict()
        lines = [f"{key} = {payload[key]}" for key in ("rsn", "asn", "tsn", "exact")]
        _emit("\n".join(lines) + "\n", cfg.out)
    return 0


def _verify_pair_dict(g: Graph, g_prime: Graph, cfg: RunConfig) -> dict:
    report = verify_stability(g, g_prime, cfg.clique_cap, cfg.node_budget)
    return report.json_dict()


def cmd_verify(cfg: RunConfig, args: argparse.Namespace) -> int:
    reports: list[dict] = []
    labels: list[str] = []
    if args.random is not None:
        n, p, trials = args.random
        if cfg.seed is None:
            raise ParseError(0, "--random requires an explicit --seed")
        rng = random.Random(cfg.seed)
        for trial in range(int(trials)):
            g = gnp_graph(int(n), float(p), rng)
            g_prime = perturb_near_vertices(g, rng)
            reports.append(_verify_pair_dict(g, g_prime, cfg))
            labels.append(f"trial {trial + 1}")
    elif args.sweep:
        g = _load(cfg, 0)
        for label in g.labels:
            reports.append(_verify_pair_dict(g, remove_vertex(g, label), cfg))
            labels.append(f"remove {label}")
    else:
        if len(cfg.inputs) != 2:
            raise ParseError(0, "verify needs two inputs, --sweep, or --random")
        reports.append(_verify_pair_dict(_load(cfg, 0), _load(cfg, 1), cfg))
        labels.append("pair")

    held = sum(1 for r in reports if r["holds"])
    if cfg.output_format == "json":
        payload = {
            "checks": [
                {"name": name, **report} for name, report in zip(labels, reports)
            ],
            "held": held,
            "total": len(reports),
        }
        _emit(json.dumps(payload, indent=2) + "\n", cfg.out)
    else:
        lines = []
        for name, report in zip(labels, reports):
            tsn_text = (
                str(report["tsn"])
                if report["exact"]
                else "[{},{}]".format(*report["tsn"])
            )
            verdict = "holds" if report["holds"] else "VIOLATED"
            lines.append(
                f"{name}: d_B={report['d_bottleneck']:.1f} tsn={tsn_text} {verdict}"
            )
        lines.append(f"ok {held}/{len(reports)} checks hold")
        _emit("\n".join(lines) + "\n", cfg.out)
    return 0 if held == len(reports) else 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commtree",
        description=(
            "Community trees of undirected networks via clique percolation: "
            "persistence diagrams, bottleneck distances, and stability bounds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, n_inputs: int, formats: list[str]):
        if n_inputs == 1:
            p.add_argument("input")
        else:
            p.add_argument("input1")
            p.add_argument("input2")
        p.add_argument(
            "--input-format",
            choices=["auto", "edgelist", "gml"],
            default="auto",
            help="input file format (auto: .gml means GML, anything else edge list)",
        )
        p.add_argument("--format", choices=formats, default="text", dest="out_format")
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--clique-cap", type=int, default=DEFAULT_CLIQUE_CAP)
        p.add_argument("--mvc-budget", type=int, default=DEFAULT_NODE_BUDGET)

    p_tree = sub.add_parser("tree", help="community tree summary or export")
    add_common(p_tree, 1, ["text", "json", "dot"])

    p_diagram = sub.add_parser("diagram", help="persistence diagram of one network")
    add_common(p_diagram, 1, ["text", "json"])

    p_distance = sub.add_parser("distance", help="bottleneck distance of two networks")
    add_common(p_distance, 2, ["text", "json"])

    p_tsn = sub.add_parser("tsn", help="star numbers of two networks")
    add_common(p_tsn, 2, ["text", "json"])

    p_verify = sub.add_parser(
        "verify", help="check that the tree distance stays within the star bound"
    )
    p_verify.add_argument("inputs", nargs="*")
    p_verify.add_argument(
        "--input-format", choices=["auto", "edgelist", "gml"], default="auto"
    )
    p_verify.add_argument(
        "--format", choices=["text", "json"], default="text", dest="out_format"
    )
    p_verify.add_argument("--out")
    p_verify.add_argument("--clique-cap", type=int, default=DEFAULT_CLIQUE_CAP)
    p_verify.add_argument("--mvc-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p_verify.add_argument(
        "--sweep",
        action="store_true",
        help="verify every single-vertex deletion of one input",
    )
    p_verify.add_argument(
        "--random",
        nargs=3,
        metavar=("N", "P", "TRIALS"),
        help="verify TRIALS random G(N, P) graphs against local perturbations",
    )
    p_verify.add_argument("--seed", type=int, help="RNG seed (required with --random)")
    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    if args.command == "verify":
        inputs = tuple(args.inputs)
    elif hasattr(args, "input1"):
        inputs = (args.input1, args.input2)
    else:
        inputs = (args.input,)
    return RunConfig(
        inputs=inputs,
        input_format=args.input_format,
        output_format=args.out_format,
        out=args.out,
        clique_cap=args.clique_cap,
        node_budget=args.mvc_budget,
        seed=getattr(args, "seed", None),
    )


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = _config_from(args)
    try:
        if args.command == "tree":
            return cmd_tree(cfg)
        if args.command == "diagram":
            return cmd_diagram(cfg)
        if args.command == "distance":
            return cmd_distance(cfg)
        if args.command == "tsn":
            return cmd_tsn(cfg)
        if args.command == "verify":
            return cmd_verify(cfg, args)
        raise AssertionError(f"unhandled command {args.command}")
    except (ParseError, SelfLoopError, OSError, UnicodeDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InconsistentTreeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
