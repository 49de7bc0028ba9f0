"""Command-line interface.

Exit status: 0 when a check holds or a command succeeds, 1 when a checked
property is false, 2 on usage, parse or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from lawsmith import documents, law_design, oracle
from lawsmith.errors import LawOutOfUniverse, LawsmithError
from lawsmith.game import Game, Law, attribute_responsibility, validate_law
from lawsmith.generators import KINDS, GeneratorSpec, generate
from lawsmith.reductions import game_to_graph, graph_to_game, useful_to_gapfree_game

CHECKS = {
    "check-useful": ("useful", law_design.is_useful_law),
    "check-minimal-useful": ("minimal-useful", law_design.is_minimal_useful_law),
    "check-gapfree": ("gap-free", law_design.is_gap_free_law),
    "check-minimal-gapfree": ("minimal-gap-free", law_design.is_minimal_gap_free_law),
}

REDUCERS = {
    "reduce-useful": (law_design.approx_min_useful_reduction, oracle.exact_min_useful_reduction),
    "reduce-gapfree": (law_design.approx_min_gap_free_reduction, oracle.exact_min_gap_free_reduction),
}


def _game_and_law(args) -> tuple[Game, Law]:
    g = documents.load_game(args.game)
    law = documents.load_law(args.law)
    report = validate_law(g, law)
    if not report.ok:
        raise LawOutOfUniverse("; ".join(report.violations))
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return g, law


def _emit(doc, output: str | None) -> None:
    text = documents.dumps(doc)
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _budget(args) -> oracle.SearchBudget:
    return oracle.SearchBudget(max_universe=args.max_universe)


def cmd_check(args) -> int:
    label, check = CHECKS[args.command]
    g, law = _game_and_law(args)
    verdict = check(g, law)
    print(f"{label}: {'true' if verdict else 'false'}")
    return 0 if verdict else 1


def cmd_reduce(args) -> int:
    approx, exact = REDUCERS[args.command]
    g, law = _game_and_law(args)
    result = approx(g, law)
    _emit(documents.law_to_document(result.law), args.output)
    print(f"size: {len(result.law)}")
    print(f"witness: {result.witness if result.witness else 'input law kept'}")
    if args.exact:
        best = exact(g, law, _budget(args))
        ratio = len(result.law) / len(best) if len(best) else 1.0
        print(f"exact minimum: {len(best)}")
        print(f"ratio: {ratio:.3f}")
    return 0


def cmd_attribute(args) -> int:
    g, law = _game_and_law(args)
    profile = documents.load_profile(args.profile)
    verdict = attribute_responsibility(g, law, profile)
    for agent, v in verdict.per_agent.items():
        print(f"{agent}: {v.value}")
    return 0


def cmd_convert(args) -> int:
    if args.to == "game":
        if not args.graph:
            raise LawsmithError("--to game needs --graph")
        doc = documents.game_to_document(graph_to_game(documents.load_graph(args.graph)))
    else:
        if not args.game:
            raise LawsmithError(f"--to {args.to} needs --game")
        g = documents.load_game(args.game)
        if args.to == "graph":
            doc = documents.graph_to_document(game_to_graph(g))
        else:
            doc = documents.game_to_document(useful_to_gapfree_game(g))
    _emit(doc, args.output)
    return 0


def cmd_generate(args) -> int:
    source = documents.read_json(args.source) if args.source else None
    spec = GeneratorSpec(
        kind=args.kind,
        seed=args.seed,
        agents=args.agents,
        actions=args.actions,
        prohibitions=args.prohibitions,
        pool=args.pool,
        vertices=args.vertices,
        edges=args.edges,
        rank=args.rank,
        exact_rank=args.exact_rank,
        source=source,
    )
    _emit(generate(spec), args.output)
    return 0


def cmd_exact(args) -> int:
    budget = _budget(args)
    if args.problem == "vc":
        if not args.graph:
            raise LawsmithError("--problem vc needs --graph")
        cover = oracle.exact_min_vertex_cover(documents.load_graph(args.graph), budget)
        _emit({"cover": sorted(cover)}, args.output)
        print(f"size: {len(cover)}")
        return 0
    if not (args.game and args.law):
        raise LawsmithError(f"--problem {args.problem} needs --game and --law")
    g, law = _game_and_law(args)
    solve = oracle.exact_min_useful_reduction if args.problem == "useful" else oracle.exact_min_gap_free_reduction
    best = solve(g, law, budget)
    _emit(documents.law_to_document(best), args.output)
    print(f"size: {len(best)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lawsmith", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def game_law(p):
        p.add_argument("--game", required=True, help="game document")
        p.add_argument("--law", required=True, help="law document path or inline JSON")

    def budget(p):
        p.add_argument("--max-universe", type=int, default=20, help="largest ground set to enumerate")

    for name in CHECKS:
        p = sub.add_parser(name, help=f"{name.replace('-', ' ')} (exit 0 if true, 1 if false)")
        game_law(p)
        p.set_defaults(func=cmd_check)

    for name in REDUCERS:
        p = sub.add_parser(name, help="approximate minimum reduction of a law")
        game_law(p)
        p.add_argument("--exact", action="store_true", help="also compute the exact minimum and ratio")
        p.add_argument("--output", help="write the reduced law here instead of stdout")
        budget(p)
        p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("attribute", help="per-agent responsibility in a prohibited profile")
    game_law(p)
    p.add_argument("--profile", required=True, help="profile document path or inline JSON")
    p.set_defaults(func=cmd_attribute)

    p = sub.add_parser("convert", help="translate between games and graphs")
    p.add_argument("--to", required=True, choices=["graph", "game", "gapfree-game"])
    p.add_argument("--game")
    p.add_argument("--graph")
    p.add_argument("--output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("generate", help="seeded instance generator")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--agents", type=int, default=3)
    p.add_argument("--actions", type=int, default=3)
    p.add_argument("--prohibitions", type=int, default=8)
    p.add_argument("--pool", type=int, default=0, help="shared action pool size (0: disjoint)")
    p.add_argument("--vertices", type=int, default=8)
    p.add_argument("--edges", type=int, default=10)
    p.add_argument("--rank", type=int, default=3)
    p.add_argument("--exact-rank", action="store_true", help="every edge has exactly RANK vertices")
    p.add_argument("--source", help="input document for the gadget kinds")
    p.add_argument("--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("exact", help="brute-force exact solvers (budget-gated)")
    p.add_argument("--problem", required=True, choices=["vc", "useful", "gapfree"])
    p.add_argument("--graph")
    p.add_argument("--game")
    p.add_argument("--law")
    p.add_argument("--output")
    budget(p)
    p.set_defaults(func=cmd_exact)
    return parser


def run_command(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (LawsmithError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
