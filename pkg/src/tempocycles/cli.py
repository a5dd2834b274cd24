"""Command-line front end.

Sub-commands: detect (find a cycle of a kind), temporize (construct or
search for an acyclic temporization), verify (check a temporization file
against a graph), generate (instance generators), girth, reach (earliest
arrival / latest departure tables).

Exit codes: 0 found/yes, 1 not-found/no, 2 unknown, 3 aborted,
10 usage error, 11 unreadable or malformed input, 12 oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys

from .core import (
    CycleKind,
    CycleWitness,
    GraphFormatError,
    PathModel,
    PathWitness,
    girth,
    parse_digraph,
    parse_temporal_digraph,
)
from .detect import BudgetExceeded, detect_simple, detect_strong, detect_weak
from .oracle import OracleCapError, oracle_detect, oracle_reachability
from .randgen import random_digraph, random_temporal_digraph
from .reach import earliest_arrival, latest_departure
from .reduce import (
    CnfFormatError,
    auxiliary_cycle,
    nae_to_simple_instance,
    nae_to_weak_instance,
    parse_dimacs,
    sat_to_strong_instance,
)
from .temporize import (
    DEFAULT_SEARCH_BUDGET,
    DecisionStatus,
    acyclic_temporization,
    bounded_lifetime_search,
    parse_temporization,
    strict_acyclic_temporization,
)

EXIT_FOUND = 0
EXIT_NONE = 1
EXIT_UNKNOWN = 2
EXIT_ABORTED = 3
EXIT_USAGE = 10
EXIT_INPUT = 11
EXIT_MISMATCH = 12

_STATUS_EXITS = {
    DecisionStatus.YES: EXIT_FOUND,
    DecisionStatus.NO: EXIT_NONE,
    DecisionStatus.UNKNOWN: EXIT_UNKNOWN,
    DecisionStatus.ABORTED: EXIT_ABORTED,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from None


def _format_path(path: PathWitness) -> str:
    parts = [path.vertices[0]]
    for t, v in zip(path.times, path.vertices[1:]):
        parts.append(f"-[{t}]-> {v}")
    return " ".join(parts)


def _print_witness(witness: CycleWitness) -> None:
    for path in witness.paths:
        label = "cycle" if path.start == path.end else "path"
        print(f"{label}: {_format_path(path)}")


def _witness_dict(witness: CycleWitness | None):
    if witness is None:
        return None
    return {
        "kind": witness.kind.value,
        "cycle": list(witness.cycle),
        "paths": [
            {"vertices": list(p.vertices), "times": list(p.times)}
            for p in witness.paths
        ],
    }


def _temporization_dict(temporization):
    if temporization is None:
        return None
    return {
        f"{tail} {head}": list(labels)
        for (tail, head), labels in temporization.assignment.items()
    }


def _run_detector(graph, kind: CycleKind, model: PathModel, budget):
    if kind is CycleKind.SIMPLE:
        return detect_simple(graph, model), None
    if kind is CycleKind.WEAK:
        return detect_weak(graph, model), None
    witness, stats = detect_strong(graph, model, budget_seconds=budget)
    return witness, stats


def _oracle_agrees(graph, kind, model, found: bool, as_json: bool) -> bool:
    oracle_found = oracle_detect(graph, kind, model) is not None
    if oracle_found == found:
        return True
    message = (
        f"oracle disagreement: detector says {'found' if found else 'none'}, "
        f"oracle says {'found' if oracle_found else 'none'}"
    )
    if as_json:
        print(json.dumps({"error": message}))
    print(message, file=sys.stderr)
    return False


def _cmd_detect(args) -> int:
    graph = parse_temporal_digraph(_read(args.file))
    kind = CycleKind(args.kind)
    model = PathModel(args.model)
    try:
        witness, stats = _run_detector(graph, kind, model, args.budget)
    except BudgetExceeded as exc:
        if args.json:
            print(
                json.dumps(
                    {
                        "command": "detect",
                        "kind": kind.value,
                        "model": model.value,
                        "aborted": True,
                        "blocking_size": exc.stats.total_blocking_size,
                    }
                )
            )
        else:
            print(
                "aborted: time budget exceeded "
                f"(blocking store held {exc.stats.total_blocking_size} entries)"
            )
        return EXIT_ABORTED
    found = witness is not None
    if args.oracle and not _oracle_agrees(graph, kind, model, found, args.json):
        return EXIT_MISMATCH
    if args.json:
        report = {
            "command": "detect",
            "kind": kind.value,
            "model": model.value,
            "found": found,
            "witness": _witness_dict(witness),
        }
        if stats is not None:
            report["stats"] = {
                "recursions": stats.total_recursions,
                "blocking_size": stats.total_blocking_size,
                "closure_rejections": stats.closure_rejections,
                "witness_rejections": stats.witness_rejections,
            }
        print(json.dumps(report))
    else:
        print(f"kind: {kind.value}")
        print(f"model: {model.value}")
        print(f"found: {'yes' if found else 'no'}")
        if witness is not None:
            _print_witness(witness)
    return EXIT_FOUND if found else EXIT_NONE


def _cmd_temporize(args) -> int:
    graph = parse_digraph(_read(args.file))
    kind = CycleKind(args.kind)
    model = PathModel(args.model)
    order = _read(args.order).split() if args.order else None
    if args.tau_max is not None:
        if order is not None:
            raise _UsageError("--order does not apply to the bounded search")
        decision = bounded_lifetime_search(
            graph,
            kind,
            args.tau_max,
            budget=args.budget if args.budget is not None else DEFAULT_SEARCH_BUDGET,
            model=model,
        )
        check_model = model
    elif model is PathModel.STRICT:
        if order is not None:
            raise _UsageError("--order does not apply to the strict construction")
        decision = strict_acyclic_temporization(graph, kind)
        check_model = PathModel.STRICT
    else:
        decision = acyclic_temporization(graph, kind, vertex_order=order)
        check_model = PathModel.NONSTRICT
    if (
        args.oracle
        and decision.status is DecisionStatus.YES
        and oracle_detect(decision.temporization.apply(graph), kind, check_model)
        is not None
    ):
        message = "oracle disagreement: returned temporization still contains the kind"
        if args.json:
            print(json.dumps({"error": message}))
        print(message, file=sys.stderr)
        return EXIT_MISMATCH
    if args.json:
        print(
            json.dumps(
                {
                    "command": "temporize",
                    "kind": kind.value,
                    "status": decision.status.value,
                    "reason": decision.reason,
                    "temporization": _temporization_dict(decision.temporization),
                }
            )
        )
    else:
        print(f"{decision.status.value} ({decision.reason})")
        if decision.temporization is not None:
            sys.stdout.write(decision.temporization.to_text())
    return _STATUS_EXITS[decision.status]


def _cmd_verify(args) -> int:
    graph = parse_digraph(_read(args.graph))
    temporization = parse_temporization(_read(args.temporization))
    applied = temporization.apply(graph)
    kind = CycleKind(args.kind)
    model = PathModel(args.model)
    witness, _stats = _run_detector(applied, kind, model, None)
    found = witness is not None
    if args.oracle and not _oracle_agrees(applied, kind, model, found, args.json):
        return EXIT_MISMATCH
    if args.json:
        print(
            json.dumps(
                {
                    "command": "verify",
                    "kind": kind.value,
                    "model": model.value,
                    "acyclic": not found,
                    "witness": _witness_dict(witness),
                }
            )
        )
    elif found:
        print(f"temporization admits a {kind.value} cycle:")
        _print_witness(witness)
    else:
        print(f"verified: no {kind.value} cycle under the {model.value} model")
    return EXIT_NONE if found else EXIT_FOUND


def _cmd_girth(args) -> int:
    graph = parse_digraph(_read(args.file))
    g = girth(graph)
    finite = math.isfinite(g)
    if args.json:
        print(json.dumps({"command": "girth", "girth": int(g) if finite else None}))
    else:
        print(f"girth: {int(g) if finite else 'infinite'}")
    return EXIT_FOUND if finite else EXIT_NONE


def _cmd_reach(args) -> int:
    graph = parse_temporal_digraph(_read(args.file))
    model = PathModel(args.model)
    if args.vertex not in graph.vertices:
        raise GraphFormatError(f"vertex {args.vertex!r} is not in the graph")
    if args.mode == "eat":
        result = earliest_arrival(graph, args.vertex, model, args.min_departure)
    else:
        if args.min_departure is not None:
            raise _UsageError("--min-departure only applies to --mode eat")
        result = latest_departure(graph, args.vertex, model)
    if args.oracle:
        for name in graph.vertices:
            pair = (args.vertex, name) if args.mode == "eat" else (name, args.vertex)
            eat, ldt = oracle_reachability(graph, pair[0], pair[1], model)
            expected = eat if args.mode == "eat" else ldt
            if result.value(name) != expected:
                message = (
                    f"oracle disagreement at {name}: "
                    f"{result.value(name)} vs {expected}"
                )
                if args.json:
                    print(json.dumps({"error": message}))
                print(message, file=sys.stderr)
                return EXIT_MISMATCH
    values = {
        name: (result.value(name) if result.reachable(name) else None)
        for name in graph.vertices
    }
    if args.json:
        print(
            json.dumps(
                {
                    "command": "reach",
                    "mode": args.mode,
                    "anchor": args.vertex,
                    "model": model.value,
                    "values": values,
                }
            )
        )
    else:
        print(f"{args.mode} table for {args.vertex} ({model.value}):")
        for name in graph.vertices:
            value = values[name]
            print(f"  {name}: {'unreachable' if value is None else value}")
    return EXIT_FOUND


def _emit(args, text: str) -> int:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_FOUND


def _cmd_generate(args) -> int:
    if args.what == "aux-cycle":
        return _emit(args, auxiliary_cycle(args.n).to_text())
    if args.what == "sat-strong":
        instance = sat_to_strong_instance(parse_dimacs(_read(args.cnf)))
        lines = [
            f"# removed from {tail}->{head}: {','.join(map(str, labels))}"
            for (tail, head), labels in sorted(instance.removals.items())
        ]
        prefix = "\n".join(lines) + "\n" if lines else ""
        return _emit(args, prefix + instance.graph.to_text())
    if args.what == "nae-simple":
        return _emit(args, nae_to_simple_instance(parse_dimacs(_read(args.cnf))).graph.to_text())
    if args.what == "nae-weak":
        return _emit(args, nae_to_weak_instance(parse_dimacs(_read(args.cnf))).graph.to_text())
    rng = random.Random(args.seed)
    if args.static:
        graph = random_digraph(rng, max_vertices=args.vertices)
    else:
        graph = random_temporal_digraph(
            rng,
            max_vertices=args.vertices,
            max_arcs=args.max_arcs,
            max_label=args.max_label,
        )
    return _emit(args, graph.to_text())


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tempocycles", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    def common(sub, model=True):
        sub.add_argument("--kind", required=True, choices=[k.value for k in CycleKind])
        if model:
            sub.add_argument(
                "--model",
                default=PathModel.NONSTRICT.value,
                choices=[m.value for m in PathModel],
            )
        sub.add_argument("--oracle", action="store_true")
        sub.add_argument("--json", action="store_true")

    detect = commands.add_parser("detect", help="search for a cycle of a kind")
    common(detect)
    detect.add_argument("--budget", type=float, help="time budget in seconds (strong only)")
    detect.add_argument("file")
    detect.set_defaults(func=_cmd_detect)

    temporize = commands.add_parser("temporize", help="build or search for an acyclic temporization")
    common(temporize)
    temporize.add_argument("--tau-max", type=int, help="exhaustive search up to this lifetime")
    temporize.add_argument("--budget", type=int, help="node budget for the bounded search")
    temporize.add_argument("--order", help="file with a vertex order for the constructions")
    temporize.add_argument("file")
    temporize.set_defaults(func=_cmd_temporize)

    verify = commands.add_parser("verify", help="check a temporization file against a graph")
    common(verify)
    verify.add_argument("graph")
    verify.add_argument("temporization")
    verify.set_defaults(func=_cmd_verify)

    girth_cmd = commands.add_parser("girth", help="shortest cycle length")
    girth_cmd.add_argument("--json", action="store_true")
    girth_cmd.add_argument("file")
    girth_cmd.set_defaults(func=_cmd_girth)

    reach = commands.add_parser("reach", help="earliest-arrival or latest-departure table")
    reach.add_argument("--mode", required=True, choices=["eat", "ldt"])
    reach.add_argument("--vertex", required=True, help="source (eat) or target (ldt)")
    reach.add_argument(
        "--model",
        default=PathModel.NONSTRICT.value,
        choices=[m.value for m in PathModel],
    )
    reach.add_argument("--min-departure", type=int)
    reach.add_argument("--oracle", action="store_true")
    reach.add_argument("--json", action="store_true")
    reach.add_argument("file")
    reach.set_defaults(func=_cmd_reach)

    generate = commands.add_parser("generate", help="write instances from the generators")
    kinds = generate.add_subparsers(dest="what", required=True)
    aux = kinds.add_parser("aux-cycle", help="auxiliary cycle of a given order")
    aux.add_argument("n", type=int)
    aux.add_argument("--output")
    sat = kinds.add_parser("sat-strong", help="strong-cycle instance from a DIMACS file")
    sat.add_argument("cnf")
    sat.add_argument("--output")
    for name in ("nae-simple", "nae-weak"):
        nae = kinds.add_parser(name, help=f"{name} grid instance from a DIMACS file")
        nae.add_argument("cnf")
        nae.add_argument("--output")
    rand = kinds.add_parser("random", help="seeded random digraph")
    rand.add_argument("--seed", type=int, required=True)
    rand.add_argument("--static", action="store_true", help="unlabeled digraph")
    rand.add_argument("--vertices", type=int, default=7)
    rand.add_argument("--max-arcs", type=int, default=14)
    rand.add_argument("--max-label", type=int, default=4)
    rand.add_argument("--output")
    generate.set_defaults(func=_cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphFormatError, CnfFormatError, OracleCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
