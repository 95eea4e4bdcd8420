"""Command-line interface.

Exit codes: 0 ok/packed, 2 input error, 3 not guaranteed, 4 impossible,
5 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .conditions import all_reports
from .families import FamilySpec, FamilyTag, generate
from .graph import Graph, GraphError
from .io import ParseError, format_edge_list, read_graph
from .packing import Mapping, is_packing
from .solver import DEFAULT_BUDGET, PackStatus, pack_exact, pack_incremental
from .survey import SCOPES, SurveyError, format_report, run_survey

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CODES = {
    PackStatus.PACKED: 0,
    PackStatus.NOT_GUARANTEED: 3,
    PackStatus.IMPOSSIBLE: 4,
    PackStatus.BUDGET_EXCEEDED: 5,
}

_FAMILIES = {
    "matching": (FamilyTag.MATCHING, 1),
    "star": (FamilyTag.STAR, 1),
    "cbip": (FamilyTag.COMPLETE_BIPARTITE, 2),
    "clique": (FamilyTag.CLIQUE_PLUS_ISOLATED, 2),
}


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INPUT


def _load_pair(args: argparse.Namespace) -> tuple[Graph, Graph]:
    g = read_graph(args.gfile, graph6=args.graph6)
    h = read_graph(args.hfile, graph6=args.graph6)
    if g.n != h.n:
        raise GraphError(f"graphs have different orders: {g.n} and {h.n}")
    return g, h


def cmd_check(args: argparse.Namespace) -> int:
    g, h = _load_pair(args)
    reports, verdict = all_reports(g, h)
    out = []
    if args.format == "kv":
        out.append(f"n={g.n}")
        for r in reports:
            fields = [r.theorem.value, f"lhs={r.lhs}", f"rhs={r.rhs}", f"verdict={str(r.verdict).lower()}"]
            fields += [f"{k}={v}" for k, v in r.detail.items()]
            out.append(" ".join(fields))
        if verdict is not None:
            out.append(f"OnlySharp.classification={verdict.value}")
    else:
        out.append(f"n = {g.n}")
        for r in reports:
            rel = "<=" if r.non_strict else "<"
            mark = "holds" if r.verdict else "fails"
            extras = ", ".join(f"{k}={v}" for k, v in r.detail.items())
            out.append(f"{r.theorem.value:<13} {r.lhs} {rel} {r.rhs}: {mark}  ({extras})")
        if verdict is not None:
            out.append(f"classification: {verdict.value}")
    print("\n".join(out))
    return EXIT_OK


def cmd_pack(args: argparse.Namespace) -> int:
    g, h = _load_pair(args)
    first, second = (h, g) if args.reverse else (g, h)
    if args.mode == "exact":
        outcome = pack_exact(first, second, args.budget)
    else:
        outcome = pack_incremental(first, second)
    if outcome.status is not PackStatus.PACKED:
        print(f"status={outcome.status.value}", file=sys.stderr)
        return EXIT_CODES[outcome.status]
    m = outcome.mapping
    if args.reverse:
        m = Mapping(m.inverse, m.forward)
    if args.verify and not is_packing(g, h, m):
        print("error: witness failed verification", file=sys.stderr)
        return 1
    sys.stdout.write("".join(f"{v} {w}\n" for v, w in enumerate(m.forward)))
    return EXIT_CODES[outcome.status]


def cmd_gen(args: argparse.Namespace) -> int:
    tag, arity = _FAMILIES[args.family]
    if len(args.params) != arity:
        return _fail(f"{args.family} takes {arity} parameter(s)")
    if tag is FamilyTag.COMPLETE_BIPARTITE:
        s, t = args.params
        spec = FamilySpec(tag, s + t, s)
    elif tag is FamilyTag.CLIQUE_PLUS_ISOLATED:
        k, n = args.params
        spec = FamilySpec(tag, n, k)
    else:
        spec = FamilySpec(tag, args.params[0])
    text = format_edge_list(generate(spec))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    result = run_survey(
        args.n,
        args.scope,
        sample=args.sample,
        seed=args.seed,
        jobs=args.jobs,
        budget=args.budget,
        forests_only=args.forests,
    )
    text = format_report(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # keep exit code 2, as argparse does
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graphpack", description="Graph packing conditions, solvers and surveys.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("gfile")
        sp.add_argument("hfile")
        sp.add_argument("--graph6", action="store_true", help="inputs are graph6 strings")

    c = sub.add_parser("check", help="evaluate every packing condition")
    pair(c)
    c.add_argument("--format", choices=("kv", "text"), default="kv")
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("pack", help="search for a packing and print the witness")
    pair(k)
    k.add_argument("--mode", choices=("incremental", "exact"), default="incremental")
    k.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    k.add_argument("--verify", action="store_true")
    k.add_argument("--reverse", action="store_true", help="solve with the roles of G and H exchanged")
    k.set_defaults(func=cmd_pack)

    gen = sub.add_parser("gen", help="write a family member as an edge list")
    gen.add_argument("family", choices=sorted(_FAMILIES))
    gen.add_argument("params", type=int, nargs="+")
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    s = sub.add_parser("survey", help="enumerate non-packing pairs at small order")
    s.add_argument("n", type=int)
    s.add_argument("--scope", choices=SCOPES, default="theorem5")
    s.add_argument("--out")
    s.add_argument("--sample", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--forests", action="store_true", help="question1: restrict H to forests")
    s.set_defaults(func=cmd_survey)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        return _fail(str(exc))
    except (GraphError, SurveyError, OSError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
