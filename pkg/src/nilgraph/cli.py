"""Command-line entry point: ``nilgraph analyze|verify|export|list``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import DEFAULT_CORPUS, CorpusEntry, analyze, default_entries, load_corpus_config
from .claims import CLAIMS, run_suite
from .errors import NilgraphError
from .families import BUILTIN_FAMILIES
from .graph import DEFAULT_CLIQUE_BUDGET, build_full_graph, build_reduced_graph, to_dot
from .groups import DEFAULT_CAP

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _add_group_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", metavar="NAME", help="builtin family, e.g. S4, D12, PSL(2,7), S3xC2")
    src.add_argument("--cayley", metavar="PATH", help="Cayley table file")
    src.add_argument("--perms", metavar="PATH", help="permutation generator file")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--clique-budget", type=_positive, default=DEFAULT_CLIQUE_BUDGET,
                   help="branch-and-bound node budget for clique search")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="enumeration cap on group order")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilgraph",
                                     description="Nilpotentizers and non-nilpotent graphs of finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print a report for one group")
    _add_group_source(p)
    _add_common(p)

    p = sub.add_parser("verify", help="check the claim suite over a corpus")
    p.add_argument("--suite", default="paper", help="'paper' for all claims or a comma-separated id list")
    p.add_argument("--corpus", metavar="PATH", help="JSON corpus config")
    _add_common(p)

    p = sub.add_parser("export", help="write a graph in DOT format")
    _add_group_source(p)
    p.add_argument("--graph", choices=("full", "reduced"), default="reduced")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP)

    p = sub.add_parser("list", help="list builtin families, the default corpus and claim ids")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH")
    return parser


def _group_entry(args) -> CorpusEntry:
    if args.builtin:
        return CorpusEntry(args.builtin, "builtin", args.builtin)
    if args.cayley:
        return CorpusEntry(Path(args.cayley).stem, "cayley", args.cayley)
    return CorpusEntry(Path(args.perms).stem, "perms", args.perms)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    G = _group_entry(args).build(args.cap)
    rep = analyze(G, args.clique_budget, with_timings=args.timings)
    _emit(dump_json(rep.to_dict()) if args.format == "json" else rep.to_text(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    entries = load_corpus_config(args.corpus) if args.corpus else default_entries()
    try:
        result = run_suite(entries, args.suite, threads=args.threads, cap=args.cap,
                           clique_budget=args.clique_budget, with_timings=args.timings)
    except KeyError as exc:
        raise NilgraphError(str(exc.args[0])) from None
    _emit(dump_json(result.to_dict()) if args.format == "json" else result.to_text(), args.out)
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_export(args) -> int:
    G = _group_entry(args).build(args.cap)
    g = build_reduced_graph(G) if args.graph == "reduced" else build_full_graph(G)
    _emit(to_dot(g), args.out)
    return EXIT_OK


def cmd_list(args) -> int:
    data = {
        "families": list(BUILTIN_FAMILIES),
        "default_corpus": list(DEFAULT_CORPUS),
        "claims": [{"id": c.id, "anchor": c.anchor} for c in CLAIMS],
    }
    if args.format == "json":
        text = dump_json(data)
    else:
        lines = ["families:"] + [f"  {f}" for f in data["families"]]
        lines += ["default corpus:"] + [f"  {g}" for g in data["default_corpus"]]
        lines += ["claims:"] + [f"  {c['id']}: {c['anchor']}" for c in data["claims"]]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "verify": cmd_verify, "export": cmd_export, "list": cmd_list}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (NilgraphError, OSError, ValueError) as exc:
        print(f"nilgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
