"""Command-line front end.

Exit codes separate the mathematical answer from operational problems:
0 means yes/success, 1 means a negative mathematical answer (cutwidth
above 2, invalid certificate, not a tree), 2 means a usage error, and 3
means unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .caterpillar import is_tree, tree_to_gn
from .certificates import (
    CertificateFormatError,
    certificate_from_document,
    certify,
    graph_to_document,
    chain_to_document,
    to_json,
    verify_certificate,
)
from .chains import random_chain, random_subgraph
from .equivalence import check_theorem_equivalence
from .graphs import EdgeListError, Graph, parse_edge_list
from .layouts import exact_cutwidth, find_width2_layout

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


def _load_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _layout_line(order: tuple[int, ...]) -> str:
    return "layout " + " ".join(str(v) for v in order)


def _cmd_recognize(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    layout = find_width2_layout(g)
    if layout is None:
        print("cutwidth>2")
        return EXIT_NEGATIVE
    print("cutwidth<=2")
    print(_layout_line(layout.order))
    return EXIT_OK


def _cmd_cutwidth(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    result = exact_cutwidth(g, max_n=args.max_n)
    print(f"cutwidth {result.width}")
    print(_layout_line(result.layout.order))
    return EXIT_OK


def _cmd_certify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    cert = certify(g)
    if cert is None:
        print("cutwidth>2")
        return EXIT_NEGATIVE
    _emit(to_json(cert), args.output)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        doc = json.loads(Path(args.certificate).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"not valid JSON: {exc}") from None
    cert = certificate_from_document(doc)
    problems = verify_certificate(cert)
    if problems:
        for problem in problems:
            print(f"FAIL {problem}")
        return EXIT_NEGATIVE
    print("certificate OK")
    return EXIT_OK


def _cmd_gn(args: argparse.Namespace) -> int:
    g = _load_graph(args.tree)
    if not is_tree(g):
        print("not a tree")
        return EXIT_NEGATIVE
    result = tree_to_gn(g)
    if result is None:
        print("cutwidth>2")
        return EXIT_NEGATIVE
    host, spine_parameter, embedding = result
    doc = {
        "graph": graph_to_document(g),
        "host_graph": graph_to_document(host),
        "gn_parameter": spine_parameter,
        "embedding": [[v, w] for v, w in sorted(embedding.items())],
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    chain = random_chain(args.cycles, args.max_cycle_len, args.seed)
    doc: dict = {"chain": chain_to_document(chain), "seed": args.seed}
    if args.subgraph is not None:
        # the subgraph draws from its own stream, seeded one past the chain's
        sub = random_subgraph(chain, args.subgraph, args.seed + 1)
        doc["subgraph"] = graph_to_document(sub)
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_selftest(args: argparse.Namespace) -> int:
    report = check_theorem_equivalence(args.max_n, args.trials, args.seed)
    print(json.dumps(report.to_document(), indent=2))
    return EXIT_OK if not report.failures else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutchain",
        description="Decide cutwidth <= 2 and produce verifiable chain-of-cycles certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide whether a graph has cutwidth at most 2")
    p.add_argument("graph", help="edge-list file")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("cutwidth", help="exact cutwidth with a witness layout (subset DP)")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--max-n", type=int, default=22, help="largest n the DP will accept")
    p.set_defaults(func=_cmd_cutwidth)

    p = sub.add_parser("certify", help="emit a width-2 certificate as JSON")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("verify", help="re-check a certificate without trusting its producer")
    p.add_argument("certificate", help="certificate JSON file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gn", help="embed a width-2 tree into a caterpillar subdivision")
    p.add_argument("tree", help="edge-list file containing a tree")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_gn)

    p = sub.add_parser("gen", help="generate test objects")
    p.add_argument("kind", choices=["chain"], help="what to generate")
    p.add_argument("--cycles", type=int, required=True, help="number of cycles")
    p.add_argument("--max-cycle-len", type=int, default=9, help="largest cycle length")
    p.add_argument("--seed", type=int, required=True, help="generator seed")
    p.add_argument(
        "--subgraph",
        type=float,
        default=None,
        metavar="P",
        help="also emit a random subgraph keeping each edge with probability P (seed+1)",
    )
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("selftest", help="run the exhaustive and randomized equivalence harness")
    p.add_argument("--max-n", type=int, default=5, help="enumerate all graphs up to this size")
    p.add_argument("--trials", type=int, default=50, help="number of random chains")
    p.add_argument("--seed", type=int, default=1, help="harness seed")
    p.set_defaults(func=_cmd_selftest)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (EdgeListError, CertificateFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
