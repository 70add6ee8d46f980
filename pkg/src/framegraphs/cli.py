"""Command-line front end.

Exit codes: 0 success, 1 domain error (or a failed check), 2 usage or parse
error, 3 search budget exhausted.  Structured output goes to stdout,
diagnostics to stderr; ``FRAMES_LOG`` sets the log level.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import io
from .burling import chromatic_number, construct, is_induced_subpair, next_iterate, replay
from .decision import classify_scott, decide_ge2_subdivisions, k4_status
from .errors import BudgetExceeded, CertificateError, DomainError, FramesError, ParseError
from .frames import build_chandelier, build_ge2_subdivision, build_k4_subdivision, build_tree, emit_svg, validate

log = logging.getLogger("framegraphs")

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _emit(obj) -> None:
    sys.stdout.write(io.dumps(obj))


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_decide(args) -> int:
    g = io.read_multigraph(args.graph)
    out = decide_ge2_subdivisions(g)
    log.info("decide: %d vertices, %d edges, answer %s", g.vertex_count, g.edge_count, out.answer)
    _emit(out.to_json())
    return EXIT_OK


def cmd_classify(args) -> int:
    h = io.read_simple_graph(args.graph)
    _emit(classify_scott(h).to_json())
    return EXIT_OK


def _write_rep(rep, args) -> int:
    problems = validate(rep)
    if problems:
        # never write a representation that fails validation
        for p in problems:
            log.error("builder produced %s on frames %s", p.kind, list(p.frames))
        return EXIT_DOMAIN
    if args.out:
        io.write_rep(args.out, rep)
    else:
        _emit(io.rep_to_json(rep))
    if args.svg:
        io.write_text(args.svg, emit_svg(rep, problems))
    return EXIT_OK


def cmd_represent(args) -> int:
    if args.shape == "subdivision":
        g = io.read_multigraph(args.graph)
        counts = args.counts or [2]
        if len(counts) == 1:
            counts = counts * g.edge_count
        out = decide_ge2_subdivisions(g)
        if not out.answer:
            raise DomainError("no >=2-subdivision of this multigraph is a restricted frame graph "
                              f"(evidence: {out.evidence.kind})")
        rep = build_ge2_subdivision(g, counts)
    elif args.shape == "tree":
        rep = build_tree(io.read_simple_graph(args.graph), args.root)
    else:
        rep = build_chandelier(io.read_simple_graph(args.graph), args.pivot)
    return _write_rep(rep, args)


def cmd_validate(args) -> int:
    rep = io.read_rep(args.rep)
    problems = validate(rep)
    _emit({"valid": not problems, "violations": [p.to_json() for p in problems]})
    if args.svg:
        io.write_text(args.svg, emit_svg(rep, problems))
    return EXIT_OK if not problems else EXIT_DOMAIN


def cmd_burling(args) -> int:
    if args.steps < 0:
        raise DomainError("--steps must be non-negative")
    pair = next_iterate(args.steps)
    info = {"steps": args.steps, "vertices": pair.vertex_count, "stable_sets": len(pair.stable_sets)}
    if args.out:
        io.write_pair(args.out, pair)
    if args.chi:
        try:
            info["chromatic_number"] = chromatic_number(pair.graph, args.budget)
        except BudgetExceeded as exc:
            info["chromatic_number"] = None
            info["bounds"] = list(exc.bounds)
            _emit(info)
            raise
    _emit(info)
    return EXIT_OK


def cmd_construct(args) -> int:
    h = io.read_simple_graph(args.graph)
    cert = construct(h)
    if args.out:
        io.write_cert(args.out, cert)
    else:
        _emit(cert.to_json())
    return EXIT_OK


def cmd_check_cert(args) -> int:
    cert = io.read_cert(args.cert)
    pair, depth = replay(cert)
    info = {"valid": True, "depth": depth, "vertices": pair.vertex_count,
            "stable_sets": len(pair.stable_sets)}
    code = EXIT_OK
    if args.materialize is not None:
        big = next_iterate(args.materialize)
        emb = is_induced_subpair(pair, big, args.budget)
        info["materialize"] = args.materialize
        info["embedding"] = None if emb is None else [emb[v] for v in range(pair.vertex_count)]
        if emb is None:
            code = EXIT_DOMAIN
    _emit(info)
    return code


def cmd_k4(args) -> int:
    if len(args.profile) != 6:
        raise DomainError("--profile needs six counts")
    status = k4_status(args.profile)
    _emit(status.to_json())
    if args.represent:
        if status.status != "RestrictedFrameGraph":
            raise DomainError(f"profile is {status.status}; nothing to represent")
        rep = build_k4_subdivision(args.profile)
        if validate(rep):
            raise DomainError("K4 layout failed validation")
        io.write_rep(args.represent, rep)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="framegraphs", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("decide", help="are all >=2-subdivisions restricted frame graphs?")
    s.add_argument("graph")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("classify", help="counterexample status of a simple graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("represent", help="build a frame representation")
    s.add_argument("graph")
    s.add_argument("--counts", type=_int_list, help="subdivision counts, one per edge or a single value")
    s.add_argument("--shape", choices=("subdivision", "tree", "chandelier"), default="subdivision")
    s.add_argument("--root", type=int, default=0, help="tree root for --shape tree")
    s.add_argument("--pivot", type=int, default=None, help="pivot for --shape chandelier")
    s.add_argument("--out")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_represent)

    s = sub.add_parser("validate", help="check a representation file")
    s.add_argument("rep")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("burling", help="iterate NEXT from the one-vertex pair")
    s.add_argument("--steps", type=int, default=1)
    s.add_argument("--out")
    s.add_argument("--chi", action="store_true", help="also compute the chromatic number")
    s.add_argument("--budget", type=int, default=10**8, help="search-node budget")
    s.set_defaults(func=cmd_burling)

    s = sub.add_parser("construct", help="constructibility certificate for a graph")
    s.add_argument("graph")
    s.add_argument("--out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("check-cert", help="replay a certificate")
    s.add_argument("cert")
    s.add_argument("--materialize", type=int, default=None, metavar="DEPTH",
                   help="also embed the pair into NEXT^DEPTH of the one-vertex pair")
    s.add_argument("--budget", type=int, default=10**6, help="search-node budget")
    s.set_defaults(func=cmd_check_cert)

    s = sub.add_parser("k4", help="classify (and draw) a subdivision of K4")
    s.add_argument("--profile", type=_int_list, required=True, help="six counts a,b,c,d,e,f")
    s.add_argument("--represent", metavar="OUT")
    s.set_defaults(func=cmd_k4)
    return p


def _setup_logging() -> None:
    level = os.environ.get("FRAMES_LOG", "error").upper()
    if level not in ("ERROR", "INFO", "DEBUG"):
        level = "ERROR"
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, CertificateError, FramesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
