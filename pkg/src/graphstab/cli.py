"""``graphstab`` command-line interface.

Exit codes: 0 success, 1 a verification check failed, 2 parse error,
3 validation error (a named invariant failed, or a budget was exceeded).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from . import enumerator, statevec
from .errors import GraphStabError, ParseError
from .formats import (
    format_code,
    format_graph,
    format_transcript,
    parse_code,
    parse_graph,
    parse_gram,
    read_text,
    to_dot,
)
from .gfp import trace_gram
from .graphcode import GraphCode, PhasedStabilizerGen, flatten_graph, graph_to_stabilizer, pullback, stabilizer_to_graph
from .matfp import row_space_equal
from .symplectic import SymplecticCode, symp_dual

log = logging.getLogger("graphstab")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3


def pauli_label(gen: PhasedStabilizerGen) -> str:
    v = gen.vector
    if v.p == 2:
        letters = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
        return "".join(letters[int(a), int(d)] for a, d in zip(v.a, v.d))
    tokens = []
    for a, d in zip(v.a, v.d):
        tok = (f"X{a}" if a else "") + (f"Z{d}" if d else "")
        tokens.append(tok or "I")
    return ".".join(tokens)


def format_generator(gen: PhasedStabilizerGen) -> str:
    v = gen.vector
    a = " ".join(map(str, v.a))
    d = " ".join(map(str, v.d))
    return f"{pauli_label(gen)}: {a} | {d}, phase {gen.phase_exp}"


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
        log.info("wrote %s", path)


def _load_graph(args: argparse.Namespace) -> GraphCode:
    g = parse_graph(read_text(args.graph))
    basis = None
    if args.gram:
        basis = parse_gram(read_text(args.gram))
    elif args.field_poly:
        coeffs = [int(c) for c in args.field_poly.replace(",", " ").split()]
        basis = trace_gram(g.p, len(coeffs) - 1, coeffs)
    if basis is not None:
        g.validate(require_rank=False)
        g = flatten_graph(g, basis)
    return g


def cmd_graph2stab(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    gens, symp = graph_to_stabilizer(g)
    if args.output:
        Path(args.output).write_text(format_code(symp))
    if args.json:
        payload = {
            "p": g.p,
            "k": g.k,
            "n": g.n,
            "generators": [
                {"a": gen.vector.a.tolist(), "d": gen.vector.d.tolist(), "phase": gen.phase_exp} for gen in gens
            ],
            "symplectic": symp.gen.tolist(),
        }
        if args.gf4:
            payload["gf4"] = enumerator.to_gf4(symp).tolist()
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    print(f"# [[{g.n},{g.k}]] graphical code over F_{g.p}: generators omega^phase X^a Z^(a M_y)")
    for gen in gens:
        print(format_generator(gen))
    print()
    sys.stdout.write(format_code(symp))
    if args.gf4:
        print()
        print("# GF(4) view, entry x + a*z with a^2 = a + 1")
        print(enumerator.format_gf4(enumerator.to_gf4(symp)))
    return EXIT_OK


def cmd_stab2graph(args: argparse.Namespace) -> int:
    code = parse_code(read_text(args.code))
    conv = stabilizer_to_graph(code)
    _emit(format_graph(conv.graph), args.output)
    if args.dot:
        Path(args.dot).write_text(to_dot(conv.graph))
    if args.transcript:
        Path(args.transcript).write_text(format_transcript(conv.transcript))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    code = parse_code(read_text(args.code))
    w = enumerator.weight_distribution(code, args.budget)
    dual = enumerator.weight_distribution(symp_dual(code), args.budget)
    d = enumerator.min_distance(code, args.budget) if code.is_self_orthogonal() else None
    if args.json:
        print(json.dumps({"weights": list(w.coeffs), "dual_weights": list(dual.coeffs), "d": d}))
    else:
        print(f"W = {w}")
        print(f"W_dual = {dual}")
        print(f"d = {d if d is not None else 'undefined (code is not self-orthogonal)'}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    g.validate()
    reports = statevec.run_checks(g, args.budget)
    ok = all(r.passed for r in reports)
    if args.json:
        print(json.dumps({"passed": ok, "checks": [r.as_dict() for r in reports]}, indent=2))
    else:
        for r in reports:
            print(r.line())
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def roundtrip_report(code: SymplecticCode, budget: int = enumerator.DEFAULT_BUDGET) -> dict:
    conv = stabilizer_to_graph(code)
    back = pullback(conv.graph, conv.transcript)
    same_space = row_space_equal(back.gen, code.gen)
    w_in = enumerator.weight_distribution(code, budget)
    _, graph_code = graph_to_stabilizer(conv.graph)
    w_graph = enumerator.weight_distribution(graph_code, budget)
    return {
        "passed": bool(same_space and w_in == w_graph),
        "row_space_equal": bool(same_space),
        "enumerator_equal": w_in == w_graph,
        "weights": list(w_in.coeffs),
        "graph_weights": list(w_graph.coeffs),
        "k": conv.graph.k,
        "n": conv.graph.n,
        "moves": len(conv.transcript),
    }


def cmd_roundtrip(args: argparse.Namespace) -> int:
    code = parse_code(read_text(args.code))
    rep = roundtrip_report(code, args.budget)
    if args.json:
        print(json.dumps(rep, indent=2))
    else:
        print(f"graph: k={rep['k']} n={rep['n']}, transcript of {rep['moves']} moves")
        print(f"{'PASS' if rep['row_space_equal'] else 'FAIL'} row space recovered through inverse transcript")
        print(f"{'PASS' if rep['enumerator_equal'] else 'FAIL'} weight enumerator preserved")
    return EXIT_OK if rep["passed"] else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphstab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("graph", help="graph file")
        ext = sp.add_mutually_exclusive_group()
        ext.add_argument("--gram", help="gram file with the bicharacter matrix for an F_{p^m} graph")
        ext.add_argument(
            "--field-poly",
            help="defining polynomial of F_{p^m}, coefficients constant-first; uses the trace form",
        )

    sp = sub.add_parser("graph2stab", help="stabilizer of a graphical code")
    graph_input(sp)
    sp.add_argument("--gf4", action="store_true", help="also print the GF(4) view (p = 2)")
    sp.add_argument("-o", "--output", help="write the symplectic code file here")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_graph2stab)

    sp = sub.add_parser("stab2graph", help="graphical code equivalent to a stabilizer code")
    sp.add_argument("code", help="code file")
    sp.add_argument("-o", "--output", help="graph file to write (default stdout)")
    sp.add_argument("--dot", help="also write a DOT rendering")
    sp.add_argument("--transcript", help="also write the isometry transcript")
    sp.set_defaults(func=cmd_stab2graph)

    sp = sub.add_parser("enumerate", help="weight enumerators and minimum distance")
    sp.add_argument("code", help="code file")
    sp.add_argument("--budget", type=int, default=enumerator.DEFAULT_BUDGET)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("check", help="state-vector verification of a graph")
    graph_input(sp)
    sp.add_argument("--budget", type=int, default=statevec.DEFAULT_ORACLE_BUDGET)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("roundtrip", help="stab2graph followed by the pull-back certificate")
    sp.add_argument("code", help="code file")
    sp.add_argument("--budget", type=int, default=enumerator.DEFAULT_BUDGET)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_roundtrip)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GraphStabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
