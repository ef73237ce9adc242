"""Plain-text file formats and DOT emission.

Code file::

    symplectic p=2 n=7
    1 0 0 1 0 1 1 0 0 0 0 0 0 0      # X-part then Z-part, one generator per line

Graph file (inputs first)::

    graph p=2 k=1 n=7
    0 1 1 1 1 1 1 1
    ...

Gram file (bicharacter matrix for extension alphabets)::

    gram p=2 m=2
    0 1
    1 1

Transcript file: a ``transcript p=<p> n=<n>`` header, then one move per line:
``rowop <target> <source> <scalar>``, ``rowscale <target> <scalar>``,
``colperm <i_0> ... <i_{n-1}>`` or ``localsp <coord> <alpha> <beta> <gamma> <delta>``.

Blank lines and ``#`` comments are ignored everywhere.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .errors import GraphStabError, ParseError
from .gfp import ExtensionBasis
from .graphcode import GraphCode
from .matfp import FpMatrix
from .symplectic import ColPerm, IsometryTranscript, LocalSp, RowOp, RowScale, SymplecticCode

_HEADER = re.compile(r"^(\w+)((?:\s+\w+=\S+)*)\s*$")


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _header(line: str, kind: str, keys: tuple[str, ...]) -> dict[str, int]:
    m = _HEADER.match(line)
    if not m or m.group(1) != kind:
        raise ParseError(f"expected a '{kind} ...' header, got {line!r}")
    fields = {}
    for item in m.group(2).split():
        key, _, val = item.partition("=")
        try:
            fields[key] = int(val)
        except ValueError:
            raise ParseError(f"header field {key} must be an integer, got {val!r}") from None
    missing = [k for k in keys if k not in fields]
    if missing:
        raise ParseError(f"header {line!r} is missing {', '.join(missing)}")
    return fields


def _int_rows(lines: list[str], width: int, what: str) -> list[list[int]]:
    rows = []
    for i, line in enumerate(lines):
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"{what} line {i + 1}: non-integer entry in {line!r}") from None
        if len(row) != width:
            raise ParseError(f"{what} line {i + 1}: expected {width} entries, got {len(row)}")
        rows.append(row)
    return rows


def _build(factory, *args):
    # library validation errors raised while building are parse failures here
    try:
        return factory(*args)
    except ParseError:
        raise
    except GraphStabError as exc:
        raise ParseError(str(exc)) from exc


# --- codes -------------------------------------------------------------------


def parse_code(text: str) -> SymplecticCode:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty code file")
    hdr = _header(lines[0], "symplectic", ("p", "n"))
    p, n = hdr["p"], hdr["n"]
    rows = _int_rows(lines[1:], 2 * n, "code")
    for row in rows:
        if any(not 0 <= v < p for v in row):
            raise ParseError(f"digits must lie in [0, {p}): {row}")
    gen = _build(FpMatrix.from_rows, rows, p, 2 * n)
    return SymplecticCode(gen)


def format_code(c: SymplecticCode) -> str:
    return format_code_matrix(c.gen)


def format_code_matrix(gen: FpMatrix) -> str:
    """Serialize a generator matrix row by row, without canonicalizing it."""
    out = [f"symplectic p={gen.p} n={gen.cols // 2}"]
    out += [" ".join(str(v) for v in row) for row in gen.tolist()]
    return "\n".join(out) + "\n"


# --- graphs ------------------------------------------------------------------


def parse_graph(text: str) -> GraphCode:
    """Parse a graph file, reducing weights mod p. Invariants are not checked here."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty graph file")
    hdr = _header(lines[0], "graph", ("p", "k", "n"))
    p, k, n = hdr["p"], hdr["k"], hdr["n"]
    if k < 0 or n < 0:
        raise ParseError("k and n must be non-negative")
    rows = _int_rows(lines[1:], k + n, "graph")
    if len(rows) != k + n:
        raise ParseError(f"expected {k + n} adjacency rows, got {len(rows)}")
    return _build(GraphCode, np.array(rows, dtype=np.int64).reshape(k + n, k + n), p, k)


def format_graph(g: GraphCode) -> str:
    out = [f"graph p={g.p} k={g.k} n={g.n}"]
    out += [" ".join(str(int(v)) for v in row) for row in g.adj]
    return "\n".join(out) + "\n"


# --- gram matrices -------------------------------------------------------------


def parse_gram(text: str) -> ExtensionBasis:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty gram file")
    hdr = _header(lines[0], "gram", ("p", "m"))
    rows = _int_rows(lines[1:], hdr["m"], "gram")
    if len(rows) != hdr["m"]:
        raise ParseError(f"expected {hdr['m']} rows, got {len(rows)}")
    return _build(ExtensionBasis, hdr["p"], hdr["m"], np.array(rows, dtype=np.int64).reshape(hdr["m"], hdr["m"]))


def format_gram(basis: ExtensionBasis) -> str:
    out = [f"gram p={basis.p} m={basis.m}"]
    out += [" ".join(str(int(v)) for v in row) for row in basis.gram]
    return "\n".join(out) + "\n"


# --- transcripts ---------------------------------------------------------------


def format_transcript(t: IsometryTranscript) -> str:
    out = [f"transcript p={t.p} n={t.n}"]
    for mv in t.moves:
        if isinstance(mv, RowOp):
            out.append(f"rowop {mv.target} {mv.source} {mv.scalar}")
        elif isinstance(mv, RowScale):
            out.append(f"rowscale {mv.target} {mv.scalar}")
        elif isinstance(mv, ColPerm):
            out.append("colperm " + " ".join(map(str, mv.perm)))
        else:
            (al, be), (ga, de) = mv.matrix
            out.append(f"localsp {mv.coord} {al} {be} {ga} {de}")
    return "\n".join(out) + "\n"


def parse_transcript(text: str) -> IsometryTranscript:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty transcript file")
    hdr = _header(lines[0], "transcript", ("p", "n"))
    arity = {"rowop": 3, "rowscale": 2, "colperm": hdr["n"], "localsp": 5}
    moves = []
    for i, line in enumerate(lines[1:], start=2):
        kind, *rest = line.split()
        if kind not in arity:
            raise ParseError(f"line {i}: unknown move {kind!r}")
        try:
            vals = [int(v) for v in rest]
        except ValueError:
            raise ParseError(f"line {i}: non-integer argument in {line!r}") from None
        if len(vals) != arity[kind]:
            raise ParseError(f"line {i}: {kind} takes {arity[kind]} arguments, got {len(vals)}")
        if kind == "rowop":
            moves.append(RowOp(*vals))
        elif kind == "rowscale":
            moves.append(RowScale(*vals))
        elif kind == "colperm":
            moves.append(ColPerm(tuple(vals)))
        else:
            moves.append(LocalSp(vals[0], ((vals[1], vals[2]), (vals[3], vals[4]))))
    try:
        return IsometryTranscript(hdr["p"], hdr["n"], tuple(moves))
    except (GraphStabError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


# --- DOT -----------------------------------------------------------------------


def to_dot(g: GraphCode, name: str = "G") -> str:
    """Undirected DOT graph; input vertices are drawn bold, weights != 1 labelled."""
    out = [f"graph {name} {{"]
    for v in range(g.size):
        style = "shape=circle, style=bold" if v < g.k else "shape=circle"
        out.append(f"  {v} [{style}];")
    for i in range(g.size):
        for j in range(i + 1, g.size):
            w = int(g.adj[i, j])
            if w == 1:
                out.append(f"  {i} -- {j};")
            elif w:
                out.append(f"  {i} -- {j} [label={w}];")
    out.append("}")
    return "\n".join(out) + "\n"


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
