"""Fixture data and brute-force oracles shared by the test modules.

The oracles here deliberately avoid the library's elimination routines: they
enumerate whole spaces instead.
"""

from __future__ import annotations

import itertools

import numpy as np

from graphstab.graphcode import GraphCode
from graphstab.matfp import FpMatrix
from graphstab.symplectic import (
    ColPerm,
    IsometryTranscript,
    LocalSp,
    RowOp,
    RowScale,
    SymplecticCode,
    symp_dual,
)

# --- matrices printed in the wheel / Steane examples ---------------------------------

WHEEL_ADJ = [
    [0, 1, 1, 1, 1, 1, 1, 1],
    [1, 0, 1, 0, 0, 0, 0, 1],
    [1, 1, 0, 1, 0, 0, 0, 0],
    [1, 0, 1, 0, 1, 0, 0, 0],
    [1, 0, 0, 1, 0, 1, 0, 0],
    [1, 0, 0, 0, 1, 0, 1, 0],
    [1, 0, 0, 0, 0, 1, 0, 1],
    [1, 1, 0, 0, 0, 0, 1, 0],
]

WHEEL_G = [
    [1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1],
    [0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 0],
    [0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1],
]

# GF(4) generator: 0, 1, "a" = alpha, "a2" = alpha^2
WHEEL_G4 = [
    ["a2", "a", "0", "0", "0", "a", "a2"],
    ["0", "1", "a", "0", "0", "a", "1"],
    ["a", "a", "1", "a", "0", "a", "1"],
    ["a", "0", "a", "1", "a", "a", "1"],
    ["a", "0", "0", "a", "1", "0", "1"],
    ["a", "0", "0", "0", "a", "a2", "a2"],
]
GF4_CODE = {"0": 0, "1": 1, "a": 2, "a2": 3}

WHEEL_W = (1, 0, 0, 0, 21, 0, 42, 0)
WHEEL_W_DUAL = (1, 0, 0, 21, 21, 126, 42, 45)

_SIMPLEX = [
    [1, 0, 0, 1, 0, 1, 1],
    [0, 1, 0, 1, 1, 1, 0],
    [0, 0, 1, 0, 1, 1, 1],
]
STEANE_G = [row + [0] * 7 for row in _SIMPLEX] + [[0] * 7 + row for row in _SIMPLEX]

STEANE_IC = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0],
]

STEANE_T = [
    [1, 0, 1, 1, 0, 1, 0],
    [1, 0, 0, 1, 0, 0, 1],
    [0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 0, 0],
    [1, 1, 0, 1, 1, 0, 1],
    [1, 1, 1, 1, 1, 1, 1],
]

HAMMING_ADJ = [
    [0, 0, 1, 0, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 0, 0],
    [1, 0, 0, 1, 0, 1, 0, 0],
    [0, 1, 1, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 1, 1],
    [0, 1, 1, 0, 0, 0, 0, 1],
    [1, 0, 0, 1, 1, 0, 0, 0],
    [1, 0, 0, 0, 1, 1, 0, 0],
]


def wheel_graph() -> GraphCode:
    return GraphCode(WHEEL_ADJ, 2, 1)


def hamming_graph() -> GraphCode:
    return GraphCode(HAMMING_ADJ, 2, 1)


def steane_code() -> SymplecticCode:
    return SymplecticCode(STEANE_G, 2)


def wheel_code() -> SymplecticCode:
    return SymplecticCode(WHEEL_G, 2)


def empty_graph(n: int, p: int = 2) -> GraphCode:
    return GraphCode(np.zeros((n, n), dtype=int), p, 0)


def edge_graph(p: int = 2) -> GraphCode:
    return GraphCode([[0, 1], [1, 0]], p, 0)


# --- brute-force oracles --------------------------------------------------------------


def all_vectors(p: int, length: int) -> np.ndarray:
    return np.array(list(itertools.product(range(p), repeat=length)), dtype=np.int64).reshape(-1, length)


def span_set(rows, p: int, length: int) -> set[tuple[int, ...]]:
    """Every F_p-combination of ``rows``, enumerated directly."""
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, length)
    out = set()
    for coeffs in itertools.product(range(p), repeat=rows.shape[0]):
        out.add(tuple(int(v) for v in (np.array(coeffs, dtype=np.int64) @ rows) % p))
    return out


def brute_rank(rows, p: int, length: int) -> int:
    size = len(span_set(rows, p, length))
    return round(np.log(size) / np.log(p))


def brute_symp_weight(v) -> int:
    v = list(v)
    n = len(v) // 2
    return sum(1 for i in range(n) if v[i] or v[n + i])


def brute_weight_histogram(words, n: int) -> tuple[int, ...]:
    hist = [0] * (n + 1)
    for w in words:
        hist[brute_symp_weight(w)] += 1
    return tuple(hist)


def brute_symp_dual_words(gen, p: int, n: int) -> np.ndarray:
    """All vectors of F_p^{2n} orthogonal to every generator row."""
    allv = all_vectors(p, 2 * n)
    gen = np.asarray(gen, dtype=np.int64).reshape(-1, 2 * n)
    if gen.shape[0] == 0:
        return allv
    prods = (allv[:, :n] @ gen[:, n:].T - allv[:, n:] @ gen[:, :n].T) % p
    return allv[~prods.any(axis=1)]


# --- random instances -------------------------------------------------------------------


def random_valid_graph(rng: np.random.Generator, p: int, n: int, k: int) -> GraphCode:
    while True:
        b = rng.integers(0, p, size=(k, n))
        if FpMatrix(b, p, cols=n).rank() == k:
            break
    m_y = np.triu(rng.integers(0, p, size=(n, n)), 1)
    m_y = m_y + m_y.T
    return GraphCode.from_blocks(b, m_y, p)


def random_self_orthogonal_code(rng: np.random.Generator, p: int, n: int, dim: int) -> SymplecticCode:
    code = SymplecticCode.zero(n, p)
    while code.dim < dim:
        dual = symp_dual(code)
        v = rng.integers(0, p, size=dual.dim) @ dual.gen.data % p
        if not code.contains(v):
            code = SymplecticCode(code.gen.vstack(FpMatrix(v, p)))
    return code


def random_sl2(rng: np.random.Generator, p: int) -> tuple[tuple[int, int], tuple[int, int]]:
    while True:
        al, be, ga, de = (int(v) for v in rng.integers(0, p, size=4))
        if (al * de - be * ga) % p == 1:
            return ((al, be), (ga, de))


def random_transcript(rng: np.random.Generator, p: int, n: int, rows: int, length: int) -> IsometryTranscript:
    moves = []
    for _ in range(length):
        kind = rng.integers(0, 4) if rows else rng.integers(2, 4)
        if kind == 0 and rows > 1:
            t, s = rng.choice(rows, size=2, replace=False)
            moves.append(RowOp(int(t), int(s), int(rng.integers(1, p))))
        elif kind <= 1:
            moves.append(RowScale(int(rng.integers(0, rows)), int(rng.integers(1, p))))
        elif kind == 2:
            moves.append(ColPerm(tuple(int(i) for i in rng.permutation(n))))
        else:
            moves.append(LocalSp(int(rng.integers(0, n)), random_sl2(rng, p)))
    return IsometryTranscript(p, n, tuple(moves))
