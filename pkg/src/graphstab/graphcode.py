"""Graphical quantum codes and the conversions to and from stabilizer codes.

Vertex order is inputs first, outputs after, so the adjacency matrix has the
block layout::

    [[M_x, B  ],
     [B^T, M_y]]

with ``M_x`` (k x k) required to vanish.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ModulusMismatch, NotSelfOrthogonal, RankDeficientB, ValidationError
from .gfp import ExtensionBasis, check_prime
from .matfp import FpMatrix, kernel_basis, parity_check
from .symplectic import (
    IsometryTranscript,
    SymplecticCode,
    SymplecticVector,
    apply_transcript,
    invert_transcript,
    self_dual_embed,
    standard_form,
)


class GraphCode:
    """Weighted graph with ``k`` input and ``n`` output vertices over F_p.

    Construction only reduces entries mod ``p`` and checks the shape; call
    :meth:`validate` to enforce the remaining invariants, so that broken
    graphs can still be loaded and diagnosed.
    """

    __slots__ = ("p", "k", "n", "adj")

    def __init__(self, adj: Sequence[Sequence[int]] | np.ndarray, p: int, k: int) -> None:
        self.p = check_prime(p)
        arr = np.array(adj, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionMismatch(f"adjacency must be square, got shape {arr.shape}")
        if not 0 <= k <= arr.shape[0]:
            raise DimensionMismatch(f"k={k} out of range for {arr.shape[0]} vertices")
        arr %= self.p
        arr.setflags(write=False)
        self.adj = arr
        self.k = int(k)
        self.n = arr.shape[0] - self.k

    @classmethod
    def from_blocks(cls, b: FpMatrix | np.ndarray, m_y: FpMatrix | np.ndarray, p: int) -> GraphCode:
        """Assemble ``[[0, B], [B^T, M_y]]``."""
        b = np.asarray(b.data if isinstance(b, FpMatrix) else b, dtype=np.int64)
        m_y = np.asarray(m_y.data if isinstance(m_y, FpMatrix) else m_y, dtype=np.int64)
        n = m_y.shape[0]
        b = b.reshape(-1, n)
        k = b.shape[0]
        adj = np.zeros((k + n, k + n), dtype=np.int64)
        adj[:k, k:] = b
        adj[k:, :k] = b.T
        adj[k:, k:] = m_y
        return cls(adj, p, k)

    @property
    def size(self) -> int:
        return self.k + self.n

    @property
    def b(self) -> FpMatrix:
        return FpMatrix(self.adj[: self.k, self.k :], self.p, cols=self.n)

    @property
    def m_x(self) -> FpMatrix:
        return FpMatrix(self.adj[: self.k, : self.k], self.p, cols=self.k)

    @property
    def m_y(self) -> FpMatrix:
        return FpMatrix(self.adj[self.k :, self.k :], self.p, cols=self.n)

    def structural_problems(self) -> list[tuple[str, str]]:
        """Violated invariants other than the rank condition, as ``(code, message)``."""
        problems = []
        if not np.array_equal(self.adj, self.adj.T):
            i, j = map(int, np.argwhere(self.adj != self.adj.T)[0])
            problems.append(("NotSymmetric", f"adj[{i}][{j}]={self.adj[i, j]} but adj[{j}][{i}]={self.adj[j, i]}"))
        diag = np.flatnonzero(np.diag(self.adj))
        if diag.size:
            problems.append(("NonzeroDiagonal", f"vertex {int(diag[0])} has a loop; graphs must be loop-free"))
        if self.m_x.data.any():
            problems.append(
                (
                    "NonzeroMx",
                    "input-input block M_x must be zero; edges between inputs only add a "
                    "global phase per basis state, remove them to normalize",
                )
            )
        return problems

    def validate(self, require_rank: bool = True) -> GraphCode:
        problems = self.structural_problems()
        if problems:
            code, msg = problems[0]
            raise ValidationError(msg, code=code)
        if require_rank and self.b.rank() != self.k:
            raise RankDeficientB(f"rank(B) = {self.b.rank()} < k = {self.k}; code states would coincide")
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphCode):
            return NotImplemented
        return self.p == other.p and self.k == other.k and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.adj.tobytes()))

    def __repr__(self) -> str:
        return f"GraphCode(p={self.p}, k={self.k}, n={self.n})"


@dataclass(frozen=True)
class PhasedStabilizerGen:
    """The operator ``omega^phase_exp X^a Z^d`` with ``d = a M_y``."""

    vector: SymplecticVector
    phase_exp: int


def _check_len(g: GraphCode, v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=np.int64).reshape(-1)
    if v.size != g.size:
        raise DimensionMismatch(f"vector length {v.size} != {g.size}")
    return v % g.p


def quad_form(g: GraphCode, v: Sequence[int] | np.ndarray) -> int:
    """``sum_{i<j} adj[i, j] v_i v_j`` mod p."""
    v = _check_len(g, v)
    return int(v @ np.triu(g.adj, 1) @ v) % g.p


def quad_form_batch(adj: np.ndarray, vs: np.ndarray, p: int) -> np.ndarray:
    """Quadratic form evaluated on every row of ``vs``."""
    upper = np.triu(adj, 1)
    return np.einsum("ij,ij->i", vs @ upper % p, vs) % p


def bilinear_form(g: GraphCode, u: Sequence[int] | np.ndarray, v: Sequence[int] | np.ndarray) -> int:
    """Polarization ``q(u+v) - q(u) - q(v)``, i.e. ``u^T adj v`` for loop-free graphs."""
    u, v = _check_len(g, u), _check_len(g, v)
    return int(u @ g.adj @ v) % g.p


def flatten_graph(g: GraphCode, basis: ExtensionBasis) -> GraphCode:
    """Rewrite a graph over F_{p^m} as one over F_p with adjacency ``adj (x) M``.

    Vertex ``i`` becomes the ``m`` consecutive vertices ``i*m .. i*m+m-1``.
    """
    if g.p != basis.p:
        raise ModulusMismatch(f"graph over F_{g.p}, basis over F_{basis.p}")
    return GraphCode(np.kron(g.adj, basis.gram) % g.p, g.p, g.k * basis.m)


def graph_to_stabilizer(g: GraphCode) -> tuple[list[PhasedStabilizerGen], SymplecticCode]:
    """Stabilizer generators ``omega^{q(a)} X^a Z^{a M_y}`` for ``a`` in ker B."""
    g.validate()
    p, n = g.p, g.n
    d = kernel_basis(g.b)
    m_y = g.m_y.data
    gens = []
    rows = []
    for a in d.data:
        z = a @ m_y % p
        phase = quad_form(g, np.concatenate([np.zeros(g.k, dtype=np.int64), a]))
        gens.append(PhasedStabilizerGen(SymplecticVector(a, z, p), phase))
        rows.append(np.concatenate([a, z]))
    symp = SymplecticCode(FpMatrix.from_rows(rows, p, 2 * n))
    if symp.dim != n - g.k:  # pragma: no cover - kernel dimension is n - rank(B)
        raise AssertionError(f"stabilizer has dimension {symp.dim}, expected {n - g.k}")
    return gens, symp


@dataclass(frozen=True)
class GraphConversion:
    """Result of :func:`stabilizer_to_graph` with its round-trip certificate."""

    graph: GraphCode
    transcript: IsometryTranscript
    d_coeffs: FpMatrix
    self_dual: SymplecticCode
    cmat: FpMatrix

    def __iter__(self):
        return iter((self.graph, self.transcript, self.d_coeffs))


def stabilizer_to_graph(c: SymplecticCode) -> GraphConversion:
    """Find a graph whose stabilizer code is equivalent to ``c``.

    Unpacks as ``(graph, transcript, d_coeffs)``; pulling the graph's code
    back through the inverted transcript recovers ``c`` exactly.
    """
    if not c.is_self_orthogonal():
        raise NotSelfOrthogonal("generator rows are not pairwise symplectically orthogonal")
    p, n = c.p, c.n
    d, _ = self_dual_embed(c)
    cmat, t = standard_form(d)
    pushed = t.apply_coordinates(c.gen)
    # rows of (I|C) are a basis, so the X-part of each row is its coefficient vector
    coeffs = FpMatrix(pushed.data[:, :n], p, cols=n)
    if not np.array_equal((coeffs @ cmat).data, pushed.data[:, n:]):
        raise AssertionError("transformed code is not contained in the span of (I|C)")
    b = parity_check(coeffs)
    graph = GraphCode.from_blocks(b, cmat, p)
    graph.validate()
    return GraphConversion(graph, t, coeffs, d, cmat)


def pullback(g: GraphCode, t: IsometryTranscript) -> SymplecticCode:
    """The graph's stabilizer code mapped back through the inverse of ``t``."""
    return apply_transcript(graph_to_stabilizer(g)[1], invert_transcript(t))
