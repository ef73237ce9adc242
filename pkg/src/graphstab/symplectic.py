"""Symplectic codes in F_p^{2n} and their reduction to the normal form (I|C).

A vector is stored as ``(a | d)``: the X-part in columns ``[0, n)`` and the
Z-part in columns ``[n, 2n)``. The symplectic form is
``<a, d'> - <a', d>``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import DimensionMismatch, ModulusMismatch, NotSelfDual, NotSelfOrthogonal
from .gfp import check_prime, inv_mod
from .matfp import FpMatrix, kernel_basis, row_basis, row_space_contains


@dataclass(frozen=True)
class SymplecticVector:
    a: np.ndarray
    d: np.ndarray
    p: int

    def __post_init__(self) -> None:
        a = np.asarray(self.a, dtype=np.int64).reshape(-1) % self.p
        d = np.asarray(self.d, dtype=np.int64).reshape(-1) % self.p
        if a.shape != d.shape:
            raise DimensionMismatch(f"X-part has length {a.size}, Z-part {d.size}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "d", d)

    @classmethod
    def from_flat(cls, v: Sequence[int] | np.ndarray, p: int) -> SymplecticVector:
        v = np.asarray(v, dtype=np.int64).reshape(-1)
        if v.size % 2:
            raise DimensionMismatch(f"odd length {v.size}")
        n = v.size // 2
        return cls(v[:n], v[n:], p)

    @property
    def n(self) -> int:
        return self.a.size

    @property
    def flat(self) -> np.ndarray:
        return np.concatenate([self.a, self.d])

    def weight(self) -> int:
        return int(np.count_nonzero(self.a | self.d))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymplecticVector):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.a, other.a) and np.array_equal(self.d, other.d)

    def __hash__(self) -> int:
        return hash((self.p, self.a.tobytes(), self.d.tobytes()))


def symp_inner(u: SymplecticVector, v: SymplecticVector) -> int:
    """``<u.a, v.d> - <v.a, u.d>`` mod p."""
    if u.p != v.p:
        raise ModulusMismatch(f"F_{u.p} vs F_{v.p}")
    if u.n != v.n:
        raise DimensionMismatch(f"lengths {u.n} and {v.n}")
    return int(u.a @ v.d - v.a @ u.d) % u.p


def symp_gram(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Pairwise symplectic products between the rows of two flat (X|Z) arrays."""
    n = a.shape[1] // 2
    return (a[:, :n] @ b[:, n:].T - a[:, n:] @ b[:, :n].T) % p


def symplectic_weights(words: np.ndarray) -> np.ndarray:
    """Symplectic weight of each row of a flat (X|Z) array."""
    n = words.shape[1] // 2
    return np.count_nonzero(words[:, :n] | words[:, n:], axis=1)


class SymplecticCode:
    """An F_p-linear subspace of F_p^{2n}, stored by its reduced echelon basis."""

    __slots__ = ("n", "p", "gen")

    def __init__(self, gen: FpMatrix | Sequence[Sequence[int]] | np.ndarray, p: int | None = None, n: int | None = None) -> None:
        if not isinstance(gen, FpMatrix):
            if p is None:
                raise ValueError("p is required when gen is not an FpMatrix")
            gen = FpMatrix(gen, p, cols=None if n is None else 2 * n)
        if p is not None and gen.p != p:
            raise ModulusMismatch(f"F_{gen.p} vs F_{p}")
        if gen.cols % 2:
            raise DimensionMismatch(f"generator has an odd number of columns ({gen.cols})")
        if n is not None and gen.cols != 2 * n:
            raise DimensionMismatch(f"expected {2 * n} columns, got {gen.cols}")
        self.n = gen.cols // 2
        self.p = gen.p
        self.gen = row_basis(gen)

    @classmethod
    def zero(cls, n: int, p: int) -> SymplecticCode:
        return cls(FpMatrix.zeros(0, 2 * n, p))

    @property
    def dim(self) -> int:
        return self.gen.rows

    @property
    def x(self) -> FpMatrix:
        return FpMatrix(self.gen.data[:, : self.n], self.p, cols=self.n)

    @property
    def z(self) -> FpMatrix:
        return FpMatrix(self.gen.data[:, self.n :], self.p, cols=self.n)

    def rows(self) -> list[SymplecticVector]:
        return [SymplecticVector.from_flat(r, self.p) for r in self.gen.data]

    def contains(self, v: SymplecticVector | Sequence[int] | np.ndarray) -> bool:
        flat = v.flat if isinstance(v, SymplecticVector) else np.asarray(v)
        return row_space_contains(self.gen, flat)

    def is_self_orthogonal(self) -> bool:
        return not symp_gram(self.gen.data, self.gen.data, self.p).any()

    def is_self_dual(self) -> bool:
        return self.dim == self.n and self.is_self_orthogonal()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymplecticCode):
            return NotImplemented
        return self.gen == other.gen

    def __hash__(self) -> int:
        return hash(self.gen)

    def __repr__(self) -> str:
        return f"SymplecticCode(n={self.n}, p={self.p}, dim={self.dim})"


def symp_dual(c: SymplecticCode) -> SymplecticCode:
    """All vectors symplectically orthogonal to ``c``."""
    # v is orthogonal to g  iff  (-g.d | g.a) . (v.a | v.d) = 0
    twisted = np.hstack([-c.z.data, c.x.data])
    return SymplecticCode(kernel_basis(FpMatrix(twisted, c.p, cols=2 * c.n)))


def self_dual_embed(c: SymplecticCode) -> tuple[SymplecticCode, FpMatrix]:
    """Extend a self-orthogonal code to a self-dual one.

    Each step adjoins the first row of the current dual's canonical basis that
    is not already in the code. Every vector is isotropic, so the extension
    stays self-orthogonal.
    """
    if not c.is_self_orthogonal():
        raise NotSelfOrthogonal("generator rows are not pairwise symplectically orthogonal")
    current = c
    added: list[np.ndarray] = []
    while current.dim < current.n:
        for row in symp_dual(current).gen.data:
            if not current.contains(row):
                break
        else:  # pragma: no cover - dim(dual) > dim(code) guarantees a candidate
            raise AssertionError("dual contains no vector outside the code")
        added.append(row)
        current = SymplecticCode(current.gen.vstack(FpMatrix(row, c.p)))
    return current, FpMatrix.from_rows(added, c.p, 2 * c.n)


# --- isometry transcripts ---------------------------------------------------


@dataclass(frozen=True)
class RowOp:
    """Add ``scalar * row[source]`` to ``row[target]``."""

    target: int
    source: int
    scalar: int


@dataclass(frozen=True)
class RowScale:
    target: int
    scalar: int


@dataclass(frozen=True)
class ColPerm:
    """Coordinate ``j`` of the result is coordinate ``perm[j]`` of the input."""

    perm: tuple[int, ...]


@dataclass(frozen=True)
class LocalSp:
    """Replace ``(x_i, z_i)`` by ``(alpha x_i + beta z_i, gamma x_i + delta z_i)``."""

    coord: int
    matrix: tuple[tuple[int, int], tuple[int, int]]


Move = Union[RowOp, RowScale, ColPerm, LocalSp]

SWAP_XZ = ((0, 1), (-1, 0))


@dataclass(frozen=True)
class IsometryTranscript:
    """Ordered moves from (row group) x (Sp_2(p) wr S_n).

    Row moves change the generator matrix but not the code; coordinate moves
    (``ColPerm``, ``LocalSp``) are symplectic isometries preserving weight.
    """

    p: int
    n: int
    moves: tuple[Move, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        check_prime(self.p)
        object.__setattr__(self, "moves", tuple(_normalize_move(m, self.p, self.n) for m in self.moves))

    def __len__(self) -> int:
        return len(self.moves)

    def apply_matrix(self, gen: FpMatrix) -> FpMatrix:
        """Apply every move, row moves included, to a generator matrix."""
        return FpMatrix(_apply_moves(self, gen, rows=True), self.p, cols=2 * self.n)

    def apply_coordinates(self, gen: FpMatrix) -> FpMatrix:
        """Apply only the coordinate moves (the isometry) to a matrix."""
        return FpMatrix(_apply_moves(self, gen, rows=False), self.p, cols=2 * self.n)

    def row_transform(self, rows: int) -> FpMatrix:
        """The product of all row moves as an invertible ``rows x rows`` matrix."""
        t = np.eye(rows, dtype=np.int64)
        for mv in self.moves:
            if isinstance(mv, RowOp):
                t[mv.target] = (t[mv.target] + mv.scalar * t[mv.source]) % self.p
            elif isinstance(mv, RowScale):
                t[mv.target] = t[mv.target] * mv.scalar % self.p
        return FpMatrix(t, self.p, cols=rows)

    def coordinate_moves(self) -> IsometryTranscript:
        return IsometryTranscript(self.p, self.n, tuple(m for m in self.moves if isinstance(m, (ColPerm, LocalSp))))


def _normalize_move(mv: Move, p: int, n: int) -> Move:
    if isinstance(mv, RowOp):
        return RowOp(int(mv.target), int(mv.source), int(mv.scalar) % p)
    if isinstance(mv, RowScale):
        s = int(mv.scalar) % p
        if s == 0:
            raise ValueError("RowScale by zero")
        return RowScale(int(mv.target), s)
    if isinstance(mv, ColPerm):
        perm = tuple(int(i) for i in mv.perm)
        if sorted(perm) != list(range(n)):
            raise DimensionMismatch(f"{perm} is not a permutation of range({n})")
        return ColPerm(perm)
    if isinstance(mv, LocalSp):
        (al, be), (ga, de) = mv.matrix
        mat = ((int(al) % p, int(be) % p), (int(ga) % p, int(de) % p))
        if (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]) % p != 1:
            raise ValueError(f"LocalSp matrix {mv.matrix} does not have determinant 1")
        if not 0 <= mv.coord < n:
            raise DimensionMismatch(f"coordinate {mv.coord} out of range for n={n}")
        return LocalSp(int(mv.coord), mat)
    raise TypeError(f"unknown move {mv!r}")


def _apply_moves(t: IsometryTranscript, gen: FpMatrix, rows: bool) -> np.ndarray:
    if gen.p != t.p:
        raise ModulusMismatch(f"F_{gen.p} vs F_{t.p}")
    if gen.cols != 2 * t.n:
        raise DimensionMismatch(f"transcript is for n={t.n}, matrix has {gen.cols} columns")
    p, n = t.p, t.n
    w = np.array(gen.data, dtype=np.int64)
    for mv in t.moves:
        if isinstance(mv, ColPerm):
            idx = list(mv.perm)
            w = np.hstack([w[:, :n][:, idx], w[:, n:][:, idx]])
        elif isinstance(mv, LocalSp):
            (al, be), (ga, de) = mv.matrix
            i = mv.coord
            xi, zi = w[:, i].copy(), w[:, n + i].copy()
            w[:, i] = (al * xi + be * zi) % p
            w[:, n + i] = (ga * xi + de * zi) % p
        elif not rows:
            continue
        elif isinstance(mv, RowOp):
            if max(mv.target, mv.source) >= w.shape[0]:
                raise DimensionMismatch(f"{mv} addresses a row beyond {w.shape[0]}")
            w[mv.target] = (w[mv.target] + mv.scalar * w[mv.source]) % p
        elif isinstance(mv, RowScale):
            if mv.target >= w.shape[0]:
                raise DimensionMismatch(f"{mv} addresses a row beyond {w.shape[0]}")
            w[mv.target] = w[mv.target] * mv.scalar % p
    return w


def _invert_move(mv: Move, p: int) -> Move:
    if isinstance(mv, RowOp):
        return RowOp(mv.target, mv.source, -mv.scalar % p)
    if isinstance(mv, RowScale):
        return RowScale(mv.target, inv_mod(mv.scalar, p))
    if isinstance(mv, ColPerm):
        inv = [0] * len(mv.perm)
        for j, src in enumerate(mv.perm):
            inv[src] = j
        return ColPerm(tuple(inv))
    (al, be), (ga, de) = mv.matrix
    return LocalSp(mv.coord, ((de, -be % p), (-ga % p, al)))


def invert_transcript(t: IsometryTranscript) -> IsometryTranscript:
    return IsometryTranscript(t.p, t.n, tuple(_invert_move(m, t.p) for m in reversed(t.moves)))


def apply_transcript(code: SymplecticCode, t: IsometryTranscript) -> SymplecticCode:
    """Image of a code under the transcript's isometry.

    Row moves never change a row space, so only coordinate moves act here;
    this lets a transcript recorded on one generator matrix act on any code.
    """
    if code.n != t.n:
        raise DimensionMismatch(f"code has n={code.n}, transcript n={t.n}")
    return SymplecticCode(t.apply_coordinates(code.gen))


# --- normal form --------------------------------------------------------------


def standard_form(d: SymplecticCode) -> tuple[FpMatrix, IsometryTranscript]:
    """Bring a self-dual code to ``(I | C)`` with ``C`` symmetric, zero diagonal.

    Returns ``C`` and the transcript mapping ``d.gen`` exactly onto ``(I|C)``.
    """
    if d.dim != d.n:
        raise NotSelfDual(f"dimension {d.dim} != n = {d.n}")
    if not d.is_self_orthogonal():
        raise NotSelfDual("code is not self-orthogonal")
    p, n = d.p, d.n
    w = np.array(d.gen.data, dtype=np.int64)
    moves: list[Move] = []

    def emit(mv: Move) -> None:
        nonlocal w
        moves.append(mv)
        single = IsometryTranscript(p, n, (mv,))
        w = _apply_moves(single, FpMatrix(w, p, cols=2 * n), rows=True)

    pivot_coords: list[int] = []
    for r in range(n):
        free = [j for j in range(n) if j not in pivot_coords]
        col = next((j for j in free if w[r:, j].any()), None)
        if col is None:
            # the remaining rows have no X-part left; expose a Z-entry
            col = next((j for j in free if w[r:, n + j].any()), None)
            if col is None:  # pragma: no cover - excluded by self-duality
                raise AssertionError("no pivot available in a self-dual code")
            emit(LocalSp(col, SWAP_XZ))
        if w[r, col] == 0:
            s = r + int(np.flatnonzero(w[r:, col])[0])
            emit(RowOp(r, s, 1))
        if w[r, col] != 1:
            emit(RowScale(r, inv_mod(int(w[r, col]), p)))
        for s in range(n):
            if s != r and w[s, col]:
                emit(RowOp(s, r, -int(w[s, col]) % p))
        pivot_coords.append(col)

    if pivot_coords != list(range(n)):
        emit(ColPerm(tuple(pivot_coords)))

    pmat = w[:, n:]
    if not np.array_equal(pmat, pmat.T):
        raise AssertionError("P is not symmetric; self-duality check is broken")
    for i in range(n):
        if pmat[i, i]:
            emit(LocalSp(i, ((1, 0), (-int(pmat[i, i]) % p, 1))))
            pmat = w[:, n:]

    if not np.array_equal(w[:, :n], np.eye(n, dtype=np.int64)):  # pragma: no cover
        raise AssertionError("X-block did not reduce to the identity")
    return FpMatrix(w[:, n:], p, cols=n), IsometryTranscript(p, n, tuple(moves))
