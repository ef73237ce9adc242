"""Dense linear algebra over a prime field F_p."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np
import numpy.typing as npt

from .errors import DimensionMismatch, ModulusMismatch
from .gfp import check_prime, inv_mod

ArrayLike = npt.ArrayLike


class FpMatrix:
    """Immutable dense matrix over F_p with entries held in ``[0, p)``.

    The underlying array is int64; ``p < 2**16`` keeps every dot product far
    from overflow.
    """

    __slots__ = ("_data", "p")

    def __init__(self, data: ArrayLike, p: int, cols: int | None = None) -> None:
        self.p = check_prime(p)
        arr = np.array(data, dtype=np.int64)
        if arr.size == 0 and arr.ndim < 2:
            arr = arr.reshape(0, cols or 0)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d array, got shape {arr.shape}")
        if cols is not None and arr.shape[1] != cols:
            raise DimensionMismatch(f"expected {cols} columns, got {arr.shape[1]}")
        arr %= self.p
        arr.setflags(write=False)
        self._data = arr

    # --- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> FpMatrix:
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> FpMatrix:
        return cls(np.eye(n, dtype=np.int64), p)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], p: int, cols: int) -> FpMatrix:
        rows = [list(r) for r in rows]
        if not rows:
            return cls.zeros(0, cols, p)
        return cls(rows, p, cols=cols)

    # --- basic protocol -----------------------------------------------------

    @property
    def data(self) -> np.ndarray:
        """Read-only int64 view of the entries."""
        return self._data

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape  # type: ignore[return-value]

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def T(self) -> FpMatrix:
        return FpMatrix(self._data.T, self.p, cols=self.rows)

    def __getitem__(self, key):
        return self._data[key]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and np.array_equal(self._data, other._data)

    def __hash__(self) -> int:
        return hash((self.p, self.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, shape={self.shape}, {self._data.tolist()})"

    def _same_field(self, other: FpMatrix) -> None:
        if self.p != other.p:
            raise ModulusMismatch(f"F_{self.p} vs F_{other.p}")

    def __add__(self, other: FpMatrix) -> FpMatrix:
        self._same_field(other)
        return FpMatrix(self._data + other._data, self.p, cols=self.cols)

    def __sub__(self, other: FpMatrix) -> FpMatrix:
        self._same_field(other)
        return FpMatrix(self._data - other._data, self.p, cols=self.cols)

    def __matmul__(self, other: FpMatrix) -> FpMatrix:
        self._same_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        return FpMatrix(self._data @ other._data, self.p, cols=other.cols)

    def tolist(self) -> list[list[int]]:
        return self._data.tolist()

    def hstack(self, other: FpMatrix) -> FpMatrix:
        self._same_field(other)
        if self.rows != other.rows:
            raise DimensionMismatch(f"row counts differ: {self.rows} vs {other.rows}")
        return FpMatrix(np.hstack([self._data, other._data]), self.p, cols=self.cols + other.cols)

    def vstack(self, other: FpMatrix) -> FpMatrix:
        self._same_field(other)
        if self.cols != other.cols:
            raise DimensionMismatch(f"column counts differ: {self.cols} vs {other.cols}")
        return FpMatrix(np.vstack([self._data, other._data]), self.p, cols=self.cols)

    def rank(self) -> int:
        return len(rref(self)[2])


def rref(m: FpMatrix) -> tuple[FpMatrix, FpMatrix, list[int]]:
    """Reduced row echelon form with the row transform that produces it.

    Returns ``(echelon, transform, pivots)`` with ``transform @ m == echelon``.
    The pivot in each column is the first nonzero entry at or below the
    current row, which makes the output fully deterministic.
    """
    p = m.p
    rows, cols = m.shape
    work = np.array(m.data, dtype=np.int64)
    trans = np.eye(rows, dtype=np.int64)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(work[r:, c])
        if nz.size == 0:
            continue
        s = r + int(nz[0])
        if s != r:
            work[[r, s]] = work[[s, r]]
            trans[[r, s]] = trans[[s, r]]
        inv = inv_mod(int(work[r, c]), p)
        work[r] = work[r] * inv % p
        trans[r] = trans[r] * inv % p
        factors = work[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            work[hit] = (work[hit] - np.outer(factors[hit], work[r])) % p
            trans[hit] = (trans[hit] - np.outer(factors[hit], trans[r])) % p
        pivots.append(c)
        r += 1
    return FpMatrix(work, p, cols=cols), FpMatrix(trans, p, cols=rows), pivots


def row_basis(m: FpMatrix) -> FpMatrix:
    """Nonzero rows of the reduced echelon form: the canonical row-space basis."""
    echelon, _, pivots = rref(m)
    return FpMatrix(echelon.data[: len(pivots)], m.p, cols=m.cols)


def kernel_basis(m: FpMatrix) -> FpMatrix:
    """Canonical (reduced echelon) basis of ``{v : m v = 0}``."""
    p = m.p
    echelon, _, pivots = rref(m)
    cols = m.cols
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = -echelon.data[r, f] % p
    return row_basis(FpMatrix(basis, p, cols=cols))


def parity_check(gen: FpMatrix) -> FpMatrix:
    """Canonical check matrix ``H`` with ``H @ gen.T == 0`` and full row rank."""
    return kernel_basis(gen)


def _check_compatible(a: FpMatrix, b: FpMatrix) -> None:
    a._same_field(b)
    if a.cols != b.cols:
        raise DimensionMismatch(f"column counts differ: {a.cols} vs {b.cols}")


def row_space_equal(a: FpMatrix, b: FpMatrix) -> bool:
    _check_compatible(a, b)
    return row_basis(a) == row_basis(b)


def reduce_against(basis: FpMatrix, pivots: Sequence[int], vecs: np.ndarray) -> np.ndarray:
    """Residues of ``vecs`` (one per row) after elimination by an echelon basis."""
    vecs = np.atleast_2d(np.asarray(vecs, dtype=np.int64)) % basis.p
    if not pivots:
        return vecs
    coeffs = vecs[:, list(pivots)]
    return (vecs - coeffs @ basis.data[: len(pivots)]) % basis.p


def row_space_contains(a: FpMatrix, v: ArrayLike) -> bool:
    v = np.asarray(v, dtype=np.int64).reshape(-1)
    if v.size != a.cols:
        raise DimensionMismatch(f"vector length {v.size} != {a.cols}")
    echelon, _, pivots = rref(a)
    return not reduce_against(echelon, pivots, v).any()


def solve_left(a: FpMatrix, target: FpMatrix) -> FpMatrix | None:
    """Find ``x`` with ``x @ a == target``, or ``None`` if no solution exists."""
    _check_compatible(a, target)
    echelon, trans, pivots = rref(a)
    residue = reduce_against(echelon, pivots, target.data)
    if residue.any():
        return None
    # target = coeffs @ echelon[:r] = coeffs @ trans[:r] @ a
    coeffs = target.data[:, pivots] if pivots else np.zeros((target.rows, 0), dtype=np.int64)
    x = coeffs @ trans.data[: len(pivots)]
    return FpMatrix(x, a.p, cols=a.rows)
