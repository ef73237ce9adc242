"""Exact weight enumerators, stabilizer minimum distance, and the GF(4) view."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import BudgetExceeded, InconsistentEnumerator, NotSelfOrthogonal, WrongCharacteristic
from .matfp import reduce_against, rref
from .symplectic import SymplecticCode, symp_dual, symplectic_weights

DEFAULT_BUDGET = 1 << 24
_CHUNK = 1 << 15


@dataclass(frozen=True)
class WeightEnumerator:
    """``coeffs[w]`` counts codewords of symplectic weight ``w``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @property
    def size(self) -> int:
        return sum(self.coeffs)

    def polynomial(self) -> str:
        """Homogeneous form in ``x`` (weight 0 places) and ``y`` (weight places)."""
        terms = []
        for w, c in enumerate(self.coeffs):
            if c == 0:
                continue
            factors = [] if c == 1 else [str(c)]
            for var, e in (("x", self.n - w), ("y", w)):
                if e == 1:
                    factors.append(var)
                elif e > 1:
                    factors.append(f"{var}^{e}")
            terms.append("*".join(factors) or "1")
        return " + ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.polynomial()


def iter_codewords(gen: np.ndarray, p: int, chunk: int = _CHUNK) -> Iterator[np.ndarray]:
    """Yield all ``p**rows`` combinations of the generator rows, in chunks."""
    rows = gen.shape[0]
    total = p**rows
    powers = p ** np.arange(rows - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        coeffs = (idx[:, None] // powers[None, :]) % p
        yield coeffs @ gen % p


def _check_budget(p: int, dim: int, budget: int) -> None:
    required = p**dim
    if required > budget:
        raise BudgetExceeded(required, budget)


def weight_distribution(c: SymplecticCode, budget: int = DEFAULT_BUDGET) -> WeightEnumerator:
    """Histogram of symplectic weights over every codeword of ``c``."""
    _check_budget(c.p, c.dim, budget)
    hist = np.zeros(c.n + 1, dtype=np.int64)
    for words in iter_codewords(c.gen.data, c.p):
        hist += np.bincount(symplectic_weights(words), minlength=c.n + 1)
    return WeightEnumerator(tuple(hist))


def min_distance(c: SymplecticCode, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum weight of ``dual \\ c``; for self-dual codes the minimum nonzero weight of ``c``.

    Returns 0 when the relevant set is empty (a code with no nonzero words).
    """
    if not c.is_self_orthogonal():
        raise NotSelfOrthogonal("distance is only defined for self-orthogonal codes")
    if c.dim == c.n:
        _check_budget(c.p, c.dim, budget)
        best = None
        for words in iter_codewords(c.gen.data, c.p):
            wts = symplectic_weights(words)
            wts = wts[wts > 0]
            if wts.size:
                best = int(wts.min()) if best is None else min(best, int(wts.min()))
        return best or 0
    dual = symp_dual(c)
    _check_budget(c.p, dual.dim, budget)
    echelon, _, pivots = rref(c.gen)
    best = None
    for words in iter_codewords(dual.gen.data, c.p):
        outside = reduce_against(echelon, pivots, words).any(axis=1)
        if outside.any():
            w = int(symplectic_weights(words[outside]).min())
            best = w if best is None else min(best, w)
    return best or 0


# --- GF(4) view ------------------------------------------------------------

# elements x + alpha*z encoded as x + 2z, alpha^2 = alpha + 1
GF4_NAMES = ("0", "1", "a", "a^2")
_GF4_MUL = np.array(
    [
        [0, 0, 0, 0],
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
    ],
    dtype=np.int64,
)
_GF4_INV = (0, 1, 3, 2)


def to_gf4(c: SymplecticCode | np.ndarray, p: int | None = None) -> np.ndarray:
    """Map each ``(x_i, z_i)`` pair to ``x_i + alpha z_i`` in GF(4).

    Accepts a code or a raw (X|Z) array; raw arrays are taken as given, so the
    caller keeps its own row order.
    """
    if isinstance(c, SymplecticCode):
        p, rows = c.p, c.gen.data
    else:
        rows = np.atleast_2d(np.asarray(c, dtype=np.int64))
    if p != 2:
        raise WrongCharacteristic(f"the GF(4) view needs p = 2, got p = {p}")
    n = rows.shape[1] // 2
    return (rows[:, :n] % 2) + 2 * (rows[:, n:] % 2)


def gf4_weight(rows: np.ndarray) -> np.ndarray:
    return np.count_nonzero(np.atleast_2d(rows), axis=1)


def gf4_rank(m: np.ndarray) -> int:
    """Rank over GF(4) (not GF(2)) of a matrix in the ``x + 2z`` encoding."""
    w = np.array(m, dtype=np.int64)
    rank = 0
    for col in range(w.shape[1]):
        nz = np.flatnonzero(w[rank:, col])
        if nz.size == 0:
            continue
        s = rank + int(nz[0])
        w[[rank, s]] = w[[s, rank]]
        w[rank] = _GF4_MUL[_GF4_INV[w[rank, col]], w[rank]]
        for r in range(w.shape[0]):
            if r != rank and w[r, col]:
                w[r] ^= _GF4_MUL[w[r, col], w[rank]]
        rank += 1
        if rank == w.shape[0]:
            break
    return rank


def format_gf4(m: np.ndarray) -> str:
    return "\n".join(" ".join(GF4_NAMES[v] for v in row) for row in np.atleast_2d(m))


# --- MacWilliams ---------------------------------------------------------------


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s) for s in range(j + 1))


def macwilliams_dual(w: WeightEnumerator | Sequence[int], n: int, p: int, dim: int) -> WeightEnumerator:
    """Dual enumerator of an additive code over an alphabet of size ``p**2``."""
    coeffs = w.coeffs if isinstance(w, WeightEnumerator) else tuple(w)
    if len(coeffs) != n + 1:
        raise InconsistentEnumerator(f"enumerator has {len(coeffs)} coefficients, expected {n + 1}")
    size = p**dim
    if sum(coeffs) != size:
        raise InconsistentEnumerator(f"coefficients sum to {sum(coeffs)}, expected {size}")
    q = p * p
    out = []
    for j in range(n + 1):
        total = sum(a * krawtchouk(j, i, n, q) for i, a in enumerate(coeffs) if a)
        quot, rem = divmod(total, size)
        if rem or quot < 0:
            raise InconsistentEnumerator(f"coefficient of weight {j} is {total}/{size}")
        out.append(quot)
    return WeightEnumerator(tuple(out))
