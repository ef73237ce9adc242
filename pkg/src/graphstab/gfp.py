"""Prime-field arithmetic and flattening of extension-field alphabets.

Elements of F_{p^m} are represented by their coefficient tuples
``(c_0, ..., c_{m-1})`` in the polynomial basis ``1, beta, ..., beta^{m-1}``
where ``beta`` is a root of the defining polynomial.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateForm,
    DimensionMismatch,
    ModulusMismatch,
    NotPrime,
    ReduciblePolynomial,
    ZeroInverse,
)

MAX_PRIME = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def check_prime(p: int) -> int:
    """Return ``p`` unchanged if it is a supported prime, else raise NotPrime."""
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise NotPrime(f"{p!r} is not prime")
    if p >= MAX_PRIME:
        raise NotPrime(f"p={p} exceeds the supported bound {MAX_PRIME}")
    return int(p)


@dataclass(frozen=True)
class FpElem:
    """An element of F_p held as its canonical representative."""

    value: int
    p: int

    def __post_init__(self) -> None:
        check_prime(self.p)
        object.__setattr__(self, "value", int(self.value) % self.p)

    def _check(self, other: FpElem) -> None:
        if not isinstance(other, FpElem):
            raise TypeError(f"expected FpElem, got {type(other).__name__}")
        if other.p != self.p:
            raise ModulusMismatch(f"F_{self.p} vs F_{other.p}")

    def __add__(self, other: FpElem) -> FpElem:
        return fp_add(self, other)

    def __sub__(self, other: FpElem) -> FpElem:
        return fp_add(self, fp_neg(other))

    def __mul__(self, other: FpElem) -> FpElem:
        return fp_mul(self, other)

    def __neg__(self) -> FpElem:
        return fp_neg(self)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FpElem({self.value} mod {self.p})"


def fp_add(a: FpElem, b: FpElem) -> FpElem:
    a._check(b)
    return FpElem(a.value + b.value, a.p)


def fp_mul(a: FpElem, b: FpElem) -> FpElem:
    a._check(b)
    return FpElem(a.value * b.value, a.p)


def fp_neg(a: FpElem) -> FpElem:
    return FpElem(-a.value, a.p)


def fp_inv(a: FpElem) -> FpElem:
    if a.value == 0:
        raise ZeroInverse(f"0 has no inverse in F_{a.p}")
    return FpElem(pow(a.value, -1, a.p), a.p)


def inv_mod(a: int, p: int) -> int:
    """Inverse of a plain integer modulo ``p``."""
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse in F_{p}")
    return pow(a, -1, p)


# --- polynomials over F_p, coefficient lists low degree first ---------------


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mod(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    """Remainder of ``f`` divided by the nonzero polynomial ``g``."""
    r = _trim([c % p for c in f])
    g = _trim([c % p for c in g])
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    lead_inv = inv_mod(g[-1], p)
    while len(r) >= len(g):
        coef = r[-1] * lead_inv % p
        shift = len(r) - len(g)
        for i, gi in enumerate(g):
            r[shift + i] = (r[shift + i] - coef * gi) % p
        _trim(r)
    return r


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= m/2."""
    f = _trim([c % p for c in poly])
    m = len(f) - 1
    if m < 1:
        return False
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not poly_mod(f, list(low) + [1], p):
                return False
    return True


def ext_mul(a: Sequence[int], b: Sequence[int], poly: Sequence[int], p: int) -> tuple[int, ...]:
    """Product of two F_{p^m} elements given as coefficient tuples."""
    m = len(poly) - 1
    prod = [0] * (len(a) + len(b))
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    r = poly_mod(prod, poly, p)
    return tuple(r + [0] * (m - len(r)))


def ext_pow(a: Sequence[int], e: int, poly: Sequence[int], p: int) -> tuple[int, ...]:
    m = len(poly) - 1
    result: tuple[int, ...] = (1,) + (0,) * (m - 1)
    base = tuple(a)
    while e:
        if e & 1:
            result = ext_mul(result, base, poly, p)
        base = ext_mul(base, base, poly, p)
        e >>= 1
    return result


def ext_trace(a: Sequence[int], poly: Sequence[int], p: int) -> int:
    """Absolute trace ``a + a^p + ... + a^{p^{m-1}}``, an element of F_p."""
    m = len(poly) - 1
    total = [0] * m
    conj = tuple(a)
    for _ in range(m):
        total = [(s + c) % p for s, c in zip(total, conj)]
        conj = ext_pow(conj, p, poly, p)
    if any(total[1:]):
        raise ArithmeticError(f"trace {total} is not in the prime field")
    return total[0]


# --- bicharacter matrices ----------------------------------------------------


@dataclass(frozen=True)
class ExtensionBasis:
    """A symmetric non-degenerate matrix M defining the bicharacter on F_p^m.

    ``poly`` is the defining polynomial when the basis came from
    :func:`trace_gram`; a user-supplied gram matrix leaves it ``None``.
    """

    p: int
    m: int
    gram: np.ndarray
    poly: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        from .matfp import FpMatrix

        check_prime(self.p)
        gram = np.asarray(self.gram, dtype=np.int64) % self.p
        if gram.shape != (self.m, self.m):
            raise DimensionMismatch(f"gram must be {self.m}x{self.m}, got {gram.shape}")
        if not np.array_equal(gram, gram.T):
            raise DegenerateForm("gram matrix is not symmetric")
        if FpMatrix(gram, self.p).rank() != self.m:
            raise DegenerateForm("gram matrix is singular over F_p")
        gram.setflags(write=False)
        object.__setattr__(self, "gram", gram)
        if self.poly is not None:
            object.__setattr__(self, "poly", tuple(int(c) % self.p for c in self.poly))

    def bilinear(self, h: Sequence[int], g: Sequence[int]) -> int:
        """The form ``h^T M g`` over F_p."""
        return int(np.asarray(h) @ self.gram @ np.asarray(g)) % self.p


def trace_gram(p: int, m: int, field_def: Sequence[int] | None = None) -> ExtensionBasis:
    """Gram matrix ``Tr(beta^i beta^j)`` of the trace form in the polynomial basis.

    ``field_def`` lists the coefficients of a monic degree-``m`` polynomial,
    constant term first; it may be omitted when ``m == 1``.
    """
    p = check_prime(p)
    if field_def is None:
        if m != 1:
            raise ReduciblePolynomial("a defining polynomial is required for m > 1")
        field_def = (0, 1)
    poly = [int(c) % p for c in field_def]
    if len(poly) != m + 1 or poly[-1] != 1:
        raise ReduciblePolynomial(f"expected a monic polynomial of degree {m}, got {list(field_def)}")
    if not is_irreducible(poly, p):
        raise ReduciblePolynomial(f"{poly} is reducible over F_{p}")
    if m == 1:
        # the polynomial basis is {1}
        gram = np.array([[1]])
    else:
        beta = (0, 1) + (0,) * (m - 2)
        traces = [ext_trace(ext_pow(beta, e, poly, p), poly, p) for e in range(2 * m - 1)]
        gram = np.array([[traces[i + j] for j in range(m)] for i in range(m)])
    try:
        return ExtensionBasis(p, m, gram, tuple(poly))
    except DegenerateForm as exc:  # pragma: no cover - separable extensions are never degenerate
        raise AssertionError(f"trace form degenerate for {poly}") from exc


def flatten_vector(v: Sequence[Sequence[int] | int], basis: ExtensionBasis) -> list[int]:
    """Expand each F_{p^m} coordinate into its ``m`` basis coefficients."""
    out: list[int] = []
    for coord in v:
        coeffs = [coord] if isinstance(coord, (int, np.integer)) else list(coord)
        if len(coeffs) != basis.m:
            raise DimensionMismatch(f"coordinate {coord!r} does not have {basis.m} coefficients")
        out.extend(int(c) % basis.p for c in coeffs)
    return out
