"""Dense state-vector oracle for graphical codes.

Basis states ``|y>`` of ``(C^p)^{(x) n}`` are indexed by the base-``p`` number
whose most significant digit is ``y_1``.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, OracleBudgetExceeded
from .gfp import ExtensionBasis
from .graphcode import GraphCode, graph_to_stabilizer, quad_form_batch

DEFAULT_ORACLE_BUDGET = 1 << 20
PROJECTOR_GROUP_LIMIT = 1 << 16
STABILIZER_TOL = 1e-10
PROJECTOR_TOL = 1e-9
GRAM_TOL = 1e-12


@dataclass
class StateVector:
    p: int
    n: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        self.amps = np.asarray(self.amps, dtype=np.complex128).reshape(-1)
        if self.amps.size != self.p**self.n:
            raise DimensionMismatch(f"expected {self.p ** self.n} amplitudes, got {self.amps.size}")

    @classmethod
    def basis(cls, p: int, n: int, y: Sequence[int]) -> StateVector:
        amps = np.zeros(p**n, dtype=np.complex128)
        amps[digits_to_index(y, p)] = 1.0
        return cls(p, n, amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def inner(self, other: StateVector) -> complex:
        """``<self|other>``."""
        return complex(np.vdot(self.amps, other.amps))


def all_digits(p: int, n: int) -> np.ndarray:
    """Every vector of F_p^n as rows, in basis-index order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    idx = np.arange(p**n, dtype=np.int64)
    powers = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % p


def digits_to_index(y: Sequence[int] | np.ndarray, p: int) -> np.ndarray | int:
    y = np.asarray(y, dtype=np.int64) % p
    n = y.shape[-1]
    powers = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    out = y @ powers
    return int(out) if np.ndim(out) == 0 else out


def _check_budget(p: int, n: int, budget: int) -> None:
    if p**n > budget:
        raise OracleBudgetExceeded(p**n, budget)


def omega(p: int) -> complex:
    return complex(np.exp(2j * np.pi / p))


def build_code_state(g: GraphCode, x: Sequence[int], budget: int = DEFAULT_ORACLE_BUDGET) -> StateVector:
    """``|x> = p^{-n/2} sum_y exp(2 pi i q(x, y) / p) |y>``.

    Only the structural invariants are required; a rank-deficient ``B`` is
    allowed so that coinciding states can be observed.
    """
    g.validate(require_rank=False)
    x = np.asarray(x, dtype=np.int64).reshape(-1)
    if x.size != g.k:
        raise DimensionMismatch(f"input vector has length {x.size}, k = {g.k}")
    _check_budget(g.p, g.n, budget)
    ys = all_digits(g.p, g.n)
    vs = np.hstack([np.broadcast_to(x % g.p, (ys.shape[0], g.k)), ys])
    q = quad_form_batch(g.adj, vs, g.p)
    amps = np.exp(2j * np.pi * q / g.p) / np.sqrt(float(g.p) ** g.n)
    return StateVector(g.p, g.n, amps)


def build_extension_state(
    g: GraphCode, basis: ExtensionBasis, x: Sequence[Sequence[int]], budget: int = DEFAULT_ORACLE_BUDGET
) -> StateVector:
    """Code state of a graph over F_{p^m}, straight from the bicharacter product.

    Each vertex value ``z_i`` is a coefficient vector in F_p^m and the
    amplitude is ``prod_{i<j} chi(z_i, z_j)^{adj[i, j]}`` with
    ``chi(h, g) = exp(2 pi i h^T M g / p)``. The output basis index flattens
    ``y`` coordinate by coordinate, matching :func:`flatten_graph`.
    """
    g.validate(require_rank=False)
    p, m = basis.p, basis.m
    xs = np.asarray(x, dtype=np.int64).reshape(g.k, m) % p
    _check_budget(p, m * g.n, budget)
    ys = all_digits(p, m * g.n).reshape(-1, g.n, m)
    size = g.size
    amps = np.empty(ys.shape[0], dtype=np.complex128)
    for idx, y in enumerate(ys):
        z = np.vstack([xs, y])
        amp = 1.0 + 0j
        for i in range(size):
            for j in range(i + 1, size):
                w = int(g.adj[i, j])
                if w:
                    chi = np.exp(2j * np.pi * basis.bilinear(z[i], z[j]) / p)
                    amp *= chi**w
        amps[idx] = amp
    amps /= np.sqrt(float(p) ** (m * g.n))
    return StateVector(p, m * g.n, amps)


def apply_error(
    s: StateVector, a: Sequence[int] | np.ndarray, d: Sequence[int] | np.ndarray, gamma: int = 0
) -> StateVector:
    """``omega^gamma X^a Z^d |s>``: ``amps'[y + a] = omega^(gamma + d.y) amps[y]``."""
    a = np.asarray(a, dtype=np.int64).reshape(-1) % s.p
    d = np.asarray(d, dtype=np.int64).reshape(-1) % s.p
    if a.size != s.n or d.size != s.n:
        raise DimensionMismatch(f"operator on {a.size}/{d.size} systems, state has {s.n}")
    ys = all_digits(s.p, s.n)
    phase = (gamma + ys @ d) % s.p
    target = digits_to_index((ys + a) % s.p, s.p)
    out = np.empty_like(s.amps)
    out[target] = np.exp(2j * np.pi * phase / s.p) * s.amps
    return StateVector(s.p, s.n, out)


@dataclass
class CheckReport:
    name: str
    passed: bool
    max_deviation: float
    tolerance: float
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            **self.details,
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: max deviation {self.max_deviation:.3e} (tol {self.tolerance:g})"


def _input_vectors(g: GraphCode) -> np.ndarray:
    return all_digits(g.p, g.k)


def code_states(g: GraphCode, budget: int = DEFAULT_ORACLE_BUDGET) -> list[StateVector]:
    return [build_code_state(g, x, budget) for x in _input_vectors(g)]


def gram_matrix(g: GraphCode, budget: int = DEFAULT_ORACLE_BUDGET) -> np.ndarray:
    """``G[i, j] = <x_i|x_j>`` over all inputs, in basis-index order."""
    if g.p**g.k > 1 << 10:
        raise OracleBudgetExceeded(g.p**g.k, 1 << 10)
    states = np.array([s.amps for s in code_states(g, budget)])
    return states.conj() @ states.T


def check_gram(g: GraphCode, budget: int = DEFAULT_ORACLE_BUDGET, tol: float = GRAM_TOL) -> CheckReport:
    gm = gram_matrix(g, budget)
    dev = float(np.max(np.abs(gm - np.eye(gm.shape[0]))))
    return CheckReport("gram_matrix", dev < tol, dev, tol, {"size": gm.shape[0]})


def check_stabilizer(g: GraphCode, budget: int = DEFAULT_ORACLE_BUDGET, tol: float = STABILIZER_TOL) -> CheckReport:
    """Every generator must fix every code basis state."""
    gens, _ = graph_to_stabilizer(g)
    states = code_states(g, budget)
    dev = 0.0
    per_gen = []
    for gen in gens:
        worst = 0.0
        for s in states:
            out = apply_error(s, gen.vector.a, gen.vector.d, gen.phase_exp)
            worst = max(worst, float(np.max(np.abs(out.amps - s.amps))))
        per_gen.append(worst)
        dev = max(dev, worst)
    return CheckReport("stabilizer", dev < tol, dev, tol, {"generators": len(gens), "per_generator": per_gen})


def _group_elements(g: GraphCode, gens) -> list[tuple[np.ndarray, np.ndarray, int]]:
    """All products of generator powers as ``(a, d, gamma)``.

    Phases are read off by applying the composed operator to ``|0>``: the
    result is ``omega^gamma |a>``.
    """
    p, n = g.p, g.n
    zero = StateVector.basis(p, n, [0] * n)
    w = omega(p)
    elements = []
    for coeffs in itertools.product(range(p), repeat=len(gens)):
        a = np.zeros(n, dtype=np.int64)
        d = np.zeros(n, dtype=np.int64)
        state = zero
        for c, gen in zip(coeffs, gens):
            for _ in range(c):
                state = apply_error(state, gen.vector.a, gen.vector.d, gen.phase_exp)
            a = (a + c * gen.vector.a) % p
            d = (d + c * gen.vector.d) % p
        amp = state.amps[digits_to_index(a, p)]
        gamma = int(round(np.angle(amp) * p / (2 * np.pi))) % p
        if abs(amp - w**gamma) > 1e-9:  # pragma: no cover - operators are monomial
            raise AssertionError(f"unexpected amplitude {amp} for element {coeffs}")
        elements.append((a, d, gamma))
    return elements


def check_projector(g: GraphCode, budget: int = DEFAULT_ORACLE_BUDGET, tol: float = PROJECTOR_TOL) -> CheckReport:
    """Average the full stabilizer group: the trace must be ``p^k`` and ``P|x> = |x>``."""
    gens, _ = graph_to_stabilizer(g)
    group_size = g.p ** len(gens)
    if group_size > PROJECTOR_GROUP_LIMIT:
        raise OracleBudgetExceeded(group_size, PROJECTOR_GROUP_LIMIT)
    _check_budget(g.p, g.n, budget)
    elements = _group_elements(g, gens)
    ones = StateVector(g.p, g.n, np.ones(g.p**g.n))
    trace = 0j
    for a, d, gamma in elements:
        if not a.any():
            # diagonal operator: its trace is the sum of its action on the all-ones vector
            trace += apply_error(ones, a, d, gamma).amps.sum()
    trace /= group_size
    expected = float(g.p**g.k)
    trace_dev = abs(trace - expected)
    fix_dev = 0.0
    for s in code_states(g, budget):
        acc = np.zeros_like(s.amps)
        for a, d, gamma in elements:
            acc += apply_error(s, a, d, gamma).amps
        fix_dev = max(fix_dev, float(np.max(np.abs(acc / group_size - s.amps))))
    dev = max(trace_dev, fix_dev)
    return CheckReport(
        "projector",
        dev < tol,
        dev,
        tol,
        {"trace": [trace.real, trace.imag], "expected_trace": expected, "group_size": group_size},
    )


def run_checks(g: GraphCode, budget: int = DEFAULT_ORACLE_BUDGET) -> list[CheckReport]:
    return [check_gram(g, budget), check_stabilizer(g, budget), check_projector(g, budget)]
