import numpy as np
import pytest
from helpers import (
    GF4_CODE,
    WHEEL_G,
    WHEEL_G4,
    WHEEL_W,
    WHEEL_W_DUAL,
    brute_symp_dual_words,
    brute_weight_histogram,
    random_self_orthogonal_code,
    random_transcript,
    span_set,
    steane_code,
    wheel_code,
)

from graphstab.enumerator import (
    WeightEnumerator,
    gf4_rank,
    gf4_weight,
    macwilliams_dual,
    min_distance,
    to_gf4,
    weight_distribution,
)
from graphstab.errors import BudgetExceeded, InconsistentEnumerator, NotSelfOrthogonal, WrongCharacteristic
from graphstab.matfp import FpMatrix
from graphstab.symplectic import SymplecticCode, apply_transcript, self_dual_embed, symp_dual


def test_weight_distribution_examples():
    assert weight_distribution(SymplecticCode.zero(5, 3)).coeffs == (1, 0, 0, 0, 0, 0)
    assert weight_distribution(wheel_code()).coeffs == WHEEL_W
    assert weight_distribution(symp_dual(wheel_code())).coeffs == WHEEL_W_DUAL


def test_polynomial_format():
    assert str(weight_distribution(wheel_code())) == "x^7 + 21*x^3*y^4 + 42*x*y^6"
    assert str(weight_distribution(symp_dual(wheel_code()))) == (
        "x^7 + 21*x^4*y^3 + 21*x^3*y^4 + 126*x^2*y^5 + 42*x*y^6 + 45*y^7"
    )
    assert str(WeightEnumerator((1, 3))) == "x + 3*y"
    assert str(WeightEnumerator((1,))) == "1"


@pytest.mark.parametrize("p,n", [(2, 4), (3, 3), (5, 2)])
def test_weight_distribution_brute_force(p, n, rng):
    for _ in range(8):
        dim = int(rng.integers(0, 2 * n + 1))
        c = SymplecticCode(FpMatrix(rng.integers(0, p, size=(dim, 2 * n)), p, cols=2 * n))
        if p**c.dim > 5000:
            continue
        w = weight_distribution(c)
        assert w.coeffs == brute_weight_histogram(span_set(c.gen.data, p, 2 * n), n)
        assert w.coeffs[0] == 1 and w.size == p**c.dim


def test_budget():
    with pytest.raises(BudgetExceeded) as err:
        weight_distribution(wheel_code(), budget=32)
    assert err.value.required == 64


def test_min_distance_examples():
    assert min_distance(wheel_code()) == 3
    assert min_distance(steane_code()) == 3
    # span{(e_1|0)} with n = 1 is self-dual; brute force over its nonzero words
    trivial = SymplecticCode([[1, 0]], 2)
    words = span_set(trivial.gen.data, 2, 2) - {(0, 0)}
    assert min_distance(trivial) == min(brute_weight_histogram([w], 1).index(1) for w in words) == 1
    with pytest.raises(NotSelfOrthogonal):
        min_distance(SymplecticCode([[1, 0], [0, 1]], 2))


@pytest.mark.parametrize("p", [2, 3])
def test_min_distance_brute_force(p, rng):
    for _ in range(10):
        n = int(rng.integers(1, 5))
        c = random_self_orthogonal_code(rng, p, n, int(rng.integers(1, n + 1)))
        members = span_set(c.gen.data, p, 2 * n)
        if c.dim == n:
            pool = [w for w in members if any(w)]
        else:
            pool = [tuple(w) for w in brute_symp_dual_words(c.gen.data, p, n).tolist() if tuple(w) not in members]
        expected = min(sum(1 for i in range(n) if w[i] or w[n + i]) for w in pool)
        assert min_distance(c) == expected
        t = random_transcript(rng, p, n, 0, 8)
        assert min_distance(apply_transcript(c, t)) == expected


def test_to_gf4_examples():
    first = to_gf4(np.array([[1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1]]), 2)
    assert first.tolist() == [[3, 2, 0, 0, 0, 2, 3]]
    assert to_gf4(np.zeros((1, 6), dtype=int), 2).tolist() == [[0, 0, 0]]
    g4 = to_gf4(np.array(WHEEL_G), 2)
    assert g4.tolist() == [[GF4_CODE[e] for e in row] for row in WHEEL_G4]
    with pytest.raises(WrongCharacteristic):
        to_gf4(SymplecticCode.zero(2, 3))


def test_gf4_weights_and_rank():
    code = wheel_code()
    words = np.array(sorted(span_set(code.gen.data, 2, 14)))
    sw = [sum(1 for i in range(7) if w[i] or w[7 + i]) for w in words]
    assert gf4_weight(to_gf4(words, 2)).tolist() == sw
    assert gf4_rank(to_gf4(np.array(WHEEL_G), 2)) == 6
    # a GF(4)-linear code: the span of one row times {1, a, a^2}
    row = np.array([1, 2, 3])
    mul = np.array([[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]])
    scaled = np.array([mul[s][row] for s in (1, 2, 3)])
    assert gf4_rank(scaled) == 1


def test_macwilliams_examples():
    assert macwilliams_dual(WeightEnumerator((1, 0)), 1, 2, 0).coeffs == (1, 3)
    assert macwilliams_dual(WHEEL_W, 7, 2, 6).coeffs == WHEEL_W_DUAL
    st = steane_code()
    d, _ = self_dual_embed(st)
    wd = weight_distribution(d)
    assert macwilliams_dual(wd, 7, 2, 7) == wd
    with pytest.raises(InconsistentEnumerator):
        macwilliams_dual((1, 0, 4, 3), 3, 2, 3)  # weight-1 coefficient would be 1/2
    with pytest.raises(InconsistentEnumerator):
        macwilliams_dual((1, 1), 1, 2, 2)


@pytest.mark.parametrize("p", [2, 3])
def test_macwilliams_matches_brute_force_dual(p, rng):
    for _ in range(10):
        n = int(rng.integers(1, 5 if p == 3 else 7))
        dim = int(rng.integers(0, 2 * n + 1))
        c = SymplecticCode(FpMatrix(rng.integers(0, p, size=(dim, 2 * n)), p, cols=2 * n))
        w = weight_distribution(c)
        brute = brute_weight_histogram(brute_symp_dual_words(c.gen.data, p, n).tolist(), n)
        assert macwilliams_dual(w, n, p, c.dim).coeffs == brute
        assert weight_distribution(symp_dual(c)).coeffs == brute
