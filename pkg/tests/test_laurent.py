import itertools
import random
from fractions import Fraction

import pytest

from catalan_groebner.laurent import (
    LaurentSeries,
    SystemSpec,
    TruncationError,
    build_general_system,
    build_special_system,
    coefficient,
    e_poly_direct,
    generic_C,
    series_inverse,
    series_mul,
    series_pow,
)
from catalan_groebner.polyring import Polynomial, unknowns_ring


def brute_force_coefficient(n, k, ring, T):
    """Sum over (i_1..i_n), i_j in {1, -1..-T}, summing to -k, of prod C_{i_j} (C_1 := 1)."""
    factor = {1: ring.one()}
    factor.update({-j: ring.var(f"C{j}") for j in range(1, T + 1)})
    total = ring.zero()
    for combo in itertools.product(factor, repeat=n):
        if sum(combo) == -k:
            p = ring.one()
            for i in combo:
                p = p * factor[i]
            total = total + p
    return total


def test_generic_C(ring3):
    C1 = generic_C(1, unknowns_ring(1))
    assert set(C1.coeffs) == {1, -1}
    C = generic_C(3, ring3)
    assert C.coeffs == {1: ring3.one(), -1: ring3.var("C1"), -2: ring3.var("C2"), -3: ring3.var("C3")}
    assert C.floor == -3
    assert coefficient(C, 0).is_zero()
    with pytest.raises(KeyError):
        generic_C(4, ring3)


def test_intro_expansion_of_C_squared():
    R = unknowns_ring(6)
    C2 = series_pow(generic_C(6, R), 2)
    assert coefficient(C2, 2) == R.one()
    assert coefficient(C2, 0) == R.parse("2*C1")
    assert coefficient(C2, -1) == R.parse("2*C2")
    assert coefficient(C2, -4) == R.parse("C2^2 + 2*C1*C3 + 2*C5")
    assert coefficient(C2, -5) == R.parse("2*C2*C3 + 2*C1*C4 + 2*C6")


def test_zeroth_power_and_cube(ring3):
    C = generic_C(3, ring3)
    one = series_pow(C, 0)
    assert one.coeffs == {0: ring3.one()}
    assert coefficient(series_pow(C, 3), -1) == ring3.parse("3*C3 + 3*C1^2")
    assert coefficient(series_pow(C, 3), -1) == brute_force_coefficient(3, 1, ring3, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("k", range(0, 7))
def test_power_coefficient_matches_composition_oracle(n, k):
    T = k + n - 1 if k + n - 1 >= 1 else 1
    R = unknowns_ring(T)
    C = generic_C(T, R)
    assert coefficient(series_pow(C, n), -k) == brute_force_coefficient(n, k, R, T)


def test_inverse():
    R = unknowns_ring(2)
    x = LaurentSeries.monomial(R, 1, -4)
    assert series_inverse(x).coeffs == {-1: R.one()}
    C = generic_C(2, R)
    inv = series_inverse(C)
    assert coefficient(inv, -1) == R.one()
    assert coefficient(inv, -2).is_zero()
    R4 = unknowns_ring(4)
    C4 = generic_C(4, R4)
    inv4 = series_inverse(C4)
    assert coefficient(inv4, -3) == R4.parse("-C1")
    # C has top exponent +1, so the product is exact only above floor + 1
    prod = series_mul(C4, inv4)
    assert {e: p for e, p in prod.coeffs.items() if e > prod.floor + 1} == {0: R4.one()}
    with pytest.raises(ZeroDivisionError):
        series_inverse(LaurentSeries.monomial(R4, 1, -4, R4.var("C1")))


def test_inverse_power_against_products():
    R = unknowns_ring(6)
    C = generic_C(6, R)
    inv2 = series_pow(C, -2)
    prod = series_mul(series_pow(C, 2), inv2)
    assert {e: p for e, p in prod.coeffs.items() if e > prod.floor + 2} == {0: R.one()}


def test_floor_errors(ring3):
    C = generic_C(3, ring3)
    with pytest.raises(TruncationError):
        coefficient(C, -4)
    with pytest.raises(TruncationError):
        series_mul(C, generic_C(3, ring3, floor=-5))


def test_special_system_small():
    E = build_special_system(1)
    R = E.ring
    assert R.names == ("C3", "C2", "C1", "y")
    assert list(E) == [R.parse("2*C2"), R.parse("2*C3 + C1^2"), R.parse("3*C3 + 3*C1^2 + y")]
    assert build_special_system(2)[3] == build_special_system(2).ring.parse("2*C5 + 2*C3*C1 + C2^2")
    E3 = build_special_system(3)
    assert E3[4] == E3.ring.parse("2*C6 + 2*C2*C3 + 2*C4*C1")


def test_e_poly_direct():
    R = unknowns_ring(7)
    assert e_poly_direct(1, R) == R.parse("2*C2")
    assert e_poly_direct(4, R) == R.parse("2*C5 + 2*C1*C3 + C2^2")
    assert e_poly_direct(6, R) == R.parse("2*C7 + 2*C5*C1 + 2*C4*C2 + C3^2")
    with pytest.raises(KeyError):
        e_poly_direct(7, R)


@pytest.mark.parametrize("r", range(1, 7))
def test_e_poly_direct_matches_series(r):
    E = build_special_system(r)
    for i in range(1, 2 * r + 1):
        assert e_poly_direct(i, E.ring) == E[i - 1]


def test_odd_power_shortcut_matches_plain_power():
    for r in range(1, 5):
        E = build_special_system(r)
        C = generic_C(2 * r + 1, E.ring)
        assert E[-1] == coefficient(series_pow(C, 2 * r + 1), -1) + E.ring.var("y")


@pytest.mark.parametrize("r", range(1, 7))
def test_general_system_agrees_with_special(r):
    a = build_general_system(SystemSpec(2, 2 * r + 1))
    b = build_special_system(r)
    assert a.ring == b.ring
    assert list(a) == list(b)


def test_general_system_shapes():
    assert len(build_general_system(SystemSpec(2, 3))) == 3
    E = build_general_system(SystemSpec(3, 4))
    assert len(E) == 5
    y = E.ring.monomial({"y": 1})
    assert E[-1].coeff(y) == 1
    assert all(g.coeff(y) == 0 for g in E.gens[:-1])


def test_divisibility_rejected():
    for n, m in [(2, 4), (3, 6), (4, 2), (2, 2)]:
        with pytest.raises(ValueError):
            SystemSpec(n, m)
    with pytest.raises(ValueError):
        SystemSpec(2, 3, (2, 0, 0, 0))
    with pytest.raises(ValueError):
        SystemSpec(2, 3, (1, 0))


def _specs(max_n=4, max_m=9):
    for n in range(2, max_n + 1):
        for m in range(2, max_m + 1):
            if m % n and n % m:
                yield n, m


@pytest.mark.parametrize("n,m", list(_specs()))
def test_floor_stability(n, m):
    rng = random.Random(1000 * n + m)
    size = n + m - 1
    weights = (1,) + tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(size - 1))
    for spec in (SystemSpec(n, m), SystemSpec(n, m, weights)):
        assert build_general_system(spec) == build_general_system(spec, depth=2 * spec.size)


def test_negative_powers_enter_q():
    # n = 4, m = 3: the last weight multiplies C^{3-5} = C^{-2} = x^{-2} - 2 C_{-1} x^{-4} + ...
    plain = build_general_system(SystemSpec(4, 3))
    with_inv = build_general_system(SystemSpec(4, 3, (1, 0, 0, 0, 0, 1)))
    R = plain.ring
    inv2 = series_pow(generic_C(5, R), -2)
    assert coefficient(inv2, -2) == R.one()
    assert coefficient(inv2, -4) == R.parse("-2*C1")
    # E_1, E_2 come from C^4; E_3 = Q_{-1}, E_4 = Q_{-2}, E_5 = Q_{-3} + y
    diffs = [b - a for a, b in zip(plain, with_inv)]
    assert diffs == [R.zero(), R.zero(), R.zero(), R.one(), R.zero()]


def _random_series(rng, R, floor):
    coeffs = {}
    for e in range(floor, 3):
        if rng.random() < 0.6:
            coeffs[e] = Polynomial(R, {tuple(rng.randint(0, 1) for _ in range(R.nvars)): Fraction(rng.randint(-3, 3))})
    return LaurentSeries(R, coeffs, floor)


def test_series_mul_commutative_associative():
    rng = random.Random(7)
    R = unknowns_ring(2)
    for _ in range(30):
        a, b, c = (_random_series(rng, R, -6) for _ in range(3))
        assert series_mul(a, b) == series_mul(b, a)
        # products of series with positive exponents lose terms near the floor,
        # so compare above floor + 4 (two factors reach at most +2 each)
        lhs = series_mul(series_mul(a, b), c)
        rhs = series_mul(a, series_mul(b, c))
        assert {e: p for e, p in lhs.coeffs.items() if e >= -2} == {e: p for e, p in rhs.coeffs.items() if e >= -2}
