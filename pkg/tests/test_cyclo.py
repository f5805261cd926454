"""Exact cyclotomic integer arithmetic."""

import cmath
import math

import pytest

from scheme_forge.cyclo import CycloInt, cyclotomic_polynomial, euler_phi

ORDERS = [1, 2, 3, 4, 5, 6, 7, 8, 12]


def test_cyclotomic_polynomials_frozen():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)   # frozen oracle
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)


def test_euler_phi():
    for m in ORDERS:
        assert euler_phi(m) == sum(1 for k in range(1, m + 1)
                                   if math.gcd(k, m) == 1)


@pytest.mark.parametrize("m", ORDERS)
def test_roots_of_unity_multiply(m):
    for a in range(m):
        for b in range(m):
            lhs = CycloInt.root_of_unity(m, a) * CycloInt.root_of_unity(m, b)
            assert lhs == CycloInt.root_of_unity(m, a + b)


def test_zeta5_fourth_power_reduction():
    # frozen: z^4 = -1 - z - z^2 - z^3 in the power basis mod Phi_5
    assert CycloInt.root_of_unity(5, 4).coeffs == (-1, -1, -1, -1)


@pytest.mark.parametrize("m", ORDERS)
def test_geometric_sum_vanishes(m):
    total = CycloInt.zero(m)
    for k in range(m):
        total = total + CycloInt.root_of_unity(m, k)
    if m == 1:
        assert total == CycloInt.integer(1, 1)
    else:
        assert total.is_zero()


def test_from_exponent_counts():
    counts = [0] * 8
    counts[1] = 3
    counts[5] = 2
    v = CycloInt.from_exponent_counts(8, counts)
    expect = 3 * CycloInt.root_of_unity(8, 1) + 2 * CycloInt.root_of_unity(8, 5)
    assert v == expect


def test_conjugate_and_real():
    z = CycloInt.root_of_unity(5, 1)
    assert z.conjugate() == CycloInt.root_of_unity(5, 4)
    r = z + z.conjugate()
    assert r.is_real()
    assert not z.is_real()
    assert (z * z.conjugate()) == CycloInt.integer(5, 1)


def test_divide_exact():
    v = CycloInt.integer(5, 10) + 15 * CycloInt.root_of_unity(5, 2)
    w = v.divide_exact(5)
    assert w == CycloInt.integer(5, 2) + 3 * CycloInt.root_of_unity(5, 2)
    with pytest.raises(ArithmeticError):
        v.divide_exact(4)


def test_as_rational_integer():
    assert CycloInt.integer(12, -7).as_rational_integer() == -7
    assert CycloInt.root_of_unity(12, 1).as_rational_integer() is None


@pytest.mark.parametrize("m", ORDERS)
def test_approx_matches_complex_embedding(m):
    for k in range(m):
        v, err = CycloInt.root_of_unity(m, k).approx()
        assert abs(v - cmath.exp(2j * math.pi * k / m)) < 1e-9 + err


def test_render():
    v = CycloInt.integer(5, 2) - 3 * CycloInt.root_of_unity(5, 2)
    assert v.render() == "2 - 3*z^2"
    assert CycloInt.zero(5).render() == "0"


def test_json_round_shape():
    j = CycloInt.root_of_unity(4, 1).to_json()
    assert j["order"] == 4 and j["coeffs"] == [0, 1]
    assert j["approx"] == [0.0, 1.0]
