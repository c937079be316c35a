"""Exact cyclotomic arithmetic: classical identities asserted directly."""

from fractions import Fraction

import pytest

from gl2speh.cyclotomic import (
    CycMatrix,
    CycNum,
    cyc_repr,
    cyclotomic_poly,
    euler_phi,
    exact_rank,
    root_of_unity,
)


def test_euler_phi_small_values():
    assert [euler_phi(k) for k in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_rational_arithmetic():
    a = CycNum.rational(Fraction(3, 4))
    b = CycNum.rational(2)
    assert (a + b).rational_value() == Fraction(11, 4)
    assert (a * b).rational_value() == Fraction(3, 2)
    assert (a - b).rational_value() == Fraction(-5, 4)
    assert (a / b).rational_value() == Fraction(3, 8)
    assert CycNum.rational(0).is_zero()
    assert not a.is_zero()
    assert a.is_rational()


def test_roots_of_unity_basic_relations():
    for L in (2, 3, 4, 5, 8, 12):
        z = root_of_unity(L, 1)
        assert z**L == CycNum.rational(1)
        if L > 1:
            assert not (z == CycNum.rational(1))
    assert root_of_unity(4, 2) == CycNum.rational(-1)
    assert root_of_unity(8, 2) == root_of_unity(4, 1)
    assert root_of_unity(12, 3) == root_of_unity(4, 1)


def test_sum_of_all_lth_roots_vanishes():
    for L in (3, 5, 8, 9, 12):
        total = CycNum.rational(0)
        for k in range(L):
            total = total + root_of_unity(L, k)
        assert total.is_zero()


def test_primitive_root_minimal_relations():
    z3 = root_of_unity(3, 1)
    assert z3 + z3**2 == CycNum.rational(-1)
    z4 = root_of_unity(4, 1)
    assert z4 * z4 == CycNum.rational(-1)
    z5 = root_of_unity(5, 1)
    assert z5 + z5**2 + z5**3 + z5**4 == CycNum.rational(-1)


def test_mixed_order_products():
    z3 = root_of_unity(3, 1)
    z4 = root_of_unity(4, 1)
    assert z3 * z4 == root_of_unity(12, 7)
    assert z3 + z4 == root_of_unity(12, 4) + root_of_unity(12, 3)


def test_inverse_and_division():
    z7 = root_of_unity(7, 3)
    assert z7.inv() == root_of_unity(7, 4)
    assert z7 * z7.inv() == CycNum.rational(1)
    assert (CycNum.rational(1) / z7) == root_of_unity(7, 4)
    mixed = CycNum.rational(2) + root_of_unity(3, 1)
    assert mixed * mixed.inv() == CycNum.rational(1)
    with pytest.raises(ZeroDivisionError):
        CycNum.rational(0).inv()


def test_negative_powers():
    z5 = root_of_unity(5, 1)
    assert z5 ** (-1) == root_of_unity(5, 4)
    assert z5 ** (-7) == root_of_unity(5, 3)
    assert z5**0 == CycNum.rational(1)


def test_galois_and_complex_conjugation():
    z5 = root_of_unity(5, 1)
    assert z5.galois(2) == root_of_unity(5, 2)
    assert (z5 + z5**4).galois(2) == z5**2 + z5**3
    z8 = root_of_unity(8, 1)
    assert z8.conj() == root_of_unity(8, 7)
    # conjugation is a ring map: conj(ab) = conj(a) conj(b)
    a = CycNum.rational(2) + root_of_unity(12, 5)
    b = root_of_unity(8, 3) - CycNum.rational(1)
    assert (a * b).conj() == a.conj() * b.conj()


def test_norm_of_root_of_unity_is_one():
    for L, k in ((5, 2), (8, 3), (12, 7)):
        z = root_of_unity(L, k)
        assert z * z.conj() == CycNum.rational(1)


def test_numeric_approximation():
    import cmath

    for L, k in ((3, 1), (8, 5), (12, 1)):
        z = root_of_unity(L, k).approx()
        ref = cmath.exp(2j * cmath.pi * k / L)
        assert abs(z - ref) < 1e-9


def test_serialization_roundtrip():
    vals = [
        CycNum.rational(Fraction(-7, 3)),
        root_of_unity(12, 5),
        CycNum.rational(2) + root_of_unity(5, 3),
    ]
    for v in vals:
        assert CycNum.from_data(v.to_data()) == v


def test_cyc_repr_formats():
    assert cyc_repr(CycNum.rational(5)) == "5"
    assert cyc_repr(CycNum.rational(Fraction(1, 3))) == "1/3"
    assert cyc_repr(root_of_unity(4, 1)) == "zeta4[0,1]"
    assert cyc_repr(CycNum.rational(-1)) == "-1"


def test_exact_rank():
    one = CycNum.rational(1)
    zero = CycNum.rational(0)
    z3 = root_of_unity(3, 1)
    assert exact_rank([[one, zero], [zero, one]]) == 2
    # second row is zeta3^2 times the first: determinant 1 - zeta3^3 = 0
    assert exact_rank([[one, z3], [z3**2, one]]) == 1
    assert exact_rank([[zero, zero], [zero, zero]]) == 0
    # rank is insensitive to a scalar stretch
    assert exact_rank([[z3 * one, z3 * z3], [zero, zero]]) == 1


def test_matrix_product_matches_hand_expansion():
    one = CycNum.rational(1)
    z = root_of_unity(5, 1)
    A = CycMatrix.from_rows([[one, z], [z**2, one]])
    B = CycMatrix.from_rows([[z, one], [one, z**4]])
    C = A @ B
    assert C.entry(0, 0) == z + z  # 1*z + z*1
    assert C.entry(0, 1) == one + one  # 1*1 + z*z^4
    assert C.entry(1, 0) == z**3 + one
    assert C.entry(1, 1) == z**2 + z**4


def test_matrix_powers_and_scalar_detection():
    zero = CycNum.rational(0)
    one = CycNum.rational(1)
    z = root_of_unity(4, 1)
    lam = root_of_unity(3, 1)
    # twisted two-step shift: square is lam * identity
    S = CycMatrix.from_rows([[zero, lam], [CycNum.rational(1), zero]])
    S2 = S.pow_int(2)
    assert S2.scalar_of_identity() == lam
    assert S.pow_int(0) == CycMatrix.identity(2)
    assert S.scalar_of_identity() is None
    assert CycMatrix.identity(3).scalar_of_identity() == CycNum.rational(1)
    assert CycMatrix.from_rows([[zero, zero], [zero, zero]]).scalar_of_identity() == zero
    assert CycMatrix.from_rows([[one, zero], [zero, z]]).scalar_of_identity() is None


def test_matrix_equality_across_bases():
    # the same matrix written with entries of different cyclotomic orders
    one = CycNum.rational(1)
    a = CycMatrix.from_rows([[one, root_of_unity(8, 2)]])
    b = CycMatrix.from_rows([[one, root_of_unity(4, 1)]])
    assert a == b


def test_matrix_add_sub_scale():
    one = CycNum.rational(1)
    z = root_of_unity(4, 1)
    A = CycMatrix.from_rows([[one, z]])
    B = CycMatrix.from_rows([[z, one]])
    assert (A + B) == CycMatrix.from_rows([[one + z, one + z]])
    assert (A - B) == CycMatrix.from_rows([[one - z, z - one]])
    assert A.scale(z) == CycMatrix.from_rows([[z, -one]])
