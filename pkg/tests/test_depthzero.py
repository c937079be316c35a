"""Division-algebra parameters, the tame representation, and offset modules.

Frozen oracles: the orthogonality sums and Mackey tables below were computed
once by independent enumeration (unit sums for the first, nullspace
dimensions of the commutation systems for the second) and pinned literally.
"""

import pytest

from gl2speh.cyclotomic import CycMatrix, CycNum, root_of_unity
from gl2speh.characters import MultChar
from gl2speh.depthzero import (
    DivisionParams,
    DxElement,
    WSpace,
    build_tau,
    ext_square_trace,
    mackey_hom_dim,
    predicted_char,
    tau_trace,
)
from gl2speh.finite_field import FieldTower

ONE = CycNum.rational(1)


def _params(p, f, n, d, e, theta_pi=None):
    t = FieldTower(p, f, n)
    return DivisionParams(t, d, MultChar(t, d, e), theta_pi if theta_pi is not None else ONE)


def test_params_validation():
    t = FieldTower(3, 1, 2)
    with pytest.raises(ValueError):
        DivisionParams(t, 3, MultChar(t, 2, 1), ONE)  # d does not divide n... wrong level too
    with pytest.raises(ValueError):
        DivisionParams(t, 2, MultChar(t, 1, 1), ONE)  # theta at the wrong level
    with pytest.raises(ValueError):
        DivisionParams(t, 2, MultChar(t, 2, 4), ONE)  # not regular
    with pytest.raises(ValueError):
        DivisionParams(t, 2, MultChar(t, 2, 1), CycNum.rational(2))  # not a root of unity
    t4 = FieldTower(3, 1, 4)
    with pytest.raises(ValueError):
        DivisionParams(t4, 3, MultChar(t4, 4, 1), ONE)  # 3 does not divide 4


def test_params_describe_frozen():
    pa = _params(3, 1, 2, 2, 1)
    assert pa.describe() == {
        "q": 3,
        "n": 2,
        "d": 2,
        "m": 1,
        "theta_level": 2,
        "theta_exponent": 1,
        "theta_pi": "1",
        "lambda": "1",  # theta(-1)^{m+1} theta_pi = (-1)^2 * 1
    }
    pb = _params(3, 1, 4, 2, 1, root_of_unity(4, 1))
    desc = pb.describe()
    assert desc["m"] == 2
    assert desc["lambda"] == "zeta4[0,-1]"  # (-1)^3 * i = -i


def test_torus_characters_are_frobenius_twists():
    pa = _params(3, 1, 2, 2, 1)
    assert pa.torus_char(0).exponent == 1
    assert pa.torus_char(1).exponent == 3
    assert pa.torus_char(2) == pa.torus_char(0)  # index mod d


def test_dx_element_multiplication_respects_the_representation():
    pa = _params(3, 1, 2, 2, 1)
    tau = build_tau(pa)
    t = pa.tower
    units = list(t.units(2))
    for x1 in units[:4]:
        for j1 in range(3):
            for x2 in units[:4]:
                for j2 in range(2):
                    g1 = DxElement(x1, j1)
                    g2 = DxElement(x2, j2)
                    assert tau.matrix(g1 * g2) == tau.matrix(g1) @ tau.matrix(g2)


def test_dx_element_inverse():
    pa = _params(3, 1, 2, 2, 1)
    tau = build_tau(pa)
    t = pa.tower
    nb = pa.d
    for x in list(t.units(2))[:5]:
        for j in range(4):
            g = DxElement(x, j)
            assert (tau.matrix(g) @ tau.matrix(g.inv())) == CycMatrix.identity(nb)
    with pytest.raises(ValueError):
        DxElement(t.zero(2), 1)


def test_pi_matrix_shape_and_power():
    pa = _params(3, 1, 4, 2, 1, root_of_unity(4, 1))
    tau = build_tau(pa)
    P = tau.pi_matrix
    # one-step twisted shift: e_1 -> e_0 freely, e_0 wraps with lambda
    assert P.entry(0, 1) == ONE
    assert P.entry(1, 0) == pa.lam
    assert P.entry(0, 0).is_zero() and P.entry(1, 1).is_zero()
    assert tau.pi_power(2).scalar_of_identity() == pa.lam
    assert tau.pi_power(0) == CycMatrix.identity(2)
    assert tau.pi_power(-1) @ P == CycMatrix.identity(2)


def test_torus_matrix_diagonal_of_twists():
    pa = _params(3, 1, 3, 3, 1)
    tau = build_tau(pa)
    x = pa.tower.gamma(3)
    M = tau.torus_matrix(x)
    for i in range(3):
        assert M.entry(i, i) == pa.torus_char(i)(x)
        for j in range(3):
            if i != j:
                assert M.entry(i, j).is_zero()


def test_trace_closed_form_vanishing():
    pa = _params(3, 1, 2, 2, 1)
    t = pa.tower
    tau = build_tau(pa)
    for x in t.units(2):
        for j in range(4):
            got = tau_trace(tau, DxElement(x, j))
            if j % 2 == 1:
                assert got.is_zero()
            else:
                # matrix route agrees (the closed form is cross-checked
                # internally as well)
                manual = CycNum.rational(0)
                M = tau.matrix(DxElement(x, j))
                for i in range(2):
                    manual = manual + M.entry(i, i)
                assert got == manual


def test_character_orthogonality_sum():
    # sum over the finite slice of |trace|^2 equals d * (Q - 1) exactly when
    # the inducing character is regular (irreducibility)
    for (p, n, d, expected) in ((3, 2, 2, 16), (3, 3, 3, 78)):
        pa = _params(p, 1, n, d, 1)
        tau = build_tau(pa)
        total = CycNum.rational(0)
        for x in pa.tower.units(n):
            for j in range(d):
                v = tau_trace(tau, DxElement(x, j))
                total = total + v * v.conj()
        assert total == CycNum.rational(expected)
        assert expected == d * (pa.tower.level_order(n) - 1)


def test_ext_square_is_determinant_for_two_blocks():
    pa = _params(3, 1, 2, 2, 1)
    t = pa.tower
    tau = build_tau(pa)
    det_char = pa.torus_char(0) * pa.torus_char(1)
    for x in t.units(2):
        for j in range(4):
            got = ext_square_trace(tau, DxElement(x, j))
            want = det_char(x) * (-pa.lam) ** j  # det of the shift is -lambda
            assert got == want


def test_ext_square_dimension_at_three_blocks():
    pa = _params(3, 1, 3, 3, 1)
    tau = build_tau(pa)
    one = pa.tower.one(3)
    assert ext_square_trace(tau, DxElement(one, 0)) == CycNum.rational(3)


def test_predicted_char_norm_kind():
    pa = _params(3, 1, 2, 2, 1, root_of_unity(4, 1))
    nc = predicted_char(pa, "norm_char")
    t = pa.tower
    x = t.gamma(2)
    at_pi = pa.theta.at_minus_one() ** (pa.n + 1) * pa.theta_pi
    for j in range(3):
        got = nc(DxElement(x, j))
        want = pa.theta(x.norm_to(1).as_level(2)) * at_pi**j
        assert got == want
    # multiplicativity on the division group
    g1 = DxElement(x, 1)
    g2 = DxElement(x**3, 2)
    assert nc(g1 * g2) == nc(g1) * nc(g2)


def test_predicted_char_mu_kind():
    pa = _params(3, 1, 2, 2, 1)
    mu = predicted_char(pa, "mu", z=CycNum.rational(-1))
    x = pa.tower.gamma(2)
    assert mu(DxElement(x, 0)) == ONE
    assert mu(DxElement(x, 3)) == CycNum.rational(-1)
    with pytest.raises(ValueError):
        predicted_char(pa, "mu")


def test_predicted_char_omega_kind():
    pa = _params(3, 1, 2, 2, 1)
    omega = predicted_char(pa, "omega")
    t = pa.tower
    z = t.units(1).__iter__().__next__()  # a base unit acts centrally
    central = DxElement(z.as_level(2), 0)
    assert omega(central) == pa.theta(z.as_level(2)) ** (1 + 3)  # theta^{1+q} on the centre
    with pytest.raises(ValueError):
        omega(DxElement(t.gamma(2), 0))  # not scalar
    with pytest.raises(ValueError):
        predicted_char(pa, "nonsense")


def test_wspace_matrices():
    pa = _params(3, 1, 3, 3, 1)
    ws = WSpace(pa, 1)
    t = pa.tower
    x1, x2 = t.gamma(3), t.gamma(3) ** 2
    M = ws.torus_matrix(x1, x2)
    for i in range(3):
        assert M.entry(i, i) == pa.torus_char(i)(x1) * pa.torus_char(i + 1)(x2)
    P = ws.pi_matrix()
    assert P.pow_int(3).scalar_of_identity() == pa.lam * pa.lam
    assert WSpace(pa, 4).y == 1  # offset reduced mod d


def test_mackey_tables_frozen():
    composite = {
        (3, 3, 3): [[2, 0, 0], [0, 1, 1], [0, 1, 1]],
        (5, 3, 3): [[2, 0, 0], [0, 1, 1], [0, 1, 1]],
        (3, 4, 4): [[2, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 0], [0, 1, 0, 1]],
        (3, 5, 5): [
            [2, 0, 0, 0, 0],
            [0, 1, 0, 0, 1],
            [0, 0, 1, 1, 0],
            [0, 0, 1, 1, 0],
            [0, 1, 0, 0, 1],
        ],
    }
    for (p, n, d), table in composite.items():
        pa = _params(p, 1, n, d, 1)
        got = [[mackey_hom_dim(pa, y, yp)[1] for yp in range(d)] for y in range(d)]
        assert got == table, (p, n, d)
        # the composite count is the delta-function prediction
        for y in range(d):
            for yp in range(d):
                want = (1 if y == yp else 0) + (1 if (y + yp) % d == 0 else 0)
                assert table[y][yp] == want


def test_mackey_direct_component():
    pa = _params(3, 1, 4, 4, 1)
    # the direct dimension alone is the plain delta, even at self-paired offsets
    for y in range(4):
        for yp in range(4):
            direct, _ = mackey_hom_dim(pa, y, yp)
            assert direct == (1 if y == yp else 0)
