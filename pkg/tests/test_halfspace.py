import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from antiholo.arith import Mat, QComplex, QReal
from antiholo.errors import InputError
from antiholo.halfspace import (H3Point, SiegelPoint, act, h3_act, hat_point, in_phi_image,
                                is_gamma_real, phi_group, phi_inverse, phi_point,
                                phi_point_inverse, qd, qd_parts, sl2_matrix)
from antiholo.sampling import (random_h3_point, random_siegel_point, random_sl2_od,
                               random_sp4z_word)
from antiholo.symgroup import I2, I4, J, hat, make_constants, sp4_check

SMALL_D = (-1, -2, -3, -7, -11)
seeds = st.integers(0, 2 ** 32)
i = QComplex(0, 1)
iI = I2 * i


def test_siegel_point_validation():
    SiegelPoint(iI)
    with pytest.raises(InputError):
        SiegelPoint(Mat([[i, 1], [0, i]]))
    with pytest.raises(InputError):
        SiegelPoint(Mat([[i, 0], [0, -i]]))
    with pytest.raises(InputError):
        SiegelPoint(Mat([[i, i * 2], [i * 2, i]]))


def test_siegel_point_with_sqrt_entries():
    Z = Mat([[QComplex(0, QReal(0, 1, 2)), 0], [0, i]])
    assert SiegelPoint(Z).Y[0, 0] == QReal(0, 1, 2)


def test_h3_point_validation():
    with pytest.raises(InputError):
        H3Point(QComplex(0, -1), 0)
    with pytest.raises(InputError):
        H3Point(i, i)


# --------------------------------------------------------------- act --

def test_act_identity():
    Z = Mat([[QComplex(1, 2), Fraction(1, 3)], [Fraction(1, 3), QComplex(0, 5)]])
    assert act(I4, Z) == Z


def test_act_j_fixes_i():
    assert act(J, iI) == iI


def test_act_similitudes():
    C = make_constants(-2)
    # L_beta has factor -d > 0 and acts; I_minus has factor -1 and does not
    # -beta (iI) beta^{-t} worked out by hand
    assert act(C.Lbeta, iI) == Mat([[i * Fraction(1, 2), 0], [0, i * 2]])
    with pytest.raises(InputError):
        act(C.Iminus, iI)


@given(seeds)
def test_act_is_an_action(seed):
    rng = random.Random(seed)
    g, h = random_sp4z_word(rng, 3), random_sp4z_word(rng, 3)
    Z = random_siegel_point(rng)
    assert act(g, act(h, Z)) == act(g * h, Z)


# --------------------------------------------------------- hat_point --

def test_hat_point_examples():
    assert hat_point(iI, make_constants(-1)) == iI
    e1 = Mat([[i, 0], [0, i * 2]])
    assert hat_point(e1, make_constants(-2)) == e1


@pytest.mark.parametrize("d", SMALL_D)
@given(seeds)
def test_hat_point_involution_and_equivariance(d, seed):
    C = make_constants(d)
    rng = random.Random(seed)
    Z = random_siegel_point(rng)
    g = random_sp4z_word(rng, 3)
    assert hat_point(hat_point(Z, C), C) == Z
    assert hat_point(act(g, Z), C) == act(hat(g, C), hat_point(Z, C), check=False)


# ------------------------------------------------------------ phi --

def test_phi_point_examples():
    assert phi_point(H3Point(i, 0), make_constants(-1)) == iI
    Z = phi_point(H3Point(i, 1), make_constants(-2))
    assert Z == Mat([[i, 1], [1, i * 2]])
    assert Z.Y == Mat.diag(1, 2)


@pytest.mark.parametrize("d", SMALL_D)
def test_phi_point_is_hat_fixed(d):
    C = make_constants(d)
    rng = random.Random(d)
    for _ in range(100):
        w = random_h3_point(rng)
        Z = phi_point(w, C)
        assert hat_point(Z, C) == Z
        assert phi_point_inverse(Z, C) == w


def test_phi_group_examples():
    C = make_constants(-2)
    assert phi_group(I2, C) == I4
    h = sl2_matrix([[1, (0, 1)], [0, 1]], C)
    assert phi_group(h, C) == Mat.from_blocks(I2, Mat.diag(1, -2), Mat.zeros(2), I2)


@pytest.mark.parametrize("d", SMALL_D)
def test_phi_group_homomorphism_and_roundtrip(d):
    C = make_constants(d)
    rng = random.Random(10 - d)
    for _ in range(100):
        a, b = random_sl2_od(rng, C, 3), random_sl2_od(rng, C, 3)
        pa, pb = phi_group(a, C), phi_group(b, C)
        assert phi_group(a * b, C) == pa * pb
        assert sp4_check(pa)[0] and pa.is_integral()
        assert hat(pa, C) == pa
        assert phi_inverse(pa, C) == a


def test_phi_inverse_examples():
    C = make_constants(-1)
    assert phi_inverse(I4, C) == I2
    assert phi_inverse(J, C) is None


def test_phi_rejects_entries_outside_field():
    C = make_constants(-2)
    with pytest.raises(InputError):
        sl2_matrix([[1, QComplex(0, 1)], [0, 1]], C)
    with pytest.raises(InputError):
        qd_parts(QComplex(0, QReal(0, 1, 3)), C)


def test_qd_roundtrip():
    C = make_constants(-7)
    z = qd(Fraction(1, 2), Fraction(3, 2), C)
    assert qd_parts(z, C) == (Fraction(1, 2), Fraction(3, 2))
    assert z * z == qd(Fraction(1, 4) - 7 * Fraction(9, 4), Fraction(3, 2), C)


@pytest.mark.parametrize("d", SMALL_D)
def test_transported_action(d):
    C = make_constants(d)
    rng = random.Random(d * 7)
    for _ in range(30):
        h, w = random_sl2_od(rng, C, 2), random_h3_point(rng)
        assert act(phi_group(h, C), phi_point(w, C)) == phi_point(h3_act(h, w, C), C)


# ------------------------------------------------------- gamma-real --

def test_gamma_real_examples():
    C = make_constants(-1)
    w = H3Point(QComplex(Fraction(1, 3), 2), Fraction(1, 5))
    assert is_gamma_real(phi_point(w, C), I4, C)
    assert is_gamma_real(iI, J, C)
    off = iI + Mat([[Fraction(1, 3), Fraction(2, 7)], [Fraction(2, 7), Fraction(1, 5)]])
    assert not is_gamma_real(off, J, C)


def test_in_phi_image_rejects_generic_point():
    C = make_constants(-3)
    assert in_phi_image(phi_point(H3Point(i, Fraction(1, 2)), C), C)
    assert not in_phi_image(Mat([[i, 0], [0, i * 3]]), C)
