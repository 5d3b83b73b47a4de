import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from antiholo.abelian import (MarkedSurface, comessatti_normal_form, complex_structure,
                              diagram_hat_commutes, f_z_apply, f_z_solve, hermitian_h,
                              isomorphism_witness_check, kappa_z, lattice_vectors,
                              level_compatible, level_congruence, level_diagram_criterion,
                              level_diagram_direct, period_matrix, q0)
from antiholo.arith import Mat, QComplex, conj
from antiholo.errors import InputError, InvariantError
from antiholo.galois import coboundary
from antiholo.halfspace import H3Point, act, hat_point, in_phi_image, phi_point
from antiholo.sampling import (level_instance, marked_surface_data, random_h3_point,
                               random_siegel_point, random_sp4z_word)
from antiholo.symgroup import I2, I4, J, hat, make_constants, sp4_inverse

SMALL_D = (-1, -2, -3, -7, -11)
LEVEL = {-1: 3, -2: 3, -3: 4, -7: 4, -11: 4}
seeds = st.integers(0, 2 ** 32)
i = QComplex(0, 1)
iI = I2 * i
BASIS = [I4.col(j) for j in range(4)]


# --------------------------------------------------------- lattice map --

def test_f_z_examples():
    Z = Mat([[QComplex(1, 2), 3], [3, QComplex(0, 7)]])
    assert f_z_apply(Z, (0, 0, 1, 0)) == (1, 0)
    assert f_z_apply(iI, (1, 0, 0, 0)) == (i, 0)


@given(seeds, st.lists(st.fractions(-5, 5, max_denominator=6), min_size=4, max_size=4))
def test_f_z_solve_inverts(seed, x):
    Z = random_siegel_point(random.Random(seed))
    assert f_z_solve(Z, f_z_apply(Z, x)) == tuple(x)


def test_hermitian_identity_point():
    u = (QComplex(1, 2), QComplex(-3, 1))
    assert hermitian_h(iI, u, u) == 5 + 10


@given(seeds)
def test_hermitian_recovers_symplectic_form(seed):
    Z = random_siegel_point(random.Random(seed))
    for a in BASIS:
        for b in BASIS:
            h = hermitian_h(Z, f_z_apply(Z, a), f_z_apply(Z, b))
            im = h.im if isinstance(h, QComplex) else 0
            assert im == q0(a, b)
            assert conj(h) == hermitian_h(Z, f_z_apply(Z, b), f_z_apply(Z, a))


@given(seeds)
def test_complex_structure_squares_to_minus_one(seed):
    Z = random_siegel_point(random.Random(seed))
    CZ = complex_structure(Z)
    assert CZ * CZ == -I4


@pytest.mark.parametrize("d", SMALL_D)
@given(seeds)
def test_diagram_hat_commutes(d, seed):
    assert diagram_hat_commutes(random_siegel_point(random.Random(seed)), make_constants(d))


# ------------------------------------------------------------ kappa --

def test_kappa_fixed_point_case():
    C = make_constants(-7)
    ms = MarkedSurface(phi_point(H3Point(i, Fraction(1, 3)), C), I4, 4, C)
    assert kappa_z(ms).eta == C.Nbeta.T


def test_kappa_gaussian_j():
    C = make_constants(-1)
    km = kappa_z(MarkedSurface(iI, J, 3, C))
    assert km.eta == (C.Nbeta * J).T
    assert km.eta * km.eta == -I4
    assert all(km.checks.values())


@pytest.mark.parametrize("d", SMALL_D)
def test_kappa_on_sampled_surfaces(d):
    C = make_constants(d)
    rng = random.Random(d)
    for _ in range(10):
        _, gamma, Z = marked_surface_data(rng, LEVEL[d], C)
        km = kappa_z(MarkedSurface(Z, gamma, LEVEL[d], C))
        assert set(km.checks) >= {"square", "form_scaling", "lattice", "half_lattice",
                                  "anti_linear", "complex_formula"}
        assert all(km.checks.values())


def test_marked_surface_rejects_non_real_point():
    C = make_constants(-1)
    with pytest.raises(InputError):
        MarkedSurface(Mat([[i, Fraction(1, 2)], [Fraction(1, 2), i * 3]]), J, 3, C)


# ------------------------------------------------------ period matrices --

@given(seeds)
def test_period_matrix_standard_basis(seed):
    Z = random_siegel_point(random.Random(seed))
    assert period_matrix(lattice_vectors(Z, I4)) == Z


@given(seeds)
def test_period_matrix_basis_change(seed):
    rng = random.Random(seed)
    Z = random_siegel_point(rng)
    B = random_sp4z_word(rng, 3)
    assert period_matrix(lattice_vectors(Z, B)) == act(B.T, Z)


def test_comessatti_trivial_case():
    C = make_constants(-2)
    Z = phi_point(H3Point(QComplex(Fraction(1, 2), 3), 1), C)
    pd = comessatti_normal_form(MarkedSurface(Z, I4, 3, C))
    assert pd.h == I4 and pd.Omega == Z


def test_comessatti_gaussian_j():
    C = make_constants(-1)
    pd = comessatti_normal_form(MarkedSurface(iI, J, 3, C))
    assert in_phi_image(pd.Omega, C)
    assert pd.kappa == C.Nbeta.T
    assert pd.h.T * J * pd.h == J


@pytest.mark.parametrize("d", SMALL_D)
def test_comessatti_sampled(d):
    C = make_constants(d)
    rng = random.Random(100 + d)
    for _ in range(10):
        _, gamma, Z = marked_surface_data(rng, LEVEL[d], C)
        pd = comessatti_normal_form(MarkedSurface(Z, gamma, LEVEL[d], C))
        assert in_phi_image(pd.Omega, C)
        assert pd.Omega == act(pd.h, Z)
        assert pd.basis.T * J * pd.basis == J
        assert pd.kappa == C.Nbeta.T


# ------------------------------------------------------------- levels --

@pytest.mark.parametrize("d", SMALL_D)
def test_identity_is_compatible(d):
    C = make_constants(d)
    for N in (3, 4, 5, 8):
        assert level_compatible(MarkedSurface(C.e1, I4, N, C))


@pytest.mark.parametrize("d", SMALL_D)
def test_level_double_check(d):
    C = make_constants(d)
    N = LEVEL[d]
    rng = random.Random(7 * d)
    seen = {True: 0, False: 0}
    for k in range(30):
        gamma, Z = level_instance(rng, N, C, compatible=k % 2 == 0)
        ms = MarkedSurface(Z, gamma, N, C)
        r = level_compatible(ms)
        assert r == level_diagram_criterion(gamma, N, C)
        seen[r] += 1
    assert seen[True] and seen[False]


def test_level_check_detects_shared_factor():
    # d | N: the congruence test and the diagram disagree, and level_compatible says so
    C = make_constants(-2)
    h = Mat.from_blocks(I2, Mat([[0, 0], [0, 6]]), Mat.zeros(2), I2)
    gamma = coboundary(h, C)
    ms = MarkedSurface(act(h, C.e1), gamma, 6, C)
    assert not level_congruence(ms)
    assert level_diagram_direct(ms)
    with pytest.raises(InvariantError):
        level_compatible(ms)


def test_level_needs_n_at_least_three():
    C = make_constants(-1)
    with pytest.raises(InputError):
        level_compatible(MarkedSurface(iI, I4, 2, C))


# -------------------------------------------------------- isomorphisms --

def test_isomorphism_identity():
    C = make_constants(-1)
    ms = MarkedSurface(iI, J, 3, C)
    assert isomorphism_witness_check(ms, ms, I4)


@pytest.mark.parametrize("d", SMALL_D)
def test_isomorphism_transport(d):
    C = make_constants(d)
    N = LEVEL[d]
    rng = random.Random(3 - d)
    for _ in range(10):
        _, gamma, Z = marked_surface_data(rng, N, C)
        ms1 = MarkedSurface(Z, gamma, N, C)
        h = random_sp4z_word(rng, 3, N * C.p)
        ms2 = MarkedSurface(act(h, Z), hat(h, C) * gamma * sp4_inverse(h), N, C)
        assert isomorphism_witness_check(ms1, ms2, h)
        # a witness that moves Z elsewhere is refused
        assert not isomorphism_witness_check(ms1, ms2, I4) or act(h, Z) == Z


def test_isomorphism_rejects_gamma_n_outsider():
    C = make_constants(-2)
    h = Mat.from_blocks(I2, Mat([[0, 0], [0, 6]]), Mat.zeros(2), I2)
    ms1 = MarkedSurface(C.e1, I4, 6, C)
    ms2 = MarkedSurface(act(h, C.e1), hat(h, C) * sp4_inverse(h), 6, C)
    assert not isomorphism_witness_check(ms1, ms2, h)
