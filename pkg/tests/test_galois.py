import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antiholo.abelian import MarkedSurface, level_compatible
from antiholo.arith import Mat, QComplex
from antiholo.errors import InputError
from antiholo.galois import (BRANCH_LAMBDA_NONZERO, BRANCH_LAMBDA_ZERO, BRANCH_TRIVIAL,
                             coboundary, component_map, double_coset_equal_witness,
                             in_gamma_tilde, is_cocycle, real_fixed_point, same_fiber_audit,
                             solve_coboundary_integral, solve_coboundary_real)
from antiholo.halfspace import H3Point, act, in_phi_image, is_gamma_real, phi_group
from antiholo.sampling import (random_h3_point, random_sl2_od, random_sp4z_word,
                               real_cocycle, seeded_coboundary)
from antiholo.symgroup import (GAMMA_HAT, I2, I4, J, congruence_member, hat, is_sp4z,
                               make_constants, sp4_inverse)

ALL_D = (-1, -2, -3, -7, -11, -19, -43, -67, -163)
SMALL_D = (-1, -2, -3, -7, -11)
LEVEL = {-1: 3, -2: 3, -3: 4, -7: 4, -11: 4}
seeds = st.integers(0, 2 ** 32)


def test_identity_is_cocycle():
    assert is_cocycle(I4, make_constants(-2))


def test_j_is_gaussian_cocycle():
    assert is_cocycle(J, make_constants(-1))
    assert not is_cocycle(J, make_constants(-2))


@pytest.mark.parametrize("d", ALL_D)
@given(seeds)
def test_coboundaries_are_cocycles(d, seed):
    C = make_constants(d)
    g = random_sp4z_word(random.Random(seed), 3)
    assert is_cocycle(coboundary(g, C), C)


# ------------------------------------------------------------ real solver --

def test_real_trivial():
    C = make_constants(-7)
    W = solve_coboundary_real(I4, C)
    assert W.branch == BRANCH_TRIVIAL and W.Z.Z == C.e1
    assert coboundary(W.g, C) == I4


def test_real_gaussian_j():
    C = make_constants(-1)
    W = solve_coboundary_real(J, C)
    assert W.branch == BRANCH_LAMBDA_NONZERO
    assert coboundary(W.g, C) == J
    assert is_gamma_real(W.Z, J, C)


def test_real_block_diagonal():
    C = make_constants(-2)
    U = Mat([[1, 2], [0, 1]])
    g = Mat.from_blocks(U, Mat.zeros(2), Mat.zeros(2), U.T.inv())
    gamma = coboundary(g, C)
    Z, branch, lam = real_fixed_point(gamma, C)
    assert branch == BRANCH_LAMBDA_ZERO and lam == 0
    assert is_gamma_real(Z, gamma, C)


@pytest.mark.parametrize("d", ALL_D)
def test_real_solver_both_branches(d):
    C = make_constants(d)
    rng = random.Random(d)
    hits = {BRANCH_LAMBDA_ZERO: 0, BRANCH_LAMBDA_NONZERO: 0, BRANCH_TRIVIAL: 0}
    for k in range(20):
        _, gamma = real_cocycle(rng, C, k)
        W = solve_coboundary_real(gamma, C)
        assert coboundary(W.g, C) == gamma
        assert is_gamma_real(W.Z, gamma, C)
        assert in_phi_image(act(sp4_inverse(W.g), W.Z, check=False), C)
        hits[W.branch] += 1
    assert hits[BRANCH_LAMBDA_ZERO] and hits[BRANCH_LAMBDA_NONZERO]


def test_real_rejects_non_cocycle():
    C = make_constants(-2)
    with pytest.raises(InputError):
        solve_coboundary_real(J, C)
    with pytest.raises(InputError):
        solve_coboundary_real(I4 * 2, C)


# ------------------------------------------------------- integral solver --

@pytest.mark.parametrize("d", SMALL_D)
def test_integral_identity(d):
    C = make_constants(d)
    W = solve_coboundary_integral(I4, LEVEL[d], C)
    assert is_sp4z(W.g) and coboundary(W.g, C) == I4
    assert same_fiber_audit(I4, W.g, C)


@pytest.mark.parametrize("d", SMALL_D)
@settings(max_examples=15)
@given(seeds)
def test_integral_seeded(d, seed):
    C = make_constants(d)
    N = LEVEL[d]
    rng = random.Random(seed)
    g0, gamma = seeded_coboundary(rng, N, C)
    assert congruence_member(gamma, N, GAMMA_HAT, C)
    W = solve_coboundary_integral(gamma, N, C)
    assert is_sp4z(W.g)
    assert coboundary(W.g, C) == gamma
    assert same_fiber_audit(g0, W.g, C)
    # the witness parametrises E_gamma
    Z = component_map(W.g, random_h3_point(rng), C)
    assert is_gamma_real(Z, gamma, C)
    assert level_compatible(MarkedSurface(Z, gamma, N, C))


def test_integral_rejects_outside_level():
    C = make_constants(-1)
    with pytest.raises(InputError):
        solve_coboundary_integral(J, 3, C)


def test_integral_level_rules():
    with pytest.raises(InputError):
        solve_coboundary_integral(I4, 2, make_constants(-1))
    with pytest.raises(InputError):
        solve_coboundary_integral(I4, 5, make_constants(-3))


def test_same_fiber_audit_negative():
    C = make_constants(-2)
    assert not same_fiber_audit(I4, J, C)


def test_same_fiber_audit_phi_factor():
    C = make_constants(-3)
    lam = random_sl2_od(random.Random(5), C, 3)
    assert same_fiber_audit(I4, phi_group(lam, C), C)


# ----------------------------------------------------------- components --

@pytest.mark.parametrize("d", SMALL_D)
def test_component_sets_disjoint(d):
    # E_gamma1 and E_gamma2 never meet for gamma1 != gamma2
    C = make_constants(d)
    rng = random.Random(11 * d)
    for _ in range(10):
        g1, gam1 = seeded_coboundary(rng, LEVEL[d], C)
        _, gam2 = seeded_coboundary(rng, LEVEL[d], C)
        if gam1 == gam2:
            continue
        Z = component_map(g1, random_h3_point(rng), C)
        assert is_gamma_real(Z, gam1, C)
        assert not is_gamma_real(Z, gam2, C)


def test_double_coset_examples():
    C = make_constants(-1)
    N = 3
    lam = Mat([[1, QComplex(0, 3)], [0, 1]])
    g1 = I4
    gamma = random_sp4z_word(random.Random(1), 3, 3)
    g2 = gamma * g1 * phi_group(lam, C)
    assert in_gamma_tilde(g1, N, C) and in_gamma_tilde(g2, N, C)
    assert double_coset_equal_witness(g1, g2, gamma, lam, N, C)
    assert not double_coset_equal_witness(g1, g1 * 2, gamma, lam, N, C)
    assert not double_coset_equal_witness(g1, g2, gamma, Mat([[2, 0], [0, 1]]), N, C)


def test_double_coset_wrong_product():
    C = make_constants(-1)
    lam = Mat([[1, 1], [0, 1]])
    assert not double_coset_equal_witness(I4, I4, I4, lam, 3, C)


def test_component_map_level_guard():
    C = make_constants(-2)
    with pytest.raises(InputError):
        component_map(J, H3Point(QComplex(0, 1), 0), C, N=3)
