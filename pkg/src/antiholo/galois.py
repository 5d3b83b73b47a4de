"""
Cocycles gamma (gamma * hat(gamma) = I) and their trivializations
gamma = hat(g) g^{-1}, over the reals and over the integers.

Every witness leaving this module has been re-verified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import MarkedSurface, PeriodData, comessatti_normal_form
from .arith import Mat, div, sqrt_p
from .errors import InputError, InvariantError
from .halfspace import (SiegelPoint, act, in_phi_image, is_gamma_real, phi_group, phi_inverse,
                        phi_point)
from .odlattice import lambda_n_member
from .symgroup import (GAMMA_HAT, GAMMA_TILDE, I2, I4, IUNIT, J, Constants, _mat,
                       congruence_member, hat, is_sp4z, similitude, sp4_inverse)

BRANCH_TRIVIAL = "trivial"
BRANCH_LAMBDA_NONZERO = "lambda_nonzero"
BRANCH_LAMBDA_ZERO = "lambda_zero"


def is_cocycle(gamma, C: Constants) -> bool:
    g = _mat(gamma)
    return g * hat(g, C) == I4


def coboundary(g, C: Constants) -> Mat:
    """hat(g) g^{-1}."""
    g = _mat(g)
    return hat(g, C) * sp4_inverse(g)


@dataclass(frozen=True)
class CoboundaryWitness:
    g: Mat
    gamma: Mat
    Z: SiegelPoint
    branch: str
    lam: object
    certified: bool
    period: PeriodData | None = None


# ---------------------------------------------------- real fixed points --

def _fixed_point_lambda_nonzero(gamma: Mat, lam, C: Constants):
    A, B, Cb, D = gamma.blocks()
    # h^{-1} = ((I, -C^{-1} D), (0, I)) clears the D block of gamma h^{-1}
    S = Cb.inv() * D
    h = Mat.from_blocks(I2, S, Mat.zeros(2), I2)
    gp = hat(h, C) * gamma * sp4_inverse(h)
    A1, B1, C1, D1 = gp.blocks()
    if A1 != Mat.zeros(2) or D1 != Mat.zeros(2) or B1 != -C1.T.inv():
        raise InvariantError("reduced cocycle is not antidiagonal")
    lam1 = (C.beta.T * C1)[0, 1]
    # Z' = i diag(y1, y2) with y1 y2 = -d / lambda^2
    Zp = Mat.diag(1, div(-C.d, lam1 * lam1)) * IUNIT
    return act(sp4_inverse(h), Zp, check=False)


def _fixed_point_lambda_zero(gamma: Mat, C: Constants):
    A, B, Cb, D = gamma.blocks()
    h = Mat.from_blocks(I2, (A.inv() * B).scaled_div(2), Mat.zeros(2), I2)
    gp = hat(h, C) * gamma * sp4_inverse(h)
    A1, B1, C1, D1 = gp.blocks()
    if B1 != Mat.zeros(2) or C1 != Mat.zeros(2):
        raise InvariantError("reduced cocycle is not block diagonal")
    # A' = beta A / sqrt(p) squares to -I; conjugate it to j2 with the basis (A'u, u)
    Ap = (C.beta * A1).scaled_div(sqrt_p(C.p))
    if Ap * Ap != -I2:
        raise InvariantError("A' does not square to -I")
    for u in ((1, 0), (0, 1)):
        P = Mat.from_columns([Ap.apply(u), u])
        if P.det() != 0:
            break
    if Ap * P != P * C.j2:
        raise InvariantError("conjugator does not carry A' to j2")
    Zp = (P * P.T) * IUNIT
    return act(sp4_inverse(h), Zp, check=False)


def real_fixed_point(gamma, C: Constants):
    """(Z, branch, lambda) with hat(Z) = gamma . Z for a real cocycle gamma."""
    gamma = _mat(gamma)
    if gamma == I4:
        return SiegelPoint(C.e1), BRANCH_TRIVIAL, 0
    Cb = gamma.blocks()[2]
    K = C.beta.T * Cb
    lam = K[0, 1]
    if K != Mat([[0, lam], [-lam, 0]]):
        raise InvariantError("beta^t C is not antisymmetric")
    if lam != 0:
        Z = _fixed_point_lambda_nonzero(gamma, lam, C)
        branch = BRANCH_LAMBDA_NONZERO
    else:
        Z = _fixed_point_lambda_zero(gamma, C)
        branch = BRANCH_LAMBDA_ZERO
    if not is_gamma_real(Z, gamma, C):
        raise InvariantError("constructed point is not gamma-real")
    return Z, branch, lam


# --------------------------------------------------- algebraic witness --

def _solve2(r1, r2, rhs):
    """Some solution x of the 2 x 4 system (r1 . x, r2 . x) = rhs."""
    for i in range(4):
        for j in range(i + 1, 4):
            m = r1[i] * r2[j] - r1[j] * r2[i]
            if m != 0:
                xi = div(rhs[0] * r2[j] - rhs[1] * r1[j], m)
                xj = div(r1[i] * rhs[1] - r2[i] * rhs[0], m)
                x = [0, 0, 0, 0]
                x[i], x[j] = xi, xj
                return tuple(x)
    raise InvariantError("degenerate linear system")


def kappa_symplectic_basis(eta: Mat, C: Constants) -> Mat:
    """A symplectic basis B (over the field of eta's entries) with B^{-1} eta B = N_beta^t.

    With b = beta: eta c1 = b11 c1 + b12 c2 and eta c4 = b12 c3 + b22 c4,
    so c2 and c3 follow from c1 and c4; c4 is cut out by two linear equations."""
    b11, b12, b22 = C.beta[0, 0], C.beta[0, 1], C.beta[1, 1]
    target = C.Nbeta.T
    if eta == target:
        return I4
    for k in range(4):
        c1 = I4.col(k)
        ec1 = eta.apply(c1)
        c2 = tuple(div(x - b11 * y, b12) for x, y in zip(ec1, c1))
        r1 = J.T.apply(c1)  # w -> c1^t J w
        r2 = J.T.apply(c2)
        try:
            c4 = _solve2(r1, r2, (0, 1))
        except InvariantError:
            continue
        ec4 = eta.apply(c4)
        c3 = tuple(div(x - b22 * y, b12) for x, y in zip(ec4, c4))
        B = Mat.from_columns([c1, c2, c3, c4])
        if B.T * J * B == J and B.inv() * eta * B == target:
            return B
    raise InvariantError("no symplectic kappa basis found")


def solve_coboundary_real(gamma, C: Constants) -> CoboundaryWitness:
    """g over Q(sqrt p) with hat(g) g^{-1} = gamma, plus a point of E_gamma."""
    gamma = _mat(gamma)
    if similitude(gamma) != 1:
        raise InputError("gamma must be symplectic")
    if not is_cocycle(gamma, C):
        raise InputError("gamma * hat(gamma) != I")
    Z, branch, lam = real_fixed_point(gamma, C)
    eta = (C.Nbeta * gamma).T
    B = kappa_symplectic_basis(eta, C)
    g = sp4_inverse(B.T)
    if coboundary(g, C) != gamma:
        raise InvariantError("real witness does not reproduce gamma")
    # both routes meet: g^{-1} Z must be hat-fixed
    if not in_phi_image(act(sp4_inverse(g), Z, check=False), C):
        raise InvariantError("g^{-1} Z is not in phi(H_3)")
    return CoboundaryWitness(g, gamma, Z, branch, lam, True)


# ----------------------------------------------------- integral witness --

def check_level(N: int, C: Constants):
    if N < 3:
        raise InputError("level N must be at least 3")
    if C.one_mod_four and N % 2:
        raise InputError("level N must be even when d = 1 mod 4")


def solve_coboundary_integral(gamma, N: int, C: Constants, bound: int = 8) -> CoboundaryWitness:
    """g in Sp(4, Z) with hat(g) g^{-1} = gamma, via the lattice normal form."""
    gamma = _mat(gamma)
    check_level(N, C)
    if not is_sp4z(gamma):
        raise InputError("gamma must be integral symplectic")
    if not is_cocycle(gamma, C):
        raise InputError("gamma * hat(gamma) != I")
    if not congruence_member(gamma, N, GAMMA_HAT, C):
        raise InputError(f"gamma is not in Gamma_{N}")
    Z, branch, lam = real_fixed_point(gamma, C)
    pd = comessatti_normal_form(MarkedSurface(Z, gamma, N, C), bound)
    g = sp4_inverse(pd.h)
    got = coboundary(g, C)
    if got != gamma:
        # sign ambiguity: h^{-1} hat(h) gamma = -I; fall back to g J
        if got == -gamma or hat(g, C) * sp4_inverse(g) * sp4_inverse(gamma) == -I4:
            alt = g * J
            if coboundary(alt, C) == gamma:
                g = alt
            else:
                raise InvariantError("sign fix failed")
        else:
            raise InvariantError("integral witness does not reproduce gamma")
    if not is_sp4z(g):
        raise InvariantError("integral witness is not in Sp(4, Z)")
    return CoboundaryWitness(g, gamma, Z, branch, lam, True, pd)


def same_fiber_audit(g0, g, C: Constants) -> bool:
    """g0^{-1} g lies in phi(SL(2, O_d))."""
    x = sp4_inverse(_mat(g0)) * _mat(g)
    h = phi_inverse(x, C)
    if h is None:
        return False
    try:
        return lambda_n_member(h, 1, C)
    except InputError:
        return False


# ----------------------------------------------------- double cosets --

def in_gamma_tilde(g, N: int, C: Constants) -> bool:
    g = _mat(g)
    return is_sp4z(g) and congruence_member(g, N, GAMMA_TILDE, C)


def double_coset_equal_witness(g1, g2, gamma, lam, N: int, C: Constants) -> bool:
    """g2 = gamma g1 phi(lam) with gamma in Gamma_N and lam in SL(2, O_d)."""
    g1, g2, gamma = _mat(g1), _mat(g2), _mat(gamma)
    if not (in_gamma_tilde(g1, N, C) and in_gamma_tilde(g2, N, C)):
        return False
    if not is_sp4z(gamma) or not congruence_member(gamma, N, GAMMA_HAT, C):
        return False
    try:
        if not lambda_n_member(lam, 1, C):
            return False
    except InputError:
        return False
    return gamma * g1 * phi_group(lam, C) == g2


def component_map(g, w, C: Constants, N: int | None = None) -> SiegelPoint:
    """g . phi(w); lands in E_gamma for gamma = hat(g) g^{-1}."""
    g = _mat(g)
    if N is not None and not in_gamma_tilde(g, N, C):
        raise InputError(f"g is not in the tilde group of level {N}")
    Z = act(g, phi_point(w, C), check=False)
    if not is_gamma_real(Z, coboundary(g, C), C):
        raise InvariantError("component map left E_gamma")
    return Z

