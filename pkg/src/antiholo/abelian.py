"""
Abelian surfaces attached to points Z of the Siegel space.

The lattice map F_Z sends (x, y) in R^2 + R^2 to Z x + y in C^2; its image
of Z^4 is the period lattice L_Z.  A point with hat(Z) = gamma . Z carries
the anti-linear endomorphism kappa_Z, which in lattice coordinates is the
integer matrix eta = (N_beta gamma)^t and on C^2 is v -> (CZ + D)^t beta conj(v).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Mat, conj, div, im, re
from .errors import InputError, InvariantError
from .halfspace import SiegelPoint, _Z, act, hat_point, in_phi_image
from .odlattice import OdModuleBasis, SymplecticAdjustment, od_module_basis, symplectic_adjust
from .symgroup import (GAMMA_HAT, I2, I4, J, Constants, _mat, congruence_member, hat,
                       in_gamma, is_sp4z, sp4_inverse)

# --------------------------------------------------------- lattice map --

def f_z_apply(Z, x) -> tuple:
    """Z (x1, x2) + (y1, y2) for x = (x1, x2, y1, y2)."""
    Zm = _Z(Z)
    zx = Zm.apply(tuple(x[:2]))
    return (zx[0] + x[2], zx[1] + x[3])


def f_z_real_matrix(Z) -> Mat:
    """F_Z as a real 4x4 matrix: lattice coordinates -> (Re v1, Re v2, Im v1, Im v2)."""
    Zm = _Z(Z)
    return Mat.from_blocks(Zm.real(), I2, Zm.imag(), Mat.zeros(2))


def _realify(v):
    return (re(v[0]), re(v[1]), im(v[0]), im(v[1]))


def f_z_solve(Z, v) -> tuple:
    """The real 4-vector x with F_Z(x) = v."""
    return f_z_real_matrix(Z).inv().apply(_realify(v))


def complex_structure(Z) -> Mat:
    """Multiplication by i transported to lattice coordinates: F_Z^{-1} i F_Z."""
    F = f_z_real_matrix(Z)
    Ireal = Mat.from_blocks(Mat.zeros(2), -I2, I2, Mat.zeros(2))
    return F.inv() * Ireal * F


def hermitian_h(Z, u, v):
    """u^t (Im Z)^{-1} conj(v)."""
    Yi = _Z(Z).imag().inv()
    w = Yi.apply((conj(v[0]), conj(v[1])))
    return u[0] * w[0] + u[1] * w[1]


def q0(a, b):
    """The standard symplectic form a^t J b on lattice coordinates."""
    Jb = J.apply(tuple(b))
    return sum((x * y for x, y in zip(a, Jb)), 0)


# ----------------------------------------------------- marked surfaces --

@dataclass(frozen=True)
class MarkedSurface:
    Z: SiegelPoint
    gamma: Mat
    N: int
    C: Constants

    def __post_init__(self):
        object.__setattr__(self, "Z", SiegelPoint(self.Z))
        g = _mat(self.gamma)
        object.__setattr__(self, "gamma", g)
        if not is_sp4z(g):
            raise InputError("gamma must be an integral symplectic matrix")
        if self.N < 1:
            raise InputError("level must be positive")
        if hat_point(self.Z, self.C).Z != act(g, self.Z, check=False).Z:
            raise InputError("hat(Z) != gamma . Z")

    @property
    def d(self) -> int:
        return self.C.d


@dataclass(frozen=True)
class KappaMap:
    eta: Mat
    Z: SiegelPoint
    P: Mat
    checks: dict


def kappa_complex_matrix(Z, gamma, C: Constants) -> Mat:
    """P with kappa_Z(v) = P conj(v); P = (CZ + D)^t beta."""
    _, _, Cg, Dg = _mat(gamma).blocks()
    return (Cg * _Z(Z) + Dg).T * C.beta


def kappa_apply(P: Mat, v):
    return P.apply((conj(v[0]), conj(v[1])))


def kappa_conditions(eta: Mat, Z, C: Constants, P: Mat | None = None) -> dict:
    """The defining conditions of an anti-holomorphic multiplication, in lattice coordinates."""
    d = C.d
    CZ = complex_structure(Z)
    out = {
        "square": eta * eta == I4 * d,
        "form_scaling": eta.T * J * eta == J * d,
        "lattice": eta.is_integral(),
        "half_lattice": (eta + I4).scaled_div(2).is_integral() if C.one_mod_four else True,
        "anti_linear": eta * CZ == -(CZ * eta),
    }
    if P is not None:
        out["complex_formula"] = all(
            f_z_apply(Z, eta.col(j)) == kappa_apply(P, f_z_apply(Z, I4.col(j))) for j in range(4))
    return out


def kappa_z(ms: MarkedSurface) -> KappaMap:
    C = ms.C
    eta = (C.Nbeta * ms.gamma).T
    P = kappa_complex_matrix(ms.Z, ms.gamma, C)
    checks = kappa_conditions(eta, ms.Z, C, P)
    bad = [k for k, ok in checks.items() if not ok]
    if bad:
        raise InvariantError(f"kappa_Z fails {bad}")
    return KappaMap(eta, ms.Z, P, checks)


def diagram_hat_commutes(Z, C: Constants) -> bool:
    """F_{hat Z}(N_beta^t x) = beta conj(F_Z(x)) on the standard basis."""
    Zh = hat_point(Z, C)
    for j in range(4):
        x = I4.col(j)
        lhs = f_z_apply(Zh, C.Nbeta.T.apply(x))
        v = f_z_apply(Z, x)
        if lhs != C.beta.apply((conj(v[0]), conj(v[1]))):
            return False
    return True


# ------------------------------------------------------ period matrices --

def _row_inverse(b1, b2):
    """[b1 b2]^{-1} as a Mat (rows are the dual functionals)."""
    return Mat([[b1[0], b2[0]], [b1[1], b2[1]]]).inv()


def _ev(row, v):
    return row[0] * v[0] + row[1] * v[1]


def periods(forms, vectors) -> list:
    """Omega_ij = form_i(v_j) for forms given as coefficient rows."""
    return [[_ev(f, v) for v in vectors] for f in forms]


def period_matrix(vectors, P: Mat | None = None) -> SiegelPoint:
    """Normalized period matrix for the lattice basis (a1, a2, b1, b2).

    omega_1 is dual to (b1, b2) on b1; omega_2 is conj(kappa^* omega_1) when
    the complex matrix P of kappa is given, else the other dual functional."""
    a1, a2, b1, b2 = vectors
    Binv = _row_inverse(b1, b2)
    l1 = Binv.row(0)
    if P is None:
        l2 = Binv.row(1)
    else:
        Pc = P.conj()
        l2 = (conj(l1[0]) * Pc[0, 0] + conj(l1[1]) * Pc[1, 0],
              conj(l1[0]) * Pc[0, 1] + conj(l1[1]) * Pc[1, 1])
    full = periods([l1, l2], [a1, a2, b1, b2])
    if [row[2:] for row in full] != [[1, 0], [0, 1]]:
        raise InvariantError("b-periods are not the identity")
    Om = Mat([row[:2] for row in full])
    if Om[0, 1] != Om[1, 0]:
        raise InvariantError("period matrix is not symmetric")
    try:
        return SiegelPoint(Om)
    except InputError as e:
        raise InvariantError(f"period matrix violates the Riemann relations: {e}") from None


@dataclass(frozen=True)
class PeriodData:
    Omega: SiegelPoint
    h: Mat
    kappa: Mat
    basis: Mat
    case: str


def lattice_vectors(Z, B: Mat):
    return [f_z_apply(Z, B.col(j)) for j in range(4)]


def comessatti_normal_form(ms: MarkedSurface, bound: int = 8) -> PeriodData:
    """Symplectic lattice basis in which kappa is N_beta^t and the period matrix lies in phi(H_3)."""
    C = ms.C
    km = kappa_z(ms)
    ob: OdModuleBasis = od_module_basis(km.eta, C, bound)
    adj: SymplecticAdjustment = symplectic_adjust(ob, C)
    B = adj.B
    vecs = lattice_vectors(ms.Z, B)
    if C.one_mod_four:
        c1, c2, c3, c4 = vecs
        # the basis (a1/2, a1/2 + a2, 2 b1 - b2, b2) on which kappa acts like the d != 1 mod 4 case
        h1 = (div(c1[0], 2), div(c1[1], 2))
        primed = [h1, (h1[0] + c2[0], h1[1] + c2[1]),
                  (2 * c3[0] - c4[0], 2 * c3[1] - c4[1]), c4]
        Om1 = period_matrix(primed, km.P)
        Om = SiegelPoint(C.sigma * Om1.Z * C.sigma.T)
    else:
        Om = period_matrix(vecs, km.P)
    h = B.T
    via_action = act(h, ms.Z, check=False)
    plain = period_matrix(vecs)
    if not (Om == via_action == plain):
        raise InvariantError("period matrix routes disagree")
    if not in_phi_image(Om, C):
        raise InvariantError("normal form period matrix is not in phi(H_3)")
    kappa = B.inv() * km.eta * B
    if kappa != C.Nbeta.T or B.T * J * B != J:
        raise InvariantError("normal form basis lost its defining properties")
    return PeriodData(Om, h, kappa, B, adj.case)


# ------------------------------------------------------------- levels --

def level_diagram_direct(ms: MarkedSurface) -> bool:
    """kappa_Z(F_Z(x)) = F_Z(N_beta^t x) mod L_Z for x in the generators of (1/N)Z^4."""
    C, N = ms.C, ms.N
    P = kappa_complex_matrix(ms.Z, ms.gamma, C)
    for j in range(4):
        xn = tuple(_frac(c, N) for c in I4.col(j))
        lhs = kappa_apply(P, f_z_apply(ms.Z, xn))
        rhs = f_z_apply(ms.Z, C.Nbeta.T.apply(xn))
        diff = (lhs[0] - rhs[0], lhs[1] - rhs[1])
        coords = f_z_solve(ms.Z, diff)
        if not all(_is_int(c) for c in coords):
            return False
    return True


def _frac(a, N):
    f = Fraction(a, N)
    return f.numerator if f.denominator == 1 else f


def _is_int(c):
    return type(c) is int


def level_congruence(ms: MarkedSurface) -> bool:
    return congruence_member(ms.gamma, ms.N, GAMMA_HAT, ms.C)


def level_compatible(ms: MarkedSurface) -> bool:
    """Congruence test and direct diagram test; they must agree."""
    if ms.N < 3:
        raise InputError("level compatibility needs N >= 3")
    a = level_congruence(ms)
    b = level_diagram_direct(ms)
    if a != b:
        raise InvariantError(
            f"congruence test says {a} but the level diagram says {b} (d={ms.d}, N={ms.N})")
    return a


def level_diagram_criterion(gamma: Mat, N: int, C: Constants) -> bool:
    """Closed form of the diagram test: N_beta (gamma - I) = 0 mod N."""
    return in_gamma(C.Nbeta * (gamma - I4) + I4, N)


def isomorphism_witness_check(ms1: MarkedSurface, ms2: MarkedSurface, h) -> bool:
    C, N = ms1.C, ms1.N
    h = _mat(h)
    if not is_sp4z(h) or ms2.N != N or ms2.C.d != C.d:
        return False
    if act(h, ms1.Z, check=False).Z != ms2.Z.Z:
        return False
    if not in_gamma(h, N):
        return False
    composite = (sp4_inverse(ms2.gamma) * hat(h, C) * ms1.gamma).T
    if not in_gamma(composite, N):
        return False
    return congruence_member(h, N, GAMMA_HAT, C)
