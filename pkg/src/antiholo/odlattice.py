"""
The ring of integers O_d, congruences modulo (N), the level-N subgroup
Lambda_N of SL(2, O_d), and the two lattice algorithms used by the normal
form: finding a Z-basis in which sqrt(d) acts by N_beta^t, and fixing that
basis up to a unit so the polarization becomes standard.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .arith import Mat, div
from .errors import InputError, InvariantError, SearchExhausted
from .halfspace import qd, qd_parts
from .symgroup import I2, I4, J, Constants, block_diag

DEFAULT_SEARCH_BOUND = 8


# ------------------------------------------------------------- O_d ----

@dataclass(frozen=True)
class OdElem:
    """(u + v sqrt d)/2 in O_d."""
    u: int
    v: int
    d: int

    def __post_init__(self):
        if self.d % 4 == 1:
            if (self.u - self.v) % 2:
                raise InputError(f"({self.u} + {self.v} sqrt d)/2 is not in O_{self.d}")
        elif self.u % 2 or self.v % 2:
            raise InputError(f"({self.u} + {self.v} sqrt d)/2 is not in O_{self.d}")

    @classmethod
    def from_parts(cls, a, b, d: int):
        """a + b sqrt d with a, b rational."""
        u, v = Fraction(a) * 2, Fraction(b) * 2
        if u.denominator != 1 or v.denominator != 1:
            raise InputError(f"{a} + {b} sqrt d is not in O_{d}")
        return cls(int(u), int(v), d)

    @classmethod
    def from_scalar(cls, z, C: Constants):
        a, b = qd_parts(z, C)
        return cls.from_parts(a, b, C.d)

    @classmethod
    def of(cls, n: int, d: int):
        return cls(2 * n, 0, d)

    @property
    def parts(self):
        return Fraction(self.u, 2), Fraction(self.v, 2)

    def scalar(self, C: Constants):
        a, b = self.parts
        return qd(a, b, C)

    def __add__(self, other):
        return OdElem(self.u + other.u, self.v + other.v, self.d)

    def __sub__(self, other):
        return OdElem(self.u - other.u, self.v - other.v, self.d)

    def __neg__(self):
        return OdElem(-self.u, -self.v, self.d)

    def __mul__(self, other):
        if isinstance(other, int):
            return OdElem(self.u * other, self.v * other, self.d)
        u = self.u * other.u + self.d * self.v * other.v
        v = self.u * other.v + self.v * other.u
        return OdElem(u // 2, v // 2, self.d)

    __rmul__ = __mul__

    def norm(self) -> int:
        return (self.u * self.u - self.d * self.v * self.v) // 4

    def basis_coords(self):
        """Coordinates in the Z-basis (1, sqrt d) or (1, (1 + sqrt d)/2)."""
        if self.d % 4 == 1:
            return (self.u - self.v) // 2, self.v
        return self.u // 2, self.v // 2

    def __str__(self):
        a, b = self.parts
        return f"{a} + {b}*sqrt({self.d})"


def od_divisible(z: OdElem, N: int) -> bool:
    """z in N O_d."""
    return all(c % N == 0 for c in z.basis_coords())


def od_congruent_one_mod(z: OdElem, N: int) -> bool:
    """z = 1 mod N O_d.

    In terms of z = a + b sqrt d: N | a - 1 and N | b when d != 1 mod 4,
    and N | a - b - 1 and N | 2b when d = 1 mod 4."""
    return od_divisible(z - OdElem.of(1, z.d), N)


def od_matrix(h: Mat, C: Constants):
    """Entries of h as OdElem, raising InputError if any is not integral."""
    return [[OdElem.from_scalar(h[i, j], C) for j in range(2)] for i in range(2)]


def lambda_n_member(h: Mat, N: int, C: Constants) -> bool:
    """h in SL(2, O_d) with h = I mod N."""
    if N < 1:
        raise InputError("level must be positive")
    (z1, z2), (z3, z4) = od_matrix(h, C)
    if z1 * z4 - z2 * z3 != OdElem.of(1, C.d):
        return False
    return (od_congruent_one_mod(z1, N) and od_congruent_one_mod(z4, N)
            and od_divisible(z2, N) and od_divisible(z3, N))


def units(d: int):
    """Units of O_d as OdElem."""
    out = [OdElem(2, 0, d), OdElem(-2, 0, d)]
    if d == -1:
        out += [OdElem(0, 2, d), OdElem(0, -2, d)]
    if d == -3:
        out += [OdElem(s, t, d) for s in (1, -1) for t in (1, -1)]
    return out


# ------------------------------------------- integer linear algebra ----

def _row_hnf(S):
    """Unimodular P (list of rows) with P S in row echelon form, for a 4 x k integer list S."""
    n = len(S)
    A = [list(r) for r in S]
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    k = len(A[0])
    r = 0
    for c in range(k):
        while True:
            nz = [i for i in range(r, n) if A[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[piv] = A[piv], A[r]
            P[r], P[piv] = P[piv], P[r]
            done = True
            for i in range(r + 1, n):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    P[i] = [x - q * y for x, y in zip(P[i], P[r])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if any(A[i][c] for i in range(r, n)):
            r += 1
    return P, A


def _int_inverse(P):
    M = Mat(P).inv()
    if not M.is_integral():
        raise InvariantError("matrix expected to be unimodular")
    return M


def saturation_complement(cols):
    """For integer column vectors spanning a saturated rank-2 sublattice of Z^4,
    return (W, P): W unimodular whose first two columns span the same lattice, P = W^{-1}.

    Returns None when the span is not saturated (or not of rank 2)."""
    S = [[c[i] for c in cols] for i in range(4)]
    P, H = _row_hnf(S)
    h = H[0][0] * H[1][1] - H[0][1] * H[1][0]
    if abs(h) != 1 or any(H[i][j] for i in (2, 3) for j in (0, 1)):
        return None
    Pm = Mat(P)
    return _int_inverse(P), Pm


def minors_gcd(cols) -> int:
    a, b = cols
    g = 0
    for i in range(4):
        for j in range(i + 1, 4):
            g = gcd(g, a[i] * b[j] - a[j] * b[i])
    return g


def reduce_binary_form(a: int, b: int, c: int):
    """Lagrange-Gauss reduction of the definite form a s^2 + b s t + c t^2.

    Returns ((a', b', c'), T) with T in SL(2, Z) and f(T y) = f'(y), f' reduced."""
    if b * b - 4 * a * c >= 0:
        raise InputError("form is not definite")
    T = [[1, 0], [0, 1]]
    while True:
        if abs(a) > abs(c):
            a, b, c = c, -b, a
            T = [[T[0][1], -T[0][0]], [T[1][1], -T[1][0]]]
            continue
        # choose k with |b + 2ak| <= |a|
        k = -round(Fraction(b, 2 * a))
        if k:
            a, b, c = a, b + 2 * a * k, a * k * k + b * k + c
            T = [[T[0][0], T[0][0] * k + T[0][1]], [T[1][0], T[1][0] * k + T[1][1]]]
            continue
        return (a, b, c), T


# --------------------------------------------- module basis (kappa) ----

@dataclass(frozen=True)
class OdModuleBasis:
    B: Mat
    eta: Mat
    v: tuple
    w: tuple


def omega_action(eta: Mat, C: Constants):
    """(Psi(first generator), Psi(second generator)) used for a_2 and b_1.

    d != 1 mod 4: both are eta.  d = 1 mod 4: Psi(alpha) = (eta - I)/2 and
    Psi(alpha') = (eta + I)/2 with alpha = (-1 + sqrt d)/2, alpha' = (1 + sqrt d)/2."""
    if not C.one_mod_four:
        return eta, eta
    a = (eta - I4).scaled_div(2)
    ap = (eta + I4).scaled_div(2)
    return a, ap


def check_kappa_matrix(eta: Mat, C: Constants):
    if eta.shape != (4, 4) or not eta.is_integral():
        raise InputError("eta must be an integral 4x4 matrix")
    if eta * eta != I4 * C.d:
        raise InputError("eta^2 != d I")
    if C.one_mod_four and not (eta + I4).scaled_div(2).is_integral():
        raise InputError("(eta + I)/2 is not integral")


def _candidates(bound: int):
    """Nonzero integer 4-vectors ordered by sup norm, then lexicographically."""
    for r in range(1, bound + 1):
        for v in product(range(-r, r + 1), repeat=4):
            if max(abs(x) for x in v) == r:
                yield v


def od_module_basis(eta: Mat, C: Constants, bound: int = DEFAULT_SEARCH_BOUND) -> OdModuleBasis:
    """Unimodular B with B^{-1} eta B = N_beta^t, where eta gives Z^4 its O_d structure."""
    check_kappa_matrix(eta, C)
    target = C.Nbeta.T
    if eta == target:
        e = (1, 0, 0, 0), (0, 0, 0, 1)
        return OdModuleBasis(I4, eta, *e)
    psi_a, psi_ap = omega_action(eta, C)
    # the O_d-span of v is the Z-span of v and Psi(omega) v for either generator omega
    for v in _candidates(bound):
        span = (v, psi_a.apply(v))
        if minors_gcd(span) != 1:
            continue
        W, P = saturation_complement(span)
        E_full = P * psi_ap * W
        E = Mat([[E_full[2, 2], E_full[2, 3]], [E_full[3, 2], E_full[3, 3]]])
        e11, e12, e21, e22 = E[0, 0], E[0, 1], E[1, 0], E[1, 1]
        (a, _, _), T = reduce_binary_form(e21, e22 - e11, -e12)
        if abs(a) != 1:
            raise InvariantError("quotient module is not free; O_d should be a PID here")
        wbar = (T[0][0], T[1][0])
        w = W.apply((0, 0) + wbar)
        cols = [v, psi_a.apply(v), psi_ap.apply(w), w]
        B = Mat.from_columns(cols)
        if abs(B.det()) != 1:
            raise InvariantError("assembled module basis is not unimodular")
        if B.inv() * eta * B != target:
            raise InvariantError("module basis does not conjugate eta to N_beta^t")
        return OdModuleBasis(B, eta, tuple(v), tuple(w))
    raise SearchExhausted("no generator v found", bound)


# ------------------------------------------------- symplectic repair ----

CASE_IDENTITY = "identity"
CASE_NEGATE = "negate"
CASE_ROT_PLUS = "rotate_y_plus"
CASE_ROT_MINUS = "rotate_y_minus"
CASE_UNIT = "unit_minus3"


@dataclass(frozen=True)
class SymplecticAdjustment:
    case: str
    x: object
    y: object
    unit: OdElem
    R: Mat
    B: Mat


def gram(B: Mat, Q: Mat = J) -> Mat:
    return B.T * Q * B


def _unit_matrix(u: OdElem, C: Constants) -> Mat:
    """Psi(u) on the a-block, where sqrt d acts by beta^t."""
    s, t = u.parts
    return I2 * s + C.beta.T * t


def symplectic_adjust(basis, C: Constants, Q: Mat = J) -> SymplecticAdjustment:
    """Multiply (a_1, a_2) by the unit that makes the basis symplectic for Q.

    ``basis`` is an OdModuleBasis or a bare basis matrix; with the former the
    matrix of kappa in the adjusted basis is re-checked."""
    B0 = basis.B if isinstance(basis, OdModuleBasis) else basis
    G = gram(B0, Q)
    d = C.d
    Z2 = Mat.zeros(2)
    Mblk = Mat([[G[0, 2], G[0, 3]], [G[1, 2], G[1, 3]]])
    if G != Mat.from_blocks(Z2, Mblk, -Mblk.T, Z2):
        raise InvariantError("Gram matrix is not block antidiagonal")
    x, y = Mblk[0, 0], Mblk[0, 1]
    # kappa is self-adjoint for the form, which pins the block down to two numbers
    expect = Mat([[x, y], [y * C.m, x - y]]) if C.one_mod_four else Mat([[x, y], [y * d, x]])
    if Mblk != expect:
        raise InvariantError("Gram block does not have the shape forced by kappa")
    if C.one_mod_four:
        # Gram data in the basis (a1/2, a1/2 + a2, 2 b1 - b2, b2)
        xs, ys = x - div(y, 2), div(y, 2)
    else:
        xs, ys = x, y
    if xs * xs - d * ys * ys != 1:
        raise InvariantError(f"x^2 - d y^2 = {xs * xs - d * ys * ys}, expected 1")
    # (x + y sqrt d) is a unit; its inverse x - y sqrt d fixes the Gram block
    u = OdElem.from_parts(xs, -ys, d)
    if ys == 0:
        case = CASE_IDENTITY if xs == 1 else CASE_NEGATE
    elif C.one_mod_four:
        case = CASE_UNIT
    else:
        case = CASE_ROT_PLUS if ys == 1 else CASE_ROT_MINUS
    R = block_diag(_unit_matrix(u, C), I2)
    B = B0 * R
    if gram(B, Q) != J:
        raise InvariantError("adjusted basis is not symplectic")
    if isinstance(basis, OdModuleBasis) and B.inv() * basis.eta * B != C.Nbeta.T:
        raise InvariantError("adjustment changed the matrix of kappa")
    return SymplecticAdjustment(case, xs, ys, u, R, B)
