"""
Points of the Siegel space h_2 and of hyperbolic 3-space H_3, the
fractional linear action, the anti-holomorphic involution on points and
the embeddings phi of H_3 and SL(2, C) into h_2 and Sp(4, R).

Elements of Q(sqrt d) are complex scalars x + i*y*sqrt(p) with x, y
rational; :func:`qd` and :func:`qd_parts` convert between that and the
pair (x, y) meaning x + y*sqrt(d).
"""

from __future__ import annotations

from fractions import Fraction

from .arith import Mat, QComplex, QReal, conj, im, is_rational, qreal_sign, re, sqrt_p
from .errors import InputError, InvariantError
from .symgroup import Constants, GSpElement, _mat, hat, similitude


class SiegelPoint:
    """Symmetric 2x2 complex matrix with positive definite imaginary part."""

    __slots__ = ("Z",)

    def __init__(self, Z):
        if isinstance(Z, SiegelPoint):
            Z = Z.Z
        if not isinstance(Z, Mat):
            Z = Mat(Z)
        if Z.shape != (2, 2):
            raise InputError("a Siegel point is a 2x2 matrix")
        if Z[0, 1] != Z[1, 0]:
            raise InputError("Siegel point must be symmetric")
        if not positive_definite(Z.imag()):
            raise InputError("imaginary part is not positive definite")
        self.Z = Z

    @property
    def X(self) -> Mat:
        return self.Z.real()

    @property
    def Y(self) -> Mat:
        return self.Z.imag()

    def __eq__(self, other):
        if isinstance(other, SiegelPoint):
            return self.Z == other.Z
        if isinstance(other, Mat):
            return self.Z == other
        return NotImplemented

    def __hash__(self):
        return hash(self.Z)

    def __repr__(self):
        return f"SiegelPoint({self.Z.tolist()!r})"


def _Z(Z) -> Mat:
    return Z.Z if isinstance(Z, SiegelPoint) else Z


def positive_definite(Y: Mat) -> bool:
    """Leading principal minors of a real symmetric 2x2 matrix."""
    return qreal_sign(Y[0, 0]) > 0 and qreal_sign(Y.det()) > 0


class H3Point:
    """(z, r) with z complex, r real and Im z > 0."""

    __slots__ = ("z", "r")

    def __init__(self, z, r):
        if isinstance(r, QComplex):
            raise InputError("r must be real")
        if qreal_sign(im(z)) <= 0:
            raise InputError("Im z must be positive")
        self.z, self.r = z, r

    def __eq__(self, other):
        if not isinstance(other, H3Point):
            return NotImplemented
        return self.z == other.z and self.r == other.r

    def __hash__(self):
        return hash((self.z, self.r))

    def __repr__(self):
        return f"H3Point({self.z!r}, {self.r!r})"


# ------------------------------------------------------------- action --

def act(g, Z, check: bool = True) -> SiegelPoint:
    """(AZ + B)(CZ + D)^{-1} for a similitude with positive factor."""
    M = _mat(g)
    if check:
        lam = g.similitude if isinstance(g, GSpElement) else similitude(M)
        if lam is None or qreal_sign(lam) <= 0:
            raise InputError("only similitudes with positive factor act on the Siegel space")
    A, B, C, D = M.blocks()
    Zm = _Z(Z)
    den = C * Zm + D
    if den.det() == 0:
        raise InvariantError("CZ + D is singular")
    return SiegelPoint((A * Zm + B) * den.inv())


def hat_point(Z, C: Constants) -> SiegelPoint:
    """beta conj(Z) beta^{-t}."""
    return SiegelPoint(C.beta * _Z(Z).conj() * C.beta.T.inv())


def is_gamma_real(Z, gamma, C: Constants) -> bool:
    return hat_point(Z, C).Z == act(gamma, Z).Z


# ------------------------------------------------- Q(sqrt d) scalars --

def qd(x, y, C: Constants):
    """x + y*sqrt(d) as an exact complex scalar."""
    if y == 0:
        return _rat(x)
    return QComplex(Fraction(x), Fraction(y) * C.sqrt_p)


def _rat(x):
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


def qd_parts(z, C: Constants):
    """(x, y) rational with z = x + y*sqrt(d); InputError if z is not in Q(sqrt d)."""
    x, yi = re(z), im(z)
    if not is_rational(x):
        raise InputError(f"{z!r} has an irrational real part")
    if yi == 0:
        return _rat(x), 0
    if C.p == 1:
        if not is_rational(yi):
            raise InputError(f"{z!r} is not in Q(i)")
        return _rat(x), _rat(yi)
    if not isinstance(yi, QReal) or yi.a != 0 or yi.p != C.p:
        raise InputError(f"{z!r} is not in Q(sqrt {C.d})")
    return _rat(x), _rat(yi.b)


def sl2_matrix(entries, C: Constants) -> Mat:
    """Build and validate a determinant-one 2x2 matrix over Q(sqrt d).

    ``entries`` is a 2x2 grid of scalars or of (x, y) pairs."""
    rows = []
    for r in entries:
        row = []
        for e in r:
            if isinstance(e, tuple):
                e = qd(e[0], e[1], C)
            qd_parts(e, C)
            row.append(e)
        rows.append(row)
    h = Mat(rows)
    if h.shape != (2, 2) or h.det() != 1:
        raise InputError("SL(2) element must be 2x2 with determinant 1")
    return h


# --------------------------------------------------------- embeddings --

def phi_point(w: H3Point, C: Constants) -> SiegelPoint:
    """sigma ((z, r), (r, d conj z)) sigma^t."""
    W = Mat([[w.z, w.r], [w.r, conj(w.z) * C.d]])
    return SiegelPoint(C.sigma * W * C.sigma.T)


def phi_point_inverse(Z, C: Constants):
    """The H3Point w with phi_point(w) = Z, or None if Z is off the image."""
    Si = C.sigma.inv()
    W = Si * _Z(Z) * Si.T
    r = W[0, 1]
    if isinstance(r, QComplex) or W[1, 1] != conj(W[0, 0]) * C.d:
        return None
    if qreal_sign(im(W[0, 0])) <= 0:
        return None
    return H3Point(W[0, 0], r)


def in_phi_image(Z, C: Constants) -> bool:
    return phi_point_inverse(Z, C) is not None


def _phi_raw(h: Mat, C: Constants) -> Mat:
    (a1, b1), (a2, b2) = (qd_parts(h[0, 0], C), qd_parts(h[0, 1], C))
    (a3, b3), (a4, b4) = (qd_parts(h[1, 0], C), qd_parts(h[1, 1], C))
    d = C.d
    return Mat([
        [a1, b1, b2, a2],
        [b1 * d, a1, a2, b2 * d],
        [b3 * d, a3, a4, b4 * d],
        [a3, b3, b4, a4],
    ])


def phi_group(h, C: Constants) -> Mat:
    """The 4x4 real symplectic matrix attached to h in SL(2, Q(sqrt d))."""
    h = h if isinstance(h, Mat) else Mat(h)
    if h.det() != 1:
        raise InputError("phi is defined on determinant-one matrices")
    return C.Mmat * _phi_raw(h, C) * C.Mmat.inv()


def phi_inverse(g, C: Constants):
    """h with phi_group(h) = g, or None when g is not phi of a matrix over Q(sqrt d)."""
    g = _mat(g)
    if hat(g, C) != g:
        return None
    G = C.Mmat.inv() * g * C.Mmat
    if not all(is_rational(x) for r in G.rows for x in r):
        return None
    a1, b1, b2, a2 = G.row(0)
    a3, b3, b4, a4 = G[3, 0], G[3, 1], G[3, 2], G[3, 3]
    h = Mat([[qd(a1, b1, C), qd(a2, b2, C)], [qd(a3, b3, C), qd(a4, b4, C)]])
    if _phi_raw(h, C) != G or h.det() != 1:
        raise InvariantError("hat-fixed matrix does not have the phi block pattern")
    return h


def h3_act(h, w: H3Point, C: Constants) -> H3Point:
    """The SL(2, C) action on H_3 transported through phi."""
    out = phi_point_inverse(act(phi_group(h, C), phi_point(w, C), check=False), C)
    if out is None:
        raise InvariantError("phi(h) moved a point off phi(H_3)")
    return out

