"""
Sp(4) / GSp(4) machinery: the fixed constant matrices attached to d, the
three involutions and congruence-subgroup membership.

Matrices are plain :class:`Mat` objects throughout; :class:`GSpElement`
only pairs one with its similitude factor for callers that want it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import Mat, QComplex, sqrt_p, _squarefree
from .errors import InputError, InvariantError

PID_LIST = (-1, -2, -3, -7, -11, -19, -43, -67, -163)

GAMMA_PLAIN = "GammaN_plain"
GAMMA_HAT = "GammaN_hat"
GAMMA_TILDE = "GammaN_tilde"
KINDS = (GAMMA_PLAIN, GAMMA_HAT, GAMMA_TILDE)

I2 = Mat.identity(2)
I4 = Mat.identity(4)
Z2 = Mat.zeros(2)
J = Mat.from_blocks(Z2, I2, -I2, Z2)
IMINUS = Mat.diag(1, 1, -1, -1)
J2 = Mat([[0, 1], [-1, 0]])
IUNIT = QComplex(0, 1)


def is_squarefree(n: int) -> bool:
    n = abs(n)
    return n == 1 or _squarefree(n)


def block_diag(A: Mat, D: Mat) -> Mat:
    return Mat.from_blocks(A, Mat.zeros(2), Mat.zeros(2), D)


def _mat(g):
    return g.mat if isinstance(g, GSpElement) else g


def similitude(g):
    """lambda with g J g^t = lambda J, or None if g is not a similitude."""
    g = _mat(g)
    if g.shape != (4, 4):
        return None
    P = g * J * g.T
    lam = P[0, 2]
    if lam == 0 or P != J * lam:
        return None
    return lam


def sp4_check(g):
    """(is symplectic, similitude factor or None)."""
    lam = similitude(g)
    return lam == 1, lam


@dataclass(frozen=True)
class GSpElement:
    mat: Mat
    similitude: object

    @classmethod
    def of(cls, g):
        if isinstance(g, GSpElement):
            return g
        if not isinstance(g, Mat):
            g = Mat(g)
        lam = similitude(g)
        if lam is None:
            raise InputError("matrix is not a symplectic similitude")
        return cls(g, lam)

    @property
    def is_symplectic(self) -> bool:
        return self.similitude == 1

    def __mul__(self, other):
        return GSpElement(self.mat * other.mat, self.similitude * other.similitude)


# ----------------------------------------------------------- constants --

@dataclass(frozen=True)
class Constants:
    """The fixed matrices determined by d (everything else is built on these)."""
    d: int
    p: int
    m: int | None
    beta: Mat
    Nbeta: Mat
    sigma: Mat
    Mmat: Mat
    tau: Mat
    Tmat: Mat
    Lbeta: Mat
    J: Mat
    Iminus: Mat
    u0: Mat
    j2: Mat
    e0: Mat
    e1: Mat

    @property
    def one_mod_four(self) -> bool:
        return self.d % 4 == 1

    @property
    def sqrt_p(self):
        return sqrt_p(self.p)

    @property
    def sqrt_d(self):
        """sqrt(d) = i*sqrt(p) as a complex scalar."""
        return QComplex(0, sqrt_p(self.p))

    @property
    def Nbeta_T(self) -> Mat:
        return self.Nbeta.T


def _check_d(d) -> int:
    if isinstance(d, bool) or not isinstance(d, int):
        raise InputError(f"d must be an integer, got {d!r}")
    if d >= 0:
        raise InputError(f"d must be negative, got {d}")
    if not is_squarefree(d):
        raise InputError(f"d = {d} is not square-free")
    return d


@lru_cache(maxsize=None)
def make_constants(d: int) -> Constants:
    """Build and verify every constant matrix for the square-free d < 0."""
    d = _check_d(d)
    p = -d
    if d % 4 == 1:
        m = (d - 1) // 4
        sigma = Mat([[2, 0], [-1, 1]])
        beta = Mat([[1, 2], [2 * m, -1]])
        Mmat = block_diag(sigma, sigma.T.inv() * 2)
    else:
        m = None
        sigma = I2
        beta = Mat([[0, 1], [d, 0]])
        Mmat = I4
    Nbeta = block_diag(beta, beta.T)
    Lbeta = block_diag(-beta, beta.T)
    tau = Mat.diag(1, sqrt_p(p))
    Tmat = block_diag(tau, tau.inv())
    e0 = I2 * IUNIT
    # e1 = (M T) . e0, worked out: tau (iI) tau = i diag(1, p), then sigma(.)sigma^t / 2 when d = 1 mod 4
    e1 = Mat.diag(1, p) * IUNIT
    if m is not None:
        e1 = (sigma * e1 * sigma.T).scaled_div(2)
    C = Constants(d=d, p=p, m=m, beta=beta, Nbeta=Nbeta, sigma=sigma, Mmat=Mmat,
                  tau=tau, Tmat=Tmat, Lbeta=Lbeta, J=J, Iminus=IMINUS, u0=J2, j2=J2,
                  e0=e0, e1=e1)
    verify_constants(C)
    return C


def verify_constants(C: Constants) -> dict:
    """Check every identity the constants must satisfy; returns the named results."""
    d = C.d
    X = Mat([[0, 1], [d, 0]])
    MT = C.Mmat * C.Tmat
    A, B, Cc, D = MT.blocks()
    e1_direct = (A * C.e0 + B) * (Cc * C.e0 + D).inv()
    checks = {
        "beta_sq": C.beta * C.beta == I2 * d,
        "Nbeta_sq": C.Nbeta * C.Nbeta == I4 * d,
        "sigma_conj": C.sigma.inv() * C.beta * C.sigma == X,
        "Lbeta_similitude": C.Lbeta * J * C.Lbeta.T == J * (-d),
        "M_normalizes": C.Mmat.inv() * C.Nbeta * C.Mmat == block_diag(X, X.T),
        "e1_is_MT_e0": e1_direct == C.e1,
        "e1_fixed": C.beta * C.e1.conj() * C.beta.T.inv() == C.e1,
    }
    bad = [k for k, ok in checks.items() if not ok]
    if bad:
        raise InvariantError(f"constants for d={d} fail: {bad}")
    return checks


# ---------------------------------------------------------- group ops --

def sp4_inverse(g):
    """Inverse of a symplectic matrix via ((D^t, -B^t), (-C^t, A^t))."""
    M = _mat(g)
    A, B, C, D = M.blocks()
    inv = Mat.from_blocks(D.T, -B.T, -C.T, A.T)
    return GSpElement(inv, 1) if isinstance(g, GSpElement) else inv


def hat(g, C: Constants):
    """N_beta g N_beta^{-1}."""
    M = _mat(g)
    out = (C.Nbeta * M * C.Nbeta).scaled_div(C.d)
    return GSpElement(out, g.similitude) if isinstance(g, GSpElement) else out


def tilde(g):
    """((A, -B), (-C, D))."""
    M = _mat(g)
    out = IMINUS * M * IMINUS
    return GSpElement(out, g.similitude) if isinstance(g, GSpElement) else out


def bullet(c: Mat) -> Mat:
    """u0 conj(c) u0^{-1} on 2x2 complex matrices."""
    return J2 * c.conj() * (-J2)


def is_unitary(c: Mat) -> bool:
    return c * c.conj().T == I2


def bullet_cocycle(c: Mat) -> bool:
    """c * bullet(c) = I.  On U(2) this forces c to be a scalar e^{i theta}."""
    return c * bullet(c) == I2


# --------------------------------------------------------- congruence --

def in_gamma(g, N: int) -> bool:
    """g = I mod N for an integral matrix; False if g is not integral."""
    M = _mat(g)
    if not M.is_integral():
        return False
    n = M.n
    return all((M[i, j] - (i == j)) % N == 0 for i in range(n) for j in range(n))


def congruence_member(g, N: int, kind: str, C: Constants) -> bool:
    M = _mat(g)
    if not M.is_integral():
        raise InputError("congruence membership needs an integral matrix")
    if N < 1:
        raise InputError("level N must be positive")
    if kind == GAMMA_PLAIN:
        return in_gamma(M, N)
    if kind == GAMMA_HAT:
        return in_gamma(M, N) and in_gamma(hat(M, C), N)
    if kind == GAMMA_TILDE:
        gam = hat(M, C) * sp4_inverse(M)
        return gam.is_integral() and in_gamma(gam, N) and in_gamma(hat(gam, C), N)
    raise InputError(f"unknown congruence kind {kind!r}")


def is_sp4z(g) -> bool:
    M = _mat(g)
    return M.is_integral() and similitude(M) == 1

