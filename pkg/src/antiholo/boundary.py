"""
The standard 1-dimensional boundary component: the parabolic P1, its
Hermitian projection nu_h, the pairing p = tilde(g)^{-1} L_beta gamma g, and
replayable residue certificates showing the boundary carries no real points.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from .arith import Mat
from .errors import InputError
from .symgroup import Constants, _mat, is_sp4z, similitude, sp4_inverse, tilde

# zero entries of P1, 0-indexed (row, col)
P1_ZEROS = ((0, 1), (2, 1), (3, 0), (3, 1), (3, 2))

EXCLUDED_PARITY = "parity"
EXCLUDED_DETERMINANT = "determinant"
EXCLUDED_CONGRUENCE = "congruence"
EXCLUDED_COLUMN = "column"

CONDITIONAL_NOTE = "conditional on the reduction step"


def in_p1(g) -> bool:
    M = _mat(g)
    return M.shape == (4, 4) and all(M[i, j] == 0 for i, j in P1_ZEROS)


def nu_h(p) -> Mat:
    """((p11, p13), (p31, p33))."""
    M = _mat(p)
    if not in_p1(M):
        raise InputError("nu_h is only defined on P1")
    return Mat([[M[0, 0], M[0, 2]], [M[2, 0], M[2, 2]]])


@dataclass(frozen=True)
class BoundaryPairing:
    p: Mat
    in_P1: bool
    p_h: Mat
    det_ph: object


def pairing_matrix(g, gamma, C: Constants) -> Mat:
    g, gamma = _mat(g), _mat(gamma)
    return sp4_inverse(tilde(g)) * C.Lbeta * gamma * g


def boundary_pairing(g, gamma, C: Constants) -> BoundaryPairing:
    g, gamma = _mat(g), _mat(gamma)
    if not (is_sp4z(g) and is_sp4z(gamma)):
        raise InputError("g and gamma must be integral symplectic")
    p = pairing_matrix(g, gamma, C)
    # p_h is read off the same four entries whether or not p lies in P1
    ph = Mat([[p[0, 0], p[0, 2]], [p[2, 0], p[2, 2]]])
    return BoundaryPairing(p, in_p1(p), ph, ph.det())


def q_matrix(g, C: Constants) -> Mat:
    """tilde(g)^{-1} L_beta g; its (1,3) and (3,1) entries vanish identically."""
    return pairing_matrix(g, Mat.identity(4), C)


def q_offdiag_vanish(g, C: Constants) -> bool:
    q = q_matrix(g, C)
    return q[0, 2] == 0 and q[2, 0] == 0


def p_similitude(p):
    return similitude(_mat(p))


# ------------------------------------------------------------ certificates --

@dataclass(frozen=True)
class ImpossibilityCertificate:
    d: int
    N: int
    modulus: int
    cases: tuple
    conclusion: bool
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "d": self.d,
            "N": self.N,
            "modulus": self.modulus,
            "cases": [{"residues": list(r), "excluded_by": tag} for r, tag in self.cases],
            "conclusion": self.conclusion,
        }
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "ImpossibilityCertificate":
        try:
            cases = tuple((tuple(c["residues"]), c["excluded_by"]) for c in obj["cases"])
            return cls(int(obj["d"]), int(obj["N"]), int(obj["modulus"]), cases,
                       bool(obj["conclusion"]), obj.get("note", ""))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed certificate: {e}") from None


def _tag_hermitian(d: int, p11: int, p13: int, p31: int, one_mod_four: bool):
    """Why (p11, p13, p31) mod 4 cannot be the Hermitian part; None if it could."""
    if p13 % 2 or p31 % 2:
        return EXCLUDED_PARITY
    if one_mod_four and p11 % 2 == 0:
        # p = I mod 2 forces p11 odd
        return EXCLUDED_PARITY
    if (p11 * p11 - p13 * p31 - (-d)) % 4:
        return EXCLUDED_DETERMINANT
    return None


def _tag_column(N: int, a2: int, a4: int, c2: int, c4: int, e2: int):
    """The d = -1 terminal step: A alpha = -beta A and C alpha = beta C mod N on the second column."""
    ok = ((e2 * a2 + a4) % N == 0 and (e2 * a4 - a2) % N == 0
          and (e2 * c2 - c4) % N == 0 and (e2 * c4 + c2) % N == 0)
    if not ok:
        return EXCLUDED_CONGRUENCE
    # the relations force 2 * column = 0 mod N, so N/2 divides every entry and the
    # column cannot be primitive once N/2 >= 2
    half = N // 2
    if all(x % half == 0 for x in (a2, a4, c2, c4)) and half >= 2:
        return EXCLUDED_COLUMN
    return None


def check_certificate_hypotheses(d: int, N: int):
    if d % 4 == 1:
        if N % 4:
            raise InputError("d = 1 mod 4 needs 4 | N")
    elif d == -2:
        if N % 2:
            raise InputError("d = -2 needs N even")
    elif d == -1:
        if N % 2 or N < 4:
            raise InputError("d = -1 needs N even and N >= 4")
    else:
        raise InputError(f"no boundary certificate for d = {d}")


def no_real_boundary_certificate(d: int, N: int) -> ImpossibilityCertificate:
    check_certificate_hypotheses(d, N)
    cases = []
    if d == -1:
        for a2, a4, c2, c4 in product(range(N), repeat=4):
            for e2 in (1, -1):
                cases.append(((a2, a4, c2, c4, e2), _tag_column(N, a2, a4, c2, c4, e2)))
        modulus, note = N, CONDITIONAL_NOTE
    else:
        one = d % 4 == 1
        for r in product(range(4), repeat=3):
            cases.append((r, _tag_hermitian(d, *r, one)))
        modulus, note = 4, ""
    conclusion = all(tag is not None for _, tag in cases)
    return ImpossibilityCertificate(d, N, modulus, tuple(cases), conclusion, note)


def replay_certificate(cert) -> bool:
    """Independently re-derive every tag and check the table is the full residue product."""
    if isinstance(cert, dict):
        cert = ImpossibilityCertificate.from_json(cert)
    d, N, m = cert.d, cert.N, cert.modulus
    try:
        check_certificate_hypotheses(d, N)
    except InputError:
        return False
    if d == -1:
        if m != N:
            return False
        expected = {(a2, a4, c2, c4, e2) for a2, a4, c2, c4 in product(range(N), repeat=4)
                    for e2 in (1, -1)}
    else:
        if m != 4:
            return False
        expected = set(product(range(4), repeat=3))
    seen = [r for r, _ in cert.cases]
    if len(seen) != len(expected) or set(seen) != expected:
        return False
    for r, tag in cert.cases:
        if tag is None or tag != _replay_tag(d, N, r):
            return False
    return cert.conclusion is True


def _replay_tag(d: int, N: int, r):
    # second implementation of the tags, written against the raw relations
    if d == -1:
        a2, a4, c2, c4, e2 = r
        A = Mat([[0, a2], [0, a4]])
        Cc = Mat([[0, c2], [0, c4]])
        beta = Mat([[0, 1], [-1, 0]])
        alpha_col = Mat([[0, 0], [0, e2]])
        lhsA, rhsA = A * alpha_col, -(beta * A)
        lhsC, rhsC = Cc * alpha_col, beta * Cc
        if any((lhsA[i, 1] - rhsA[i, 1]) % N or (lhsC[i, 1] - rhsC[i, 1]) % N for i in (0, 1)):
            return EXCLUDED_CONGRUENCE
        g = N
        for x in (a2, a4, c2, c4):
            g = gcd(g, x)
        return EXCLUDED_COLUMN if g > 1 else None
    p11, p13, p31 = r
    if p13 % 2 == 1 or p31 % 2 == 1 or (d % 4 == 1 and p11 % 2 == 0):
        return EXCLUDED_PARITY
    return EXCLUDED_DETERMINANT if (p11 ** 2 - p13 * p31 + d) % 4 != 0 else None
