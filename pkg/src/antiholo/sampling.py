"""
Seeded generators for group elements, points and test instances.

Everything takes an explicit ``random.Random``; nothing reads global entropy.
Sp(4, Z) elements are words in ((I, S), (0, I)), ((I, 0), (S, I)) and
((U, 0), (0, U^-t)) with S symmetric of height <= 2.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .arith import Mat, QComplex
from .boundary import in_p1, pairing_matrix
from .galois import coboundary
from .halfspace import H3Point, SiegelPoint, act, phi_group, phi_point
from .odlattice import OdElem, units
from .symgroup import I2, I4, Constants, block_diag, in_gamma

_UNIPOTENTS = ((1, 1, 0, 1), (1, -1, 0, 1), (1, 0, 1, 1), (1, 0, -1, 1))
_GL2_EXTRA = ((0, 1, -1, 0), (0, 1, 1, 0), (-1, 0, 0, 1))


def make_rng(seed) -> random.Random:
    return random.Random(seed)


def random_symmetric(rng: random.Random, height: int = 2) -> Mat:
    a, b, c = (rng.randint(-height, height) for _ in range(3))
    return Mat([[a, b], [b, c]])


def _level_gl2(rng: random.Random, N: int) -> Mat:
    if N == 1 and rng.random() < 0.3:
        e = rng.choice(_GL2_EXTRA)
    else:
        e = rng.choice(_UNIPOTENTS)
    return Mat([[e[0], e[1] * N], [e[2] * N, e[3]]])


def sp4z_generator(rng: random.Random, N: int = 1, parabolic: bool = False) -> Mat:
    """One generator of Gamma(N); ``parabolic`` keeps the lower-left block zero."""
    kinds = 2 if parabolic else 3
    t = rng.randrange(kinds)
    if t == 0:
        return Mat.from_blocks(I2, random_symmetric(rng) * N, Mat.zeros(2), I2)
    if t == 1:
        U = _level_gl2(rng, N)
        return block_diag(U, U.T.inv())
    return Mat.from_blocks(I2, Mat.zeros(2), random_symmetric(rng) * N, I2)


def random_sp4z_word(rng: random.Random, length: int = 4, N: int = 1,
                     parabolic: bool = False) -> Mat:
    g = I4
    for _ in range(length):
        g = g * sp4z_generator(rng, N, parabolic)
    return g


def gamma_n_word(rng: random.Random, N: int, C: Constants, length: int = 4,
                 parabolic: bool = False) -> Mat:
    """A word in Gamma(N p), which sits inside Gamma_N (hat of it is again = I mod N)."""
    return random_sp4z_word(rng, length, N * C.p, parabolic)


# ---------------------------------------------------------- O_d, SL(2) --

def random_od(rng: random.Random, C: Constants, height: int = 2) -> OdElem:
    a, b = rng.randint(-height, height), rng.randint(-height, height)
    if C.one_mod_four:
        # a + b (1 + sqrt d)/2
        return OdElem(2 * a + b, b, C.d)
    return OdElem(2 * a, 2 * b, C.d)


def random_sl2_od(rng: random.Random, C: Constants, length: int = 3, N: int = 1) -> Mat:
    """A word in elementary matrices over N O_d and diagonal units."""
    h = Mat.identity(2)
    us = units(C.d)
    for _ in range(length):
        x = random_od(rng, C) * N
        s = x.scalar(C)
        t = rng.randrange(3 if N == 1 else 2)
        if t == 0:
            e = Mat([[1, s], [0, 1]])
        elif t == 1:
            e = Mat([[1, 0], [s, 1]])
        else:
            u = rng.choice(us)
            e = Mat([[u.scalar(C), 0], [0, _unit_inverse(u).scalar(C)]])
        h = h * e
    return h


def _unit_inverse(u: OdElem) -> OdElem:
    # units have norm 1 for d < 0, so the inverse is the Galois conjugate
    return OdElem(u.u, -u.v, u.d)


def od_height_matrices(C: Constants, height: int = 2):
    """All 2x2 matrices over O_d with entries a + b w, |a|, |b| <= height, and determinant 1."""
    vals = []
    for a, b in product(range(-height, height + 1), repeat=2):
        x = OdElem(2 * a + b, b, C.d) if C.one_mod_four else OdElem(2 * a, 2 * b, C.d)
        vals.append(x)
    one = OdElem.of(1, C.d)
    for z1, z2, z3 in product(vals, repeat=3):
        for z4 in vals:
            if z1 * z4 - z2 * z3 == one:
                yield Mat([[z1.scalar(C), z2.scalar(C)], [z3.scalar(C), z4.scalar(C)]])


# -------------------------------------------------------------- points --

def _small_rat(rng: random.Random, num: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def _pos_rat(rng: random.Random, num: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(1, num), rng.randint(1, den))


def random_h3_point(rng: random.Random) -> H3Point:
    return H3Point(QComplex(_small_rat(rng), _pos_rat(rng)), _small_rat(rng))


def random_siegel_point(rng: random.Random) -> SiegelPoint:
    """X + iY with X symmetric and Y = L L^t for a rational lower-triangular L."""
    X = Mat([[_small_rat(rng), x12 := _small_rat(rng)], [x12, _small_rat(rng)]])
    l11, l22, l21 = _pos_rat(rng), _pos_rat(rng), _small_rat(rng)
    Y = Mat([[l11 * l11, l11 * l21], [l11 * l21, l21 * l21 + l22 * l22]])
    return SiegelPoint(X + Y * QComplex(0, 1))


# ------------------------------------------------------------- instances --

def seeded_coboundary(rng: random.Random, N: int, C: Constants, length: int = 4):
    """(g0, gamma) with gamma = hat(g0) g0^{-1} in Gamma_N.

    g0 is phi(l1) w phi(l2) with w in Gamma(N p) and l1, l2 in SL(2, O_d); the
    right factor does not change gamma, the left one conjugates it."""
    w = gamma_n_word(rng, N, C, length, parabolic=rng.random() < 0.3)
    g0 = w
    if rng.random() < 0.5:
        g0 = phi_group(random_sl2_od(rng, C, 2), C) * g0
    if rng.random() < 0.5:
        g0 = g0 * phi_group(random_sl2_od(rng, C, 2), C)
    return g0, coboundary(g0, C)


def real_cocycle(rng: random.Random, C: Constants, index: int = 0):
    """A cocycle hat(g) g^{-1}; even indices use parabolic words, which land in the lambda = 0 branch."""
    N = 2 if C.one_mod_four else 1
    g = random_sp4z_word(rng, 4, N * C.p, parabolic=index % 2 == 0)
    return g, coboundary(g, C)


def marked_surface_data(rng: random.Random, N: int, C: Constants):
    """(g0, gamma, Z) with Z = g0 . phi(w) in E_gamma."""
    g0, gamma = seeded_coboundary(rng, N, C)
    Z = act(g0, phi_point(random_h3_point(rng), C), check=False)
    return g0, gamma, Z


def level_instance(rng: random.Random, N: int, C: Constants, compatible: bool):
    """(gamma, Z) from a word in Gamma(N p) (compatible) or in Gamma(p) (usually not)."""
    step = N * C.p if compatible else C.p
    g = random_sp4z_word(rng, 3, step)
    Z = act(g, phi_point(random_h3_point(rng), C), check=False)
    return coboundary(g, C), Z


def p1_instances(C: Constants, bound: int = 2, limit: int | None = None):
    """(g, gamma, p) with gamma = I mod 2 block diagonal and p in P1, by exhaustive small search."""
    out = []
    for v in product(range(-bound, bound + 1), repeat=4):
        V = Mat([[v[0], v[1]], [v[2], v[3]]])
        if abs(V.det()) != 1:
            continue
        g = block_diag(V, V.T.inv())
        for r in product(range(-3, 4), repeat=4):
            R = Mat([[r[0], r[1]], [r[2], r[3]]])
            if abs(R.det()) != 1 or not in_gamma(R, 2):
                continue
            gamma = block_diag(R, R.T.inv())
            p = pairing_matrix(g, gamma, C)
            if in_p1(p):
                out.append((g, gamma, p))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def random_p1_element(rng: random.Random, length: int = 4) -> Mat:
    """A product of P1 generators: Levi pieces, the embedded SL(2) on (1, 3) and scalings."""
    g = I4
    for _ in range(length):
        t = rng.randrange(4)
        if t == 0:
            a = Mat([[rng.choice((1, -1)), 0], [rng.randint(-2, 2), rng.choice((1, -1))]])
            x = block_diag(a, a.T.inv())
        elif t == 1:
            x = Mat.from_blocks(I2, random_symmetric(rng), Mat.zeros(2), I2)
        elif t == 2:
            e = rng.choice(_UNIPOTENTS)
            x = Mat([[e[0], 0, e[1], 0], [0, 1, 0, 0], [e[2], 0, e[3], 0], [0, 0, 0, 1]])
        else:
            lam = rng.choice((2, 3, -1))
            x = Mat.diag(1, 1, lam, lam)
        g = g * x
    return g

