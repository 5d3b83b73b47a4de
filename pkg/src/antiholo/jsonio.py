"""
JSON encodings of the exact types.

Rationals are strings ("3", "-2/5"); a + b*sqrt(p) is {"a": .., "b": ..};
complex scalars are {"re": .., "im": ..}; matrices are row-major lists.
Decoding a QReal needs the radicand p, which callers take from d.
"""

from __future__ import annotations

from fractions import Fraction

from .abelian import MarkedSurface
from .arith import Mat, QComplex, QReal, format_rat, parse_rat
from .errors import InputError
from .halfspace import H3Point, SiegelPoint
from .odlattice import OdElem
from .symgroup import make_constants


def enc_scalar(x):
    if isinstance(x, QComplex):
        return {"re": enc_scalar(x.re), "im": enc_scalar(x.im)}
    if isinstance(x, QReal):
        return {"a": format_rat(x.a), "b": format_rat(x.b)}
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return format_rat(x)
    raise TypeError(f"cannot encode {x!r}")


def dec_scalar(obj, p: int = 1):
    try:
        if isinstance(obj, dict):
            if "re" in obj:
                return QComplex._make(dec_scalar(obj["re"], p), dec_scalar(obj.get("im", "0"), p))
            if "a" in obj:
                a, b = parse_rat(obj["a"]), parse_rat(obj.get("b", "0"))
                if b == 0:
                    return a
                return QReal(a, b, p)
            raise InputError(f"unrecognised scalar object {obj!r}")
        return parse_rat(obj)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise InputError(f"bad scalar {obj!r}: {e}") from None


def enc_mat(M: Mat):
    return [[enc_scalar(x) for x in row] for row in M.rows]


def dec_mat(obj, p: int = 1) -> Mat:
    if isinstance(obj, dict) and "mat" in obj:
        obj = obj["mat"]
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise InputError("a matrix is a non-empty list of rows")
    try:
        M = Mat([[dec_scalar(x, p) for x in row] for row in obj])
    except (ValueError, TypeError) as e:
        raise InputError(f"bad matrix: {e}") from None
    if M.shape not in ((2, 2), (4, 4)):
        raise InputError(f"matrices must be 2x2 or 4x4, got {M.shape}")
    return M


def enc_gsp(M: Mat, similitude) -> dict:
    return {"mat": enc_mat(M), "similitude": None if similitude is None else enc_scalar(similitude)}


def enc_siegel(Z) -> dict:
    return {"Z": enc_mat(Z.Z if hasattr(Z, "Z") else Z)}


def dec_siegel(obj, p: int = 1):
    if isinstance(obj, dict) and "Z" in obj:
        obj = obj["Z"]
    return SiegelPoint(dec_mat(obj, p))


def enc_h3(w) -> dict:
    return {"z": enc_scalar(w.z), "r": enc_scalar(w.r)}


def dec_h3(obj, p: int = 1):
    if not isinstance(obj, dict) or "z" not in obj or "r" not in obj:
        raise InputError("an H3 point is {\"z\": .., \"r\": ..}")
    return H3Point(dec_scalar(obj["z"], p), dec_scalar(obj["r"], p))


def enc_od(x) -> dict:
    return {"u": x.u, "v": x.v}


def dec_od(obj, d: int):
    try:
        return OdElem(int(obj["u"]), int(obj["v"]), d)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad O_d element {obj!r}: {e}") from None


def enc_marked(ms) -> dict:
    return {"Z": enc_mat(ms.Z.Z), "gamma": enc_mat(ms.gamma), "N": ms.N, "d": ms.C.d}


def dec_marked(obj):
    try:
        d, N = int(obj["d"]), int(obj["N"])
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad marked surface: {e}") from None
    C = make_constants(d)
    return MarkedSurface(dec_siegel(obj["Z"], C.p), dec_mat(obj["gamma"], C.p), N, C)


def enc_period(pd) -> dict:
    return {"Omega": enc_mat(pd.Omega.Z), "h": enc_mat(pd.h), "kappa": enc_mat(pd.kappa),
            "case": pd.case}
