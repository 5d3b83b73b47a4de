"""
antiholo command line.

Every verb reads JSON (``--in`` path, ``-`` for stdin, or an inline JSON
string) and writes JSON to ``--out`` (stdout by default).  Exit status:
0 success or true, 1 false, 2 bad input, 3 failed internal check.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import jsonio as jio
from .abelian import MarkedSurface, comessatti_normal_form, kappa_z, level_compatible
from .arith import ArithmeticDomainError
from .boundary import no_real_boundary_certificate, replay_certificate
from .errors import InputError, InvariantError, SearchExhausted
from .galois import (double_coset_equal_witness, is_cocycle, solve_coboundary_integral,
                     solve_coboundary_real)
from .halfspace import act, phi_group, phi_inverse, phi_point, sl2_matrix
from .sampling import make_rng, marked_surface_data, random_sl2_od, seeded_coboundary
from .symgroup import (KINDS, congruence_member, hat, make_constants, similitude,
                       verify_constants)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

VERBS = ("constants", "check-sp4", "hat", "act", "phi", "phi-inv", "member", "cocycle",
         "solve-real", "solve-integral", "comessatti", "kappa", "level-check", "same-coset",
         "boundary-cert", "gen-tests")


class _Result:
    def __init__(self, payload, ok: bool = True):
        self.payload, self.ok = payload, ok


# ------------------------------------------------------------ helpers --

def _load(arg):
    if arg is None:
        raise InputError("this verb needs --in")
    try:
        if arg == "-":
            return json.load(sys.stdin)
        if os.path.exists(arg):
            with open(arg) as fh:
                return json.load(fh)
        return json.loads(arg)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON: {e}") from None


def _need(args, name):
    v = getattr(args, name)
    if v is None:
        raise InputError(f"this verb needs --{name}")
    return v


def _consts(args, payload=None):
    d = args.d
    if d is None and isinstance(payload, dict) and "d" in payload:
        d = payload["d"]
    if d is None:
        raise InputError("this verb needs --d")
    return make_constants(int(d))


def _field(obj, key):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"input needs a {key!r} field")
    return obj[key]


# -------------------------------------------------------------- verbs --

def cmd_constants(args):
    C = _consts(args)
    out = {"d": C.d, "p": C.p, "m": C.m}
    for name in ("beta", "Nbeta", "sigma", "Mmat", "Lbeta", "J", "Iminus", "u0", "j2",
                 "tau", "Tmat", "e0", "e1"):
        out[name] = jio.enc_mat(getattr(C, name))
    out["checks"] = verify_constants(C)
    return _Result(out)


def cmd_check_sp4(args):
    obj = _load(args.infile)
    p = make_constants(args.d).p if args.d is not None else 1
    g = jio.dec_mat(obj, p)
    lam = similitude(g)
    return _Result({"symplectic": lam == 1, "similitude": None if lam is None else jio.enc_scalar(lam)},
                   lam == 1)


def cmd_hat(args):
    obj = _load(args.infile)
    C = _consts(args, obj)
    g = jio.dec_mat(obj, C.p)
    return _Result({"mat": jio.enc_mat(hat(g, C))})


def cmd_act(args):
    obj = _load(args.infile)
    p = make_constants(args.d).p if args.d is not None else 1
    g = jio.dec_mat(_field(obj, "g"), p)
    Z = jio.dec_siegel(_field(obj, "Z"), p)
    return _Result(jio.enc_siegel(act(g, Z)))


def cmd_phi(args):
    obj = _load(args.infile)
    C = _consts(args, obj)
    if isinstance(obj, dict) and "h" in obj:
        h = sl2_matrix(jio.dec_mat(obj["h"], C.p).rows, C)
        return _Result({"mat": jio.enc_mat(phi_group(h, C))})
    w = jio.dec_h3(obj, C.p)
    return _Result(jio.enc_siegel(phi_point(w, C)))


def cmd_phi_inv(args):
    obj = _load(args.infile)
    C = _consts(args, obj)
    h = phi_inverse(jio.dec_mat(obj, C.p), C)
    if h is None:
        return _Result({"in_image": False}, False)
    return _Result({"in_image": True, "h": jio.enc_mat(h)})


def cmd_member(args):
    obj = _load(args.infile)
    C = _consts(args, obj)
    N = int(_need(args, "N"))
    kind = obj.get("kind", KINDS[1]) if isinstance(obj, dict) else KINDS[1]
    g = jio.dec_mat(obj["g"] if isinstance(obj, dict) and "g" in obj else obj, C.p)
    r = congruence_member(g, N, kind, C)
    return _Result({"member": r, "kind": kind, "N": N}, r)


def cmd_cocycle(args):
    obj = _load(args.infile)
    C = _consts(args, obj)
    r = is_cocycle(jio.dec_mat(obj, C.p), C)
    return _Result({"cocycle": r}, r)


def _witness(W):
    out = {"g": jio.enc_mat(W.g), "gamma": jio.enc_mat(W.gamma), "Z": jio.enc_mat(W.Z.Z),
           "branch": W.branch, "lambda": jio.enc_scalar(W.lam), "certified": W.certified}
    if W.period is not None:
        out["period"] = jio.enc_period(W.period)
    return out


def cmd_solve_real(args):
    obj = _load(args.infile)
    C = _consts(args, obj)
    return _Result(_witness(solve_coboundary_real(jio.dec_mat(obj, C.p), C)))


def cmd_solve_integral(args):
    obj = _load(args.infile)
    C = _consts(args, obj)
    N = int(_need(args, "N"))
    return _Result(_witness(solve_coboundary_integral(jio.dec_mat(obj, C.p), N, C)))


def _marked(args, obj) -> MarkedSurface:
    if isinstance(obj, dict):
        obj = dict(obj)
        if args.d is not None:
            obj.setdefault("d", args.d)
        if args.N is not None:
            obj.setdefault("N", args.N)
    return jio.dec_marked(obj)


def cmd_comessatti(args):
    ms = _marked(args, _load(args.infile))
    return _Result(jio.enc_period(comessatti_normal_form(ms)))


def cmd_kappa(args):
    ms = _marked(args, _load(args.infile))
    km = kappa_z(ms)
    return _Result({"eta": jio.enc_mat(km.eta), "checks": km.checks})


def cmd_level_check(args):
    ms = _marked(args, _load(args.infile))
    r = level_compatible(ms)
    return _Result({"compatible": r, "N": ms.N, "d": ms.d}, r)


def cmd_same_coset(args):
    obj = _load(args.infile)
    C = _consts(args, obj)
    N = int(_need(args, "N"))
    g1, g2, gamma = (jio.dec_mat(_field(obj, k), C.p) for k in ("g1", "g2", "gamma"))
    lam = jio.dec_mat(_field(obj, "lambda"), C.p)
    r = double_coset_equal_witness(g1, g2, gamma, lam, N, C)
    return _Result({"same": r}, r)


def cmd_boundary_cert(args):
    if args.infile is not None:
        r = replay_certificate(_load(args.infile))
        return _Result({"replayed": r}, r)
    d, N = int(_need(args, "d")), int(_need(args, "N"))
    make_constants(d)
    cert = no_real_boundary_certificate(d, N)
    return _Result(cert.to_json(), cert.conclusion)


def gen_tests(d: int, N: int, seed: int, count: int) -> dict:
    C = make_constants(d)
    rng = make_rng(seed)
    bundle = {"d": d, "N": N, "seed": seed, "cocycles": [], "marked_surfaces": [], "lambda_n": []}
    for _ in range(count):
        g0, gamma = seeded_coboundary(rng, N, C)
        if not is_cocycle(gamma, C):
            raise InvariantError("generated gamma is not a cocycle")
        bundle["cocycles"].append({"g0": jio.enc_mat(g0), "gamma": jio.enc_mat(gamma)})
        _, gam2, Z = marked_surface_data(rng, N, C)
        bundle["marked_surfaces"].append(jio.enc_marked(MarkedSurface(Z, gam2, N, C)))
        h = random_sl2_od(rng, C, 3, N)
        if h.det() != 1:
            raise InvariantError("generated Lambda_N element has determinant != 1")
        bundle["lambda_n"].append(jio.enc_mat(h))
    return bundle


def cmd_gen_tests(args):
    d, N = int(_need(args, "d")), int(_need(args, "N"))
    if N < 1:
        raise InputError("N must be positive")
    return _Result(gen_tests(d, N, args.seed, args.count))


HANDLERS = {
    "constants": cmd_constants, "check-sp4": cmd_check_sp4, "hat": cmd_hat, "act": cmd_act,
    "phi": cmd_phi, "phi-inv": cmd_phi_inv, "member": cmd_member, "cocycle": cmd_cocycle,
    "solve-real": cmd_solve_real, "solve-integral": cmd_solve_integral,
    "comessatti": cmd_comessatti, "kappa": cmd_kappa, "level-check": cmd_level_check,
    "same-coset": cmd_same_coset, "boundary-cert": cmd_boundary_cert, "gen-tests": cmd_gen_tests,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="antiholo", description=__doc__.strip().splitlines()[0])
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("--d", type=int)
    ap.add_argument("--N", type=int)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=1)
    ap.add_argument("--in", dest="infile")
    ap.add_argument("--out", default="-")
    return ap


def _emit(payload, dest):
    text = json.dumps(payload, sort_keys=True)
    if dest in (None, "-"):
        print(text)
    else:
        with open(dest, "w") as fh:
            fh.write(text + "\n")


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        res = HANDLERS[args.verb](args)
    except (InputError, ArithmeticDomainError, KeyError, TypeError, ValueError) as e:
        _emit({"error": str(e), "kind": "input"}, "-")
        return EXIT_INPUT
    except (InvariantError, SearchExhausted) as e:
        _emit({"error": str(e), "kind": "internal"}, "-")
        return EXIT_INTERNAL
    _emit(res.payload, args.out)
    return EXIT_OK if res.ok else EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
