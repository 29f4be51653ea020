"""Command-line front end.

Subcommands: ``info`` (point counts and Weil data), ``classify`` (branch
decision for a given ell), ``generators`` (randomized search for a verified
torsion basis), ``verify`` (replay a saved basis report), ``selftest``
(classification and generator checks over the checked-in corpus).

All I/O is JSON with exact integers; field elements appear as little-endian
coefficient arrays over the prime field.  Exit codes: 0 success, 2 for the
probabilistic failure output of the generator search, 3 for violated
preconditions, 4 for unreadable input, 5 for internal errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys

from . import __version__
from .corpus import corpus_entries, tiny_entries
from .errors import (
    G2GenError,
    GeneratorSearchFailure,
    InternalInconsistency,
    NonCyclicRational,
    ParseError,
    PreconditionFailed,
    RetriesExhausted,
)
from .jacobian import Curve, MumfordDivisor, curve_new, scalar_mul
from .pairing import PairingContext, make_context
from .torsion import find_generators, frobenius_matrix, verify_basis
from .zeta import (
    char_poly_power,
    classify_curve,
    count_curve_points,
    weil_polynomial,
)

EXIT_OK = 0
EXIT_FAILURE_OUTPUT = 2
EXIT_PRECONDITION = 3
EXIT_PARSE = 4
EXIT_INTERNAL = 5


def _read_curve_file(path):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
        data = json.loads(raw)
        q = data["q"]
        f = data["f"]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"cannot read curve file {path}: {exc}") from exc
    if not isinstance(q, int) or not isinstance(f, list) or len(f) != 6:
        raise ParseError("curve file must hold an integer q and a 6-entry integer array f")
    if not all(isinstance(c, int) for c in f) or f[5] != 1:
        raise ParseError("f must be integer coefficients with f[5] = 1")
    digest = hashlib.sha256(raw).hexdigest()
    return curve_new(q, f), digest


def _resolve_seed(args):
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("G2GEN_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError("G2GEN_SEED must be an integer") from exc
    return random.SystemRandom().randrange(2**63)


def _report(payload, input_hash, seed):
    payload["input_sha256"] = input_hash
    payload["seed"] = seed
    payload["version"] = __version__
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _classification_payload(cls):
    return {
        "in_class": cls.in_class,
        "ell_divides_4tau": cls.ell_divides_4tau,
        "k": cls.k,
        "ell": cls.ell,
        "eigenvalues_mod_ell": list(cls.eigenvalues) if cls.eigenvalues else None,
        "full_torsion_degree": cls.full_torsion_degree,
        "reason": cls.reason,
    }


def cmd_info(args):
    curve, digest = _read_curve_file(args.curve_file)
    P = weil_polynomial(curve)
    payload = {
        "q": curve.q,
        "f": list(curve.f),
        "N1": count_curve_points(curve, 1),
        "N2": count_curve_points(curve, 2),
        "s": P.s,
        "t": P.t,
        "weil_coefficients": list(P.coefficients()),
        "order": P(1),
    }
    if args.ell is not None:
        ell = args.ell
        if P(1) % ell != 0:
            payload["ell"] = ell
            payload["diagnostic"] = "ell does not divide P(1)"
        else:
            cls = classify_curve(curve, ell, P)
            Pk = char_poly_power(P, cls.k) if cls.k > 1 else P
            payload["ell"] = ell
            payload["classification"] = _classification_payload(cls)
            payload["four_tau_k"] = Pk.four_tau
    _report(payload, digest, seed=None)
    return EXIT_OK


def cmd_classify(args):
    curve, digest = _read_curve_file(args.curve_file)
    cls = classify_curve(curve, args.ell)
    payload = {"q": curve.q, "f": list(curve.f), "classification": _classification_payload(cls)}
    if cls.in_class:
        branch = "ell divides 4*tau_k" if cls.ell_divides_4tau else "ell does not divide 4*tau_k"
        payload["summary"] = f"admissible; {branch}; embedding degree {cls.k}"
    else:
        payload["summary"] = f"not admissible ({cls.reason})"
    _report(payload, digest, seed=None)
    return EXIT_OK


def _element_coeffs(x):
    return [list(c.coeffs) for c in x]


def _serialize_point(p):
    return {
        "u": _element_coeffs(p.divisor.u),
        "v": _element_coeffs(p.divisor.v),
        "level": p.level,
    }


def cmd_generators(args):
    curve, digest = _read_curve_file(args.curve_file)
    seed = _resolve_seed(args)
    ctx = make_context(curve, args.ell, ambient_degree=args.ambient_degree)
    rng = random.Random(seed)
    try:
        gs = find_generators(ctx, args.n, rng)
    except GeneratorSearchFailure as exc:
        _report(
            {"q": curve.q, "f": list(curve.f), "ell": args.ell, "failure": str(exc)},
            digest,
            seed,
        )
        return EXIT_FAILURE_OUTPUT
    ok, E = verify_basis(ctx, [p.divisor for p in gs.points], rng)
    payload = {
        "q": curve.q,
        "f": list(curve.f),
        "ell": args.ell,
        "ambient_degree": ctx.field.degree,
        "modulus": [int(c) for c in ctx.field.modulus],
        "points": [_serialize_point(p) for p in gs.points],
        "frobenius_matrix": [list(r) for r in gs.frobenius_matrix],
        "pairing_exponents": [list(r) for r in gs.pairing_exponents],
        "verified": ok,
    }
    _report(payload, digest, seed)
    return EXIT_OK if ok else EXIT_INTERNAL


def _parse_poly(field, coeff_lists):
    return tuple(field.element(c) for c in coeff_lists)


def cmd_verify(args):
    curve, digest = _read_curve_file(args.curve_file)
    try:
        with open(args.report, "r") as fh:
            rep = json.load(fh)
        ell = rep["ell"]
        degree = rep["ambient_degree"]
        raw_points = rep["points"]
        seed = rep.get("seed")
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"cannot read report {args.report}: {exc}") from exc
    ctx = make_context(curve, ell, ambient_degree=degree)
    field = ctx.field
    points = []
    for rp in raw_points:
        u = _parse_poly(field, rp["u"])
        v = _parse_poly(field, rp["v"])
        points.append(MumfordDivisor(field, u, v))
    rng = random.Random(seed if seed is not None else 0)
    for p in points:
        if not scalar_mul(curve, ell, p).is_zero():
            _report({"verified": False, "reason": "point not killed by ell"}, digest, seed)
            return EXIT_PRECONDITION
    ok, E = verify_basis(ctx, points, rng)
    M = frobenius_matrix(ctx, points, rng, E=E) if ok else None
    payload = {
        "verified": ok,
        "pairing_exponents": [list(r) for r in E],
        "frobenius_matrix": [list(r) for r in M] if M else None,
        "matches_report": ok
        and [list(r) for r in E] == rep.get("pairing_exponents")
        and [list(r) for r in M] == rep.get("frobenius_matrix"),
    }
    _report(payload, digest, seed)
    return EXIT_OK if ok else EXIT_PRECONDITION


def cmd_selftest(args):
    seed = _resolve_seed(args)
    rng = random.Random(seed)
    failures = []
    for entry in corpus_entries():
        cls = classify_curve(entry.curve, entry.ell)
        if cls.in_class != entry.in_class:
            failures.append(f"{entry.q}/{entry.f}: classification flipped")
    for entry in tiny_entries()[: args.limit]:
        ctx = make_context(entry.curve, entry.ell)
        try:
            gs = find_generators(ctx, 10, rng)
        except (GeneratorSearchFailure, RetriesExhausted) as exc:
            failures.append(f"{entry.q}/{entry.f}: generator search failed: {exc}")
            continue
        ok, _ = verify_basis(ctx, [p.divisor for p in gs.points], rng)
        if not ok:
            failures.append(f"{entry.q}/{entry.f}: emitted basis is degenerate")
    payload = {"checked": len(corpus_entries()), "failures": failures, "ok": not failures}
    _report(payload, "-", seed)
    return EXIT_OK if not failures else EXIT_INTERNAL


def build_parser():
    parser = argparse.ArgumentParser(prog="g2gen", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="point counts and Weil polynomial data")
    p.add_argument("curve_file")
    p.add_argument("--ell", type=int, default=None)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("classify", help="admissibility and branch decision")
    p.add_argument("curve_file")
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generators", help="search for a verified torsion basis")
    p.add_argument("curve_file")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, default=10, help="search budget per stage")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--ambient-degree", type=int, default=None, dest="ambient_degree")
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("verify", help="replay a saved generator report")
    p.add_argument("curve_file")
    p.add_argument("report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="run corpus checks")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--limit", type=int, default=2, help="generator runs on tiny entries")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionFailed, NonCyclicRational) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except GeneratorSearchFailure as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE_OUTPUT
    except G2GenError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
