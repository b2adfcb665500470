"""Command-line entry point: ``fiberfield <command> [input.json] [options]``.

Reports are deterministic JSON on standard output.  Exit codes: 0 success,
2 construction not implemented (including hyperbolic V), 1 error.
"""

import argparse
import sys

import mpmath

from . import io
from .classifier import (X_FIBER_RATIONALE, EllipticCurve, classify, elliptic_x_fiber_decision,
                         elliptic_y_fiber_decision)
from .errors import ConstructionNotImplemented, FiberFieldError, UsageError, ValidationError
from .exact import INF
from .orbit import fiber_track, log_height
from .ramification import portrait
from .semiconj import PartialConstruction, construct_pair, verify_semiconjugacy

EXIT_OK, EXIT_ERROR, EXIT_NOT_IMPLEMENTED = 0, 1, 2

DECISION_TEXT = {
    True: "yes: infinitely many fibers of V over the base field lie in one number field",
    False: "no: only finitely many fibers of V over the base field share a number field",
}

# y-values above this height are summarized instead of printed
MAX_PRINTED_BITS = 4096


def _point(pc):
    return str(pc)


def _orbifold(O):
    return [{"point": _point(pc), "weight": nu} for pc, nu in O.points]


def _num(x, digits=6):
    return mpmath.nstr(x, digits, min_fixed=0, max_fixed=0)


def report_portrait(job):
    V = job.functions["V"]
    P = portrait(V)
    return {"command": "portrait", "degree": P.map_degree,
            "riemann_hurwitz_total": P.riemann_hurwitz_total(),
            "classes": [{"point": _point(c.point), "kind": c.kind,
                         "local_degrees": list(c.local_degrees)} for c in P.classes]}


def report_classify(job):
    c = classify(job.functions["V"])
    return {"command": "classify", "signature": list(c.signature), "chi": io.format_rational(c.chi),
            "signature_class": str(c.signature_class), "geometry": c.signature_class.geometry,
            "genus_bucket": c.genus_bucket, "decision": "yes" if c.decision else "no",
            "statement": DECISION_TEXT[c.decision], "orbifold": _orbifold(c.orbifold)}


def certificate_report(cert):
    return {"A": io.format_ratfunc(cert.A), "B": io.format_ratfunc(cert.B),
            "V": io.format_ratfunc(cert.V),
            "identity_checked": cert.identity_checked,
            "degrees_coprime": cert.degrees_coprime,
            "spot_check": [{"y0": io.format_rational(s.y0), "fiber_size": s.fiber_size,
                            "distinct_images": s.distinct_images,
                            "max_residual": _num(s.max_residual, 4), "ok": s.ok}
                           for s in cert.bijectivity_spot_check],
            "notes": {k: str(v) for k, v in sorted(cert.notes.items())}}


def report_semiconj(job):
    V = job.functions["V"]
    out = {"command": "semiconj"}
    if io.format_field(V.field):
        out["field"] = io.format_field(V.field)
    res = construct_pair(V, job.parameters.get("m"))
    if isinstance(res, PartialConstruction):
        out.update({"partial": True, "A": io.format_ratfunc(res.A), "B": None, "m": res.m,
                    "signature_class": str(res.signature_class), "note": res.note})
        return out
    out["certificate"] = certificate_report(res)
    return out


def report_verify(job):
    f = job.functions
    cert = verify_semiconjugacy(f["A"], f["V"], f["B"])
    return {"command": "verify", "certificate": certificate_report(cert)}


def _y_summary(y):
    if y is INF:
        return "oo"
    if y.is_rational():
        if log_height(y) <= MAX_PRINTED_BITS:
            return io.format_element(y)
        return f"<rational of height {int(log_height(y))} bits>"
    return io.format_element(y)


def report_orbit(job):
    f = job.functions
    p = job.parameters
    steps = p.get("steps", p.get("n", 10))
    bits = p.get("precision_bits", 256)
    if bits < 128:
        raise ValidationError("precision_bits must be at least 128")
    y0 = p.get("seed", 1)
    K = f["V"].field
    tr = fiber_track(f["V"], f["A"], f["B"], K.element(y0), steps, bits)
    return {"command": "orbit", "steps": steps, "precision_bits": bits,
            "seed": io.format_rational(y0), "all_bijective": tr.all_bijective,
            "max_residual": _num(tr.max_residual, 4),
            "tolerance": f"2^-{bits // 2}",
            "exceptional_steps": tr.exceptional_steps,
            "trace": [{"step": i, "y": _y_summary(tr.y_values[i]),
                       "fiber_size": len(tr.fibers[i]),
                       "bijective": tr.bijective_flags[i] if i < steps else None,
                       "residual": _num(tr.transport_residuals[i], 4) if i < steps else None}
                      for i in range(steps + 1)]}


def report_elliptic(job):
    p = job.parameters
    E = EllipticCurve(p["a"], p["b"])
    yes_y, witness = elliptic_y_fiber_decision(E)
    return {"command": "elliptic", "a": io.format_rational(p["a"]), "b": io.format_rational(p["b"]),
            "y_fibers": {"decision": "yes" if yes_y else "no", "orbifold": _orbifold(witness),
                         "signature": list(witness.signature())},
            "x_fibers": {"decision": "yes" if elliptic_x_fiber_decision(E) else "no",
                         "rationale": X_FIBER_RATIONALE}}


HANDLERS = {
    "portrait": report_portrait,
    "classify": report_classify,
    "semiconj": report_semiconj,
    "verify": report_verify,
    "orbit": report_orbit,
    "elliptic": report_elliptic,
}


def run(job):
    """(report dict, exit code)."""
    io.validate(job)
    try:
        return HANDLERS[job.command](job), EXIT_OK
    except ConstructionNotImplemented as e:
        sc = e.signature_class
        return {"command": job.command, "verdict": "construction not implemented",
                "signature_class": str(sc), "geometry": getattr(sc, "geometry", None),
                "reason": e.reason}, EXIT_NOT_IMPLEMENTED


def build_parser():
    ap = argparse.ArgumentParser(prog="fiberfield", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    for name in io.COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("input", nargs="?", default=None,
                        help="job file (JSON); '-' or omitted reads standard input")
        if name == "semiconj":
            sp.add_argument("--m", type=int)
        if name == "orbit":
            sp.add_argument("--steps", type=int)
            sp.add_argument("--precision", type=int, dest="precision_bits")
            sp.add_argument("--seed")
        if name == "elliptic":
            sp.add_argument("--a")
            sp.add_argument("--b")
    return ap


def _overrides(args):
    out = {}
    for k in ("m", "steps", "precision_bits"):
        v = getattr(args, k, None)
        if v is not None:
            out[k] = v
    for k in ("seed", "a", "b"):
        v = getattr(args, k, None)
        if v is not None:
            out[k] = io.parse_rational(v, f"--{k}")
    return out


def _load_job(args, stdin):
    over = _overrides(args)
    if args.command == "elliptic" and args.input is None and "a" in over and "b" in over:
        return io.JobSpec("elliptic", parameters=over)
    text = stdin.read() if args.input in (None, "-") else open(args.input).read()
    job = io.parse_input(text, over)
    if job.command != args.command:
        raise UsageError(f"input declares command {job.command!r}, invoked as {args.command!r}")
    return job


def main(argv=None, stdout=None, stderr=None, stdin=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    args = build_parser().parse_args(argv)
    try:
        job = _load_job(args, stdin)
        report, code = run(job)
    except FiberFieldError as e:
        stderr.write(io.dump_report({"error": {"type": type(e).__name__, "module": e.module,
                                               "message": str(e)}}))
        return EXIT_ERROR
    except OSError as e:
        stderr.write(io.dump_report({"error": {"type": "OSError", "module": "cli",
                                               "message": str(e)}}))
        return EXIT_ERROR
    stdout.write(io.dump_report(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
