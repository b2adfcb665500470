"""Exact JSON job format and report serialization.

A job document::

    {"command": "classify",
     "field": {"minpoly": ["1", "0", "1"], "label": "i"},
     "functions": {"V": {"num": ["0", "0", "0", "-4", "3"], "den": ["1"]}},
     "parameters": {"m": 3}}

Coefficients run from low to high degree and are strings "p/q"; over a
number field of degree k a coefficient may be a list of k coordinate
strings.  Floats are rejected everywhere.
"""

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import NotIrreducibleError, ParseError, UsageError, ValidationError
from .exact import INF, QQ, NFElem, NumberField, Poly, RatFunc

COMMANDS = ("portrait", "classify", "semiconj", "verify", "orbit", "elliptic")
REQUIRED = {
    "portrait": ("V",),
    "classify": ("V",),
    "semiconj": ("V",),
    "verify": ("A", "V", "B"),
    "orbit": ("V", "A", "B"),
    "elliptic": (),
}
INT_PARAMS = ("m", "n", "steps", "precision_bits")
RAT_PARAMS = ("seed", "a", "b")


@dataclass
class JobSpec:
    command: str
    field: NumberField = QQ
    functions: dict = dc_field(default_factory=dict)
    parameters: dict = dc_field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, JobSpec):
            return NotImplemented
        return (self.command == other.command and self.field == other.field
                and self.functions == other.functions and self.parameters == other.parameters)


# ---------------------------------------------------------------------------
# numbers

def parse_rational(x, where):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"expected an exact number string, got {x!r}", where)
    if isinstance(x, int):
        return Fraction(x)
    if not isinstance(x, str):
        raise ParseError(f"expected a number string, got {type(x).__name__}", where)
    s = x.strip()
    try:
        if not s or any(c in s for c in ".eE_ "):
            raise ValueError
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"malformed number {x!r}", where) from None


def format_rational(r):
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def parse_element(x, K, where):
    if isinstance(x, list):
        if len(x) != K.degree:
            raise ParseError(f"expected {K.degree} coordinates, got {len(x)}", where)
        return K.from_coords([parse_rational(c, f"{where}[{i}]") for i, c in enumerate(x)])
    return K.from_rational(parse_rational(x, where))


def format_element(x):
    if x is INF:
        return "oo"
    if isinstance(x, NFElem):
        if x.is_rational():
            return format_rational(x.rational_value())
        return [format_rational(c) for c in x.coords]
    return format_rational(x)


# ---------------------------------------------------------------------------
# fields and functions

def parse_field(spec, where="field"):
    if spec is None:
        return QQ
    if not isinstance(spec, dict) or "minpoly" not in spec:
        raise ParseError("field needs a 'minpoly' list", where)
    mp = spec["minpoly"]
    if not isinstance(mp, list) or len(mp) < 2:
        raise ParseError("minpoly must be a list of at least two coefficients", where)
    coeffs = [parse_rational(c, f"{where}.minpoly[{i}]") for i, c in enumerate(mp)]
    if len(coeffs) == 2:
        return QQ
    label = spec.get("label", "a")
    if not isinstance(label, str):
        raise ParseError("label must be a string", where)
    try:
        return NumberField(coeffs, label=label)
    except NotIrreducibleError as e:
        raise ValidationError(f"{where}: minimal polynomial is not irreducible") from e
    except ValueError as e:
        raise ValidationError(f"{where}: {e}") from e


def format_field(K):
    if K.is_rational:
        return None
    return {"minpoly": [format_rational(c) for c in K.minpoly], "label": K.label}


def parse_poly(x, K, where):
    if not isinstance(x, list) or not x:
        raise ParseError("expected a nonempty coefficient list", where)
    return Poly([parse_element(c, K, f"{where}[{i}]") for i, c in enumerate(x)], K)


def parse_ratfunc(spec, K, where):
    if not isinstance(spec, dict) or "num" not in spec:
        raise ParseError("function needs 'num' (and optionally 'den')", where)
    num = parse_poly(spec["num"], K, f"{where}.num")
    den = parse_poly(spec.get("den", ["1"]), K, f"{where}.den")
    if not den:
        raise ValidationError(f"{where}: denominator is zero")
    return RatFunc(num, den)


def format_poly(p):
    return [format_element(c) for c in p.c] or ["0"]


def format_ratfunc(f):
    return {"num": format_poly(f.num), "den": format_poly(f.den)}


# ---------------------------------------------------------------------------
# jobs

def parse_input(text, overrides=None):
    """Parse and validate a job document; ``overrides`` replaces parameters."""
    if text is None or not text.strip():
        raise ParseError("empty input")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno}, column {e.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    cmd = doc.get("command")
    if cmd not in COMMANDS:
        raise UsageError(f"unknown command {cmd!r}; expected one of {', '.join(COMMANDS)}")
    K = parse_field(doc.get("field"))
    funcs = {}
    raw = doc.get("functions", {})
    if not isinstance(raw, dict):
        raise ParseError("functions must be an object", "functions")
    for name, spec in raw.items():
        funcs[name] = parse_ratfunc(spec, K, f"functions.{name}")
    params = parse_parameters(doc.get("parameters", {}))
    params.update(overrides or {})
    job = JobSpec(cmd, K, funcs, params)
    validate(job)
    return job


def parse_parameters(raw, where="parameters"):
    if not isinstance(raw, dict):
        raise ParseError("parameters must be an object", where)
    out = {}
    for k, v in raw.items():
        if k in INT_PARAMS:
            r = parse_rational(v, f"{where}.{k}")
            if r.denominator != 1:
                raise ValidationError(f"{where}.{k} must be an integer")
            out[k] = int(r)
        elif k in RAT_PARAMS:
            out[k] = parse_rational(v, f"{where}.{k}")
        else:
            raise ValidationError(f"unknown parameter {k!r}")
    return out


def validate(job):
    for name in REQUIRED[job.command]:
        if name not in job.functions:
            raise ValidationError(f"command {job.command!r} needs a function named {name!r}")
    if job.command == "elliptic":
        for k in ("a", "b"):
            if k not in job.parameters:
                raise ValidationError(f"elliptic needs parameter {k!r}")


def serialize_job(job):
    doc = {"command": job.command,
           "functions": {k: format_ratfunc(f) for k, f in job.functions.items()},
           "parameters": {k: (format_rational(v) if isinstance(v, Fraction) else v)
                          for k, v in job.parameters.items()}}
    fs = format_field(job.field)
    if fs is not None:
        doc["field"] = fs
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def dump_report(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
