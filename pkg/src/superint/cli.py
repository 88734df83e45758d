"""Command-line front end.

Exit status: 0 when every check passes, 1 when a verification mismatches (the report is
still written), 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .algebra import PARAMETERS, ParamScalar, const, var
from .detquotient import ShapeTooLong, andreief_expectation, inverse_expansion, multivariate
from .display import format_scalar
from .models import MP_DEFAULT_MOMENTS, hermite, jacobi, mp, wilson
from .partitions import Partition, parse_partition
from .report import Report
from .silab import alpha_wilson, family_for
from .suites import DEFAULT_SEED, SUITES, archive, run_suite
from .symfun import JackParams, jack, schur

__all__ = ["main", "run", "parse_params", "emit"]

MODEL_ALIASES = {
    "hermite": "gaussian-hermite",
    "gaussian": "gaussian-hermite",
    "gaussian-hermite": "gaussian-hermite",
    "jacobi": "selberg-jacobi",
    "selberg": "selberg-jacobi",
    "selberg-jacobi": "selberg-jacobi",
    "mp": "meixner-pollaczek",
    "meixner-pollaczek": "meixner-pollaczek",
    "wilson": "wilson",
}

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class InputError(ValueError):
    pass


def parse_params(text: Optional[str]) -> Dict[str, object]:
    """``k=v[,k=v...]`` with rationals ``p/q`` or free symbols; ``moments=`` passes through as text."""
    out: Dict[str, object] = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise InputError(f"bad parameter {item!r}: expected key=value")
        key, value = (s.strip() for s in item.split("=", 1))
        if key == "moments":
            out[key] = value
            continue
        if key not in PARAMETERS:
            raise InputError(f"unknown parameter {key!r}")
        if _RATIONAL.match(value):
            out[key] = const(Fraction(value))
        elif value in PARAMETERS:
            out[key] = var(value)
        else:
            raise InputError(f"bad value {value!r} for {key}")
    return out


def _model(name: Optional[str]) -> str:
    if name is None:
        raise InputError("--model is required")
    if name not in MODEL_ALIASES:
        raise InputError(f"unknown model {name!r}")
    return MODEL_ALIASES[name]


def _shape(text: Optional[str], flag: str = "--shape") -> Partition:
    if text is None:
        raise InputError(f"{flag} is required")
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise InputError(f"bad partition {text!r}: {exc}") from None


def _family(model: str, params: dict):
    p = {k: v for k, v in params.items() if k != "moments"}
    if model == "gaussian-hermite":
        return hermite()
    if model == "selberg-jacobi":
        return jacobi(p.get("u"), p.get("v"))
    if model == "meixner-pollaczek":
        return mp(p.get("lam"), p.get("w"))
    return wilson(*(p.get(k) for k in "abcd"))


def _coeff_map(coeffs: Dict[Partition, ParamScalar]) -> Dict[str, str]:
    return {repr(Q): format_scalar(c) for Q, c in sorted(coeffs.items(), reverse=True)}


def _cmd_schur(args, params) -> dict:
    R = _shape(args.shape)
    f = schur(R, args.nv)
    return {"shape": repr(R), "p": _coeff_map(dict(f.terms))}


def _cmd_jack(args, params) -> dict:
    R = _shape(args.shape)
    beta = params.get("beta")
    f = jack(R, JackParams(beta) if beta is not None else JackParams(), args.nv)
    return {"shape": repr(R), "normalization": "P", "p": _coeff_map(dict(f.terms))}


def _nv(args) -> int:
    if args.nv is None:
        raise InputError("--nv is required")
    return args.nv


def _cmd_expand(args, params) -> dict:
    model = _model(args.model)
    R = _shape(args.shape)
    return _coeff_map(multivariate(_family(model, params), R, _nv(args)).coeffs)


def _cmd_coeffs(args, params) -> dict:
    model = _model(args.model)
    R = _shape(args.shape)
    Q = _shape(args.sub, "--sub")
    N = _nv(args)
    F = _family(model, params)
    out = {"R": repr(R), "Q": repr(Q), "N": N,
           "forward": format_scalar(multivariate(F, R, N)[Q]),
           "inverse": format_scalar(inverse_expansion(F, R, N)[Q])}
    if model == "wilson" and R.contains(Q):
        rec = alpha_wilson(R, Q, N, args.seed)
        out["alpha"] = format_scalar(rec.monic)
        out["alpha_constant"] = str(rec.constant)
    return out


def _cmd_moments(args, params) -> dict:
    model = _model(args.model)
    R = _shape(args.shape)
    p = {k: v for k, v in params.items() if k != "moments"}
    F = family_for(model, p, str(params.get("moments", MP_DEFAULT_MOMENTS)))
    return {"value": format_scalar(andreief_expectation(F, R, _nv(args)))}


def _cmd_verify(args, params) -> dict:
    if args.suite is None:
        raise InputError("--suite is required")
    if args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}")
    reports = run_suite(args.suite, args.max_size, args.nv, args.seed, args.variant, params)
    return {"__reports__": reports, "archive": archive(args.suite, reports, args.seed, args.variant)}


COMMANDS = {
    "schur": _cmd_schur,
    "jack": _cmd_jack,
    "expand": _cmd_expand,
    "moments": _cmd_moments,
    "coeffs": _cmd_coeffs,
    "verify": _cmd_verify,
}


HELP = {
    "schur": "Schur function in power sums",
    "jack": "Jack P polynomial in power sums",
    "expand": "multivariate polynomial in the Theta basis",
    "moments": "<Theta_R> from the moment oracle",
    "coeffs": "forward and inverse coefficient (and Wilson alpha)",
    "verify": "run a verification suite",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"superint: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superint", description="Exact multivariate orthogonal polynomial toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, help=HELP[name])
        p.add_argument("--model", help="hermite, jacobi, mp or wilson")
        p.add_argument("--shape", help="partition R, e.g. 3,2,1")
        p.add_argument("--sub", help="sub-partition Q for coeffs")
        p.add_argument("--nv", type=int, help="number of variables N")
        p.add_argument("--params", help="k=v list: rationals p/q or symbols; moments=printed-moments|orthogonal")
        p.add_argument("--max-size", type=int, dest="max_size", help="largest |R| in a suite")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
        p.add_argument("--variant", choices=("paper-literal", "resolved", "sweep"), default="resolved",
                       help="closed form used by the SI suites")
        p.add_argument("--out", help="write the result here instead of stdout")
        if name == "verify":
            p.add_argument("--suite", choices=sorted(SUITES))
    return parser


def _csv_text(rows: List[List[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _scalar_text(x: Optional[dict]) -> str:
    if x is None:
        return ""
    return x["num"] if x["den"] == "1" else f"({x['num']})/({x['den']})"


def emit(result: dict, fmt: str) -> str:
    """Canonical text for a command result."""
    if "archive" in result:
        doc = result["archive"]
        if fmt == "json":
            return json.dumps(doc, indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            rows = [["id", "model", "R", "Q", "N", "lhs", "rhs", "equal", "discrepancy"]]
            for c in doc["cases"]:
                rows.append([c["id"], c["model"], _part_text(c["R"]), _part_text(c["Q"]),
                             "" if c["N"] is None else str(c["N"]), _scalar_text(c["lhs"]), _scalar_text(c["rhs"]),
                             "" if c["equal"] is None else str(c["equal"]).lower(), _scalar_text(c["discrepancy"])])
            return _csv_text(rows)
        return _pretty_reports(doc, result["__reports__"])
    if fmt == "json":
        return json.dumps(result, indent=2, sort_keys=True) + "\n"
    flat = _flatten(result)
    if fmt == "csv":
        return _csv_text([["key", "value"]] + [[k, v] for k, v in flat])
    return "".join(f"{k}: {v}\n" for k, v in flat)


def _part_text(p) -> str:
    return "" if p is None else "[" + ",".join(str(x) for x in p) + "]"


def _flatten(d: dict, prefix: str = ""):
    out = []
    for k in sorted(d):
        v = d[k]
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.extend(_flatten(v, key + "."))
        else:
            out.append((key, str(v)))
    return out


def _pretty_reports(doc: dict, reports: Sequence[Report]) -> str:
    lines = [f"suite {doc['suite']} (seed {doc['seed']}, variant {doc['variant']})"]
    for r in reports:
        mark = {True: "ok  ", False: "FAIL", None: "info"}[r.equal]
        where = " ".join(x for x in (
            f"R={r.R!r}" if r.R is not None else "", f"Q={r.Q!r}" if r.Q is not None else "",
            f"N={r.N}" if r.N is not None else "") if x)
        line = f"{mark} {r.identity} {r.model} {where}"
        if r.equal is False:
            line += f"  lhs={_fmt(r.lhs)} rhs={_fmt(r.rhs)}"
            if r.discrepancy is not None:
                line += f" ratio={format_scalar(r.discrepancy)}"
        lines.append(line.rstrip())
    s = doc["summary"]
    lines.append(f"pass {s['pass']} fail {s['fail']} info {s['info']}")
    return "\n".join(lines) + "\n"


def _fmt(x) -> str:
    return "-" if x is None else format_scalar(x)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        params = parse_params(args.params)
        result = COMMANDS[args.command](args, params)
    except (InputError, ShapeTooLong, KeyError, ValueError) as exc:
        msg = exc.args[0] if exc.args else exc.__class__.__name__
        print(f"superint: error: {msg}", file=sys.stderr)
        return 2
    text = emit(result, args.format)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"superint: error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    if "archive" in result and result["archive"]["summary"]["fail"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())
