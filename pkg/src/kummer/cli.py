"""Command-line front end.

    python -m kummer eval --a 1 --b 2 --x 2
    python -m kummer frobenius --offset +1 --a 1 --lambda 0 --N 3 --mode exact
    python -m kummer certify --family P1-lambda0 --a 1/3 --N 64
    python -m kummer verify --identity kummer2 --a 1 --z 1 --tol 1e-10

Exit status is 0 when everything passes, 1 on a verification failure and 2
on a usage or parameter error.  Arguments starting with ``-`` that are not
plain decimals (e.g. ``-1/2``) must be written as ``--a=-1/2``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .closed_forms import ClosedFormFamily, Family, certify_family
from .errors import DomainError, KummerError, PoleParameter
from .frobenius import indicial_roots, ode_residual, reduce_kummer, solve_frobenius
from .identities import IdentityId, verify_identity
from .series import eval_0f1, eval_1f1

SCHEMA_VERSION = "1"
FLOAT_RESIDUAL_TOL = 1e-12


class UsageError(Exception):
    def __init__(self, field_name, message):
        self.field = field_name
        super().__init__(f"{field_name}: {message}")


@dataclass
class RunConfig:
    command: str
    mode: str = "float"
    output: str = "json"
    out: Optional[str] = None
    tol: float = 1e-10
    N: int = 64
    seed: Optional[int] = None
    a: list = field(default_factory=list)
    b: Optional[str] = None
    x: Optional[str] = None
    z: list = field(default_factory=list)
    random_z: int = 0
    offset: int = 0
    lam: str = "0"
    family: Optional[str] = None
    identity: Optional[str] = None

    def validate(self):
        if not self.tol > 0:
            raise UsageError("--tol", "must be positive")
        if self.N < 2:
            raise UsageError("--N", "must be at least 2")
        if self.command == "verify":
            if not self.a:
                raise UsageError("--a", "grid must be non-empty")
            if not self.z and self.random_z <= 0:
                raise UsageError("--z", "grid must be non-empty")
        if self.command in ("frobenius", "certify") and len(self.a) != 1:
            raise UsageError("--a", "exactly one value required")
        if self.command == "certify" and self.mode != "exact":
            raise UsageError("--mode", "certification runs in exact mode only")


def parse_scalar(text: str, exact: bool, name: str):
    """``p/q``, integer or decimal text; exact mode keeps it as a Fraction."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(name, f"cannot parse {text!r} as a rational number") from exc
    if exact:
        return value
    return float(value)


def _scalar_out(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, bool) or isinstance(v, int):
        return v
    if isinstance(v, float):
        if not math.isfinite(v):
            return str(v)
        return float(format(v, ".17g"))
    return v


def _encode(obj):
    if isinstance(obj, dict):
        return {k: _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    return _scalar_out(obj)


def _run_eval(cfg, exact):
    b = parse_scalar(cfg.b, exact, "--b") if cfg.b is not None else None
    x = parse_scalar(cfg.x, exact, "--x") if cfg.x is not None else None
    if b is None or x is None:
        raise UsageError("--b" if b is None else "--x", "required")
    if cfg.a:
        a = parse_scalar(cfg.a[0], exact, "--a")
        res = eval_1f1(a, b, x, cfg.tol, exact)
        entry = {"function": "1F1", "a": a}
    else:
        res = eval_0f1(b, x, cfg.tol, exact)
        entry = {"function": "0F1", "a": None}
    entry.update(
        b=b, x=x, value=res.value, terms_used=res.terms_used,
        last_term_magnitude=res.last_term_magnitude, mode=res.mode,
    )
    return [entry], True


def _run_frobenius(cfg, exact):
    a = parse_scalar(cfg.a[0], exact, "--a")
    ode = reduce_kummer(a, cfg.offset)
    roots = indicial_roots(ode)
    if cfg.lam == "other":
        lam = roots.root_other
    else:
        lam = parse_scalar(cfg.lam, exact, "--lambda")
    try:
        sol = solve_frobenius(ode, lam, cfg.N)
    except ValueError as exc:
        raise UsageError("--lambda", str(exc)) from exc
    residuals = ode_residual(ode, sol)
    if exact:
        ok = all(r == 0 for r in residuals)
    else:
        ok = all(abs(r) <= FLOAT_RESIDUAL_TOL for r in residuals)
    entry = {
        "a": a,
        "offset": cfg.offset,
        "beta": ode.beta,
        "gamma": ode.gamma,
        "delta": ode.delta,
        "root_zero": roots.root_zero,
        "root_other": roots.root_other,
        "integer_gap": roots.integer_gap,
        "lambda": sol.lam,
        "c0": sol.c0,
        "N": sol.N,
        "log_case": sol.log_case,
        "coeffs": list(sol.coeffs),
        "residuals": residuals,
    }
    return [entry], ok


def _run_certify(cfg, exact):
    a = parse_scalar(cfg.a[0], True, "--a")
    try:
        family = Family.parse(cfg.family or "")
    except ValueError as exc:
        raise UsageError("--family", str(exc)) from exc
    cert = certify_family(ClosedFormFamily(family, a), cfg.N)
    entry = {
        "family": family.value,
        "a": a,
        "N": cfg.N,
        "passed": cert.passed,
        "first_mismatch": cert.first_mismatch,
    }
    return [entry], cert.passed


def _z_grid(cfg, exact):
    grid = [parse_scalar(z, exact, "--z") for z in cfg.z]
    if cfg.random_z > 0:
        rng = random.Random(cfg.seed)
        for _ in range(cfg.random_z):
            text = format(round(rng.uniform(-5.0, 5.0), 6), ".6f")
            grid.append(parse_scalar(text, exact, "--random-z"))
    return grid


def _run_verify(cfg, exact):
    try:
        identity = IdentityId(cfg.identity)
    except ValueError as exc:
        raise UsageError("--identity", str(exc)) from exc
    a_grid = [parse_scalar(a, exact, "--a") for a in cfg.a]
    z_grid = _z_grid(cfg, exact)
    report = verify_identity(identity, a_grid, z_grid, cfg.tol, exact)
    results = [
        {
            "identity": identity.value,
            "a": p.a,
            "z": p.z,
            "lhs": p.lhs,
            "rhs": p.rhs,
            "abs_residual": p.abs_residual,
            "rel_residual": p.rel_residual,
            "terms_used": p.terms_used,
            "tol": report.tol,
            "passed": p.passed,
        }
        for p in report.points
    ]
    return results, report.passed


_COMMANDS = {
    "eval": _run_eval,
    "frobenius": _run_frobenius,
    "certify": _run_certify,
    "verify": _run_verify,
}


def run(cfg: RunConfig):
    """Execute ``cfg``; returns ``(exit_status, report)``."""
    cfg.validate()
    exact = cfg.mode == "exact"
    try:
        results, ok = _COMMANDS[cfg.command](cfg, exact)
    except KummerError as exc:
        raise UsageError(_blame(exc), str(exc)) from exc
    config = {
        "mode": cfg.mode,
        "tol": cfg.tol,
        "N": cfg.N,
        "seed": cfg.seed,
        "a": list(cfg.a),
        "b": cfg.b,
        "x": cfg.x,
        "z": list(cfg.z),
        "random_z": cfg.random_z,
        "offset": cfg.offset,
        "lambda": cfg.lam,
        "family": cfg.family,
        "identity": cfg.identity,
    }
    report = {
        "command": cfg.command,
        "config": config,
        "results": _encode(results),
        "verdict": "pass" if ok else "fail",
        "version": SCHEMA_VERSION,
    }
    return (0 if ok else 1), report


def _blame(exc: Exception) -> str:
    if isinstance(exc, PoleParameter):
        return "--b"
    if isinstance(exc, DomainError):
        return "--z"
    return "--a"


def to_json(report) -> str:
    return json.dumps(report, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def _csv_value(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def csv_rows(report) -> list:
    """One row per result; list-valued fields are spread over one row per index."""
    rows = []
    for entry in report["results"]:
        lists = {k: v for k, v in entry.items() if isinstance(v, list)}
        base = {k: v for k, v in entry.items() if k not in lists}
        if not lists:
            rows.append(base)
            continue
        length = max(len(v) for v in lists.values())
        for n in range(length):
            row = dict(base, n=n)
            for k, v in lists.items():
                row[k] = v[n] if n < len(v) else None
            rows.append(row)
    return rows


def to_csv(report) -> str:
    rows = csv_rows(report)
    if not rows:
        return ""
    fields = list(rows[0])
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_value(row.get(k)) for k in fields})
    return buf.getvalue()


def to_text(report) -> str:
    lines = [f"{report['command']}: {report['verdict'].upper()}"]
    for entry in report["results"]:
        lines.append(
            "  " + ", ".join(f"{k}={_csv_value(v)}" for k, v in entry.items()
                             if not isinstance(v, list))
        )
        for k, v in entry.items():
            if isinstance(v, list):
                lines.append(f"    {k}: [" + ", ".join(_csv_value(x) for x in v) + "]")
    return "\n".join(lines) + "\n"


_FORMATTERS = {"json": to_json, "csv": to_csv, "text": to_text}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=["exact", "float"], default=None,
                        help="default: exact for certify, float otherwise")
    common.add_argument("--format", dest="output", choices=sorted(_FORMATTERS), default="json")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--tol", type=float, default=1e-10)
    common.add_argument("--N", type=int, default=64)
    common.add_argument("--seed", type=int, default=None)

    parser = argparse.ArgumentParser(prog="kummer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate 1F1(a;b;x) or 0F1(;b;x)")
    p.add_argument("--a", action="append", default=[], help="omit for 0F1")
    p.add_argument("--b", required=True)
    p.add_argument("--x", required=True)

    p = sub.add_parser("frobenius", parents=[common], help="Frobenius coefficients")
    p.add_argument("--offset", type=int, choices=[-1, 0, 1], required=True)
    p.add_argument("--a", action="append", default=[], required=True)
    p.add_argument("--lambda", dest="lam", default="0", help="a root value, or 'other'")

    p = sub.add_parser("certify", parents=[common], help="certify a closed-form family")
    p.add_argument("--family", required=True,
                   help=", ".join(f.ascii for f in Family))
    p.add_argument("--a", action="append", default=[], required=True)

    p = sub.add_parser("verify", parents=[common], help="verify an identity on a grid")
    p.add_argument("--identity", required=True, choices=[i.value for i in IdentityId])
    p.add_argument("--a", nargs="+", action="extend", default=[])
    p.add_argument("--z", nargs="+", action="extend", default=[])
    p.add_argument("--random-z", type=int, default=0,
                   help="append this many z values drawn uniformly from [-5, 5] using --seed")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    if cfg.mode is None:
        cfg.mode = "exact" if cfg.command == "certify" else "float"
    try:
        status, report = run(cfg)
    except UsageError as exc:
        print(f"kummer {cfg.command}: error: {exc}", file=sys.stderr)
        return 2
    text = _FORMATTERS[cfg.output](report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status
