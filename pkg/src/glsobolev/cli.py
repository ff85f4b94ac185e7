"""Command-line front end.

Every subcommand parses its arguments, calls one library entry point, and
serializes the result; no numerics happen here.  Exit codes: 0 success,
1 an inequality check failed, 2 bad input, 3 the numerics could not
certify an answer (unconverged quadrature or a divergent norm).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import __version__
from .constants import sharp_constant, sharp_constant_p1, talenti_constant, trace_bounds
from .errors import DivergentIntegralError, DomainError, InputError, QuadratureError
from .exponents import as_exponent_tuple, sobolev_exponent, trace_exponent
from .grand import (
    constant_psi,
    fundamental_function,
    gls_gradient_norm,
    gls_norm,
    morrey_bound,
    modulus_of_continuity,
    power_endpoint_psi,
    tabulated_psi,
    zeta_transform,
)
from .norms import weighted_gradient_norm, weighted_lp_norm
from .profiles import make_profile
from .reports import dumps, exit_status, format_float
from .verify import (
    check_trace_radial,
    default_campaign_config,
    extremal_profile,
    fit_scaling_exponents,
    run_campaign,
)

CONFIG_DIR_ENV = "GLSOBOLEV_CONFIG_DIR"


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise InputError(f"expected comma-separated numbers, got '{text}'") from None


def _parse_profile(text: str):
    name, _, raw = text.partition(":")
    params = _parse_floats(raw) if raw else []
    if name == "extremal":
        if len(params) != 2:
            raise InputError("extremal profile takes two parameters: D,p")
        return extremal_profile(params[0], params[1])
    return make_profile(name, *params)


def _parse_psi(text: str):
    name, _, raw = text.partition(":")
    if name == "constant":
        params = _parse_floats(raw)
        if len(params) == 1:
            return constant_psi(params[0], math.inf)
        if len(params) == 2:
            return constant_psi(params[0], params[1])
        raise InputError("constant psi takes a[,b]")
    if name == "power":
        params = _parse_floats(raw)
        if len(params) != 4:
            raise InputError("power psi takes a,b,alpha,beta")
        return power_endpoint_psi(*params)
    if name == "table":
        nodes, values = [], []
        for pair in raw.split(","):
            try:
                p_str, v_str = pair.split("=")
                nodes.append(float(p_str))
                values.append(float(v_str))
            except ValueError:
                raise InputError(f"bad table entry '{pair}', expected p=value") from None
        return tabulated_psi(nodes, values)
    raise InputError(f"unknown psi spec '{text}'; use constant:, power:, or table:")


def _flatten(obj, prefix: str = "") -> dict:
    flat = {}
    if isinstance(obj, dict):
        for k, v in obj.items():
            key = f"{prefix}.{k}" if prefix else str(k)
            if isinstance(v, dict):
                flat.update(_flatten(v, key))
            elif isinstance(v, list):
                flat[key] = dumps(v)
            else:
                flat[key] = v
    else:
        flat[prefix or "value"] = obj
    return flat


def _pretty_lines(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.extend(_pretty_lines(v, indent + 1))
            else:
                lines.append(f"{pad}{k} = {_pretty_value(v)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_pretty_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_pretty_value(item)}")
    else:
        lines.append(f"{pad}{_pretty_value(obj)}")
    return lines


def _pretty_value(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(dumps(payload))
    elif fmt == "pretty":
        print("\n".join(_pretty_lines(payload)))
    elif fmt == "csv":
        rows = payload if isinstance(payload, list) else [payload]
        flats = [_flatten(r) if isinstance(r, dict) else {"value": r} for r in rows]
        keys = sorted({k for f in flats for k in f})
        print(",".join(keys))
        for f in flats:
            print(",".join(_csv_cell(f.get(k)) for k in keys))
    else:
        raise InputError(f"unknown output format '{fmt}'")


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return format_float(v)
    text = str(v)
    if "," in text or '"' in text:
        text = '"' + text.replace('"', '""') + '"'
    return text


def _cmd_constants(args) -> tuple:
    A = as_exponent_tuple(_parse_floats(args.A))
    D = A.effective_dimension
    payload = {
        "A": list(A.entries),
        "effective-dimension": D,
        "p": args.p,
        "variant": args.variant,
        "C1": sharp_constant_p1(A, variant=args.variant),
        "C": None,
        "q": None,
        "K": None,
        "M": None,
        "Q": None,
    }
    if 1.0 < args.p < D:
        payload["C"] = sharp_constant(A, args.p, variant=args.variant)
        payload["q"] = sobolev_exponent(A, A, args.p)
    m = A.dimension
    if m >= 3 and 1.0 <= args.p < m:
        payload["K"] = talenti_constant(m, args.p)
    if args.B is not None or args.r is not None:
        if args.B is None or args.r is None:
            raise InputError("trace constants need both --B and --r")
        B = as_exponent_tuple(_parse_floats(args.B))
        bounds = trace_bounds(A, B, args.r, args.p)
        payload["M"] = bounds.M
        payload["Q"] = bounds.Q
        payload["trace-q"] = trace_exponent(A, B, args.r, args.p)
    return payload, 0


def _cmd_norm(args) -> tuple:
    u = _parse_profile(args.profile)
    A = _parse_floats(args.A)
    fn = weighted_gradient_norm if args.gradient else weighted_lp_norm
    value, diag = fn(u, A, args.p, rel_tol=args.rel_tol, details=True)
    payload = {
        "profile": u.name,
        "A": A,
        "p": args.p,
        "gradient": bool(args.gradient),
        "value": value,
        "diagnostics": diag.to_dict(),
    }
    return payload, 0 if diag.converged else 3


def _cmd_gls_norm(args) -> tuple:
    u = _parse_profile(args.profile)
    psi = _parse_psi(args.psi)
    A = _parse_floats(args.A)
    fn = gls_gradient_norm if args.gradient else gls_norm
    value, res = fn(u, psi, A, rel_tol=args.rel_tol, details=True)
    payload = {
        "profile": u.name,
        "psi": psi.describe(),
        "A": A,
        "gradient": bool(args.gradient),
        "value": value,
        "argmax": res.argmax,
        "at-boundary": res.at_boundary,
        "diverged": res.diverged,
    }
    return payload, 0


def _cmd_fundamental(args) -> tuple:
    psi = _parse_psi(args.psi)
    payload = []
    for delta in _parse_floats(args.delta):
        value, res = fundamental_function(psi, delta, details=True)
        payload.append({"delta": delta, "value": value, "argmax": res.argmax})
    return payload, 0


def _cmd_zeta(args) -> tuple:
    psi = _parse_psi(args.psi)
    A = _parse_floats(args.A)
    zeta = zeta_transform(psi, A, variant=args.variant)
    values = []
    for q in _parse_floats(args.q):
        values.append({"q": q, "zeta": zeta(q)})
    payload = {
        "support": [zeta.a, zeta.b],
        "A": A,
        "variant": args.variant,
        "values": values,
    }
    return payload, 0


def _cmd_morrey(args) -> tuple:
    u = _parse_profile(args.profile)
    psi = _parse_psi(args.psi)
    A = _parse_floats(args.A)
    payload = []
    for delta in _parse_floats(args.delta):
        bound = morrey_bound(u, psi, A, delta, c2=args.c2)
        entry = {"delta": delta, "bound": bound, "c2": args.c2}
        if args.measure:
            entry["modulus"] = modulus_of_continuity(u, delta)
        payload.append(entry)
    return payload, 0


def _cmd_scaling(args) -> tuple:
    u = _parse_profile(args.profile)
    A = _parse_floats(args.A)
    B = _parse_floats(args.B) if args.B is not None else A
    fit = fit_scaling_exponents(u, A, B, args.p, args.q)
    payload = {
        "profile": u.name,
        "A": A,
        "B": B,
        "p": args.p,
        "slope-lhs": fit.slope_lhs,
        "slope-rhs": fit.slope_rhs,
        "expected-lhs": fit.expected_lhs,
        "expected-rhs": fit.expected_rhs,
        "residual-lhs": fit.residual_lhs,
        "residual-rhs": fit.residual_rhs,
        "max-deviation": fit.max_deviation,
    }
    return payload, 0


def _cmd_trace(args) -> tuple:
    g = _parse_profile(args.profile)
    A = _parse_floats(args.A)
    B = _parse_floats(args.B)
    report = check_trace_radial(g, A, B, args.r, args.p, slack=args.slack)
    return report.to_dict(), exit_status([report])


def _cmd_campaign(args) -> tuple:
    if args.config is not None:
        path = args.config
        base = os.environ.get(CONFIG_DIR_ENV)
        if base and not os.path.isabs(path):
            path = os.path.join(base, path)
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    else:
        cfg = default_campaign_config()
    if args.seed is not None:
        cfg["seed"] = args.seed
    reports = run_campaign(cfg, jsonl_path=args.jsonl, csv_path=args.csv)
    code = exit_status(reports)
    if args.output == "json":
        return [r.to_dict() for r in reports], code
    for rep in reports:
        print(rep.summary_line())
    counts = {"pass": 0, "fail": 0, "inconclusive": 0}
    for rep in reports:
        counts[rep.status] += 1
    print(
        f"{len(reports)} checks: {counts['pass']} pass, "
        f"{counts['fail']} fail, {counts['inconclusive']} inconclusive"
    )
    return None, code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glsobolev",
        description="Sharp weighted Sobolev constants, grand Lebesgue norms, "
        "and numerical inequality verification on radial profiles.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--output", choices=("json", "csv", "pretty"), default="json")
        p.add_argument("--rel-tol", type=float, default=1e-10)

    p = sub.add_parser("constants", help="sharp constants and exponent laws")
    add_common(p)
    p.add_argument("--A", required=True, help="comma-separated weight exponents")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--B", help="trace-side exponents (with --r)")
    p.add_argument("--r", type=int, help="trace subspace dimension")
    p.add_argument("--variant", choices=("corrected", "literal"), default="corrected")

    p = sub.add_parser("norm", help="weighted Lp norm of a radial profile")
    add_common(p)
    p.add_argument("--profile", required=True, help="e.g. bump:1.0,2.0")
    p.add_argument("--A", required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--gradient", action="store_true")

    p = sub.add_parser("gls-norm", help="grand Lebesgue norm")
    add_common(p)
    p.add_argument("--profile", required=True)
    p.add_argument("--psi", required=True, help="constant:a[,b] | power:a,b,alpha,beta | table:p=v,...")
    p.add_argument("--A", required=True)
    p.add_argument("--gradient", action="store_true")

    p = sub.add_parser("fundamental", help="fundamental function of a grand space")
    add_common(p)
    p.add_argument("--psi", required=True)
    p.add_argument("--delta", required=True, help="comma-separated measures")

    p = sub.add_parser("zeta", help="exponent-law transform of a weight")
    add_common(p)
    p.add_argument("--psi", required=True)
    p.add_argument("--A", required=True)
    p.add_argument("--q", required=True, help="comma-separated evaluation points")
    p.add_argument("--variant", choices=("corrected", "literal"), default="corrected")

    p = sub.add_parser("morrey", help="continuity-modulus bound")
    add_common(p)
    p.add_argument("--profile", required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--A", required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--c2", type=float, default=1.0)
    p.add_argument("--measure", action="store_true", help="also sample the modulus")

    p = sub.add_parser("scaling", help="dilation exponents of both sides")
    add_common(p)
    p.add_argument("--profile", required=True)
    p.add_argument("--A", required=True)
    p.add_argument("--B")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--q", type=float)

    p = sub.add_parser("trace", help="radial trace inequality check")
    add_common(p)
    p.add_argument("--profile", required=True)
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--slack", type=float, default=1e-6)

    p = sub.add_parser("campaign", help="run a battery of inequality checks")
    add_common(p)
    p.add_argument("--config", help=f"JSON config (relative paths use ${CONFIG_DIR_ENV})")
    p.add_argument("--seed", type=int)
    p.add_argument("--jsonl", help="write full reports here")
    p.add_argument("--csv", help="write the summary table here")

    return parser


_HANDLERS = {
    "constants": _cmd_constants,
    "norm": _cmd_norm,
    "gls-norm": _cmd_gls_norm,
    "fundamental": _cmd_fundamental,
    "zeta": _cmd_zeta,
    "morrey": _cmd_morrey,
    "scaling": _cmd_scaling,
    "trace": _cmd_trace,
    "campaign": _cmd_campaign,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = _HANDLERS[args.command](args)
    except DivergentIntegralError as exc:
        print(f"divergent: {exc}", file=sys.stderr)
        return 3
    except QuadratureError as exc:
        print(f"not certified: {exc}", file=sys.stderr)
        return 3
    except (DomainError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if payload is not None:
        _emit(payload, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
