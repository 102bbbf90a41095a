"""Command-line front end.

Verbs:
  compute   evaluate one polynomial family or truncated series
  verify    check a single named identity instance
  sweep     check a named identity over parameter ranges, optionally parallel
  selftest  run the full acceptance suite

Output formats: text (human-readable), json (canonical, byte-stable), csv.
Exit codes: 0 all requested verifications pass, 1 any mismatch, 2 usage error.
The environment variable QAG_THREADS (positive integer) caps sweep workers.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import acceptance
from .bressoud import EnumerationTooLarge, b_poly, c_poly
from .coefficients import gaussian_binomial, q_multinomial, q_supernomial
from .gordon import f_poly, g_poly, w_poly
from .identities import (
    ag_identity,
    ag_multisum,
    b2_410,
    conjecture_5_7,
    fqk_identity,
    restricted_product_series,
    supernomial_I,
    variant1_finite,
    variant1_series,
    variant2_finite,
    variant2_series,
    warnaar_identity,
)
from .series import format_poly


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of calling sys.exit, so main() can
    translate every usage problem into exit code 2."""

    def error(self, message):
        raise UsageError(message)


def _canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- parameter parsing ---------------------------------------------------------


def _int_vec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip() != "")
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}")


def _int_range(text: str) -> list[int]:
    """A single integer, or an inclusive range written lo..hi."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise UsageError(f"expected INT or LO..HI, got {text!r}")
        if hi < lo:
            raise UsageError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(text)]
    except ValueError:
        raise UsageError(f"expected INT or LO..HI, got {text!r}")


def _single(name: str, values: list[int] | None) -> int | None:
    if values is None:
        return None
    if len(values) != 1:
        raise UsageError(f"--{name} must be a single integer here, not a range")
    return values[0]


# -- identity registry ---------------------------------------------------------
#
# each entry: required parameter names, plus which optional knobs apply.

IDENTITIES = {
    "AG-1.1": {"required": ("nu", "s", "Q"), "knobs": ()},
    "FQK-1.23": {"required": ("nu", "s", "L"), "knobs": ()},
    "Warnaar-2.22": {"required": ("nu", "s", "b", "L"), "knobs": ()},
    "Variant1-finite-1.31": {"required": ("nu", "M", "L"), "knobs": ()},
    "Variant1-1.32": {"required": ("nu", "M", "Q"), "knobs": ("parity", "n_max")},
    "Variant2-finite-4.6": {"required": ("nu", "s", "b", "M", "L"), "knobs": ()},
    "Variant2-4.9": {"required": ("nu", "s", "M", "Q"), "knobs": ("parity", "n_max")},
    "B2-4.10": {"required": ("nu", "s", "Q"), "knobs": ("n_max",)},
    "Conjecture-5.7": {"required": ("nu", "mvec", "Q"), "knobs": ("parity", "n_max")},
}


def _run_identity(name: str, p: dict):
    if name == "AG-1.1":
        return ag_identity(p["nu"], p["s"], p["Q"])
    if name == "FQK-1.23":
        return fqk_identity(p["nu"], p["s"], p["L"])
    if name == "Warnaar-2.22":
        return warnaar_identity(p["nu"], p["s"], p["b"], p["L"])
    if name == "Variant1-finite-1.31":
        return variant1_finite(p["nu"], p["M"], p["L"])
    if name == "Variant1-1.32":
        return variant1_series(
            p["nu"], p["M"], p["Q"], p["parity_filter"], p["n_max"]
        )
    if name == "Variant2-finite-4.6":
        return variant2_finite(p["nu"], p["s"], p["b"], p["M"], p["L"])
    if name == "Variant2-4.9":
        return variant2_series(
            p["nu"], p["s"], p["M"], p["Q"], p["parity_filter"], p["n_max"]
        )
    if name == "B2-4.10":
        return b2_410(p["nu"], p["s"], p["Q"], p["n_max"])
    if name == "Conjecture-5.7":
        return conjecture_5_7(
            p["nu"], p["mvec"], p["Q"], p["parity_filter"], p["n_max"]
        )
    raise UsageError(f"unknown identity {name!r}")


def _check_identity_name(name: str):
    if name not in IDENTITIES:
        valid = ", ".join(sorted(IDENTITIES))
        raise UsageError(f"unknown identity {name!r}; valid names: {valid}")


# -- report serialization -------------------------------------------------------


def _report_dict(r) -> dict:
    params = {
        k: (list(v) if isinstance(v, tuple) else v) for k, v in r.params.items()
    }
    return {
        "case": r.case,
        "params": params,
        "status": r.status,
        "first_mismatch_order": r.first_mismatch_order,
        "lhs_head": list(r.lhs_head),
        "rhs_head": list(r.rhs_head),
        "runtime_ms": r.runtime_ms,
    }


def _report_text(r) -> str:
    params = " ".join(
        f"{k}={','.join(map(str, v)) if isinstance(v, (tuple, list)) else v}"
        for k, v in sorted(r.params.items())
    )
    head = " ".join(map(str, r.lhs_head))
    if r.passed:
        return f"pass  {r.case}  {params}  head: {head}  ({r.runtime_ms:.1f} ms)"
    rhead = " ".join(map(str, r.rhs_head))
    return (
        f"FAIL  {r.case}  {params}  first mismatch at order "
        f"{r.first_mismatch_order}\n      lhs head: {head}\n      rhs head: {rhead}"
    )


CSV_HEADER = "case,params,status,first_mismatch_order,lhs_head,rhs_head,runtime_ms"


def _report_csv(r) -> str:
    d = _report_dict(r)
    params = _canonical_json(d["params"]).replace('"', '""')
    fmo = "" if d["first_mismatch_order"] is None else d["first_mismatch_order"]
    lhs = " ".join(map(str, d["lhs_head"]))
    rhs = " ".join(map(str, d["rhs_head"]))
    return f'{d["case"]},"{params}",{d["status"]},{fmo},{lhs},{rhs},{d["runtime_ms"]}'


def _emit_reports(reports, fmt: str, out) -> int:
    ok = all(r.passed for r in reports)
    if fmt == "json":
        payload = [_report_dict(r) for r in reports]
        out.write(_canonical_json(payload if len(payload) != 1 else payload[0]) + "\n")
    elif fmt == "csv":
        out.write(CSV_HEADER + "\n")
        for r in reports:
            out.write(_report_csv(r) + "\n")
    else:
        for r in reports:
            out.write(_report_text(r) + "\n")
    return 0 if ok else 1


# -- compute verb ---------------------------------------------------------------

COMPUTE_TARGETS = {
    "qbinom": ("top", "bottom"),
    "qmultinom": ("L", "a", "nu", "p"),
    "qsupernom": ("lvec", "two-a"),
    "cpoly": ("nu", "L", "s", "b"),
    "bpoly": ("nu", "s", "b", "L"),
    "gpoly": ("nu", "L", "s", "b"),
    "wpoly": ("nu", "s", "b", "L"),
    "fpoly": ("nu", "s", "b", "L"),
    "ipoly": ("nu", "s", "b", "lvec"),
    "agsum": ("nu", "s", "Q"),
    "product": ("nu", "s", "Q"),
}


def _compute_value(target: str, p: dict):
    """Returns (kind, value) with kind in {poly, series}."""
    if target == "qbinom":
        return "poly", gaussian_binomial(p["top"], p["bottom"])
    if target == "qmultinom":
        return "poly", q_multinomial(p["L"], p["a"], p["nu"], p["p"])
    if target == "qsupernom":
        return "poly", q_supernomial(p["lvec"], p["two_a"])
    if target == "cpoly":
        return "poly", c_poly(p["nu"], p["L"], p["s"], p["b"])
    if target == "bpoly":
        return "poly", b_poly(p["nu"], p["s"], p["b"], p["L"])
    if target == "gpoly":
        return "poly", g_poly(p["nu"], p["L"], p["s"], p["b"])
    if target == "wpoly":
        return "poly", w_poly(p["nu"], p["s"], p["b"], p["L"])
    if target == "fpoly":
        return "poly", f_poly(p["nu"], p["s"], p["b"], p["L"])
    if target == "ipoly":
        return "poly", supernomial_I(p["nu"], p["s"], p["b"], p["lvec"])
    if target == "agsum":
        return "series", ag_multisum(p["nu"], p["s"], p["Q"])
    if target == "product":
        return "series", restricted_product_series(p["nu"], p["s"], p["Q"])
    raise UsageError(f"unknown compute target {target!r}")


def _emit_compute(target: str, params: dict, kind: str, value, fmt: str, out) -> int:
    if fmt == "text":
        if kind == "poly":
            out.write(format_poly(value) + "\n")
        else:
            head = format_poly(value.to_laurent())
            out.write(f"{head} + O(q^{value.order + 1})\n")
        return 0
    json_params = {
        k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()
    }
    if kind == "poly":
        payload = {
            "target": target,
            "params": json_params,
            "terms": [[e, c] for e, c in sorted(value.items())],
        }
        rows = sorted(value.items())
    else:
        payload = {
            "target": target,
            "params": json_params,
            "order": value.order,
            "coeffs": list(value.coeffs),
        }
        rows = list(enumerate(value.coeffs))
    if fmt == "json":
        out.write(_canonical_json(payload) + "\n")
    else:
        out.write("exponent,coefficient\n")
        for e, c in rows:
            out.write(f"{e},{c}\n")
    return 0


# -- argument plumbing ----------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="agpaths", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="verb")

    pc = sub.add_parser("compute", help="evaluate a polynomial family or series")
    pc.add_argument("target", help="one of: " + ", ".join(sorted(COMPUTE_TARGETS)))
    for flag in ("top", "bottom", "L", "a", "nu", "p", "s", "b", "Q", "two-a"):
        pc.add_argument(f"--{flag}", type=int)
    pc.add_argument("--lvec", type=str, help="comma-separated integers")
    pc.add_argument("--format", choices=("text", "json", "csv"), default="text")

    pv = sub.add_parser("verify", help="check one identity instance")
    pv.add_argument("identity")
    for flag in ("nu", "s", "b", "M", "L", "Q", "n-max"):
        pv.add_argument(f"--{flag}", type=int)
    pv.add_argument("--mvec", type=str, help="comma-separated integers")
    pv.add_argument(
        "--no-parity-filter",
        action="store_true",
        help="include the parity-excluded terms on the bosonic side",
    )
    pv.add_argument("--format", choices=("text", "json", "csv"), default="text")

    ps = sub.add_parser("sweep", help="check an identity over parameter ranges")
    ps.add_argument("identity")
    ps.add_argument("--nu", type=int)
    for flag in ("s", "b", "M", "L", "Q"):
        ps.add_argument(f"--{flag}", type=str, help="INT or inclusive LO..HI")
    ps.add_argument("--n-max", type=int)
    ps.add_argument("--mvec", type=str, help="comma-separated integers")
    ps.add_argument(
        "--mvec-box",
        type=int,
        help="sweep every mvec in the box [0, B]^nu (Conjecture-5.7 only)",
    )
    ps.add_argument("--no-parity-filter", action="store_true")
    ps.add_argument("--format", choices=("text", "json", "csv"), default="text")

    pt = sub.add_parser("selftest", help="run the full acceptance suite")
    pt.add_argument("--format", choices=("text",), default="text")

    return parser


def _collect_params(name: str, supplied: dict) -> dict:
    entry = IDENTITIES[name]
    params: dict = {}
    for key in entry["required"]:
        if supplied.get(key) is None:
            raise UsageError(f"{name} requires --{key}")
        params[key] = supplied[key]
    if "mvec" in params and len(params["mvec"]) != params["nu"]:
        raise UsageError("--mvec must have exactly nu components")
    params["parity_filter"] = not supplied.get("no_parity_filter", False)
    params["n_max"] = supplied.get("n_max")
    if params["parity_filter"] is False and "parity" not in entry["knobs"]:
        raise UsageError(f"{name} has no parity filter to disable")
    if params["n_max"] is not None and "n_max" not in entry["knobs"]:
        raise UsageError(f"{name} does not accept --n-max")
    return params


def _worker_count() -> int:
    raw = os.environ.get("QAG_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        raise UsageError(f"QAG_THREADS must be a positive integer, got {raw!r}")
    return n


def _sweep_cases(name: str, args) -> list[dict]:
    """Expand range-valued flags into the list of single-instance parameter
    dicts, sorted deterministically."""
    entry = IDENTITIES[name]
    ranges: dict[str, list] = {}
    for key in entry["required"]:
        if key == "nu":
            if args.nu is None:
                raise UsageError(f"{name} requires --nu")
            ranges["nu"] = [args.nu]
        elif key == "mvec":
            if args.mvec_box is not None:
                if args.nu is None:
                    raise UsageError("--mvec-box requires --nu")
                box = range(args.mvec_box + 1)
                ranges["mvec"] = [
                    tuple(v) for v in itertools.product(box, repeat=args.nu)
                ]
            elif args.mvec is not None:
                ranges["mvec"] = [_int_vec(args.mvec)]
            else:
                raise UsageError(f"{name} requires --mvec or --mvec-box")
        else:
            raw = getattr(args, key)
            if raw is None:
                raise UsageError(f"{name} requires --{key} (INT or LO..HI)")
            ranges[key] = _int_range(raw)
    if args.mvec_box is not None and "mvec" not in entry["required"]:
        raise UsageError(f"--mvec-box only applies to Conjecture-5.7")
    keys = list(ranges)
    cases = []
    for combo in itertools.product(*(ranges[k] for k in keys)):
        p = dict(zip(keys, combo))
        p["parity_filter"] = not args.no_parity_filter
        p["n_max"] = args.n_max
        if p["parity_filter"] is False and "parity" not in entry["knobs"]:
            raise UsageError(f"{name} has no parity filter to disable")
        if p["n_max"] is not None and "n_max" not in entry["knobs"]:
            raise UsageError(f"{name} does not accept --n-max")
        cases.append(p)
    cases.sort(key=lambda p: _canonical_json({k: list(v) if isinstance(v, tuple) else v for k, v in p.items()}))
    return cases


def _dispatch(args, out) -> int:
    if args.verb == "compute":
        target = args.target
        if target not in COMPUTE_TARGETS:
            valid = ", ".join(sorted(COMPUTE_TARGETS))
            raise UsageError(f"unknown compute target {target!r}; valid: {valid}")
        params = {}
        for flag in COMPUTE_TARGETS[target]:
            attr = flag.replace("-", "_")
            raw = getattr(args, attr)
            if raw is None:
                raise UsageError(f"{target} requires --{flag}")
            params[attr] = _int_vec(raw) if flag == "lvec" else raw
        kind, value = _compute_value(target, params)
        return _emit_compute(target, params, kind, value, args.format, out)

    if args.verb == "verify":
        _check_identity_name(args.identity)
        supplied = {
            k: getattr(args, k)
            for k in ("nu", "s", "b", "M", "L", "Q", "n_max", "no_parity_filter")
        }
        supplied["mvec"] = _int_vec(args.mvec) if args.mvec is not None else None
        params = _collect_params(args.identity, supplied)
        report = _run_identity(args.identity, params)
        return _emit_reports([report], args.format, out)

    if args.verb == "sweep":
        _check_identity_name(args.identity)
        cases = _sweep_cases(args.identity, args)
        workers = _worker_count()
        name = args.identity
        if workers == 1:
            reports = [_run_identity(name, p) for p in cases]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                reports = list(pool.map(lambda p: _run_identity(name, p), cases))
        reports.sort(key=lambda r: (r.case, _canonical_json(_report_dict(r)["params"])))
        return _emit_reports(reports, args.format, out)

    if args.verb == "selftest":
        ok = acceptance.run_all(emit=lambda line: out.write(line + "\n"))
        return 0 if ok else 1

    raise UsageError("missing verb; expected compute, verify, sweep or selftest")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationTooLarge as exc:
        print(
            f"error: {exc}; rerun with a larger cap or a smaller window",
            file=sys.stderr,
        )
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
