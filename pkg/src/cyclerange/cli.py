"""Command-line front end: ``cyclerange <subcommand> [flags]``.

Exit codes: 0 success, 1 a verify-style check failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import math
import os
import sys
from fractions import Fraction
from typing import Sequence

import numpy as np

from .boundary import export_curve, sample_boundary
from .charpoly import build_family
from .errors import ValidationError
from .extremal import (
    find_double_eigenvalue,
    min_frobenius_zero_product,
    min_path_weights,
    regular_ngon_check,
)
from .inclusion import includes, includes_general
from .permsearch import enumerate_classes, family_analysis_n6, find_extreme, verify_conjecture1
from .rng import Xoshiro256
from .spectra import largest_root, numerical_radius, support_max
from .weights import WeightVector, parse_weights

COUNTEREXAMPLE_SQUARES = (0, 3, 4, 8, 13, 30)
COUNTEREXAMPLE_ARRANGEMENTS = ((4, 2, 6, 1, 5, 3), (3, 2, 6, 1, 5, 4))


class CLIError(Exception):
    pass


@contextlib.contextmanager
def _flag(name: str):
    """Re-raise library validation errors tagged with the responsible flag."""
    try:
        yield
    except ValidationError as exc:
        raise CLIError(f"{name}: {exc}") from None


def _weights(name: str, text: str) -> WeightVector:
    with _flag(name):
        return parse_weights(text)


def _clean(x):
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating, Fraction)):
        v = float(x)
        return None if not math.isfinite(v) else v
    return x


def _fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_fmt(x)}" for k, x in v.items()) + "}"
    return str(v)


def _flatten(d, prefix=""):
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict) and v:
            yield from _flatten(v, key + ".")
        else:
            yield key, v


def _emit(out, doc: dict, fmt: str):
    doc = _clean(doc)
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    elif fmt == "csv":
        out.write("key,value\n")
        for k, v in _flatten(doc):
            s = _fmt(v)
            if "," in s:
                s = '"' + s + '"'
            out.write(f"{k},{s}\n")
    else:
        for k, v in _flatten(doc):
            out.write(f"{k}: {_fmt(v)}\n")


# ----------------------------------------------------------------------------
# subcommands

def cmd_charpoly(args, out):
    a = _weights("--weights", args.weights)
    fam = build_family(a)
    _emit(out, {"weights": list(a.a), **fam.to_dict()}, args.format)
    return 0


def cmd_radius(args, out):
    a = _weights("--weights", args.weights)
    _emit(out, {"weights": list(a.a), "radius": numerical_radius(a)}, args.format)
    return 0


def cmd_support(args, out):
    a = _weights("--weights", args.weights)
    if not -1.0 <= args.t <= 1.0:
        raise CLIError(f"--t: must lie in [-1, 1], got {args.t!r}")
    z = support_max(a, args.t)
    _emit(out, {"weights": list(a.a), "t": args.t, "z": z, "lambda1": z / 2}, args.format)
    return 0


def cmd_include(args, out):
    A = _weights("--A", args.A)
    B = _weights("--B", args.B)
    if args.grid < 3:
        raise CLIError(f"--grid: must be >= 3, got {args.grid}")
    with _flag("--method"):
        v = includes(A, B, args.method, args.grid)
    _emit(out, {"A": list(A.a), "B": list(B.a), "verdict": v.to_dict()}, args.format)
    return 0


def cmd_boundary(args, out):
    a = _weights("--weights", args.weights)
    with _flag("--points"):
        curve = sample_boundary(a, args.points)
    fmt = "json" if args.format == "json" else "csv"
    data = export_curve(curve, fmt)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(export_curve(curve, "json" if args.out.endswith(".json") else "csv"))
        _emit(out, {"symmetry_order": curve.symmetry_order, "disk": curve.is_disk,
                    "radius": curve.radius, "out": args.out, "rows": len(curve)}, args.format)
    else:
        out.write(data.decode())
    return 0


def cmd_search(args, out):
    a = _weights("--weights", args.weights)
    if args.n is not None and args.n != a.n:
        raise CLIError(f"--n: {args.n} does not match {a.n} weights")
    with _flag("--weights"):
        res = find_extreme(a, args.direction, args.method, args.grid, args.threads)
    _emit(out, {"weights": list(a.a), **res.to_dict()}, args.format)
    return 0


def cmd_verify(args, out):
    if args.weights:
        w = _weights("--weights", args.weights)
        if args.n is not None and args.n != w.n:
            raise CLIError(f"--n: {args.n} does not match {w.n} weights")
        samples = [w]
    else:
        if args.n is None:
            raise CLIError("--n: required when --weights is not given")
        if not 2 <= args.n <= 10:
            raise CLIError(f"--n: must be in [2, 10], got {args.n}")
        if args.trials < 1:
            raise CLIError(f"--trials: must be >= 1, got {args.trials}")
        rng = Xoshiro256(args.seed)
        samples = [WeightVector(rng.ascending(args.n)) for _ in range(args.trials)]
    reports = []
    for w in samples:
        with _flag("--weights"):
            rep = verify_conjecture1(w, args.grid, args.threads)
        reports.append({**rep.to_dict(), "weights": list(w.a)})
    passed = all(r["passed"] for r in reports)
    _emit(out, {"passed": passed, "n": samples[0].n, "trials": reports}, args.format)
    return 0 if passed else 1


def cmd_extremal(args, out):
    kind = args.kind
    doc: dict = {"kind": kind}
    if kind == "ngon":
        if not args.weights:
            raise CLIError("--weights: required for --kind ngon")
        a = _weights("--weights", args.weights)
        with _flag("--weights"):
            v = regular_ngon_check(a)
        doc.update(weights=list(a.a), objective=v.margin, eigvec=None, verdict=v.to_dict())
        _emit(out, doc, args.format)
        return 0 if v.included else 1
    if kind in ("path", "frobenius"):
        if args.n is None:
            raise CLIError(f"--n: required for --kind {kind}")
        with _flag("--n"):
            rep = (min_path_weights(args.n) if kind == "path"
                   else min_frobenius_zero_product(args.n, args.theta))
        doc.update(rep.to_dict())
        doc["kind"] = kind
        _emit(out, doc, args.format)
        return 0
    if not args.weights:
        raise CLIError("--weights: required for --kind double (the first n-2 weights)")
    try:
        given = [float(Fraction(x.strip())) for x in args.weights.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise CLIError(f"--weights: cannot parse {args.weights!r}") from None
    if args.n is not None and args.n != len(given) + 2:
        raise CLIError(f"--n: expected {len(given) + 2} for {len(given)} given weights, got {args.n}")
    with _flag("--weights"):
        res = find_double_eigenvalue(given)
    doc.update(weights=list(res.weights.a), objective=res.mu, mu=res.mu, x0=res.x0, gap=res.gap)
    _emit(out, doc, args.format)
    return 0


def cmd_families(args, out):
    table = enumerate_classes(6)
    back = {i: j for j, i in table.labels.items()}
    a = _weights("--weights", args.weights) if args.weights else None
    if a is not None and a.n != 6:
        raise CLIError(f"--weights: need 6 weights, got {a.n}")
    classes = []
    for i, c in enumerate(table.classes):
        row = {"index": back[i], "rep": list(c.rep), "family": table.family_of(i)}
        if a is not None:
            row["cyclic_sum"] = float(sum(a.squares[c.rep[k] - 1] * a.squares[c.rep[(k + 1) % 6] - 1]
                                          for k in range(6)))
        classes.append(row)
    classes.sort(key=lambda r: r["index"])
    doc: dict = {"classes": classes}
    code = 0
    if a is not None:
        with _flag("--weights"):
            rep, bound = family_analysis_n6(a)
        doc.update(weights=list(a.a), identities_ok=rep.ok, bounds_ok=bound.ok,
                   X={str(j): (None if x is None else float(x)) for j, x in bound.X.items()},
                   X0=float(bound.X0), bound=float(bound.bound))
        code = 0 if (rep.ok and bound.ok) else 1
    _emit(out, doc, args.format)
    return code


def cmd_counterexample(args, out):
    base = WeightVector.from_squares(COUNTEREXAMPLE_SQUARES)
    polys = []
    ws = []
    for arr in COUNTEREXAMPLE_ARRANGEMENTS:
        w = base.arrange(arr)
        fam = build_family(w)
        ws.append(w)
        polys.append({"arrangement": list(arr), "f": list(fam.f_coeffs), "alpha": fam.alpha,
                      "top_root": largest_root(fam.at(0.0))})
    v = includes_general(ws[1], ws[0])
    _emit(out, {"squares": list(COUNTEREXAMPLE_SQUARES), "polynomials": polys,
                "verdict": v.to_dict()}, args.format)
    return 0


# ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker processes (output is identical for any value)")

    p = argparse.ArgumentParser(prog="cyclerange", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    w_help = 'weights "1,2,3" or squared weights "sq:0,3,4"'
    sp = add("charpoly", cmd_charpoly, "polynomial family f(z) - 2 alpha cos(n theta)")
    sp.add_argument("--weights", required=True, help=w_help)
    sp = add("radius", cmd_radius, "numerical radius")
    sp.add_argument("--weights", required=True, help=w_help)
    sp = add("support", cmd_support, "top eigenvalue of 2Re(e^{i theta}A) at cos(n theta) = t")
    sp.add_argument("--weights", required=True, help=w_help)
    sp.add_argument("--t", type=float, required=True)
    sp = add("include", cmd_include, "decide W(B) in W(A)")
    sp.add_argument("--A", required=True, help=w_help)
    sp.add_argument("--B", required=True, help=w_help)
    sp.add_argument("--method", choices=("auto", "grid", "closed"), default="auto")
    sp.add_argument("--grid", type=int, default=257)
    sp = add("boundary", cmd_boundary, "sample the boundary of W(A)")
    sp.add_argument("--weights", required=True, help=w_help)
    sp.add_argument("--points", type=int, default=64)
    sp.add_argument("--out")
    sp = add("search", cmd_search, "arrangement with the largest/smallest numerical range")
    sp.add_argument("--weights", required=True, help=w_help + ", sorted ascending")
    sp.add_argument("--n", type=int)
    sp.add_argument("--direction", choices=("max", "min"), default="max")
    sp.add_argument("--method", choices=("grid", "certified"), default="grid")
    sp.add_argument("--grid", type=int, default=257)
    sp = add("verify-conjecture", cmd_verify, "check the odd-up/even-down arrangement is maximal")
    sp.add_argument("--weights", help=w_help + ", sorted ascending")
    sp.add_argument("--n", type=int)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--grid", type=int, default=257)
    sp = add("extremal", cmd_extremal, "extremal weight constructions")
    sp.add_argument("--kind", choices=("ngon", "path", "frobenius", "double"), required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--weights", help=w_help)
    sp.add_argument("--theta", type=float, default=math.pi / 4)
    sp = add("families", cmd_families, "the 60 classes for n = 6 and their families")
    sp.add_argument("--weights", help="six ascending weights for the exact gap/bound checks")
    add("counterexample", cmd_counterexample, "two n = 6 arrangements with crossing ranges")
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        err.write("error: --threads: must be >= 1\n")
        return 2
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except CLIError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        return 2
    out.write(buf.getvalue())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
