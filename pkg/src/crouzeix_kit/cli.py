"""Command-line entry point ``crouzeix-kit``.

Exit codes: 0 success or criterion satisfied, 1 checked and unsatisfied,
2 usage or input error, 3 numeric failure.  Data goes to standard output
(or ``--out``); diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import ast
import math
import operator
import re
import sys

import numpy as np

from . import repro as repro_mod
from .blaschke import BlaschkeProduct, parse_zeros
from .crouzeix import (
    CSV_HEADER as CERT_HEADER,
    METHODS,
    certificate_scan,
    certified_prefix,
    condition_product,
    crouzeix_inequality_test,
)
from .disks import CSV_HEADER as DISK_HEADER
from .disks import check_criterion, inscribed_center, inscribed_radius
from .errors import CrouzeixKitError, InputError, NumericError
from .levelset import level_set_boundary, lsc_check
from .modelspace import FAMILIES, NILPOTENT_FAMILIES, MatrixFamilySpec, build_model_matrix
from .numrange import VectorPath, boundary, curve_from_path
from .output import Svg, to_csv, to_json
from .tolerances import T_CAP

EXIT_OK, EXIT_UNSATISFIED, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# weight expressions such as 2√2/(3√3) --------------------------------------

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.Div: operator.truediv, ast.Pow: operator.pow}


def _eval(node):
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return float(node.value)
    if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
        return _OPS[type(node.op)](_eval(node.left), _eval(node.right))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
            and node.func.id == "sqrt" and len(node.args) == 1 and not node.keywords):
        return math.sqrt(_eval(node.args[0]))
    raise InputError("unsupported syntax in weight expression")


def parse_weight(text: str) -> float:
    """Evaluate ``1/3``, ``2√2/(3√3)``, ``sqrt(11)/6`` and similar."""
    s = text.strip().replace(" ", "")
    s = re.sub(r"√(\d+(?:\.\d+)?)", r"sqrt(\1)", s)
    s = s.replace("√(", "sqrt(")
    s = re.sub(r"(?<=[\d)])(?=sqrt|\()", "*", s)
    try:
        return _eval(ast.parse(s, mode="eval"))
    except (SyntaxError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad weight expression {text!r}") from exc


def parse_path(text: str | None, normalize: bool = False) -> VectorPath | None:
    if not text:
        return None
    return VectorPath.from_weights([parse_weight(tok) for tok in text.split(",")], normalize)


# shared options ------------------------------------------------------------

def _common(p: argparse.ArgumentParser, formats=("csv", "json", "svg"), default="json"):
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--out", help="write data here instead of standard output")
    p.add_argument("--samples", type=int, default=720, help="boundary directions")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)


def _family(p: argparse.ArgumentParser, families=FAMILIES, zeros=True):
    p.add_argument("--family", choices=families)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--m", type=int)
    if zeros:
        p.add_argument("--zeros", help="comma-separated complex zeros, e.g. 0.5,0.5-0.2i")


def _spec(args) -> MatrixFamilySpec:
    zeros = getattr(args, "zeros", None)
    if zeros:
        return MatrixFamilySpec("mtheta", zeros=tuple(parse_zeros(zeros)))
    if not args.family:
        raise InputError("give --family or --zeros")
    return MatrixFamilySpec(args.family, args.n, args.t, args.m)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# subcommands ---------------------------------------------------------------

def cmd_numrange(args) -> int:
    spec = _spec(args)
    bd = boundary(spec.matrix(), args.samples)
    if args.format == "csv":
        _emit(args, to_csv(("angle", "re", "im", "support"), bd.rows()))
    elif args.format == "json":
        _emit(args, to_json({"spec": spec.to_dict(), "angles": bd.angles.tolist(),
                             "points": [[z.real, z.imag] for z in bd.points]}))
    else:
        svg = Svg(spec.label())
        svg.polyline(bd.polygon(), closed=True)
        if args.overlay_levelset:
            B = BlaschkeProduct(tuple(parse_zeros(args.overlay_levelset)))
            for line in level_set_boundary(B, args.level):
                svg.polyline(line, stroke="#d62728")
        _emit(args, svg.render())
    return EXIT_OK


def cmd_curve(args) -> int:
    spec = _spec(args)
    path = parse_path(args.path, args.normalize)
    C = curve_from_path(spec.matrix(), path)
    s = 2 * np.pi * np.arange(args.samples) / args.samples
    f = C(s)
    if args.format == "csv":
        _emit(args, to_csv(("s", "re", "im"), zip(s, f.real, f.imag)))
    elif args.format == "json":
        c = inscribed_center(C)
        _emit(args, to_json({"spec": spec.to_dict(),
                             "coefficients": [[z.real, z.imag] for z in C.coeffs],
                             "center": c, "radius": inscribed_radius(C, c)}))
    else:
        svg = Svg(spec.label())
        svg.polyline(boundary(spec.matrix(), args.samples).polygon(), closed=True)
        svg.polyline(f, stroke="#ff7f0e", closed=True)
        _emit(args, svg.render())
    return EXIT_OK


def _disk_shift(args):
    return None if args.shift is None else args.shift == "yes"


def cmd_disk(args) -> int:
    spec = _spec(args)
    rep = check_criterion(spec, parse_path(args.path, args.normalize), _disk_shift(args),
                          args.threshold)
    if args.format == "csv":
        _emit(args, to_csv(DISK_HEADER, [rep.csv_row()]))
    elif args.format == "json":
        _emit(args, to_json(rep.to_dict()))
    else:
        svg = Svg(spec.label())
        if spec.family == "kms":
            shifted = spec.matrix() * (1 - spec.t**2) + spec.t * np.eye(spec.n)
            svg.polyline(boundary(shifted, args.samples).polygon(), closed=True)
        else:
            svg.polyline(boundary(spec.matrix(), args.samples).polygon(), closed=True)
        svg.circle(rep.center, rep.euclid_radius, stroke="#2ca02c")
        _emit(args, svg.render())
    return EXIT_OK if rep.satisfied else EXIT_UNSATISFIED


def cmd_lsc(args) -> int:
    theta = BlaschkeProduct(tuple(parse_zeros(args.theta)))
    b = BlaschkeProduct(tuple(parse_zeros(args.b)))
    rep = lsc_check(theta, b, args.samples, strict=not args.allow_degree)
    if args.format == "json":
        _emit(args, to_json(rep.to_dict()))
    elif args.format == "csv":
        _emit(args, to_csv(("max_abs_b", "margin", "witness_re", "witness_im", "satisfied"),
                           [(rep.max_abs_b, rep.margin, rep.witness.real, rep.witness.imag,
                             rep.satisfied)]))
    else:
        svg = Svg("level set check")
        svg.polyline(boundary(build_model_matrix(theta.zeros), args.samples).polygon(), closed=True)
        for line in level_set_boundary(b, 0.5):
            svg.polyline(line, stroke="#d62728")
        svg.point(rep.witness)
        _emit(args, svg.render())
    return EXIT_OK if rep.satisfied else EXIT_UNSATISFIED


def cmd_cert(args) -> int:
    spec = _spec(args)
    cert = condition_product(spec, args.method, parse_path(args.path, args.normalize))
    data = cert.to_dict()
    if args.trials:
        data["worst_ratio"] = crouzeix_inequality_test(spec, args.trials, args.max_degree,
                                                       args.seed, args.samples)
    if args.format == "csv":
        _emit(args, to_csv(CERT_HEADER, [cert.csv_row()]))
    else:
        _emit(args, to_json(data))
    return EXIT_OK if cert.conjecture_certified else EXIT_UNSATISFIED


def _t_grid(t_min: float, t_max: float, step: float) -> np.ndarray:
    if step <= 0:
        raise InputError("--step must be positive")
    if not 0.0 <= t_min < t_max <= T_CAP:
        raise InputError(f"need 0 <= t-min < t-max <= {T_CAP}")
    if step > t_max - t_min:
        raise InputError("--step exceeds the t range")
    return repro_mod._grid(t_min, t_max, step)


def _summary(args, line: str) -> None:
    print(line, file=sys.stdout if args.out else sys.stderr)


def cmd_scan(args) -> int:
    template = MatrixFamilySpec(args.family, args.n, 0.0, args.m)
    ts = _t_grid(args.t_min, args.t_max, args.step)
    path = parse_path(args.path, args.normalize)
    if args.kind == "cert":
        if args.family not in NILPOTENT_FAMILIES:
            raise InputError("certificate scans need --family kms or atm")
        certs = certificate_scan(template, ts, args.method, path, args.threads)
        rows = [c.csv_row() for c in certs]
        _emit(args, to_csv(CERT_HEADER, rows))
        prefix = certified_prefix(certs, args.threshold)
        end = "none" if prefix is None else f"{prefix:.12g}"
        _summary(args, f"max_product={max(c.product for c in certs):.12g} "
                       f"certified_interval=[0,{end}]")
        return EXIT_OK
    reps = [check_criterion(template.with_t(float(t)), path, _disk_shift(args)) for t in ts]
    _emit(args, to_csv(DISK_HEADER, [r.csv_row() for r in reps]))
    _summary(args, f"min_r={min(r.pseudo.radius for r in reps):.12g} "
                   f"all_satisfied={str(all(r.satisfied for r in reps)).lower()}")
    return EXIT_OK


def cmd_repro(args) -> int:
    tab = repro_mod.reproduce(args.table, args.threads)
    _emit(args, to_csv(tab.header, tab.rows))
    print(f"{tab.name}: {len(tab.rows) - tab.misses}/{len(tab.rows)} rows within tolerance",
          file=sys.stderr)
    return EXIT_OK if tab.ok else EXIT_UNSATISFIED


def cmd_plot(args) -> int:
    from .plotting import render

    render(args.figure, args.out)
    print(f"wrote {args.out}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="crouzeix-kit", description="Numerical ranges, disk criteria and "
                                                  "similarity certificates.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("numrange", help="boundary of the numerical range")
    _family(q)
    _common(q, default="csv")
    q.add_argument("--overlay-levelset", help="zeros of B; draws |B| = level in SVG output")
    q.add_argument("--level", type=float, default=0.5)
    q.set_defaults(func=cmd_numrange)

    q = sub.add_parser("curve", help="trigonometric curve from a vector path")
    _family(q)
    _common(q, default="csv")
    q.add_argument("--path", help="weights, e.g. 1/3,2√2/(3√3),4/(3√3)")
    q.add_argument("--normalize", action="store_true")
    q.set_defaults(func=cmd_curve)

    q = sub.add_parser("disk", help="pseudohyperbolic disk criterion")
    _family(q)
    _common(q)
    q.add_argument("--path")
    q.add_argument("--normalize", action="store_true")
    q.add_argument("--shift", choices=("yes", "no"))
    q.add_argument("--threshold", choices=("half", "cos"), default="half")
    q.set_defaults(func=cmd_disk)

    q = sub.add_parser("lsc", help="level-set check for a pair of Blaschke products")
    q.add_argument("--theta", required=True)
    q.add_argument("--b", required=True)
    q.add_argument("--allow-degree", action="store_true", help="warn instead of failing on deg b >= deg theta")
    _common(q)
    q.set_defaults(func=cmd_lsc, samples=1440)

    q = sub.add_parser("cert", help="condition-number certificate")
    _family(q, ("kms", "atm"), zeros=False)
    _common(q, formats=("csv", "json"))
    q.add_argument("--method", choices=METHODS, default="eig")
    q.add_argument("--path")
    q.add_argument("--normalize", action="store_true")
    q.add_argument("--trials", type=int, default=0, help="also run random polynomial trials")
    q.add_argument("--max-degree", type=int, default=6)
    q.set_defaults(func=cmd_cert)

    q = sub.add_parser("scan", help="t-grid scan of certificates or disk criteria")
    _family(q, zeros=False)
    _common(q, formats=("csv",), default="csv")
    q.add_argument("--t-min", type=float, default=0.0)
    q.add_argument("--t-max", type=float, default=0.99)
    q.add_argument("--step", type=float, default=0.01)
    q.add_argument("--threshold", type=float, default=2.0)
    q.add_argument("--method", choices=METHODS, default="eig")
    q.add_argument("--kind", choices=("cert", "disk"), default="cert")
    q.add_argument("--path")
    q.add_argument("--normalize", action="store_true")
    q.add_argument("--shift", choices=("yes", "no"))
    q.set_defaults(func=cmd_scan)

    q = sub.add_parser("repro", help="recompute a published table")
    q.add_argument("table")
    _common(q, formats=("csv",), default="csv")
    q.set_defaults(func=cmd_repro)

    q = sub.add_parser("plot", help="render a figure with matplotlib")
    q.add_argument("figure")
    q.add_argument("--out", required=True, help="image path; format from the extension")
    q.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", 8) < 8:
        print("crouzeix-kit: --samples must be at least 8", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except InputError as exc:
        print(f"crouzeix-kit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericError as exc:
        print(f"crouzeix-kit: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except CrouzeixKitError as exc:
        print(f"crouzeix-kit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"crouzeix-kit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
