"""Command-line front end: ``helicoidal {curvature,verify,catalog,orbit,mesh}``."""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .catalog import CATALOG, check_entry, get_surface
from .classify import Status, Theorem, verify_theorem
from .minkowski import AxisKind, MinkVec3, motion
from .numeric import DegenerateMetric, grid_triangles, numeric_frame, sample_grid
from .surface import (
    CircleLightlikeAxis,
    CircleSpacelikeAxis,
    CircleTimelikeAxis,
    CurveSpec,
    HelicoidalSpec,
    HorizontalLine,
    PolyGraph,
    VerticalLine,
    curvature_bundle,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DEGENERATE = 3
EXIT_MISMATCH = 4
EXIT_UNWRITABLE = 5

PARAM_FLAGS = ("h", "r", "lambda", "mu", "c", "theta")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# -- parsing -------------------------------------------------------------------

def parse_rational(text: str) -> Fraction:
    """Exact rational from ``p/q`` or a decimal such as ``-1.25`` or ``2e-3``."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None
    return value


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _pair(text: str, conv=float) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected two comma-separated values, got {text!r}")
    return tuple(conv(p) for p in parts)


def parse_curve(descriptor: str, axis: AxisKind, params: dict[str, Fraction]) -> CurveSpec:
    kind, _, body = descriptor.partition(":")
    if kind == "poly":
        if not body:
            raise ValueError("poly needs at least one coefficient")
        return PolyGraph(tuple(parse_rational(x) for x in body.split(",")))
    if kind == "vline":
        return VerticalLine(parse_rational(body))
    if kind == "hline":
        return HorizontalLine(parse_rational(body))
    if kind == "circle":
        lam, mu, theta = (params.get(k, Fraction(0)) for k in ("lambda", "mu", "theta"))
        if axis is AxisKind.LIGHTLIKE:
            if body not in ("", "+"):
                raise ValueError("a lightlike-axis circle has no branch; use 'circle'")
            if "c" not in params:
                raise ValueError("a lightlike-axis circle needs --c")
            return CircleLightlikeAxis(params["c"], theta, lam, mu)
        if body not in ("+", "-"):
            raise ValueError("circle branch must be 'circle:+' or 'circle:-'")
        if "r" not in params:
            raise ValueError("a circle needs --r")
        cls = CircleTimelikeAxis if axis is AxisKind.TIMELIKE else CircleSpacelikeAxis
        return cls(params["r"], lam, mu, 1 if body == "+" else -1, theta)
    raise ValueError(f"unknown curve descriptor {descriptor!r}")


def describe_curve(curve: CurveSpec) -> str:
    """Canonical descriptor; ``parse_curve(describe_curve(c))`` rebuilds ``c``."""
    if isinstance(curve, PolyGraph):
        return "poly:" + ",".join(format_rational(a) for a in curve.coefficients)
    if isinstance(curve, VerticalLine):
        return f"vline:{format_rational(curve.r)}"
    if isinstance(curve, HorizontalLine):
        return f"hline:{format_rational(curve.b)}"
    if isinstance(curve, CircleLightlikeAxis):
        return "circle"
    if isinstance(curve, (CircleTimelikeAxis, CircleSpacelikeAxis)):
        return "circle:+" if curve.branch == 1 else "circle:-"
    raise TypeError(f"unknown curve type {type(curve).__name__}")


def curve_params(curve: CurveSpec) -> dict[str, Fraction]:
    """Flag values that ``describe_curve`` leaves out."""
    if isinstance(curve, CircleLightlikeAxis):
        return {"c": curve.c, "lambda": curve.lam, "mu": curve.mu, "theta": curve.theta}
    if isinstance(curve, (CircleTimelikeAxis, CircleSpacelikeAxis)):
        out = {"r": curve.r, "lambda": curve.lam, "mu": curve.mu}
        if curve.theta != 0:
            out["theta"] = curve.theta
        return out
    return {}


def describe_spec(spec: HelicoidalSpec) -> str:
    """Canonical flag string for a spec, e.g. ``--axis timelike --curve poly:0,1 --h 2``."""
    parts = [f"--axis {spec.axis.value}", f"--curve {describe_curve(spec.curve)}",
             f"--h {format_rational(spec.h)}"]
    parts += [f"--{k} {format_rational(v)}" for k, v in curve_params(spec.curve).items()]
    return " ".join(parts)


@dataclass
class RunConfig:
    command: str
    axis: AxisKind | None = None
    curve: str | None = None
    params: dict[str, Fraction] = field(default_factory=dict)
    m_max: int = 6
    output: str | None = None
    format: str = "text"
    extra: dict[str, Any] = field(default_factory=dict)

    def spec(self) -> HelicoidalSpec:
        if self.axis is None or self.curve is None:
            raise ValueError("--axis and --curve are required")
        if "h" not in self.params:
            raise ValueError("--h is required")
        curve = parse_curve(self.curve, self.axis, self.params)
        return HelicoidalSpec(self.axis, self.params["h"], curve)


# -- output --------------------------------------------------------------------

def round_sig(x: float, digits: int = 12) -> float:
    if not math.isfinite(x):
        return x
    return float(f"{x:.{digits}g}") + 0.0  # + 0.0 folds -0.0 into 0.0


def _clean(obj):
    if isinstance(obj, float):
        return round_sig(obj)
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def to_json(obj) -> str:
    return json.dumps(_clean(obj), sort_keys=True, indent=2)


def fmt(x: float | None) -> str:
    return "-" if x is None else f"{round_sig(x):.12g}"


def emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}", EXIT_UNWRITABLE) from None


# -- commands ------------------------------------------------------------------

def cmd_curvature(cfg: RunConfig) -> tuple[str, int]:
    spec = cfg.spec()
    bundle = curvature_bundle(spec)
    samples = []
    for s, t in cfg.extra.get("samples", []):
        try:
            fr = numeric_frame(spec, s, t)
        except DegenerateMetric as exc:
            raise CliError(f"sample ({s}, {t}): {exc}", EXIT_DEGENERATE) from None
        samples.append({"s": s, "t": t, "H": fr.H, "K": fr.K, "epsilon": fr.epsilon})
    report = {
        "axis": spec.axis.value,
        "curve": describe_curve(spec.curve),
        "W": str(bundle.W),
        "H1": str(bundle.H1),
        "K1": str(bundle.K1),
        "samples": samples,
    }
    if cfg.format == "json":
        return to_json(report) + "\n", EXIT_OK
    lines = [f"spec: {describe_spec(spec)}", f"W  = {report['W']}", f"H1 = {report['H1']}", f"K1 = {report['K1']}"]
    for smp in samples:
        lines.append(f"s={fmt(smp['s'])} t={fmt(smp['t'])}: H={fmt(smp['H'])} |H|={fmt(abs(smp['H']))} "
                     f"K={fmt(smp['K'])} epsilon={smp['epsilon']}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    theorem = Theorem(cfg.extra["theorem"])
    if cfg.m_max < 2:
        raise ValueError("--max-degree must be at least 2")
    reports = verify_theorem(theorem.value, m_max=cfg.m_max)
    ok = all(rep.status is Status.MATCHES for rep in reports)
    code = EXIT_OK if ok else EXIT_MISMATCH
    if cfg.format == "json":
        data = {
            "theorem": theorem.value,
            "max_degree": cfg.m_max,
            "status": Status.MATCHES.value if ok else "Failed",
            "reports": [
                {"axis": rep.axis.value, "curve": rep.curve, "mode": rep.mode.value,
                 "status": rep.status.value, "details": rep.details, "lines": rep.render().splitlines()[1:]}
                for rep in reports
            ],
        }
        return to_json(data) + "\n", code
    text = "\n".join(rep.render() for rep in reports)
    summary = f"{theorem.value}: {sum(r.status is Status.MATCHES for r in reports)}/{len(reports)} reports match"
    return text + "\n" + summary + "\n", code


def _catalog_point(entry) -> tuple[float, float]:
    (s0, s1), (t0, t1) = entry.s_range, entry.t_range
    return s0 + 0.37 * (s1 - s0), t0 + 0.61 * (t1 - t0)


def cmd_catalog(cfg: RunConfig) -> tuple[str, int]:
    rows = []
    for entry in CATALOG:
        check = check_entry(entry)
        s, t = _catalog_point(entry)
        fr = numeric_frame(entry.spec(), s, t)
        exp_H, exp_K = entry.value("H"), entry.value("K")
        numeric_ok = (exp_H is None or abs(abs(fr.H) - exp_H) < 1e-9) and (exp_K is None or abs(fr.K - exp_K) < 1e-9)
        rows.append({
            "name": entry.name,
            "expected_abs_H": exp_H, "computed_abs_H": abs(fr.H),
            "expected_K": exp_K, "computed_K": fr.K,
            "s": s, "t": t,
            "exact_check": check.passed, "failures": list(check.failures),
            "pass": check.passed and numeric_ok,
        })
    code = EXIT_OK if all(r["pass"] for r in rows) else EXIT_MISMATCH
    if cfg.format == "json":
        return to_json({"entries": rows}) + "\n", code
    head = f"{'surface':<26} {'|H| expected':>14} {'|H| computed':>14} {'K expected':>12} {'K computed':>14}  result"
    lines = [head]
    for r in rows:
        lines.append(f"{r['name']:<26} {fmt(r['expected_abs_H']):>14} {fmt(r['computed_abs_H']):>14} "
                     f"{fmt(r['expected_K']):>12} {fmt(r['computed_K']):>14}  {'pass' if r['pass'] else 'FAIL'}")
    lines.append(f"{sum(r['pass'] for r in rows)}/{len(rows)} entries pass")
    return "\n".join(lines) + "\n", code


def cmd_orbit(cfg: RunConfig) -> tuple[str, int]:
    if cfg.axis is None:
        raise ValueError("--axis is required")
    point = cfg.extra["point"]
    steps = cfg.extra["steps"]
    if steps < 1:
        raise ValueError("--steps must be positive")
    t0, t1 = cfg.extra["t_range"]
    h = cfg.params.get("h", Fraction(0))
    ts = [Fraction(t0)] if steps == 1 else [t0 + (t1 - t0) * Fraction(i, steps - 1) for i in range(steps)]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "x", "y", "z"])
    p = MinkVec3(*point)
    for t in ts:
        # exact arithmetic for the lightlike axis; floats otherwise
        tt = t if cfg.axis is AxisKind.LIGHTLIKE else float(t)
        q = motion(cfg.axis, h, tt, allow_rotation=True)(p)
        writer.writerow([fmt(float(t))] + [fmt(float(c)) for c in q])
    return buf.getvalue(), EXIT_OK


def cmd_mesh(cfg: RunConfig) -> tuple[str, int]:
    name = cfg.extra.get("surface")
    if name:
        entry = get_surface(name)
        spec = entry.spec(**{k: v for k, v in cfg.params.items() if k in entry.defaults})
        s_range, t_range = entry.s_range, entry.t_range
    else:
        spec = cfg.spec()
        s_range, t_range = (-1.0, 1.0), (0.0, 2 * math.pi)
    s_range = cfg.extra.get("s_range") or s_range
    t_range = cfg.extra.get("t_range") or t_range
    n = cfg.extra["n"]
    pts = sample_grid(spec, s_range, t_range, n, n)
    out = [f"# helicoidal mesh {describe_spec(spec)}", f"# grid {n}x{n}"]
    out += [f"v {fmt(x)} {fmt(y)} {fmt(z)}" for x, y, z in np.asarray(pts)]
    out += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in grid_triangles(n, n)]
    return "\n".join(out) + "\n", EXIT_OK


COMMANDS = {
    "curvature": cmd_curvature,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
    "orbit": cmd_orbit,
    "mesh": cmd_mesh,
}


# -- argument handling -----------------------------------------------------------

def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range_arg(text: str) -> tuple[float, float]:
    try:
        return _pair(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point_arg(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected x,y,z, got {text!r}")
    try:
        return tuple(parse_rational(p) for p in parts)  # type: ignore[return-value]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_spec_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--axis", choices=[a.value for a in AxisKind], required=required)
    p.add_argument("--curve", help="poly:a0,a1,... | circle:+ | circle:- | circle | vline:r | hline:b")
    for name in PARAM_FLAGS:
        p.add_argument(f"--{name}", type=_rational_arg, metavar="Q", help="rational, p/q or decimal")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="helicoidal", description="Helicoidal surfaces in Minkowski 3-space.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curvature", help="symbolic numerators and numeric H, K")
    _add_spec_args(p, required=True)
    p.add_argument("--sample", action="append", default=[], type=_range_arg, metavar="S,T")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output")

    p = sub.add_parser("verify", help="mechanized classification of one theorem")
    p.add_argument("theorem", choices=[t.value for t in Theorem])
    p.add_argument("--max-degree", type=int, default=6, dest="m_max")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output")

    p = sub.add_parser("catalog", help="known surfaces, exact and numeric checks")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-o", "--output")

    p = sub.add_parser("orbit", help="CSV samples of a point moved by the motion group")
    p.add_argument("--axis", choices=[a.value for a in AxisKind], required=True)
    p.add_argument("--point", type=_point_arg, required=True, metavar="X,Y,Z")
    p.add_argument("--h", type=_rational_arg, default=Fraction(0), help="pitch; 0 gives the rotation orbit")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--t-range", type=lambda x: _pair(x, parse_rational), default=(Fraction(0), Fraction(1)))
    p.add_argument("-o", "--output")

    p = sub.add_parser("mesh", help="OBJ triangle mesh of a surface patch")
    p.add_argument("--surface", help="catalog name, instead of --axis/--curve")
    _add_spec_args(p, required=False)
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--s-range", type=_range_arg)
    p.add_argument("--t-range", type=_range_arg)
    p.add_argument("-o", "--output")
    return parser


_NEGATIVE = re.compile(r"^-[0-9.]")


def _attach_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1/3" or "-1,2" as an option; glue such values onto their flag
    out: list[str] = []
    for tok in argv:
        if out and _NEGATIVE.match(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    argv = sys.argv[1:] if argv is None else argv
    return build_parser().parse_args(_attach_negative_values(argv))


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    params = {k: getattr(ns, k) for k in PARAM_FLAGS if getattr(ns, k, None) is not None}
    cfg = RunConfig(
        command=ns.command,
        axis=AxisKind(ns.axis) if getattr(ns, "axis", None) else None,
        curve=getattr(ns, "curve", None),
        params=params,
        m_max=getattr(ns, "m_max", 6),
        output=getattr(ns, "output", None),
        format=getattr(ns, "format", "text"),
    )
    if ns.command == "curvature":
        cfg.extra["samples"] = ns.sample
    elif ns.command == "verify":
        cfg.extra["theorem"] = ns.theorem
    elif ns.command == "orbit":
        cfg.extra.update(point=ns.point, steps=ns.steps, t_range=ns.t_range)
    elif ns.command == "mesh":
        if ns.n < 2:
            raise ValueError("--n must be at least 2")
        cfg.extra.update(surface=ns.surface, n=ns.n, s_range=ns.s_range, t_range=ns.t_range)
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    ns = parse_args(argv)  # exits with status 2 on bad flags
    try:
        cfg = config_from_args(ns)
        text, code = COMMANDS[cfg.command](cfg)
        emit(text, cfg.output)
    except CliError as exc:
        print(f"helicoidal: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, TypeError, KeyError) as exc:
        print(f"helicoidal: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return code


if __name__ == "__main__":
    with contextlib.suppress(KeyboardInterrupt):
        sys.exit(main())
