"""Generating curves, helicoidal surfaces and their symbolic curvature data at t = 0.

All curvature work is done with the determinant forms

    H1 = G det(X_s, X_t, X_ss) - 2F det(X_s, X_t, X_st) + E det(X_s, X_t, X_tt)
    K1 = det(X_s, X_t, X_ss) det(X_s, X_t, X_tt) - det(X_s, X_t, X_st)^2

so that ``H = -H1 / (2 |W|^(3/2))`` and ``K = -K1 / W^2`` with ``W = EG - F^2``;
no square roots ever enter the symbolic pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from .minkowski import (
    AxisKind,
    MinkVec3,
    det3,
    lightlike_rotation,
    matvec,
    minkowski_dot,
    motion_jet,
)
from .symbolic import Mode, ParamPoly, SymExpr


# -- curve descriptions ------------------------------------------------------

@dataclass(frozen=True)
class PolyGraph:
    """Graph of ``f(s) = sum a_n s^n``; coefficients are rationals or ParamPolys."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if not self.coefficients:
            raise ValueError("PolyGraph needs at least one coefficient")

    @classmethod
    def symbolic(cls, m: int) -> "PolyGraph":
        """Generic polynomial of degree ``m`` with coefficients ``a_0 .. a_m``."""
        return cls(tuple(ParamPoly.var(f"a{n}") for n in range(m + 1)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


@dataclass(frozen=True)
class VerticalLine:
    """Timelike axis, ``gamma(s) = (r, 0, s)``: the Lorentzian cylinder."""

    r: Any


@dataclass(frozen=True)
class HorizontalLine:
    """``gamma(s) = (0, b, s)`` (spacelike axis) or ``(s, b, s)`` (lightlike axis)."""

    b: Any


@dataclass(frozen=True)
class CircleTimelikeAxis:
    """In the plane y = 0: ``x^2 - z^2 = r^2`` (branch +1) or ``-r^2`` (branch -1)."""

    r: Any
    lam: Any = 0
    mu: Any = 0
    branch: int = 1
    theta: Any = 0  # absorbed into u = s + theta symbolically


@dataclass(frozen=True)
class CircleSpacelikeAxis:
    """In the plane x = 0: ``y^2 - z^2 = r^2`` (branch +1) or ``-r^2`` (branch -1)."""

    r: Any
    lam: Any = 0
    mu: Any = 0
    branch: int = 1
    theta: Any = 0


@dataclass(frozen=True)
class CircleLightlikeAxis:
    """Null-rotated parabola ``M(theta)(c s^2/2, c s, c s^2/2) + (lam, mu, lam)``."""

    c: Any
    theta: Any = 0
    lam: Any = 0
    mu: Any = 0


CurveSpec = Union[PolyGraph, VerticalLine, HorizontalLine,
                  CircleTimelikeAxis, CircleSpacelikeAxis, CircleLightlikeAxis]

_COMPATIBLE = {
    PolyGraph: {AxisKind.TIMELIKE, AxisKind.SPACELIKE, AxisKind.LIGHTLIKE},
    VerticalLine: {AxisKind.TIMELIKE},
    HorizontalLine: {AxisKind.SPACELIKE, AxisKind.LIGHTLIKE},
    CircleTimelikeAxis: {AxisKind.TIMELIKE},
    CircleSpacelikeAxis: {AxisKind.SPACELIKE},
    CircleLightlikeAxis: {AxisKind.LIGHTLIKE},
}


class IncompatibleCurve(ValueError):
    pass


def check_compatible(curve: CurveSpec, axis: AxisKind) -> None:
    allowed = _COMPATIBLE.get(type(curve))
    if allowed is None:
        raise TypeError(f"unknown curve type {type(curve).__name__}")
    if axis not in allowed:
        raise IncompatibleCurve(f"{type(curve).__name__} cannot generate a surface about a {axis.value} axis")
    if isinstance(curve, (CircleTimelikeAxis, CircleSpacelikeAxis)) and curve.branch not in (1, -1):
        raise ValueError("circle branch must be +1 or -1")
    for name in ("r", "c"):
        v = getattr(curve, name, None)
        if v is not None and not isinstance(v, ParamPoly) and v == 0:
            raise ValueError(f"{name} must be nonzero")


@dataclass(frozen=True)
class HelicoidalSpec:
    axis: AxisKind
    h: Any
    curve: CurveSpec

    def __post_init__(self):
        if not isinstance(self.h, ParamPoly) and self.h == 0:
            raise ValueError("pitch h must be nonzero")
        check_compatible(self.curve, self.axis)


# -- symbolic curve and frame ------------------------------------------------

def _pp(v) -> ParamPoly:
    return ParamPoly.coerce(v if not isinstance(v, float) else Fraction(v))


def build_curve(curve: CurveSpec, axis: AxisKind) -> tuple[SymExpr, SymExpr, SymExpr]:
    """Generating curve ``gamma(s)`` as a symbolic triple."""
    check_compatible(curve, axis)
    s = SymExpr.s()
    P = Mode.POLY

    def const(v, mode=P):
        return SymExpr.constant(_pp(v), mode)

    if isinstance(curve, PolyGraph):
        f = SymExpr.poly(_pp(a) for a in curve.coefficients)
        zero = SymExpr.zero(P)
        if axis is AxisKind.TIMELIKE:
            return s, zero, f
        if axis is AxisKind.SPACELIKE:
            return zero, s, f
        return f, s, f
    if isinstance(curve, VerticalLine):
        return const(curve.r), SymExpr.zero(P), s
    if isinstance(curve, HorizontalLine):
        if axis is AxisKind.SPACELIKE:
            return SymExpr.zero(P), const(curve.b), s
        return s, const(curve.b), s
    if isinstance(curve, (CircleTimelikeAxis, CircleSpacelikeAxis)):
        H = Mode.HYP
        r = _pp(curve.r)
        ch, sh = SymExpr.cosh(1, r), SymExpr.sinh(1, r)
        first, second = (ch, sh) if curve.branch == 1 else (sh, ch)
        a = const(curve.lam, H) + first
        b = const(curve.mu, H) + second
        if isinstance(curve, CircleTimelikeAxis):
            return a, SymExpr.zero(H), b
        return SymExpr.zero(H), a, b
    if isinstance(curve, CircleLightlikeAxis):
        c = _pp(curve.c)
        half = Fraction(1, 2)
        base = MinkVec3(SymExpr.poly([0, 0, c * half]), SymExpr.poly([0, c]), SymExpr.poly([0, 0, c * half]))
        rotated = matvec(lightlike_rotation(_pp(curve.theta)), base)
        lam, mu = _pp(curve.lam), _pp(curve.mu)
        return rotated.x + lam, rotated.y + mu, rotated.z + lam
    raise TypeError(f"unknown curve type {type(curve).__name__}")


@dataclass(frozen=True)
class FrameT0:
    X_s: MinkVec3
    X_t: MinkVec3
    X_ss: MinkVec3
    X_st: MinkVec3
    X_tt: MinkVec3


def frame_t0(spec: HelicoidalSpec) -> FrameT0:
    gamma = MinkVec3(*build_curve(spec.curve, spec.axis))
    d1 = MinkVec3(*(c.diff() for c in gamma))
    d2 = MinkVec3(*(c.diff() for c in d1))
    jet = motion_jet(spec.axis, _pp(spec.h))
    return FrameT0(
        X_s=d1,
        X_t=matvec(jet.A1, gamma) + jet.v1,
        X_ss=d2,
        X_st=matvec(jet.A1, d1),
        X_tt=matvec(jet.A2, gamma) + jet.v2,
    )


# -- curvature data ----------------------------------------------------------

@dataclass(frozen=True)
class CurvatureBundle:
    E: SymExpr
    F: SymExpr
    G: SymExpr
    W: SymExpr
    D_uu: SymExpr
    D_uv: SymExpr
    D_vv: SymExpr
    H1: SymExpr
    K1: SymExpr
    epsilon: int | None = None
    spec: HelicoidalSpec | None = field(default=None, compare=False)


def definite_sign(p: ParamPoly) -> int | None:
    """+1/-1 if ``p`` has that sign for all real (nonzero) parameter values, else None.

    Recognizes a rational times a sum of even monomials with like-signed
    coefficients, which includes nonzero constants.
    """
    if p.is_zero():
        return None
    signs = set()
    for exps, coeff in p.terms():
        if any(e % 2 for e in exps.values()):
            return None
        signs.add(1 if coeff > 0 else -1)
    return signs.pop() if len(signs) == 1 else None


def _surface_sign(W: SymExpr) -> int | None:
    if W.is_constant():
        sign = definite_sign(W.coefficient(0, "s" if W.mode is Mode.POLY else "cosh"))
        return None if sign is None else -sign
    if W.mode is not Mode.POLY or W.coefficient(0, "s").is_zero():
        return None
    # even polynomial in s whose coefficients share one definite sign
    signs = set()
    for i, c in enumerate(W.coeffs):
        if c.is_zero():
            continue
        if i % 2:
            return None
        signs.add(definite_sign(c))
    return -signs.pop() if len(signs) == 1 and None not in signs else None


def curvature_bundle(spec: HelicoidalSpec) -> CurvatureBundle:
    fr = frame_t0(spec)
    E = minkowski_dot(fr.X_s, fr.X_s)
    F = minkowski_dot(fr.X_s, fr.X_t)
    G = minkowski_dot(fr.X_t, fr.X_t)
    W = E * G - F * F
    D_uu = det3(fr.X_s, fr.X_t, fr.X_ss)
    D_uv = det3(fr.X_s, fr.X_t, fr.X_st)
    D_vv = det3(fr.X_s, fr.X_t, fr.X_tt)
    H1 = G * D_uu - 2 * F * D_uv + E * D_vv
    K1 = D_uu * D_vv - D_uv * D_uv
    return CurvatureBundle(E, F, G, W, D_uu, D_uv, D_vv, H1, K1, _surface_sign(W), spec)


_H = ParamPoly.var("H")
_K = ParamPoly.var("K")


def condition_cmc_zero(b: CurvatureBundle) -> SymExpr:
    """``H = 0`` holds iff this vanishes."""
    return b.H1


def condition_cmc_nonzero(b: CurvatureBundle, sigma: int) -> SymExpr:
    """``4 H^2 sigma W^3 - H1^2``, where ``sigma W^3 = |W|^3`` (sigma = sign of W)."""
    if sigma not in (1, -1):
        raise ValueError("sigma must be +1 or -1")
    return b.W * b.W * b.W * (_H * _H * (4 * sigma)) - b.H1 * b.H1


def condition_cgc(b: CurvatureBundle, K=None) -> SymExpr:
    """``K W^2 + K1``; ``K`` defaults to the symbolic parameter."""
    K = _K if K is None else ParamPoly.coerce(K)
    if K.is_zero():
        return b.K1
    return b.W * b.W * K + b.K1


def condition_hk_equal(b: CurvatureBundle) -> SymExpr:
    """``H1^2 - 4 W K1``: equivalent to ``H^2 = K`` on a timelike surface (W < 0)."""
    return b.H1 * b.H1 - b.W * b.K1 * 4
