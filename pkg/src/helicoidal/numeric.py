"""Floating-point evaluation of helicoidal surfaces and their curvature.

Derivatives are closed form: ``X(s, t) = R(t) gamma(s) + T(t)`` so every
partial derivative is a product of a derivative of the rotation/translation
and a derivative of the generating curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .minkowski import AxisKind, MinkVec3
from .surface import (
    CircleLightlikeAxis,
    CircleSpacelikeAxis,
    CircleTimelikeAxis,
    HelicoidalSpec,
    HorizontalLine,
    PolyGraph,
    VerticalLine,
)

DEGENERATE_TOL = 1e-12
METRIC = np.diag([1.0, 1.0, -1.0])


class DegenerateMetric(ValueError):
    """The induced metric is degenerate (|W| <= 1e-12) at the requested point."""


def _f(v) -> float:
    if isinstance(v, (int, float, Fraction)):
        return float(v)
    raise TypeError(f"numeric evaluation needs concrete parameters, got {v!r}")


def mdot(u: np.ndarray, v: np.ndarray) -> float:
    return float(u[0] * v[0] + u[1] * v[1] - u[2] * v[2])


def mcross(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.array([
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        -(u[0] * v[1] - u[1] * v[0]),
    ])


# -- generating curve --------------------------------------------------------

def curve_jet(spec: HelicoidalSpec, s: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``gamma(s), gamma'(s), gamma''(s)``."""
    c = spec.curve
    axis = spec.axis
    if isinstance(c, PolyGraph):
        a = [_f(x) for x in c.coefficients]
        f = sum(an * s ** n for n, an in enumerate(a))
        f1 = sum(n * an * s ** (n - 1) for n, an in enumerate(a) if n >= 1)
        f2 = sum(n * (n - 1) * an * s ** (n - 2) for n, an in enumerate(a) if n >= 2)
        if axis is AxisKind.TIMELIKE:
            return np.array([s, 0.0, f]), np.array([1.0, 0.0, f1]), np.array([0.0, 0.0, f2])
        if axis is AxisKind.SPACELIKE:
            return np.array([0.0, s, f]), np.array([0.0, 1.0, f1]), np.array([0.0, 0.0, f2])
        return np.array([f, s, f]), np.array([f1, 1.0, f1]), np.array([f2, 0.0, f2])
    if isinstance(c, VerticalLine):
        return np.array([_f(c.r), 0.0, s]), np.array([0.0, 0.0, 1.0]), np.zeros(3)
    if isinstance(c, HorizontalLine):
        b = _f(c.b)
        if axis is AxisKind.SPACELIKE:
            return np.array([0.0, b, s]), np.array([0.0, 0.0, 1.0]), np.zeros(3)
        return np.array([s, b, s]), np.array([1.0, 0.0, 1.0]), np.zeros(3)
    if isinstance(c, (CircleTimelikeAxis, CircleSpacelikeAxis)):
        r, lam, mu = _f(c.r), _f(c.lam), _f(c.mu)
        u = s + _f(c.theta)
        ch, sh = r * math.cosh(u), r * math.sinh(u)
        p, q = (ch, sh) if c.branch == 1 else (sh, ch)
        # derivatives swap cosh and sinh; the second derivative returns to the start
        planar = [(lam + p, mu + q), (q, p), (p, q)]
        if isinstance(c, CircleTimelikeAxis):
            return tuple(np.array([x, 0.0, z]) for x, z in planar)  # type: ignore[return-value]
        return tuple(np.array([0.0, y, z]) for y, z in planar)  # type: ignore[return-value]
    if isinstance(c, CircleLightlikeAxis):
        cc, lam, mu = _f(c.c), _f(c.lam), _f(c.mu)
        M = rotation(AxisKind.LIGHTLIKE, _f(c.theta))
        base = [np.array([cc * s * s / 2, cc * s, cc * s * s / 2]),
                np.array([cc * s, cc, cc * s]),
                np.array([cc, 0.0, cc])]
        return M @ base[0] + np.array([lam, mu, lam]), M @ base[1], M @ base[2]
    raise TypeError(f"unknown curve type {type(c).__name__}")


# -- motion ------------------------------------------------------------------

def rotation(axis: AxisKind, t: float, order: int = 0) -> np.ndarray:
    """``order``-th derivative in ``t`` of the rotation part (order 0..2)."""
    if axis is AxisKind.TIMELIKE:
        c, s = math.cos(t), math.sin(t)
        blocks = [((c, -s), (s, c)), ((-s, -c), (c, -s)), ((-c, s), (-s, -c))]
        m = np.zeros((3, 3))
        m[:2, :2] = blocks[order]
        if order == 0:
            m[2, 2] = 1.0
        return m
    if axis is AxisKind.SPACELIKE:
        ch, sh = math.cosh(t), math.sinh(t)
        blocks = [((ch, sh), (sh, ch)), ((sh, ch), (ch, sh)), ((ch, sh), (sh, ch))]
        m = np.zeros((3, 3))
        m[1:, 1:] = blocks[order]
        if order == 0:
            m[0, 0] = 1.0
        return m
    if order == 0:
        return np.array([[1 - t * t / 2, t, t * t / 2], [-t, 1.0, t], [-t * t / 2, t, 1 + t * t / 2]])
    if order == 1:
        return np.array([[-t, 1.0, t], [-1.0, 0.0, 1.0], [-t, 1.0, t]])
    return np.array([[-1.0, 0.0, 1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 1.0]])


def translation(axis: AxisKind, h: float, t: float, order: int = 0) -> np.ndarray:
    if axis is AxisKind.TIMELIKE:
        return np.array([0.0, 0.0, (h * t, h, 0.0)[order]])
    if axis is AxisKind.SPACELIKE:
        return np.array([(h * t, h, 0.0)[order], 0.0, 0.0])
    if order == 0:
        return h * np.array([t ** 3 / 3 - t, t * t, t ** 3 / 3 + t])
    if order == 1:
        return h * np.array([t * t - 1, 2 * t, t * t + 1])
    return h * np.array([2 * t, 2.0, 2 * t])


def _point(spec: HelicoidalSpec, s: float, t: float) -> np.ndarray:
    g, _, _ = curve_jet(spec, s)
    return rotation(spec.axis, t) @ g + translation(spec.axis, _f(spec.h), t)


def eval_surface(spec: HelicoidalSpec, s: float, t: float) -> MinkVec3:
    return MinkVec3(*(float(v) for v in _point(spec, float(s), float(t))))


# -- frames ------------------------------------------------------------------

@dataclass(frozen=True)
class NumericFrame:
    X: MinkVec3
    X_s: MinkVec3
    X_t: MinkVec3
    X_ss: MinkVec3
    X_st: MinkVec3
    X_tt: MinkVec3
    N: MinkVec3
    E: float
    F: float
    G: float
    e: float
    f: float
    g: float
    W: float
    epsilon: int

    @property
    def H(self) -> float:
        return self.epsilon * 0.5 * (self.e * self.G - 2 * self.f * self.F + self.g * self.E) / self.W

    @property
    def K(self) -> float:
        return self.epsilon * (self.e * self.g - self.f * self.f) / self.W

    def derivatives(self) -> dict[str, np.ndarray]:
        return {k: np.array(getattr(self, k).astuple()) for k in ("X_s", "X_t", "X_ss", "X_st", "X_tt")}


def _frame(X, Xs, Xt, Xss, Xst, Xtt) -> NumericFrame:
    E, F, G = mdot(Xs, Xs), mdot(Xs, Xt), mdot(Xt, Xt)
    W = E * G - F * F
    if abs(W) <= DEGENERATE_TOL:
        raise DegenerateMetric(f"induced metric is degenerate (W = {W:.3e})")
    eps = -1 if W > 0 else 1
    N = mcross(Xs, Xt) / math.sqrt(abs(W))
    vec = lambda a: MinkVec3(*(float(x) for x in a))  # noqa: E731
    return NumericFrame(
        vec(X), vec(Xs), vec(Xt), vec(Xss), vec(Xst), vec(Xtt), vec(N),
        E, F, G, mdot(N, Xss), mdot(N, Xst), mdot(N, Xtt), W, eps,
    )


def numeric_frame(spec: HelicoidalSpec, s: float, t: float) -> NumericFrame:
    s, t = float(s), float(t)
    g, g1, g2 = curve_jet(spec, s)
    h = _f(spec.h)
    R0, R1, R2 = (rotation(spec.axis, t, k) for k in range(3))
    return _frame(
        R0 @ g + translation(spec.axis, h, t),
        R0 @ g1,
        R1 @ g + translation(spec.axis, h, t, 1),
        R0 @ g2,
        R1 @ g1,
        R2 @ g + translation(spec.axis, h, t, 2),
    )


def fd_oracle(spec: HelicoidalSpec, s: float, t: float, step: float = 1e-4) -> NumericFrame:
    """Frame from central differences of ``eval_surface``; a test oracle."""
    if not 1e-6 <= step <= 1e-3:
        raise ValueError("finite-difference step must lie in [1e-6, 1e-3]")
    s, t, d = float(s), float(t), step
    X = lambda ds, dt: _point(spec, s + ds * d, t + dt * d)  # noqa: E731
    c = X(0, 0)
    return _frame(
        c,
        (X(1, 0) - X(-1, 0)) / (2 * d),
        (X(0, 1) - X(0, -1)) / (2 * d),
        (X(1, 0) - 2 * c + X(-1, 0)) / (d * d),
        (X(1, 1) - X(1, -1) - X(-1, 1) + X(-1, -1)) / (4 * d * d),
        (X(0, 1) - 2 * c + X(0, -1)) / (d * d),
    )


def numeric_curvatures(spec: HelicoidalSpec, s: float, t: float) -> tuple[float, float]:
    """``(H, K)``; the sign of ``H`` follows the normal ``X_s x X_t``."""
    fr = numeric_frame(spec, s, t)
    return fr.H, fr.K


# -- Weingarten map ------------------------------------------------------------

@dataclass(frozen=True)
class WeingartenMatrix:
    A: np.ndarray
    epsilon: int

    @property
    def trace(self) -> float:
        return float(np.trace(self.A))

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.A))

    @property
    def discriminant(self) -> float:
        return (self.trace / 2) ** 2 - self.det

    @property
    def deviation(self) -> float:
        """Distance from the umbilic form ``(trace/2) I``."""
        return float(np.linalg.norm(self.A - self.trace / 2 * np.eye(2)))

    @property
    def non_diagonalizable(self) -> bool:
        return abs(self.discriminant) < 1e-8 and self.deviation > 1e-6


def weingarten(spec: HelicoidalSpec, s: float, t: float) -> WeingartenMatrix:
    fr = numeric_frame(spec, s, t)
    first = np.array([[fr.E, fr.F], [fr.F, fr.G]])
    second = np.array([[fr.e, fr.f], [fr.f, fr.g]])
    return WeingartenMatrix(second @ np.linalg.inv(first), fr.epsilon)


# -- sampling ------------------------------------------------------------------

def sample_grid(spec: HelicoidalSpec, s_range: tuple[float, float], t_range: tuple[float, float],
                n_s: int, n_t: int) -> np.ndarray:
    """``(n_s * n_t, 3)`` points; the point for ``(i, j)`` is row ``i * n_t + j``."""
    if n_s < 2 or n_t < 2:
        raise ValueError("grid needs at least 2 samples in each direction")
    if s_range[0] >= s_range[1] or t_range[0] >= t_range[1]:
        raise ValueError("sample ranges must satisfy min < max")
    ss = np.linspace(*s_range, n_s)
    ts = np.linspace(*t_range, n_t)
    return np.array([_point(spec, float(s), float(t)) for s in ss for t in ts])


def grid_triangles(n_s: int, n_t: int) -> list[tuple[int, int, int]]:
    """Zero-based triangles of the grid, two per quad, ordered by increasing ``(s, t)``."""
    tris = []
    for i in range(n_s - 1):
        for j in range(n_t - 1):
            a, b = i * n_t + j, (i + 1) * n_t + j
            tris.append((a, b, b + 1))
            tris.append((a, b + 1, a + 1))
    return tris
