"""Linear algebra of Lorentz-Minkowski 3-space with metric ``xx' + yy' - zz'``.

Everything here is generic over the scalar type: exact rationals
(``int``/``Fraction``), floats, or symbolic ring elements (``ParamPoly``,
``SymExpr``) all work, as long as they support ``+ - *``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, Sequence

Matrix3 = tuple[tuple[Any, Any, Any], tuple[Any, Any, Any], tuple[Any, Any, Any]]


@dataclass(frozen=True)
class MinkVec3:
    x: Any
    y: Any
    z: Any

    def __post_init__(self):
        for v in (self.x, self.y, self.z):
            if isinstance(v, float) and not math.isfinite(v):
                raise ValueError("MinkVec3 components must be finite")

    def __iter__(self) -> Iterator:
        return iter((self.x, self.y, self.z))

    def __add__(self, other: "MinkVec3") -> "MinkVec3":
        return MinkVec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "MinkVec3") -> "MinkVec3":
        return MinkVec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "MinkVec3":
        return MinkVec3(-self.x, -self.y, -self.z)

    def __mul__(self, k) -> "MinkVec3":
        return MinkVec3(self.x * k, self.y * k, self.z * k)

    __rmul__ = __mul__

    def astuple(self) -> tuple:
        return (self.x, self.y, self.z)


def vec(x, y, z) -> MinkVec3:
    return MinkVec3(x, y, z)


class CausalCharacter(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


class AxisKind(enum.Enum):
    """Canonical helicoidal axes: <(0,0,1)>, <(1,0,0)>, <(1,0,1)>."""

    TIMELIKE = "timelike"
    SPACELIKE = "spacelike"
    LIGHTLIKE = "lightlike"

    @property
    def direction(self) -> MinkVec3:
        return {
            AxisKind.TIMELIKE: MinkVec3(0, 0, 1),
            AxisKind.SPACELIKE: MinkVec3(1, 0, 0),
            AxisKind.LIGHTLIKE: MinkVec3(1, 0, 1),
        }[self]


def minkowski_dot(u: MinkVec3, v: MinkVec3):
    return u.x * v.x + u.y * v.y - u.z * v.z


def causal_character(v: MinkVec3, tol: float = 0.0) -> CausalCharacter:
    """Causal type of ``v``; the zero vector counts as spacelike."""
    q = minkowski_dot(v, v)
    if q > tol:
        return CausalCharacter.SPACELIKE
    if q < -tol:
        return CausalCharacter.TIMELIKE
    is_zero = all(abs(c) <= tol for c in v) if tol else all(c == 0 for c in v)
    if is_zero:
        return CausalCharacter.SPACELIKE
    return CausalCharacter.LIGHTLIKE


def lorentz_cross(u: MinkVec3, v: MinkVec3) -> MinkVec3:
    """The vector ``w'`` with ``<w', w> = det(u, v, w)`` for every ``w``."""
    return MinkVec3(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        -(u.x * v.y - u.y * v.x),
    )


def det3(u: MinkVec3, v: MinkVec3, w: MinkVec3):
    """Ordinary determinant of the matrix with rows ``u, v, w``."""
    return (u.x * (v.y * w.z - v.z * w.y)
            - u.y * (v.x * w.z - v.z * w.x)
            + u.z * (v.x * w.y - v.y * w.x))


def matvec(m: Sequence[Sequence], v: MinkVec3) -> MinkVec3:
    x, y, z = v.x, v.y, v.z
    return MinkVec3(*(_dot3(row, (x, y, z)) for row in m))


def _dot3(row, v):
    total = None
    for a, b in zip(row, v):
        if isinstance(a, int) and a == 0:
            term = b * 0
        elif isinstance(a, int) and a == 1:
            term = b
        else:
            term = a * b
        total = term if total is None else total + term
    return total


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix3:
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(1, 3)), a[i][0] * b[0][j]) for j in range(3))
        for i in range(3)
    )  # type: ignore[return-value]


IDENTITY: Matrix3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
METRIC: Matrix3 = ((1, 0, 0), (0, 1, 0), (0, 0, -1))


@dataclass(frozen=True)
class RigidMotion:
    """``p -> linear @ p + translation``."""

    linear: Matrix3
    translation: MinkVec3

    def __call__(self, p: MinkVec3) -> MinkVec3:
        return matvec(self.linear, p) + self.translation

    def compose(self, other: "RigidMotion") -> "RigidMotion":
        """``self ∘ other``."""
        return RigidMotion(matmul(self.linear, other.linear), self(other.translation))

    def preserves_metric(self, tol: float = 0.0) -> bool:
        basis = [MinkVec3(1, 0, 0), MinkVec3(0, 1, 0), MinkVec3(0, 0, 1)]
        for u in basis:
            for v in basis:
                d = minkowski_dot(matvec(self.linear, u), matvec(self.linear, v)) - minkowski_dot(u, v)
                if (abs(d) > tol) if tol else d != 0:
                    return False
        return True


def lightlike_rotation(t) -> Matrix3:
    """Linear part of the lightlike-axis group; polynomial in ``t`` so valid for any ring."""
    half_t2 = t * t * Fraction(1, 2) if not isinstance(t, float) else 0.5 * t * t
    return (
        (1 - half_t2, t, half_t2),
        (-t, 1, t),
        (-half_t2, t, 1 + half_t2),
    )


def _is_exact(t) -> bool:
    return isinstance(t, (int, Fraction))


def rotation_matrix(axis: AxisKind, t) -> Matrix3:
    if axis is AxisKind.LIGHTLIKE:
        return lightlike_rotation(t)
    if _is_exact(t) and t == 0:
        return IDENTITY
    t = float(t)
    if axis is AxisKind.TIMELIKE:
        c, s = math.cos(t), math.sin(t)
        return ((c, -s, 0.0), (s, c, 0.0), (0.0, 0.0, 1.0))
    ch, sh = math.cosh(t), math.sinh(t)
    return ((1.0, 0.0, 0.0), (0.0, ch, sh), (0.0, sh, ch))


def rational_rotation(axis: AxisKind, tau) -> Matrix3:
    """Exact rotation matrix from a rational parameter.

    Timelike axis: ``tau = tan(t/2)``; spacelike axis: ``tau = tanh(t/2)``
    (``|tau| < 1``); lightlike axis: ``tau = t`` itself.
    """
    tau = Fraction(tau)
    if axis is AxisKind.TIMELIKE:
        d = 1 + tau * tau
        c, s = (1 - tau * tau) / d, 2 * tau / d
        return ((c, -s, 0), (s, c, 0), (0, 0, 1))
    if axis is AxisKind.SPACELIKE:
        if abs(tau) >= 1:
            raise ValueError("tanh(t/2) must lie in (-1, 1)")
        d = 1 - tau * tau
        ch, sh = (1 + tau * tau) / d, 2 * tau / d
        return ((1, 0, 0), (0, ch, sh), (0, sh, ch))
    return lightlike_rotation(tau)


def motion_translation(axis: AxisKind, h, t) -> MinkVec3:
    if axis is AxisKind.TIMELIKE:
        return MinkVec3(0 * h, 0 * h, h * t)
    if axis is AxisKind.SPACELIKE:
        return MinkVec3(h * t, 0 * h, 0 * h)
    third = Fraction(1, 3) if _is_exact(t) else 1.0 / 3.0
    t3 = t * t * t * third
    return MinkVec3(h * (t3 - t), h * t * t, h * (t3 + t))


def motion(axis: AxisKind, h, t, *, allow_rotation: bool = False) -> RigidMotion:
    """The helicoidal motion ``phi_t`` with pitch ``h`` about the canonical axis.

    Exact for the lightlike axis with rational ``t`` (and for ``t == 0``);
    floating point otherwise.  ``h == 0`` is a pure rotation and is refused
    unless ``allow_rotation`` is set.
    """
    if h == 0 and not allow_rotation:
        raise ValueError("pitch h must be nonzero for a helicoidal motion group")
    return RigidMotion(rotation_matrix(axis, t), motion_translation(axis, h, t))


@dataclass(frozen=True)
class MotionJet:
    """First and second ``t``-derivatives of ``phi_t`` at ``t = 0``."""

    A1: Matrix3
    v1: MinkVec3
    A2: Matrix3
    v2: MinkVec3


def motion_jet(axis: AxisKind, h) -> MotionJet:
    z = h * 0
    if axis is AxisKind.TIMELIKE:
        return MotionJet(
            ((0, -1, 0), (1, 0, 0), (0, 0, 0)), MinkVec3(z, z, h),
            ((-1, 0, 0), (0, -1, 0), (0, 0, 0)), MinkVec3(z, z, z),
        )
    if axis is AxisKind.SPACELIKE:
        return MotionJet(
            ((0, 0, 0), (0, 0, 1), (0, 1, 0)), MinkVec3(h, z, z),
            ((0, 0, 0), (0, 1, 0), (0, 0, 1)), MinkVec3(z, z, z),
        )
    return MotionJet(
        ((0, 1, 0), (-1, 0, 1), (0, 1, 0)), MinkVec3(-h, z, h),
        ((-1, 0, 1), (0, 0, 0), (-1, 0, 1)), MinkVec3(z, 2 * h, z),
    )


def rotation_orbit(axis: AxisKind, p: MinkVec3, t) -> MinkVec3:
    """Point ``p`` moved by the rotation group (pitch 0) about ``axis``."""
    return motion(axis, 0, t, allow_rotation=True)(p)


def axis_projection(axis: AxisKind, p: MinkVec3) -> MinkVec3:
    """Metric projection onto a non-null canonical axis."""
    d = axis.direction
    dd = minkowski_dot(d, d)
    if dd == 0:
        raise ValueError("a lightlike axis has no metric projection")
    # canonical non-null axes have <d, d> = +-1, so 1/<d, d> = <d, d>
    return d * (minkowski_dot(p, d) * dd)


def orbit_radius(axis: AxisKind, p: MinkVec3):
    """Squared causal distance to the axis, preserved by the rotation group.

    For the lightlike axis there is no metric projection; ``<p, p>`` is used
    instead, which is also preserved because the axis passes through the origin.
    """
    if axis is AxisKind.LIGHTLIKE:
        return minkowski_dot(p, p)
    q = p - axis_projection(axis, p)
    return minkowski_dot(q, q)
