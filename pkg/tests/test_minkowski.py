import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from helicoidal.minkowski import (
    AxisKind,
    CausalCharacter,
    MinkVec3,
    axis_projection,
    causal_character,
    det3,
    lorentz_cross,
    minkowski_dot,
    motion,
    motion_jet,
    orbit_radius,
    rational_rotation,
    RigidMotion,
    rotation_orbit,
)

import oracle

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=50)
vectors = st.builds(MinkVec3, rationals, rationals, rationals)
axes = st.sampled_from(list(AxisKind))


def test_metric_signature():
    e1, e2, e3 = MinkVec3(1, 0, 0), MinkVec3(0, 1, 0), MinkVec3(0, 0, 1)
    assert minkowski_dot(e1, e1) == 1
    assert minkowski_dot(e2, e2) == 1
    assert minkowski_dot(e3, e3) == -1
    assert minkowski_dot(e1, e3) == 0


@pytest.mark.parametrize("v, kind", [
    ((0, 0, 1), CausalCharacter.TIMELIKE),
    ((1, 0, 0), CausalCharacter.SPACELIKE),
    ((1, 0, 1), CausalCharacter.LIGHTLIKE),
    ((0, 0, 0), CausalCharacter.SPACELIKE),
    ((3, 4, 5), CausalCharacter.LIGHTLIKE),
])
def test_causal_character(v, kind):
    assert causal_character(MinkVec3(*v)) is kind


def test_causal_character_tolerance():
    assert causal_character(MinkVec3(1.0, 0.0, 1.0 + 1e-12), tol=1e-9) is CausalCharacter.LIGHTLIKE
    assert causal_character(MinkVec3(1e-12, 0.0, 0.0), tol=1e-9) is CausalCharacter.SPACELIKE


def test_axis_directions():
    assert causal_character(AxisKind.TIMELIKE.direction) is CausalCharacter.TIMELIKE
    assert causal_character(AxisKind.SPACELIKE.direction) is CausalCharacter.SPACELIKE
    assert causal_character(AxisKind.LIGHTLIKE.direction) is CausalCharacter.LIGHTLIKE


def test_cross_of_basis_vectors():
    # e1 x e2 must be the vector whose metric dual is det(e1, e2, .)
    assert lorentz_cross(MinkVec3(1, 0, 0), MinkVec3(0, 1, 0)) == MinkVec3(0, 0, -1)
    assert lorentz_cross(MinkVec3(0, 1, 0), MinkVec3(0, 0, 1)) == MinkVec3(1, 0, 0)


@settings(max_examples=300, deadline=None)
@given(vectors, vectors, vectors)
def test_cross_product_identity(u, v, w):
    assert minkowski_dot(lorentz_cross(u, v), w) == det3(u, v, w)


@settings(max_examples=200, deadline=None)
@given(vectors, vectors)
def test_cross_product_orthogonal_and_antisymmetric(u, v):
    x = lorentz_cross(u, v)
    assert minkowski_dot(x, u) == 0 and minkowski_dot(x, v) == 0
    assert lorentz_cross(v, u) == -x


@settings(max_examples=200, deadline=None)
@given(vectors, vectors)
def test_cross_product_norm(u, v):
    # <u x v, u x v> = -(<u,u><v,v> - <u,v>^2)
    x = lorentz_cross(u, v)
    gram = minkowski_dot(u, u) * minkowski_dot(v, v) - minkowski_dot(u, v) ** 2
    assert minkowski_dot(x, x) == -gram


def test_float_components_must_be_finite():
    with pytest.raises(ValueError):
        MinkVec3(float("nan"), 0.0, 0.0)


def test_pitch_zero_refused():
    with pytest.raises(ValueError):
        motion(AxisKind.TIMELIKE, 0, 1.0)
    assert motion(AxisKind.TIMELIKE, 0, 0, allow_rotation=True).linear[2][2] == 1


def test_lightlike_translation_cubic():
    phi = motion(AxisKind.LIGHTLIKE, 3, Fraction(1))
    assert phi.translation == MinkVec3(-2, 3, 4)


def test_lightlike_motion_matches_oracle():
    p = sp.Matrix(sp.symbols("x y z"))
    expected = oracle.motion(AxisKind.LIGHTLIKE, p, Fraction(2, 3), h=5)
    got = motion(AxisKind.LIGHTLIKE, 5, Fraction(2, 3))(MinkVec3(*p))
    assert all(sp.expand(a - b) == 0 for a, b in zip(got, expected))


@settings(max_examples=200, deadline=None)
@given(rationals, rationals, vectors, vectors)
def test_lightlike_motion_is_exact_isometry(h, t, p, q):
    if h == 0:
        h = Fraction(1)
    phi = motion(AxisKind.LIGHTLIKE, h, t)
    assert phi.preserves_metric()
    d0 = p - q
    d1 = phi(p) - phi(q)
    assert minkowski_dot(d1, d1) == minkowski_dot(d0, d0)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([AxisKind.TIMELIKE, AxisKind.SPACELIKE]),
       st.fractions(min_value=Fraction(-9, 10), max_value=Fraction(9, 10), max_denominator=40),
       rationals, vectors, vectors)
def test_rational_rotations_are_exact_isometries(axis, tau, h, p, q):
    m = RigidMotion(rational_rotation(axis, tau), MinkVec3(h, 0, h) if axis is AxisKind.SPACELIKE else MinkVec3(0, 0, h))
    assert m.preserves_metric()
    d0, d1 = p - q, m(p) - m(q)
    assert minkowski_dot(d1, d1) == minkowski_dot(d0, d0)
    # the axis direction is fixed by the rotation part
    fixed = RigidMotion(m.linear, MinkVec3(0, 0, 0))(axis.direction)
    assert fixed == axis.direction


@pytest.mark.parametrize("axis", [AxisKind.TIMELIKE, AxisKind.SPACELIKE])
def test_float_motion_isometry(axis):
    phi = motion(axis, 1.5, 0.8)
    assert phi.preserves_metric(tol=1e-12)


@pytest.mark.parametrize("axis", list(AxisKind))
def test_group_law(axis):
    a, b = Fraction(1, 3), Fraction(-5, 7)
    if axis is AxisKind.LIGHTLIKE:
        lhs = motion(axis, 2, a).compose(motion(axis, 2, b))
        assert lhs == motion(axis, 2, a + b)
    else:
        lhs = motion(axis, 2, float(a)).compose(motion(axis, 2, float(b)))
        rhs = motion(axis, 2, float(a + b))
        p = MinkVec3(0.3, -1.2, 0.7)
        assert all(math.isclose(x, y, abs_tol=1e-12) for x, y in zip(lhs(p), rhs(p)))


@pytest.mark.parametrize("axis", list(AxisKind))
def test_motion_jet_is_derivative_at_zero(axis):
    t = sp.Symbol("t")
    p = sp.Matrix(sp.symbols("x y z"))
    hh = sp.Symbol("h")
    X = oracle.motion(axis, p, t, h=hh)
    jet = motion_jet(axis, hh)

    def apply(A, v):
        return sp.Matrix([sum(A[i][k] * p[k] for k in range(3)) + v[i] for i in range(3)])

    d1 = X.diff(t).subs(t, 0)
    d2 = X.diff(t, 2).subs(t, 0)
    assert sp.expand(d1 - apply(jet.A1, tuple(jet.v1))) == sp.zeros(3, 1)
    assert sp.expand(d2 - apply(jet.A2, tuple(jet.v2))) == sp.zeros(3, 1)


def test_lightlike_orbit_stays_in_plane():
    p = MinkVec3(1, 0, 3)
    for k in range(6):
        q = rotation_orbit(AxisKind.LIGHTLIKE, p, Fraction(k, 2))
        assert q.x - q.z == -2


@settings(max_examples=100, deadline=None)
@given(axes, vectors, st.fractions(min_value=-2, max_value=2, max_denominator=10))
def test_orbit_radius_invariant(axis, p, t):
    if axis is AxisKind.LIGHTLIKE:
        q = rotation_orbit(axis, p, t)
        assert orbit_radius(axis, q) == orbit_radius(axis, p)
    else:
        q = rotation_orbit(axis, MinkVec3(*(float(c) for c in p)), float(t))
        assert math.isclose(orbit_radius(axis, q), float(orbit_radius(axis, p)), rel_tol=1e-9, abs_tol=1e-9)


def test_axis_projection():
    p = MinkVec3(2, 3, 5)
    assert axis_projection(AxisKind.TIMELIKE, p) == MinkVec3(0, 0, 5)
    assert axis_projection(AxisKind.SPACELIKE, p) == MinkVec3(2, 0, 0)
    with pytest.raises(ValueError):
        axis_projection(AxisKind.LIGHTLIKE, p)
