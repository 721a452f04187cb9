from fractions import Fraction

import pytest
import sympy as sp

from helicoidal.minkowski import AxisKind
from helicoidal.surface import (
    CircleLightlikeAxis,
    CircleSpacelikeAxis,
    CircleTimelikeAxis,
    HelicoidalSpec,
    HorizontalLine,
    IncompatibleCurve,
    PolyGraph,
    VerticalLine,
    build_curve,
    condition_cgc,
    condition_cmc_nonzero,
    condition_cmc_zero,
    condition_hk_equal,
    curvature_bundle,
    definite_sign,
)
from helicoidal.symbolic import ParamPoly

import oracle

T, S, L = AxisKind.TIMELIKE, AxisKind.SPACELIKE, AxisKind.LIGHTLIKE
h, r, lam, mu, c, theta, b = ParamPoly.vars("h r lambda mu c theta b")

SPECS = {
    "poly-timelike-m2": HelicoidalSpec(T, h, PolyGraph.symbolic(2)),
    "poly-spacelike-m2": HelicoidalSpec(S, h, PolyGraph.symbolic(2)),
    "poly-lightlike-m3": HelicoidalSpec(L, h, PolyGraph.symbolic(3)),
    "poly-concrete": HelicoidalSpec(T, Fraction(3, 2), PolyGraph((1, Fraction(-2, 3), 5))),
    "vline": HelicoidalSpec(T, h, VerticalLine(r)),
    "hline-spacelike": HelicoidalSpec(S, h, HorizontalLine(b)),
    "hline-lightlike": HelicoidalSpec(L, h, HorizontalLine(b)),
    "circle-timelike+": HelicoidalSpec(T, h, CircleTimelikeAxis(r, lam, mu, 1)),
    "circle-timelike-": HelicoidalSpec(T, h, CircleTimelikeAxis(r, lam, mu, -1)),
    "circle-spacelike+": HelicoidalSpec(S, h, CircleSpacelikeAxis(r, lam, mu, 1)),
    "circle-spacelike-": HelicoidalSpec(S, h, CircleSpacelikeAxis(r, lam, mu, -1)),
    "circle-lightlike": HelicoidalSpec(L, h, CircleLightlikeAxis(c, theta, lam, mu)),
}


@pytest.mark.parametrize("name", list(SPECS))
def test_bundle_matches_oracle(name):
    spec = SPECS[name]
    got = curvature_bundle(spec)
    want = oracle.bundle(spec)
    for key in ("E", "F", "G", "W", "H1", "K1"):
        assert oracle.same(oracle.to_sympy(getattr(got, key)), want[key]), key


@pytest.mark.parametrize("name", ["poly-timelike-m2", "circle-spacelike+", "circle-lightlike"])
def test_curve_matches_oracle(name):
    spec = SPECS[name]
    got = build_curve(spec.curve, spec.axis)
    want = oracle.curve(spec)
    for g, w in zip(got, want):
        assert oracle.same(oracle.to_sympy(g), w)


def test_conditions_follow_definitions():
    bundle = curvature_bundle(SPECS["poly-spacelike-m2"])
    W, H1, K1 = (oracle.to_sympy(getattr(bundle, k)) for k in ("W", "H1", "K1"))
    H, K = oracle.sym("H"), oracle.sym("K")
    assert oracle.same(oracle.to_sympy(condition_cmc_zero(bundle)), H1)
    for sigma in (1, -1):
        assert oracle.same(oracle.to_sympy(condition_cmc_nonzero(bundle, sigma)), 4 * H ** 2 * sigma * W ** 3 - H1 ** 2)
    assert oracle.same(oracle.to_sympy(condition_cgc(bundle)), K * W ** 2 + K1)
    assert oracle.same(oracle.to_sympy(condition_cgc(bundle, 0)), K1)
    assert oracle.same(oracle.to_sympy(condition_hk_equal(bundle)), H1 ** 2 - 4 * W * K1)
    with pytest.raises(ValueError):
        condition_cmc_nonzero(bundle, 0)


def test_hyperbolic_cylinder_metric():
    bundle = curvature_bundle(HelicoidalSpec(S, h, CircleSpacelikeAxis(r, 0, 0, 1)))
    assert bundle.W.is_constant()
    assert oracle.same(oracle.to_sympy(bundle.W), -oracle.sym("h") ** 2 * oracle.sym("r") ** 2)
    assert bundle.epsilon == 1


@pytest.mark.parametrize("a1, W", [(1, -h ** 2), (-1, -h ** 2)])
def test_timelike_ruled_metric_is_constant(a1, W):
    bundle = curvature_bundle(HelicoidalSpec(T, h, PolyGraph((ParamPoly.var("a0"), a1))))
    assert bundle.W.is_constant() and bundle.W.coefficient(0) == W
    assert bundle.epsilon == 1


def test_spacelike_ruled_metric():
    a0 = ParamPoly.var("a0")
    bundle = curvature_bundle(HelicoidalSpec(S, h, PolyGraph((a0, 1))))
    assert bundle.W.coefficient(0) == -a0 ** 2 and bundle.W.is_constant()


def test_epsilon_for_even_definite_metric():
    # W = -(h^2 + s^2) is negative everywhere: a timelike surface
    assert curvature_bundle(HelicoidalSpec(S, h, HorizontalLine(0))).epsilon == 1
    # W changes sign: no global causal character
    assert curvature_bundle(HelicoidalSpec(T, h, PolyGraph((0,)))).epsilon is None


def test_definite_sign():
    assert definite_sign(h ** 2 + 3 * r ** 4) == 1
    assert definite_sign(-h ** 2 - 1) == -1
    assert definite_sign(h ** 2 - r ** 2) is None
    assert definite_sign(h) is None
    assert definite_sign(ParamPoly()) is None


@pytest.mark.parametrize("curve, axis", [
    (VerticalLine(1), S),
    (HorizontalLine(0), T),
    (CircleTimelikeAxis(1), S),
    (CircleSpacelikeAxis(1), L),
    (CircleLightlikeAxis(1), T),
])
def test_incompatible_curves_rejected(curve, axis):
    with pytest.raises(IncompatibleCurve):
        HelicoidalSpec(axis, 1, curve)


def test_invalid_parameters_rejected():
    with pytest.raises(ValueError):
        HelicoidalSpec(T, 0, PolyGraph((1,)))
    with pytest.raises(ValueError):
        HelicoidalSpec(T, 1, VerticalLine(0))
    with pytest.raises(ValueError):
        HelicoidalSpec(S, 1, CircleSpacelikeAxis(1, branch=2))
    with pytest.raises(ValueError):
        HelicoidalSpec(L, 1, CircleLightlikeAxis(0))
    with pytest.raises(ValueError):
        PolyGraph(())


def test_float_parameters_become_exact():
    bundle = curvature_bundle(HelicoidalSpec(T, 0.5, PolyGraph((0.25, 1))))
    assert bundle.W.coefficient(0) == -Fraction(1, 4)
    assert sp.Rational(1, 4) == -oracle.to_sympy(bundle.W)
