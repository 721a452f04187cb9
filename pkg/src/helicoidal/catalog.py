"""Named helicoidal surfaces with known curvature, checked by exact substitution."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .minkowski import AxisKind
from .solver import RatFunc
from .surface import (
    CircleSpacelikeAxis,
    CurvatureBundle,
    HelicoidalSpec,
    HorizontalLine,
    PolyGraph,
    VerticalLine,
    curvature_bundle,
)
from .symbolic import ParamPoly

h, r, a0, b = ParamPoly.vars("h r a0 b")
ONE = ParamPoly.const(1)


@dataclass(frozen=True)
class Expected:
    """Known curvature data.

    ``H2`` and ``K`` are exact rational functions of the parameters, or None
    when the quantity is not constant on the surface.  ``epsilon`` is None when
    the causal character changes from point to point.
    """

    H2: RatFunc | None
    K: RatFunc | None
    epsilon: int | None
    ruled: bool = False
    hk_equal: bool = False

    @property
    def minimal(self) -> bool:
        return self.H2 is not None and self.H2.num.is_zero()


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[[dict[str, Any]], HelicoidalSpec] = field(repr=False)
    defaults: dict[str, Fraction]
    s_range: tuple[float, float]
    t_range: tuple[float, float]
    expected: Expected
    description: str = ""

    def spec(self, **values) -> HelicoidalSpec:
        """Concrete spec; unspecified parameters take their default values."""
        params = {k: Fraction(v) for k, v in self.defaults.items()}
        for k, v in values.items():
            if k not in params:
                raise KeyError(f"{self.name} has no parameter {k!r}")
            params[k] = Fraction(v)
        return self.build(params)

    def symbolic_spec(self) -> HelicoidalSpec:
        return self.build({k: ParamPoly.var(k) for k in self.defaults})

    def value(self, which: str, **values) -> float | None:
        """Float value of ``|H|`` ("H") or ``K`` ("K") for concrete parameters."""
        rf = self.expected.H2 if which == "H" else self.expected.K
        if rf is None:
            return None
        params = {k: Fraction(v) for k, v in {**self.defaults, **values}.items()}
        v = rf.num.evaluate(params) / rf.den.evaluate(params)
        return float(v) ** 0.5 if which == "H" else float(v)


def _poly(axis: AxisKind, coeffs: Callable[[dict], tuple]) -> Callable[[dict], HelicoidalSpec]:
    return lambda p: HelicoidalSpec(axis, p["h"], PolyGraph(coeffs(p)))


T, S, L = AxisKind.TIMELIKE, AxisKind.SPACELIKE, AxisKind.LIGHTLIKE
ZERO = RatFunc.of(0)

CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry(
        "helicoid_first_kind", _poly(T, lambda p: (p["a0"],)),
        {"h": Fraction(1), "a0": Fraction(0)}, (-2.5, 2.5), (-3.0, 3.0),
        Expected(ZERO, None, None, ruled=True),
        "X = (s cos t, s sin t, ht + a0)",
    ),
    CatalogEntry(
        "helicoid_second_kind", _poly(S, lambda p: (0,)),
        {"h": Fraction(1)}, (-2.5, 2.5), (-1.5, 1.5),
        Expected(ZERO, None, None, ruled=True),
        "y-axis swept about the spacelike axis",
    ),
    CatalogEntry(
        "helicoid_third_kind", lambda p: HelicoidalSpec(S, p["h"], HorizontalLine(0)),
        {"h": Fraction(1)}, (-2.5, 2.5), (-1.5, 1.5),
        Expected(ZERO, None, 1, ruled=True),
        "z-axis swept about the spacelike axis",
    ),
    CatalogEntry(
        "cayley", _poly(L, lambda p: (p["a0"],)),
        {"h": Fraction(1), "a0": Fraction(0)}, (0.25, 2.5), (-1.5, 1.5),
        Expected(ZERO, None, None, ruled=True),
        "Cayley surface (Lie's minimal surface), gamma = (a0, s, a0)",
    ),
    CatalogEntry(
        "parabolic_null_cylinder", lambda p: HelicoidalSpec(L, p["h"], HorizontalLine(p["b"])),
        {"h": Fraction(1), "b": Fraction(0)}, (-2.5, 2.5), (-1.5, 1.5),
        Expected(ZERO, ZERO, 1, ruled=True),
        "gamma = (s, b, s) about the lightlike axis",
    ),
    CatalogEntry(
        "timelike_ruled", _poly(T, lambda p: (p["a0"], 1)),
        {"h": Fraction(1), "a0": Fraction(0)}, (-2.5, 2.5), (-3.0, 3.0),
        Expected(RatFunc(ONE, h ** 2), RatFunc(ONE, h ** 2), 1, ruled=True, hk_equal=True),
        "X = (s cos t, s sin t, s + a0 + ht)",
    ),
    CatalogEntry(
        "spacelike_ruled", _poly(S, lambda p: (p["a0"], 1)),
        {"h": Fraction(1), "a0": Fraction(1)}, (-2.5, 2.5), (-1.5, 1.5),
        Expected(ZERO, ZERO, 1, ruled=True, hk_equal=True),
        "X = (ht, (s + a0) sinh t + s cosh t, (s + a0) cosh t + s sinh t), a0 != 0",
    ),
    CatalogEntry(
        "hyperbolic_cylinder_plus",
        lambda p: HelicoidalSpec(S, p["h"], CircleSpacelikeAxis(p["r"], 0, 0, 1)),
        {"h": Fraction(1), "r": Fraction(1)}, (-2.0, 2.0), (-1.5, 1.5),
        Expected(RatFunc(ONE, 4 * r ** 2), ZERO, 1, ruled=True),
        "y^2 - z^2 = r^2, timelike",
    ),
    CatalogEntry(
        "hyperbolic_cylinder_minus",
        lambda p: HelicoidalSpec(S, p["h"], CircleSpacelikeAxis(p["r"], 0, 0, -1)),
        {"h": Fraction(1), "r": Fraction(1)}, (-2.0, 2.0), (-1.5, 1.5),
        Expected(RatFunc(ONE, 4 * r ** 2), ZERO, -1),
        "y^2 - z^2 = -r^2, spacelike",
    ),
)

LORENTZIAN_CYLINDER = CatalogEntry(
    "lorentzian_cylinder", lambda p: HelicoidalSpec(T, p["h"], VerticalLine(p["r"])),
    {"h": Fraction(1), "r": Fraction(1)}, (-2.0, 2.0), (-3.0, 3.0),
    Expected(RatFunc(ONE, 4 * r ** 2), ZERO, 1, ruled=True),
    "x^2 + y^2 = r^2",
)

# everything that can be meshed or sampled by name
SURFACES: dict[str, CatalogEntry] = {e.name: e for e in (*CATALOG, LORENTZIAN_CYLINDER)}


def get_surface(name: str) -> CatalogEntry:
    try:
        return SURFACES[name]
    except KeyError:
        raise KeyError(f"unknown surface {name!r}; known: {', '.join(sorted(SURFACES))}") from None


@dataclass(frozen=True)
class CatalogCheck:
    entry: CatalogEntry
    passed: bool
    failures: tuple[str, ...] = ()


def _check_bundle(bundle: CurvatureBundle, exp: Expected) -> list[str]:
    bad = []
    if exp.epsilon is not None and bundle.epsilon != exp.epsilon:
        bad.append(f"epsilon {bundle.epsilon} != {exp.epsilon}")
    if exp.H2 is not None:
        if exp.minimal:
            ok = bundle.H1.is_zero()
        else:
            sigma = -exp.epsilon
            # H^2 = n/d  <=>  4 sigma W^3 n - d H1^2 = 0
            ok = (bundle.W * bundle.W * bundle.W * (4 * sigma * exp.H2.num)
                  - bundle.H1 * bundle.H1 * exp.H2.den).is_zero()
        if not ok:
            bad.append("H")
    if exp.K is not None:
        # K = n/d  <=>  W^2 n + d K1 = 0
        if not (bundle.W * bundle.W * exp.K.num + bundle.K1 * exp.K.den).is_zero():
            bad.append("K")
    if exp.hk_equal and not (bundle.H1 * bundle.H1 - bundle.W * bundle.K1 * 4).is_zero():
        bad.append("H^2 = K")
    return bad


def check_entry(entry: CatalogEntry) -> CatalogCheck:
    """Exact check of the expected data with every parameter left symbolic."""
    bad = _check_bundle(curvature_bundle(entry.symbolic_spec()), entry.expected)
    return CatalogCheck(entry, not bad, tuple(bad))


def check_catalog(include_extra: bool = False) -> list[CatalogCheck]:
    entries = SURFACES.values() if include_extra else CATALOG
    return [check_entry(e) for e in entries]
