"""Mechanized classification of helicoidal surfaces with prescribed curvature.

Four problems are covered:

* ``T1``: constant mean curvature, polynomial generating curves;
* ``T2``: constant mean curvature, Lorentzian circles;
* ``T3``: constant Gauss curvature, polynomials and circles;
* ``T4``: ``H^2 = K`` on a timelike surface, polynomials.

For a polynomial of degree ``m >= 2`` the leading coefficient of the condition
is a certificate by itself.  Degrees 0 and 1, circles and the non-graph curves
go through :func:`helicoidal.solver.solve_system`.  Every report is compared
with the reference tables below: leading terms, replayed intermediate
coefficients, and the expected solution families.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .minkowski import AxisKind
from .solver import (
    HSQ,
    Certificate,
    Outcome,
    RatFunc,
    SolutionFamily,
    certify,
    solve_system,
    substitute_family,
)
from .surface import (
    CircleLightlikeAxis,
    CircleSpacelikeAxis,
    CircleTimelikeAxis,
    CurvatureBundle,
    HelicoidalSpec,
    HorizontalLine,
    PolyGraph,
    VerticalLine,
    condition_cgc,
    condition_cmc_nonzero,
    condition_cmc_zero,
    condition_hk_equal,
    curvature_bundle,
)
from .symbolic import Mode, ParamPoly, SymExpr, extract_coefficients, leading_term

T, S, L = AxisKind.TIMELIKE, AxisKind.SPACELIKE, AxisKind.LIGHTLIKE

h, H, K, r, lam, mu, c, theta, b = ParamPoly.vars("h H K r lambda mu c theta b")
ONE = ParamPoly.const(1)


def a(i: int) -> ParamPoly:
    return ParamPoly.var(f"a{i}")


class Theorem(str, enum.Enum):
    T1 = "t1"
    T2 = "t2"
    T3 = "t3"
    T4 = "t4"


class CurvMode(str, enum.Enum):
    H_ZERO = "H=0"
    H_CONST = "H!=0"
    K_ZERO = "K=0"
    K_CONST = "K!=0"
    HK = "H^2=K"


class Status(str, enum.Enum):
    MATCHES = "Matches"
    MISMATCH = "Mismatch"
    UNRESOLVED = "Unresolved"


MODES = {
    Theorem.T1: (CurvMode.H_ZERO, CurvMode.H_CONST),
    Theorem.T2: (CurvMode.H_ZERO, CurvMode.H_CONST),
    Theorem.T3: (CurvMode.K_ZERO, CurvMode.K_CONST),
    Theorem.T4: (CurvMode.HK,),
}


def sigmas(mode: CurvMode) -> tuple[int | None, ...]:
    """Surface-type branches: sign of W (+1 spacelike surface, -1 timelike)."""
    if mode is CurvMode.H_CONST:
        return (1, -1)
    if mode is CurvMode.HK:
        return (-1,)
    return (None,)


def branch_label(sigma: int | None) -> str:
    return {None: "any", 1: "spacelike surface", -1: "timelike surface"}[sigma]


def condition(mode: CurvMode, bundle: CurvatureBundle, sigma: int | None) -> SymExpr:
    if mode is CurvMode.H_ZERO:
        return condition_cmc_zero(bundle)
    if mode is CurvMode.H_CONST:
        return condition_cmc_nonzero(bundle, sigma)
    if mode is CurvMode.K_ZERO:
        return condition_cgc(bundle, 0)
    if mode is CurvMode.K_CONST:
        return condition_cgc(bundle)
    return condition_hk_equal(bundle)


def mode_nonzero(mode: CurvMode) -> list[ParamPoly]:
    if mode is CurvMode.H_CONST:
        return [H]
    if mode is CurvMode.K_CONST:
        return [K]
    return []


# -- reference comparison ----------------------------------------------------

_FACTOR_VARS = {"h", "r", "c"}


@dataclass
class ReferenceCheck:
    """``computed == factor * reference`` with a pinned normalization factor.

    ``factor`` may only involve rationals and the geometric parameters h, r, c,
    never an unknown; it absorbs sign conventions and cleared denominators.
    Informational checks are reported but do not affect the status.
    """

    label: str
    computed: object
    reference: object
    factor: ParamPoly = field(default_factory=lambda: ONE)
    informational: bool = False

    def __post_init__(self):
        self.factor = ParamPoly.coerce(self.factor)
        if not self.factor.variables() <= _FACTOR_VARS or self.factor.is_zero():
            raise ValueError(f"normalization factor {self.factor} is not allowed")

    @property
    def matches(self) -> bool:
        ref = self.reference
        if isinstance(ref, SymExpr):
            return self.computed == ref.scale(self.factor)
        if isinstance(ref, tuple):  # (index, coefficient)
            return self.computed[0] == ref[0] and self.computed[1] == self.factor * ref[1]
        return self.computed == self.factor * ParamPoly.coerce(ref)

    def render(self) -> str:
        mark = "ok" if self.matches else ("differs (note)" if self.informational else "MISMATCH")
        factor = "" if self.factor == 1 else f" [factor {self.factor}]"
        return f"{self.label}: computed {_fmt(self.computed)}; reference {_fmt(self.reference)}{factor}: {mark}"


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return f"index {x[0]}, {x[1]}"
    return str(x)


# -- report types --------------------------------------------------------------

@dataclass
class DegreeResult:
    certificate: Certificate | None = None
    outcome: Outcome | None = None
    expected: list[dict] | None = None
    families_match: bool = True

    def render(self) -> list[str]:
        if self.certificate is not None:
            return [self.certificate.render()]
        lines = []
        for fam in self.outcome.families:
            lines.append("family: " + fam.render())
        for cl in self.outcome.closures:
            if cl.certificate is not None:
                lines.append(f"closed {_bind_str(cl.bindings)}: {cl.certificate.render()}")
            else:
                lines.append(f"closed {_bind_str(cl.bindings)}: {cl.reason}")
        for binds, eqs in self.outcome.unresolved:
            lines.append(f"UNRESOLVED {_bind_str(binds)}: " + "; ".join(f"{e} = 0" for e in eqs))
        if not self.families_match:
            lines.append("families differ from the expected list: " + repr(self.expected))
        return lines


def _bind_str(bindings) -> str:
    if not bindings:
        return "(generic)"
    return "{" + ", ".join(f"{k} = {v}" for k, v in bindings.items()) + "}"


@dataclass
class ClassificationReport:
    theorem: Theorem
    axis: AxisKind
    mode: CurvMode
    curve: str
    branches: list[str]
    per_degree: dict[int, dict[str, DegreeResult]] = field(default_factory=dict)
    degenerate: dict[str, dict[str, DegreeResult]] = field(default_factory=dict)
    checks: list[ReferenceCheck] = field(default_factory=list)
    status: Status = Status.MATCHES
    details: list[str] = field(default_factory=list)

    def results(self) -> Iterable[tuple[str, DegreeResult]]:
        for m, by in self.per_degree.items():
            for br, res in by.items():
                yield f"m={m} [{br}]", res
        for name, by in self.degenerate.items():
            for br, res in by.items():
                yield f"{name} [{br}]", res

    def finalize(self) -> "ClassificationReport":
        self.details = []
        unresolved = False
        for label, res in self.results():
            if res.outcome is not None and res.outcome.unresolved:
                unresolved = True
                self.details.append(f"{label}: unresolved branch")
            if not res.families_match:
                self.details.append(f"{label}: families differ")
        for chk in self.checks:
            if not chk.matches and not chk.informational:
                self.details.append(f"{chk.label}: reference value differs")
        if unresolved:
            self.status = Status.UNRESOLVED
        elif self.details:
            self.status = Status.MISMATCH
        else:
            self.status = Status.MATCHES
        return self

    def families(self, m: int | str, branch: str | None = None) -> list[SolutionFamily]:
        table = self.per_degree if isinstance(m, int) else self.degenerate
        out = []
        for br, res in table[m].items():
            if branch is None or br == branch:
                out.extend(res.outcome.families if res.outcome else [])
        return out

    def render(self) -> str:
        head = f"{self.theorem.value} axis={self.axis.value} curve={self.curve} mode={self.mode.value}: {self.status.value}"
        lines = [head]
        for label, res in self.results():
            for line in res.render():
                lines.append(f"  {label} {line}")
        for chk in self.checks:
            lines.append("  check " + chk.render())
        for d in self.details:
            lines.append("  ! " + d)
        return "\n".join(lines)


# -- reference data: polynomial leading terms, m >= 2 ---------------------------
# (degree(m), reference coefficient(m), normalization factor(sigma))

LeadingRef = tuple[Callable[[int], int], Callable[[int], ParamPoly], Callable[[int | None], object]]

POLY_LEADING: dict[tuple[Theorem, AxisKind, CurvMode], LeadingRef] = {
    (Theorem.T1, T, CurvMode.H_ZERO): (lambda m: 3 * m - 1, lambda m: -(m ** 3) * a(m) ** 3, lambda s: 1),
    (Theorem.T1, T, CurvMode.H_CONST): (lambda m: 6 * m, lambda m: 4 * m ** 6 * H ** 2 * a(m) ** 6, lambda s: -s),
    (Theorem.T1, S, CurvMode.H_ZERO): (lambda m: 3 * m - 2, lambda m: m * (m - 1) ** 2 * h * a(m) ** 3, lambda s: 1),
    (Theorem.T1, S, CurvMode.H_CONST): (lambda m: 12 * m - 6, lambda m: 4 * m ** 6 * H ** 2 * a(m) ** 12, lambda s: -s),
    (Theorem.T1, L, CurvMode.H_ZERO): (lambda m: m - 1, lambda m: -4 * m * (2 * m - 3) * h ** 2 * a(m), lambda s: 1),
    (Theorem.T1, L, CurvMode.H_CONST): (lambda m: 6 * m - 6, lambda m: -256 * m ** 6 * H ** 2 * h ** 6 * a(m) ** 6, lambda s: s),
    (Theorem.T3, T, CurvMode.K_ZERO): (lambda m: 2 * m, lambda m: -(m ** 2) * (m - 1) * a(m) ** 2, lambda s: -1),
    (Theorem.T3, T, CurvMode.K_CONST): (lambda m: 4 * m, lambda m: m ** 4 * a(m) ** 4 * K, lambda s: 1),
    (Theorem.T3, S, CurvMode.K_ZERO): (lambda m: 4 * m - 4, lambda m: -(m ** 4) * h ** 2 * a(m) ** 4, lambda s: 1),
    (Theorem.T3, S, CurvMode.K_CONST): (lambda m: 8 * m - 4, lambda m: m ** 4 * a(m) ** 8 * K, lambda s: 1),
    (Theorem.T3, L, CurvMode.K_ZERO): (lambda m: 2 * m - 3, lambda m: -8 * m ** 2 * (m - 1) * h ** 3 * a(m) ** 2, lambda s: 1),
    (Theorem.T3, L, CurvMode.K_CONST): (lambda m: 4 * m - 4, lambda m: 16 * m ** 4 * h ** 4 * a(m) ** 4 * K, lambda s: 1),
    (Theorem.T4, T, CurvMode.HK): (lambda m: 6 * m - 2, lambda m: m ** 6 * a(m) ** 6, lambda s: 1),
    (Theorem.T4, S, CurvMode.HK): (lambda m: 8 * m - 6, lambda m: -4 * m ** 6 * h * a(m) ** 6, lambda s: 1),
    (Theorem.T4, L, CurvMode.HK): (lambda m: 4 * m - 5, lambda m: -8 * m ** 4 * (m - 1) * h ** 2 * a(m) ** 4, lambda s: 16 * h ** 3),
}

# leading-term formulas that also hold at m = 1
FORMULA_FROM_ONE = {(Theorem.T1, L, CurvMode.H_ZERO)}


# -- reference data: expected families -------------------------------------------

def _fam(**kw) -> dict:
    out = {}
    for k, v in kw.items():
        name = HSQ if k == "Hsq" else k
        out[name] = v if isinstance(v, RatFunc) else RatFunc.of(v)
    return out


_H_OVER_h = RatFunc(ONE, h ** 2)
_K_OVER_h = RatFunc(ONE, h ** 2)
_H_CYL = RatFunc(ONE, 4 * r ** 2)

# (theorem, axis, mode, sigma, degree or curve key) -> families; missing keys mean "none"
EXPECTED_FAMILIES: dict[tuple, list[dict]] = {
    (Theorem.T1, T, CurvMode.H_ZERO, None, 0): [_fam()],
    (Theorem.T1, T, CurvMode.H_CONST, -1, 1): [_fam(a1=1, Hsq=_H_OVER_h), _fam(a1=-1, Hsq=_H_OVER_h)],
    (Theorem.T1, T, CurvMode.H_CONST, -1, "vline"): [_fam(Hsq=_H_CYL)],
    (Theorem.T1, S, CurvMode.H_ZERO, None, 0): [_fam(a0=0)],
    (Theorem.T1, S, CurvMode.H_ZERO, None, 1): [_fam(a0=0), _fam(a1=1), _fam(a1=-1)],
    (Theorem.T1, S, CurvMode.H_ZERO, None, "hline"): [_fam(b=0)],
    (Theorem.T1, L, CurvMode.H_ZERO, None, 0): [_fam()],
    (Theorem.T1, L, CurvMode.H_ZERO, None, "hline"): [_fam()],
    (Theorem.T2, S, CurvMode.H_CONST, -1, "circle:+"): [_fam(mu=0, **{"lambda": 0}, Hsq=_H_CYL)],
    (Theorem.T2, S, CurvMode.H_CONST, 1, "circle:-"): [_fam(mu=0, **{"lambda": 0}, Hsq=_H_CYL)],
    (Theorem.T3, T, CurvMode.K_ZERO, None, "vline"): [_fam()],
    (Theorem.T3, T, CurvMode.K_CONST, None, 1): [_fam(a1=1, K=_K_OVER_h), _fam(a1=-1, K=_K_OVER_h)],
    (Theorem.T3, S, CurvMode.K_ZERO, None, 1): [_fam(a1=1), _fam(a1=-1)],
    (Theorem.T3, L, CurvMode.K_ZERO, None, "hline"): [_fam()],
    (Theorem.T3, S, CurvMode.K_ZERO, None, "circle:+"): [_fam(mu=0, **{"lambda": 0})],
    (Theorem.T3, S, CurvMode.K_ZERO, None, "circle:-"): [_fam(mu=0, **{"lambda": 0})],
    (Theorem.T4, T, CurvMode.HK, -1, 1): [_fam(a1=1), _fam(a1=-1)],
    (Theorem.T4, S, CurvMode.HK, -1, 1): [_fam(a1=1), _fam(a1=-1)],
    (Theorem.T4, L, CurvMode.HK, -1, "hline"): [_fam()],
}

SURFACE_IDS: dict[tuple, str] = {
    (Theorem.T1, T, CurvMode.H_ZERO, 0): "helicoid_first_kind",
    (Theorem.T1, T, CurvMode.H_CONST, 1): "timelike_ruled",
    (Theorem.T1, T, CurvMode.H_CONST, "vline"): "lorentzian_cylinder",
    (Theorem.T1, S, CurvMode.H_ZERO, "hline"): "helicoid_third_kind",
    (Theorem.T1, L, CurvMode.H_ZERO, 0): "cayley",
    (Theorem.T1, L, CurvMode.H_ZERO, "hline"): "parabolic_null_cylinder",
    (Theorem.T2, S, CurvMode.H_CONST, "circle:+"): "hyperbolic_cylinder_plus",
    (Theorem.T2, S, CurvMode.H_CONST, "circle:-"): "hyperbolic_cylinder_minus",
    (Theorem.T3, T, CurvMode.K_CONST, 1): "timelike_ruled",
    (Theorem.T3, T, CurvMode.K_ZERO, "vline"): "lorentzian_cylinder",
    (Theorem.T3, S, CurvMode.K_ZERO, 1): "spacelike_ruled",
    (Theorem.T3, L, CurvMode.K_ZERO, "hline"): "parabolic_null_cylinder",
    (Theorem.T3, S, CurvMode.K_ZERO, "circle:+"): "hyperbolic_cylinder_plus",
    (Theorem.T3, S, CurvMode.K_ZERO, "circle:-"): "hyperbolic_cylinder_minus",
    (Theorem.T4, T, CurvMode.HK, 1): "timelike_ruled",
    (Theorem.T4, S, CurvMode.HK, 1): "spacelike_ruled",
    (Theorem.T4, L, CurvMode.HK, "hline"): "parabolic_null_cylinder",
}


def _same_families(found: list[SolutionFamily], expected: list[dict]) -> bool:
    if len(found) != len(expected):
        return False
    remaining = list(expected)
    for fam in found:
        for i, exp in enumerate(remaining):
            if set(exp) == set(fam.bindings) and all(fam.bindings[k] == v for k, v in exp.items()):
                del remaining[i]
                break
        else:
            return False
    return True


def _sort_families(families: list[SolutionFamily]) -> list[SolutionFamily]:
    return sorted(families, key=lambda f: [(k, str(v)) for k, v in sorted(f.bindings.items())])


# -- running the solver on one condition ---------------------------------------

def _unknowns_for(expr: SymExpr, W: SymExpr) -> list[str]:
    names = set()
    for e in (expr, W):
        for _, _, coeff in e.basis_terms():
            names |= coeff.variables()
    out = [n for n in names if n in {"K", "lambda", "mu", "theta", "b"} or n.startswith("a")]
    if "H" in names:
        out.append(HSQ)
    return out


def _solve(theorem, axis, mode, sigma, key, spec: HelicoidalSpec, nonzero: list[ParamPoly]) -> DegreeResult:
    bundle = curvature_bundle(spec)
    cond = condition(mode, bundle, sigma)
    system = extract_coefficients(cond)
    outcome = solve_system(
        list(system), bundle.W,
        nonzero=nonzero + mode_nonzero(mode),
        sigma=sigma,
        unknowns=_unknowns_for(cond, bundle.W),
    )
    outcome.families = _sort_families(outcome.families)
    sid = SURFACE_IDS.get((theorem, axis, mode, key))
    for fam in outcome.families:
        fam.surface_id = sid
    expected = EXPECTED_FAMILIES.get((theorem, axis, mode, sigma, key), [])
    return DegreeResult(outcome=outcome, expected=expected, families_match=_same_families(outcome.families, expected))


def _base_nonzero(m: int | None = None) -> list[ParamPoly]:
    out = [h]
    if m:
        out.append(a(m))
    return out


# -- polynomial cases ------------------------------------------------------------

def leading_certificate(theorem, axis, mode, m, sigma) -> tuple[Certificate, ReferenceCheck]:
    spec = HelicoidalSpec(axis, h, PolyGraph.symbolic(m))
    cond = condition(mode, curvature_bundle(spec), sigma)
    lt = leading_term(cond)
    nonzero = _base_nonzero(m) + mode_nonzero(mode)
    kind = certify(lt.coefficient, nonzero)
    cert = Certificate(lt.index, "s", lt.coefficient, tuple(sorted(str(q) for q in nonzero)), kind or "none")
    deg_fn, coeff_fn, factor_fn = POLY_LEADING[(theorem, axis, mode)]
    chk = ReferenceCheck(
        f"m={m} [{branch_label(sigma)}] leading term",
        (lt.index, lt.coefficient), (deg_fn(m), coeff_fn(m)), factor_fn(sigma),
    )
    return cert, chk


def classify_poly(theorem: Theorem, axis: AxisKind, mode: CurvMode, m_max: int = 6) -> ClassificationReport:
    if m_max < 2:
        raise ValueError("m_max must be at least 2")
    rep = ClassificationReport(theorem, axis, mode, "poly", [branch_label(s) for s in sigmas(mode)])
    from_one = (theorem, axis, mode) in FORMULA_FROM_ONE
    for m in range(m_max + 1):
        rep.per_degree[m] = {}
        for sigma in sigmas(mode):
            if m >= 2:
                cert, chk = leading_certificate(theorem, axis, mode, m, sigma)
                rep.per_degree[m][branch_label(sigma)] = DegreeResult(certificate=cert, families_match=cert.kind != "none")
                rep.checks.append(chk)
            else:
                spec = HelicoidalSpec(axis, h, PolyGraph.symbolic(m))
                rep.per_degree[m][branch_label(sigma)] = _solve(theorem, axis, mode, sigma, m, spec, _base_nonzero(m))
                if m == 1 and from_one:
                    rep.checks.append(leading_certificate(theorem, axis, mode, 1, sigma)[1])
    for key, spec, nonzero in _degenerate_specs(axis):
        rep.degenerate[key] = {
            branch_label(s): _solve(theorem, axis, mode, s, key, spec, nonzero) for s in sigmas(mode)
        }
    rep.checks.extend(_poly_replays(theorem, axis, mode))
    return rep.finalize()


def _degenerate_specs(axis: AxisKind) -> list[tuple[str, HelicoidalSpec, list[ParamPoly]]]:
    if axis is T:
        return [("vline", HelicoidalSpec(T, h, VerticalLine(r)), [h, r])]
    return [("hline", HelicoidalSpec(axis, h, HorizontalLine(b)), [h])]


def classify_poly_cmc(axis: AxisKind, m_max: int = 6, mode: CurvMode = CurvMode.H_ZERO) -> ClassificationReport:
    return classify_poly(Theorem.T1, axis, mode, m_max)


def classify_poly_cgc(axis: AxisKind, m_max: int = 6, mode: CurvMode = CurvMode.K_CONST) -> ClassificationReport:
    return classify_poly(Theorem.T3, axis, mode, m_max)


def classify_hk_timelike(axis: AxisKind, m_max: int = 6) -> ClassificationReport:
    return classify_poly(Theorem.T4, axis, CurvMode.HK, m_max)


# -- replayed intermediate values ------------------------------------------------

def _cond_poly(axis, m, mode, sigma=None, bindings=None) -> SymExpr:
    spec = HelicoidalSpec(axis, h, PolyGraph.symbolic(m))
    e = condition(mode, curvature_bundle(spec), sigma)
    return substitute_family(e, {k: RatFunc.of(v) for k, v in (bindings or {}).items()})


def _W_poly(axis, m, bindings) -> SymExpr:
    W = curvature_bundle(HelicoidalSpec(axis, h, PolyGraph.symbolic(m))).W
    return substitute_family(W, {k: RatFunc.of(v) for k, v in bindings.items()})


def _lead(e: SymExpr) -> tuple[int, ParamPoly]:
    lt = leading_term(e)
    return lt.index, lt.coefficient


def _const(v) -> SymExpr:
    return SymExpr.constant(v)


def _poly_replays(theorem, axis, mode) -> list[ReferenceCheck]:
    out: list[ReferenceCheck] = []
    add = out.append
    one_m_a1sq = 1 - a(1) ** 2
    if theorem is Theorem.T1 and axis is T and mode is CurvMode.H_ZERO:
        add(ReferenceCheck("m=1 leading term", _lead(_cond_poly(T, 1, mode)), (2, a(1) * one_m_a1sq)))
        add(ReferenceCheck("m=1, a1=1: H1", _cond_poly(T, 1, mode, None, {"a1": 1}), _const(2 * h ** 2), -1))
        add(ReferenceCheck("m=1, a1=-1: H1", _cond_poly(T, 1, mode, None, {"a1": -1}), _const(2 * h ** 2)))
    if theorem is Theorem.T1 and axis is T and mode is CurvMode.H_CONST:
        for s in (1, -1):
            add(ReferenceCheck(f"m=1 [{branch_label(s)}] leading term", _lead(_cond_poly(T, 1, mode, s)),
                               (6, 4 * H ** 2 * one_m_a1sq ** 3), s))
        for a1 in (1, -1):
            add(ReferenceCheck(f"m=1, a1={a1}: W", _W_poly(T, 1, {"a1": a1}), _const(-h ** 2)))
            add(ReferenceCheck(f"m=1, a1={a1} [timelike surface]: condition", _cond_poly(T, 1, mode, -1, {"a1": a1}),
                               _const(4 * h ** 4 * (-1 + h ** 2 * H ** 2))))
    if theorem is Theorem.T1 and axis is S and mode is CurvMode.H_ZERO:
        add(ReferenceCheck("m=0: H1", _cond_poly(S, 0, mode), _const(h * a(0))))
        add(ReferenceCheck("m=1: H1", _cond_poly(S, 1, mode), _const(h * a(0) * (1 - a(1)) ** 2), informational=True))
        for a1 in (1, -1):
            add(ReferenceCheck(f"m=1, a1={a1}: W", _W_poly(S, 1, {"a1": a1}), _const(-a(0) ** 2)))
    if theorem is Theorem.T1 and axis is S and mode is CurvMode.H_CONST:
        for s in (1, -1):
            add(ReferenceCheck(f"m=1 [{branch_label(s)}] leading term", _lead(_cond_poly(S, 1, mode, s)),
                               (6, 4 * H ** 2 * (a(1) ** 2 - 1) ** 6), -s))
    if theorem is Theorem.T1 and axis is L and mode is CurvMode.H_CONST:
        for s in (1, -1):
            add(ReferenceCheck(f"m=1 [{branch_label(s)}] leading term", _lead(_cond_poly(L, 1, mode, s)),
                               (3, 256 * h ** 3 * H ** 2), -s))
    if theorem is Theorem.T3 and axis is T and mode is CurvMode.K_ZERO:
        for m in (0, 1):
            add(ReferenceCheck(f"m={m}: condition", _cond_poly(T, m, mode), _const(h ** 2), -1))
    if theorem is Theorem.T3 and axis is T and mode is CurvMode.K_CONST:
        add(ReferenceCheck("m=1 leading term", _lead(_cond_poly(T, 1, mode)), (4, K * one_m_a1sq ** 2)))
        for a1 in (1, -1):
            add(ReferenceCheck(f"m=1, a1={a1}: condition", _cond_poly(T, 1, mode, None, {"a1": a1}),
                               _const(h ** 2 * (-1 + h ** 2 * K))))
        add(ReferenceCheck("m=0 leading term", _lead(_cond_poly(T, 0, mode)), (4, K)))
    if theorem is Theorem.T3 and axis is S and mode is CurvMode.K_ZERO:
        add(ReferenceCheck("m=1: condition", _cond_poly(S, 1, mode), _const(h ** 2 * one_m_a1sq), informational=True))
        add(ReferenceCheck("m=0: condition", _cond_poly(S, 0, mode), _const(-h ** 2)))
    if theorem is Theorem.T3 and axis is S and mode is CurvMode.K_CONST:
        add(ReferenceCheck("m=1 leading term", _lead(_cond_poly(S, 1, mode)), (4, K * one_m_a1sq ** 4)))
        for a1 in (1, -1):
            add(ReferenceCheck(f"m=1, a1={a1}: condition", _cond_poly(S, 1, mode, None, {"a1": a1}),
                               _const(K * a(0) ** 4)))
        add(ReferenceCheck("m=0 leading term", _lead(_cond_poly(S, 0, mode)), (4, K)))
    if theorem is Theorem.T3 and axis is L and mode is CurvMode.K_ZERO:
        for m in (0, 1):
            add(ReferenceCheck(f"m={m}: condition", _cond_poly(L, m, mode), _const(-4 * h ** 2)))
    if theorem is Theorem.T3 and axis is L and mode is CurvMode.K_CONST:
        for m in (0, 1):
            add(ReferenceCheck(f"m={m} leading term", _lead(_cond_poly(L, m, mode)), (2, 16 * h ** 2 * K)))
    if theorem is Theorem.T4 and axis is T:
        add(ReferenceCheck("m=1 leading term", _lead(_cond_poly(T, 1, mode, -1)), (4, a(1) ** 2 * one_m_a1sq ** 2)))
    if theorem is Theorem.T4 and axis is S:
        add(ReferenceCheck("m=1 leading term", _lead(_cond_poly(S, 1, mode, -1)), (2, 4 * h ** 2 * one_m_a1sq ** 4), -1))
        add(ReferenceCheck("m=0: condition", _cond_poly(S, 0, mode, -1),
                           SymExpr.poly([4 * h ** 2 + a(0) ** 2, 0, -4]), h ** 2))
    if theorem is Theorem.T4 and axis is L:
        add(ReferenceCheck("m=1: condition", _cond_poly(L, 1, mode, -1),
                           SymExpr.poly([3 * h * a(1) ** 2, 4]), -16 * h ** 3))
        add(ReferenceCheck("m=0: condition", _cond_poly(L, 0, mode, -1), SymExpr.poly([0, h]), -64 * h ** 2))
    return out


# -- circles ----------------------------------------------------------------------

def circle_spec(axis: AxisKind, branch: int = 1) -> HelicoidalSpec:
    if axis is T:
        return HelicoidalSpec(T, h, CircleTimelikeAxis(r, lam, mu, branch))
    if axis is S:
        return HelicoidalSpec(S, h, CircleSpacelikeAxis(r, lam, mu, branch))
    return HelicoidalSpec(L, h, CircleLightlikeAxis(c, theta, lam, mu))


def circle_branches(axis: AxisKind) -> tuple[int, ...]:
    return (1,) if axis is L else (1, -1)


def _circle_key(axis, branch) -> str:
    return "circle" if axis is L else f"circle:{'+' if branch == 1 else '-'}"


def classify_circle(theorem: Theorem, axis: AxisKind, branch: int, mode: CurvMode) -> ClassificationReport:
    key = _circle_key(axis, branch)
    rep = ClassificationReport(theorem, axis, mode, key, [branch_label(s) for s in sigmas(mode)])
    spec = circle_spec(axis, branch)
    nonzero = [h, c] if axis is L else [h, r]
    rep.degenerate[key] = {
        branch_label(s): _solve(theorem, axis, mode, s, key, spec, nonzero) for s in sigmas(mode)
    }
    if theorem is Theorem.T2 and branch == 1:
        rep.checks.extend(_circle_replays(axis, mode))
    return rep.finalize()


def classify_circle_cmc(axis: AxisKind, branch: int = 1, mode: CurvMode = CurvMode.H_ZERO) -> ClassificationReport:
    return classify_circle(Theorem.T2, axis, branch, mode)


def classify_circle_cgc(axis: AxisKind, branch: int = 1, mode: CurvMode = CurvMode.K_ZERO) -> ClassificationReport:
    return classify_circle(Theorem.T3, axis, branch, mode)


def circle_condition(axis, mode, sigma=None, bindings=None, branch: int = 1) -> SymExpr:
    e = condition(mode, curvature_bundle(circle_spec(axis, branch)), sigma)
    return substitute_family(e, {k: RatFunc.of(v) for k, v in (bindings or {}).items()})


def _circle_replays(axis, mode) -> list[ReferenceCheck]:
    out: list[ReferenceCheck] = []
    add = out.append
    q = h ** 2 + r ** 2
    if axis is T and mode is CurvMode.H_ZERO:
        add(ReferenceCheck("A_3", circle_condition(T, mode).coefficient(3, "cosh"), r ** 3 * q * Fraction(1, 2), -1))
    if axis is T and mode is CurvMode.H_CONST:
        for s in (1, -1):
            add(ReferenceCheck(f"A_6 [{branch_label(s)}]", circle_condition(T, mode, s).coefficient(6, "cosh"),
                               Fraction(-1, 8) * r ** 6 * q ** 2 * (s + H ** 2 * q), s))
        hsq = {HSQ: RatFunc(ONE, q)}
        add(ReferenceCheck("A_5 at H^2 = 1/(h^2+r^2)", circle_condition(T, mode, -1, hsq).coefficient(5, "cosh"),
                           lam * r ** 7 * q * Fraction(1, 4), q))
        add(ReferenceCheck("A_2 at H^2 = 1/(h^2+r^2), lambda = 0",
                           circle_condition(T, mode, -1, {**hsq, "lambda": 0}).coefficient(2, "cosh"),
                           h ** 4 * r ** 6 * Fraction(3, 2), q))
    if axis is S and mode is CurvMode.H_ZERO:
        expected = (SymExpr.constant(h * r ** 2 * (-lam ** 2 + mu ** 2 + h ** 2), Mode.HYP)
                    + SymExpr.cosh(1, -h * r ** 3 * lam) + SymExpr.sinh(1, h * r ** 3 * mu))
        add(ReferenceCheck("H1", circle_condition(S, mode), expected))
        add(ReferenceCheck("H1 at lambda = mu = 0", circle_condition(S, mode, None, {"lambda": 0, "mu": 0}),
                           SymExpr.constant(h ** 3 * r ** 2, Mode.HYP)))
    if axis is S and mode is CurvMode.H_CONST:
        for s in (1, -1):
            add(ReferenceCheck(f"A_6 [{branch_label(s)}]", circle_condition(S, mode, s).coefficient(6, "cosh"),
                               Fraction(-1, 8) * (lam ** 2 + mu ** 2) * (lam ** 4 + 14 * lam ** 2 * mu ** 2 + mu ** 4)
                               * H ** 2 * r ** 6, s))
        add(ReferenceCheck("condition at lambda = mu = 0 [timelike surface]",
                           circle_condition(S, mode, -1, {"lambda": 0, "mu": 0}),
                           SymExpr.constant(h ** 6 * r ** 4 * (-1 + 4 * H ** 2 * r ** 2), Mode.HYP)))
    if axis is L and mode is CurvMode.H_ZERO:
        add(ReferenceCheck("H1", circle_condition(L, mode),
                           SymExpr.poly([4 * c ** 2 * h ** 2 * (-2 * mu + c * theta), -4 * c ** 3 * h ** 3])))
    if axis is L and mode is CurvMode.H_CONST:
        for s in (1, -1):
            add(ReferenceCheck(f"leading term [{branch_label(s)}]", _lead(circle_condition(L, mode, s)),
                               (6, -256 * c ** 6 * h ** 6 * H ** 2), s))
    return out


# -- top level --------------------------------------------------------------------

def verify_theorem(theorem: Theorem | str, m_max: int = 6) -> list[ClassificationReport]:
    theorem = Theorem(theorem)
    reports = []
    if theorem in (Theorem.T1, Theorem.T3, Theorem.T4):
        for axis in (T, S, L):
            for mode in MODES[theorem]:
                reports.append(classify_poly(theorem, axis, mode, m_max))
    if theorem in (Theorem.T2, Theorem.T3):
        for axis in (T, S, L):
            for br in circle_branches(axis):
                for mode in MODES[theorem]:
                    reports.append(classify_circle(theorem, axis, br, mode))
    return reports
