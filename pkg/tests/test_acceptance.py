"""End-to-end acceptance checks, one test and one verdict line per criterion."""

import random
import time
from fractions import Fraction

import numpy as np

from helicoidal.catalog import SURFACES, get_surface
from helicoidal.classify import CurvMode, Status, verify_theorem
from helicoidal.minkowski import (
    AxisKind,
    MinkVec3,
    RigidMotion,
    det3,
    lorentz_cross,
    minkowski_dot,
    motion,
    rational_rotation,
)
from helicoidal.numeric import DegenerateMetric, fd_oracle, numeric_curvatures, numeric_frame, weingarten
from helicoidal.surface import HelicoidalSpec, PolyGraph, curvature_bundle

T, S, L = AxisKind.TIMELIKE, AxisKind.SPACELIKE, AxisKind.LIGHTLIKE
SEED = 1729


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def failed_checks(reports):
    return [f"{r.axis.value} {r.curve} {r.mode.value}: {c.label}"
            for r in reports for c in r.checks if not c.matches and not c.informational]


def random_points(entry, n, rng, spec=None):
    spec = spec or entry.spec()
    out = []
    while len(out) < n:
        s, t = rng.uniform(*entry.s_range), rng.uniform(*entry.t_range)
        try:
            if abs(numeric_frame(spec, s, t).W) > 1e-3:
                out.append((s, t))
        except DegenerateMetric:
            pass
    return out


def test_criterion_1_polynomial_mean_curvature(acceptance):
    reports, secs = timed(verify_theorem, "t1", m_max=6)
    problems = []
    for rep in reports:
        for m in range(2, 7):
            by = rep.per_degree.get(m, {})
            if not by or any(d.certificate is None or d.certificate.kind == "none" for d in by.values()):
                problems.append(f"{rep.axis.value} {rep.mode.value} m={m}: no certificate")
        if rep.status is not Status.MATCHES:
            problems.append(f"{rep.axis.value} {rep.mode.value}: {rep.status.value}")
    problems += failed_checks(reports)
    modes = {(r.axis, r.mode) for r in reports}
    if modes != {(a, m) for a in AxisKind for m in (CurvMode.H_ZERO, CurvMode.H_CONST)}:
        problems.append("axis/mode coverage incomplete")
    if secs >= 30:
        problems.append(f"runtime {secs:.1f}s")
    acceptance(1, "t1 certificates and families, m = 2..6", not problems,
               f"{len(reports)} reports in {secs:.1f}s" + ("; " + "; ".join(problems) if problems else ""))
    assert not problems


def test_criterion_2_circle_coefficients(acceptance):
    reports, secs = timed(verify_theorem, "t2")
    checks = [c for r in reports for c in r.checks if not c.informational]
    problems = failed_checks(reports)
    if secs >= 10:
        problems.append(f"runtime {secs:.1f}s")
    ok = sum(c.matches for c in checks)
    acceptance(2, "circle coefficients, exact", not problems,
               f"{ok}/{len(checks)} reference coefficients reproduced in {secs:.1f}s"
               + ("; differs: " + "; ".join(problems) if problems else ""))
    assert not problems


# reference coefficients for the Gauss curvature and H^2 = K classifications
CRITERION_3 = {
    ("t3", T, CurvMode.K_CONST): ["m=1, a1=1: condition", "m=1, a1=-1: condition", "m=1 leading term"],
    ("t3", L, CurvMode.K_CONST): ["m=1 leading term"],
    ("t4", T, CurvMode.HK): ["m=1 leading term"],
    ("t4", S, CurvMode.HK): ["m=1 leading term"],
    ("t4", L, CurvMode.HK): [f"m={m} [timelike surface] leading term" for m in range(2, 7)],
}


def test_criterion_3_gauss_and_hk_coefficients(acceptance):
    t3, secs3 = timed(verify_theorem, "t3")
    t4, secs4 = timed(verify_theorem, "t4")
    by_key = {(r.theorem.value, r.axis, r.mode): r for r in t3 + t4 if r.curve == "poly"}
    problems, seen = [], 0
    for key, labels in CRITERION_3.items():
        checks = {c.label: c for c in by_key[key].checks}
        for label in labels:
            seen += 1
            if label not in checks or not checks[label].matches:
                problems.append(f"{key[0]} {key[1].value}: {label}")
    problems += [f"t3 {p}" for p in failed_checks(t3)]
    if secs3 + secs4 >= 10:
        problems.append(f"runtime {secs3 + secs4:.1f}s")
    # not part of the listed set, reported for completeness
    extra = [p for p in failed_checks(t4) if p.startswith("spacelike")]
    detail = f"{seen} listed coefficients and all t3 checks in {secs3 + secs4:.1f}s"
    if extra:
        detail += f"; unlisted spacelike t4 leading terms differ for {len(extra)} degrees"
    acceptance(3, "Gauss curvature and H^2 = K coefficients", not problems,
               detail + ("; differs: " + "; ".join(problems) if problems else ""))
    assert not problems


def test_criterion_4_catalog_numerics(acceptance):
    rng = random.Random(SEED)
    problems = []
    for name in ("hyperbolic_cylinder_plus", "hyperbolic_cylinder_minus"):
        entry = get_surface(name)
        for r in (1, 2, 5):
            spec = entry.spec(r=r)
            for s, t in random_points(entry, 20, rng, spec):
                H, K = numeric_curvatures(spec, s, t)
                if abs(abs(H) - 1 / (2 * r)) >= 1e-9 or abs(K) >= 1e-9:
                    problems.append(f"{name} r={r} at ({s:.3f}, {t:.3f})")
    entry = get_surface("timelike_ruled")
    for h in (1, 2, 3):
        spec = entry.spec(h=h)
        for s, t in random_points(entry, 20, rng, spec):
            H, K = numeric_curvatures(spec, s, t)
            if abs(abs(H) - 1 / h) >= 1e-9 or abs(K - 1 / h ** 2) >= 1e-9:
                problems.append(f"timelike_ruled h={h} at ({s:.3f}, {t:.3f})")
    for name in ("helicoid_first_kind", "helicoid_second_kind", "helicoid_third_kind",
                 "cayley", "parabolic_null_cylinder"):
        entry = get_surface(name)
        for s, t in random_points(entry, 20, rng):
            if abs(numeric_curvatures(entry.spec(), s, t)[0]) >= 1e-9:
                problems.append(f"{name} at ({s:.3f}, {t:.3f})")
    acceptance(4, "catalog curvature values", not problems, "; ".join(problems[:5]))
    assert not problems


def _rat(rng):
    return Fraction(rng.randint(-60, 60), rng.randint(1, 40))


def test_criterion_5_property_suites(acceptance):
    rng = random.Random(SEED)
    results = {}

    vecs = lambda: MinkVec3(_rat(rng), _rat(rng), _rat(rng))  # noqa: E731
    results["cross product identity, 1000 rational triples"] = all(
        minkowski_dot(lorentz_cross(u, v), w) == det3(u, v, w)
        for u, v, w in ((vecs(), vecs(), vecs()) for _ in range(1000)))

    iso = True
    for _ in range(200):
        p, q = vecs(), vecs()
        h = _rat(rng) or Fraction(1)
        for phi in (motion(L, h, _rat(rng)),
                    RigidMotion(rational_rotation(T, Fraction(rng.randint(-9, 9), 10)), MinkVec3(0, 0, h)),
                    RigidMotion(rational_rotation(S, Fraction(rng.randint(-9, 9), 10)), MinkVec3(h, 0, 0))):
            d0, d1 = p - q, phi(p) - phi(q)
            iso &= phi.preserves_metric() and minkowski_dot(d0, d0) == minkowski_dot(d1, d1)
    results["exact motion isometry"] = iso

    orbit = True
    for entry in SURFACES.values():
        spec = entry.spec()
        for s in np.linspace(*entry.s_range, 10):
            for t in np.linspace(*entry.t_range, 10):
                try:
                    H0, K0 = numeric_curvatures(spec, s, 0.0)
                    H1, K1 = numeric_curvatures(spec, s, t)
                except DegenerateMetric:
                    continue
                orbit &= abs(H1 - H0) < 1e-9 and abs(K1 - K0) < 1e-9
    results["orbit invariance of H and K, 10x10 grids"] = orbit

    worst = None
    for entry in SURFACES.values():
        spec = entry.spec()
        for s in np.linspace(*entry.s_range, 10):
            for t in np.linspace(*entry.t_range, 10):
                try:
                    fr = numeric_frame(spec, s, t)
                except DegenerateMetric:
                    continue
                d = fr.H ** 2 - fr.epsilon * fr.K
                if worst is None or d < worst[0]:
                    worst = (d, entry.name, fr.epsilon)
    results[f"H^2 - eps K >= -1e-10 (minimum {worst[0]:.3g} on {worst[1]}, eps={worst[2]})"] = worst[0] >= -1e-10

    fd_ok, sym_ok = True, True
    nrng = np.random.default_rng(SEED)
    for entry in SURFACES.values():
        spec = entry.spec()
        bundle = curvature_bundle(spec)
        for s, t in random_points(entry, 20, nrng):
            exact, approx = numeric_frame(spec, s, t).derivatives(), fd_oracle(spec, s, t).derivatives()
            for k in exact:
                fd_ok &= np.linalg.norm(approx[k] - exact[k]) <= 1e-6 * max(1.0, np.linalg.norm(exact[k]))
            sq = Fraction(s).limit_denominator(10 ** 6)
            fr = numeric_frame(spec, float(sq), 0.0)
            W, H1, K1 = (float(getattr(bundle, k).evaluate(sq, {})) for k in ("W", "H1", "K1"))
            for got, want in ((fr.W, W), (fr.H, -0.5 * H1 / abs(W) ** 1.5), (fr.K, -K1 / W ** 2)):
                sym_ok &= abs(got - want) <= 1e-10 * max(1.0, abs(want))
    results["analytic vs finite-difference frames"] = fd_ok
    results["symbolic at t=0 vs numeric"] = sym_ok

    failed = [k for k, v in results.items() if not v]
    acceptance(5, "property suites", not failed,
               f"{len(results) - len(failed)}/{len(results)} hold" + ("; fails: " + "; ".join(failed) if failed else ""))
    assert not failed


def test_criterion_6_non_diagonalizable_weingarten(acceptance):
    families = {
        "timelike axis, a1 = 1": HelicoidalSpec(T, 1, PolyGraph((0, 1))),
        "timelike axis, a1 = -1": HelicoidalSpec(T, 2, PolyGraph((Fraction(1, 2), -1))),
        "spacelike axis, a1 = 1": HelicoidalSpec(S, 1, PolyGraph((1, 1))),
        "spacelike axis, a1 = -1": HelicoidalSpec(S, 2, PolyGraph((-3, -1))),
    }
    rng = np.random.default_rng(SEED)
    problems = []
    for name, spec in families.items():
        for s, t in rng.uniform(-2, 2, size=(10, 2)):
            A = weingarten(spec, s, t)
            if not (A.discriminant < 1e-8 and A.deviation > 1e-6):
                problems.append(f"{name} at ({s:.3f}, {t:.3f})")
    acceptance(6, "non-diagonalizable Weingarten maps", not problems,
               f"{len(families)} surfaces x 10 points" + ("; " + "; ".join(problems) if problems else ""))
    assert not problems
