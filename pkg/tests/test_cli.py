import json
import shlex
import shutil
import subprocess
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helicoidal.cli import (
    config_from_args,
    describe_spec,
    main,
    parse_args,
    parse_curve,
    parse_rational,
    round_sig,
)
from helicoidal.minkowski import AxisKind

T, S, L = AxisKind.TIMELIKE, AxisKind.SPACELIKE, AxisKind.LIGHTLIKE


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def curvature_json(capsys, *argv):
    code, out, _ = run(capsys, "curvature", "--format", "json", *argv)
    assert code == 0
    return json.loads(out)


# -- parsing ---------------------------------------------------------------------

@pytest.mark.parametrize("text, value", [
    ("3/4", Fraction(3, 4)), ("-1.25", Fraction(-5, 4)), ("0.1", Fraction(1, 10)),
    ("2", Fraction(2)), ("2e-3", Fraction(1, 500)), (" 7/14 ", Fraction(1, 2)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1/0", "1//2", "nan"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_curve_errors():
    with pytest.raises(ValueError):
        parse_curve("spiral:1", T, {})
    with pytest.raises(ValueError):
        parse_curve("poly:", T, {})
    with pytest.raises(ValueError):
        parse_curve("circle:+", T, {})  # needs --r


descriptors = [
    "--axis timelike --curve poly:0,1 --h 2",
    "--axis timelike --curve poly:1/2,-3,0,7/5 --h -1/3",
    "--axis spacelike --curve circle:+ --h 1 --r 2 --lambda 0 --mu 1/2",
    "--axis spacelike --curve circle:- --h 3/2 --r 1 --lambda -1 --mu 0",
    "--axis timelike --curve circle:- --h 1 --r 5 --lambda 0 --mu 0",
    "--axis lightlike --curve circle --h 1 --c 2 --lambda 0 --mu 0 --theta 1/3",
    "--axis timelike --curve circle:+ --h 1 --r 1 --lambda 0 --mu 0 --theta 1/2",
    "--axis timelike --curve vline:3/2 --h 1",
    "--axis spacelike --curve hline:-2 --h 1",
    "--axis lightlike --curve poly:5 --h 1",
]


def spec_from(flags):
    ns = parse_args(["curvature", *shlex.split(flags)])
    return config_from_args(ns).spec()


@pytest.mark.parametrize("flags", descriptors)
def test_descriptor_round_trip(flags):
    spec = spec_from(flags)
    assert describe_spec(spec) == flags
    assert describe_spec(spec_from(describe_spec(spec))) == flags


rats = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(list(AxisKind)), rats.filter(lambda q: q != 0), st.lists(rats, min_size=1, max_size=5))
def test_poly_round_trip(axis, h, coeffs):
    flags = f"--axis {axis.value} --curve poly:{','.join(str(c) for c in coeffs)} --h {h}"
    canonical = describe_spec(spec_from(flags))
    assert describe_spec(spec_from(canonical)) == canonical


@settings(max_examples=100, deadline=None)
@given(st.decimals(min_value=-100, max_value=100, places=4, allow_nan=False, allow_infinity=False))
def test_decimals_are_exact(d):
    assert parse_rational(str(d)) == Fraction(d)


def test_round_sig():
    assert round_sig(0.1 + 0.2) == 0.3
    assert round_sig(-0.0) == 0.0 and str(round_sig(-1e-30 * 0)) == "0.0"
    assert round_sig(123456789.123456789) == 123456789.123


# -- curvature ---------------------------------------------------------------------

def test_curvature_hyperbolic_cylinder(capsys):
    data = curvature_json(capsys, "--axis", "spacelike", "--curve", "circle:+", "--r", "2", "--lambda", "0",
                          "--mu", "0", "--h", "1", "--sample", "0.3,0.7")
    assert set(data) == {"axis", "curve", "W", "H1", "K1", "samples"}
    (smp,) = data["samples"]
    assert set(smp) == {"s", "t", "H", "K", "epsilon"}
    assert abs(abs(smp["H"]) - 0.25) < 1e-9 and abs(smp["K"]) < 1e-9 and smp["epsilon"] == 1


def test_curvature_timelike_ruled(capsys):
    data = curvature_json(capsys, "--axis", "timelike", "--curve", "poly:1,1", "--h", "2", "--sample", "1,0")
    assert abs(abs(data["samples"][0]["H"]) - 0.5) < 1e-9
    assert abs(data["samples"][0]["K"] - 0.25) < 1e-9
    assert data["W"] == "-4"


def test_curvature_cayley(capsys):
    data = curvature_json(capsys, "--axis", "lightlike", "--curve", "poly:5", "--h", "1", "--sample", "1,1")
    assert abs(data["samples"][0]["H"]) < 1e-9
    assert data["H1"] == "0"


def test_curvature_text(capsys):
    code, out, _ = run(capsys, "curvature", "--axis", "timelike", "--curve", "vline:1", "--h", "1", "--sample", "0,0")
    assert code == 0
    assert out.splitlines()[0] == "spec: --axis timelike --curve vline:1 --h 1"
    assert "|H|=0.5" in out


def test_curvature_output_is_deterministic(capsys):
    argv = ["curvature", "--format", "json", "--axis", "spacelike", "--curve", "poly:1,2,3", "--h", "1/2",
            "--sample", "0.25,0.5", "--sample", "-1,2"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


@pytest.mark.parametrize("argv, code", [
    (["curvature", "--axis", "timelike", "--curve", "poly:0", "--h", "1", "--sample", "1,0"], 3),
    (["curvature", "--axis", "spacelike", "--curve", "vline:1", "--h", "1"], 2),
    (["curvature", "--axis", "timelike", "--curve", "poly:0", "--h", "0"], 2),
    (["curvature", "--axis", "timelike", "--curve", "poly:0"], 2),
    (["curvature", "--axis", "timelike", "--curve", "poly:x", "--h", "1"], 2),
    (["curvature", "--axis", "timelike", "--curve", "poly:0", "--h", "1", "--bogus", "1"], 2),
    (["curvature", "--axis", "diagonal", "--curve", "poly:0", "--h", "1"], 2),
    (["verify", "t1", "--max-degree", "1"], 2),
    (["verify", "t9"], 2),
    (["mesh", "--surface", "sphere"], 2),
    (["mesh", "--surface", "cayley", "--n", "1"], 2),
    (["orbit", "--axis", "timelike", "--point", "1,2"], 2),
])
def test_exit_codes(capsys, argv, code):
    # argparse rejections exit through SystemExit with the same status
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    capsys.readouterr()
    assert got == code


def test_negative_values_after_flags(capsys):
    data = curvature_json(capsys, "--axis", "timelike", "--curve", "poly:0,-1", "--h", "-1/2", "--sample", "-1,-2")
    assert data["samples"][0]["s"] == -1 and abs(data["samples"][0]["K"] - 4) < 1e-9


# -- verify and catalog -----------------------------------------------------------------

def test_verify_t1(capsys):
    code, out, _ = run(capsys, "verify", "t1", "--max-degree", "6")
    assert code == 0
    assert out.rstrip().endswith("t1: 6/6 reports match")
    assert "degree 17: coeff = -216*a6^3 ≠ 0 given {a6 ≠ 0, h ≠ 0}" in out


def test_verify_t3_json(capsys):
    code, out, _ = run(capsys, "verify", "t3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["status"] == "Matches"
    assert {r["status"] for r in data["reports"]} == {"Matches"}


def test_verify_t4_reports_the_spacelike_difference(capsys):
    code, out, _ = run(capsys, "verify", "t4")
    assert code == 4
    assert "t4 axis=spacelike curve=poly mode=H^2=K: Mismatch" in out


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert out.rstrip().endswith("9/9 entries pass")
    code, out, _ = run(capsys, "catalog", "--format", "json")
    rows = json.loads(out)["entries"]
    assert len(rows) == 9 and all(r["pass"] for r in rows)


# -- orbit and mesh ----------------------------------------------------------------

def test_orbit_lightlike_plane(capsys):
    code, out, _ = run(capsys, "orbit", "--axis", "lightlike", "--point", "1,0,3", "--steps", "5")
    rows = out.strip().splitlines()
    assert code == 0 and rows[0] == "t,x,y,z" and len(rows) == 6
    for row in rows[1:]:
        _, x, _, z = map(float, row.split(","))
        assert x - z == -2


def test_orbit_timelike_circle(capsys):
    _, out, _ = run(capsys, "orbit", "--axis", "timelike", "--point", "3,4,1", "--steps", "7", "--t-range", "0,6")
    for row in out.strip().splitlines()[1:]:
        _, x, y, z = map(float, row.split(","))
        assert abs(x * x + y * y - 25) < 1e-9 and z == 1


def test_mesh_cayley(capsys, tmp_path):
    path = tmp_path / "cayley.obj"
    assert run(capsys, "mesh", "--surface", "cayley", "--n", "10", "-o", str(path))[0] == 0
    lines = path.read_text().splitlines()
    verts = [ln for ln in lines if ln.startswith("v ")]
    faces = [ln for ln in lines if ln.startswith("f ")]
    assert len(verts) == 100 and len(faces) == 162
    idx = [int(i) for ln in faces for i in ln.split()[1:]]
    assert min(idx) == 1 and max(idx) == 100
    assert faces[0] == "f 1 11 12"


def test_mesh_from_curve(capsys):
    code, out, _ = run(capsys, "mesh", "--axis", "spacelike", "--curve", "circle:-", "--r", "1", "--lambda", "0",
                       "--mu", "0", "--h", "1", "--n", "4", "--s-range", "-1,1", "--t-range", "0,1")
    assert code == 0
    assert sum(ln.startswith("v ") for ln in out.splitlines()) == 16


def test_unwritable_output(capsys, tmp_path):
    target = tmp_path / "missing" / "dir" / "out.obj"
    assert run(capsys, "mesh", "--surface", "cayley", "--n", "3", "-o", str(target))[0] == 5
    assert run(capsys, "catalog", "-o", str(tmp_path))[0] == 5


@pytest.mark.skipif(shutil.which("helicoidal") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["helicoidal", "orbit", "--axis", "spacelike", "--point", "0,1,0", "--steps", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("t,x,y,z\n")
