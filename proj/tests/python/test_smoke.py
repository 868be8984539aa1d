import json
import os
import pathlib
import subprocess

import jsonschema
import numpy as np
import pytest

import hbcomp

ROOT = pathlib.Path(os.environ.get("HBCOMP_ROOT", pathlib.Path(__file__).resolve().parents[2]))
CLI = os.environ.get("HBCOMP_CLI", str(ROOT / "build" / "hbcomp"))
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())
PROBLEMS = sorted((ROOT / "problems").glob("*.json"))
FAILING = {"inner_b.json", "not_self_map.json", "membership.json"}

HS_QUARTER = {"b": [0.5, 0.5], "phi": [0.5, -0.5]}


def cplx(pair):
    return complex(pair[0], pair[1])


def test_version():
    assert hbcomp.__version__.count(".") == 2


def test_mate_half():
    m = hbcomp.mate({"b": [0.5, 0.5]})
    num = [cplx(c) for c in m["a"]["num"]]
    den = cplx(m["a"]["den"][0])
    assert np.allclose(np.array(num) / den, [0.5, -0.5], atol=1e-10)
    assert m["N"] == 1
    assert abs(cplx(m["boundary_zeros"][0]["xi"]) - 1) < 1e-12


def test_analyze_report():
    r = hbcomp.analyze(HS_QUARTER)
    jsonschema.validate(r, SCHEMA)
    v = r["verdict"]
    assert (v["bounded"], v["compact"], v["hilbert_schmidt"]) == ("yes", "yes", "yes")
    assert abs(v["hs_integral"]["value"] - 0.25) < 1e-8
    assert all(rule["citation"] for rule in v["fired_rules"])


def test_membership_and_u():
    d = hbcomp.hb_membership({"b": [0.5, 0.5], "f": {"num": [1], "den": [1, -0.5]}})
    assert d["member"] and d["norm_sq"] > 0
    d = hbcomp.hb_membership({"b": [0.5, 0.5], "f": {"num": [1], "den": [-1, 1]}})
    assert not d["member"]
    u = hbcomp.u(json.loads((ROOT / "problems" / "cubic_a_square.json").read_text()))
    assert u["in_H2"] is False
    assert abs(cplx(u["witness_pole"]) + 1) < 1e-9


def test_errors():
    with pytest.raises(hbcomp.HbcompError) as e:
        hbcomp.analyze({"b": [0, 1], "phi": [0, 0.5]})
    assert hbcomp.error_code(e.value) == "IsInner"
    with pytest.raises(hbcomp.HbcompError) as e:
        hbcomp.analyze({"b": [0.5, 0.5], "phi": [0, 2]})
    assert hbcomp.error_code(e.value) == "NotASelfMap"
    with pytest.raises(hbcomp.HbcompError) as e:
        hbcomp.analyze({"b": [0.5, 0.5], "a": [0.5, -0.5], "phi": [0]})
    assert hbcomp.error_code(e.value) == "SchemaError"


def test_matrix_and_scan():
    m = hbcomp.matrix(dict(HS_QUARTER, trunc=32), basis="h2")
    assert m["matrix"].shape == (32, 32)
    assert abs(np.sum(np.abs(m["matrix"]) ** 2) - m["frobenius_sq"]) < 1e-12
    assert m["frobenius_sq"] < 0.25
    s = hbcomp.scan(dict(HS_QUARTER, grid={"depth": 4, "uniform_angles": 8, "generic_traces": 2}))
    assert s.shape[1] == 3 and len(s) > 32
    assert np.all(s[:, 2] >= 0)


def test_gallery():
    rows = hbcomp.gallery()
    assert rows and all(r["passed"] for r in rows), [r for r in rows if not r["passed"]]
    assert all(r["passed"] for r in hbcomp.gallery(tol={"quad_tol": 1e-4}))
    assert {r["name"] for r in hbcomp.gallery("hs")} == {"hs-quarter", "hs-divergent", "hs-contact", "strict-half"}


@pytest.mark.parametrize("path", PROBLEMS, ids=lambda p: p.name)
def test_cli_analyze(path):
    run = subprocess.run([CLI, "analyze", str(path)], capture_output=True, text=True)
    if path.name in FAILING:
        assert run.returncode == 2
        assert run.stderr.startswith("hbcomp: ")
        return
    assert run.returncode == 0, run.stderr
    jsonschema.validate(json.loads(run.stdout), SCHEMA)
    again = subprocess.run([CLI, "analyze", str(path)], capture_output=True, text=True)
    assert again.stdout == run.stdout


def test_cli_misc(tmp_path):
    out = tmp_path / "scan.csv"
    p = str(ROOT / "problems" / "hs_quarter.json")
    assert subprocess.run([CLI, "scan", p, "--grid-depth", "3", "--out", str(out)]).returncode == 0
    assert out.read_text().splitlines()[0] == "re_w,im_w,I_w"
    run = subprocess.run([CLI, "analyze", p, "--tol", "quad_tol=1e-6", "--trunc", "16"], capture_output=True, text=True)
    report = json.loads(run.stdout)
    assert report["tolerances"]["quad_tol"] == 1e-6
    assert report["matrix"]["K"] == 16
    jsonschema.validate(report, SCHEMA)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert subprocess.run([CLI, "analyze", str(bad)], capture_output=True).returncode == 2
    assert subprocess.run([CLI, "analyze", p, "--tol", "bogus=1"], capture_output=True).returncode == 2
    g = subprocess.run([CLI, "gallery", "--filter", "errors"], capture_output=True, text=True)
    assert g.returncode == 0 and "2/2 passed" in g.stdout
