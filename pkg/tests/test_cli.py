import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from alexmod.cli import main

from conftest import TREFOIL

GAMMA2222 = "gens: x1, x2, x3, x4\nrels: x1*x2*x3*x4; x1^2; x2^2; x3^2; x4^2\n"
DIAG_Z2 = "target: Z/2\nx1 -> (; 1)\nx2 -> (; 1)\nx3 -> (; 1)\nx4 -> (; 1)\n"
GAMMA4444 = "gens: x1, x2, x3, x4\nrels: x1*x2*x3*x4; x1^4; x2^4; x3^4; x4^4\n"
DIAG_Z4 = "target: Z/4\nx1 -> (; 1)\nx2 -> (; 1)\nx3 -> (; 1)\nx4 -> (; 1)\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def schema(command):
    text = resources.files("alexmod").joinpath(f"schemas/{command}.schema.json").read_text()
    return json.loads(text)


def run_json(capsys, command, *argv):
    code, out, err = run(capsys, command, *argv, "--json")
    payload = json.loads(out)
    jsonschema.validate(payload, schema(command))
    assert payload["command"] == command
    return code, payload


def test_trefoil_polynomial(capsys, files):
    P, h = files("t.grp", TREFOIL), files("t.hom", "target: Z\nx -> (1;)\ny -> (1;)\n")
    code, out, _ = run(capsys, "alexander", "--pres", P, "--hom", h, "--output", "poly")
    assert (code, out) == (0, "t^2 - t + 1\n")
    code, payload = run_json(capsys, "alexander", "--pres", P, "--hom", h, "--output", "poly")
    assert payload["polynomial"] == "t^2 - t + 1"
    code, out, _ = run(capsys, "alexander", "--pres", P, "--hom", h)
    assert out == "t^2 - t + 1 | -t^2 + t - 1\n"


def test_invariants_and_mod(capsys, files):
    P, h = files("g.grp", GAMMA2222), files("g.hom", DIAG_Z2)
    code, payload = run_json(capsys, "alexander", "--pres", P, "--hom", h, "--output",
                             "invariants")
    assert code == 0 and payload["text"] == "Z^3"
    code, payload = run_json(capsys, "alexander", "--pres", P, "--hom", h, "--output",
                             "invariants", "--mod", "2")
    assert payload["text"] == "Z/2 x Z/2 x Z/2"


def test_fox(capsys):
    code, out, _ = run(capsys, "fox", "--word", "x*y*x^-1", "--gen", "x")
    assert (code, out) == (0, "1 - x*y*x^-1\n")
    code, payload = run_json(capsys, "fox", "--word", "x*y*x^-1", "--gen", "x")
    assert payload["derivative"] == "1 - x*y*x^-1"


def test_snf(capsys, files):
    M = files("m.mat", "2 2\n2 4\n6 8\n")
    code, payload = run_json(capsys, "snf", "--matrix", M)
    assert code == 0
    assert payload["D"] == [[2, 0], [0, 4]]
    assert payload["U"] == [[1, 0], [3, -1]] and payload["V"] == [[1, -2], [0, 1]]
    code, out, _ = run(capsys, "snf", "--matrix", M)
    assert "cokernel: Z/2 x Z/4" in out


def test_crowell_check_pass_and_negative_control(capsys, files):
    P, h = files("g.grp", GAMMA2222), files("g.hom", DIAG_Z2)
    code, payload = run_json(capsys, "crowell-check", "--pres", P, "--hom", h)
    assert code == 0 and payload["passed"]
    code, payload = run_json(capsys, "crowell-check", "--pres", P, "--hom", h,
                             "--drop-theta2", "x1")
    assert code == 1 and not payload["passed"]
    sites = {s["name"]: s for s in payload["reports"][0]["sites"]}
    assert sites["theta2_well_defined"]["witness"] == {"relator": 1, "image": sites[
        "theta2_well_defined"]["witness"]["image"]}
    code, out, _ = run(capsys, "crowell-check", "--pres", P, "--hom", h, "--drop-theta2", "x1")
    assert "[FAIL] theta2_well_defined" in out and "witness" in out


def test_cover(capsys, files):
    code, payload = run_json(capsys, "cover", "--indices", "2,2,2,2,2,2", "--cyclic", "2")
    assert code == 0
    assert payload["homology"]["free_rank"] == 4 and payload["genus"] == 2
    assert [t["computed"] for t in payload["traces"]] == [4, -4]
    code, payload = run_json(capsys, "cover", "--indices", "2,2,2,2")
    assert payload["deck_group"]["torsion"] == [2, 2, 2]
    lat = files("r0.mat", "4 3\n1 0 0\n-1 1 0\n0 -1 1\n0 0 -1\n")
    code, payload = run_json(capsys, "cover", "--indices", "2,2,2,2", "--subgroup", lat)
    assert code == 0 and payload["genus"] == 1
    # unramified points leave torsion, which a closed surface cannot have
    code, payload = run_json(capsys, "cover", "--indices", "4,4,4,4", "--cyclic", "2")
    assert code == 1 and not payload["passed"]
    assert len(payload["warnings"]) == 4 and "Z/2" in payload["first"]


def test_c2_check(capsys, files):
    P, h = files("g.grp", GAMMA4444), files("g.hom", DIAG_Z4)
    sub = files("a.txt", "(; 2)\n")
    code, payload = run_json(capsys, "c2-check", "--pres", P, "--hom", h, "--subgroup", sub)
    assert code == 0 and payload["passed"]


@pytest.mark.parametrize("argv", [
    ["cover", "--indices", "2,3"],
    ["cover", "--indices", "2,x,2"],
    ["snf", "--matrix", "/nonexistent/file"],
    ["bogus"],
    ["fox", "--word", "x^0", "--gen", "x"],
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_parse_error_positions(capsys, files):
    P = files("bad.grp", "gens: x\nrels: x^0\n")
    h = files("h.hom", "target: Z\nx -> (1;)\n")
    code, _, err = run(capsys, "alexander", "--pres", P, "--hom", h)
    assert code == 2 and "line 2, column 9: zero exponent" in err


def test_relator_not_killed_is_input_error(capsys, files):
    P = files("t.grp", TREFOIL)
    h = files("t.hom", "target: Z\nx -> (1;)\ny -> (2;)\n")
    code, _, err = run(capsys, "alexander", "--pres", P, "--hom", h)
    assert code == 2 and "relator 0" in err


def test_determinism(files):
    P, h = files("g.grp", GAMMA2222), files("g.hom", DIAG_Z2)
    cmd = [sys.executable, "-m", "alexmod", "crowell-check", "--pres", P, "--hom", h,
           "--seed", "3", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
    cmd = [sys.executable, "-m", "alexmod", "cover", "--indices", "3,3,3", "--cyclic", "3"]
    assert subprocess.run(cmd, capture_output=True).stdout == \
        subprocess.run(cmd, capture_output=True).stdout


def test_plain_and_json_agree(capsys, files):
    P, h = files("g.grp", GAMMA2222), files("g.hom", DIAG_Z2)
    _, out, _ = run(capsys, "crowell-check", "--pres", P, "--hom", h)
    _, payload = run_json(capsys, "crowell-check", "--pres", P, "--hom", h)
    for rep in payload["reports"]:
        for site in rep["sites"]:
            assert f"[pass] {site['name']}" in out
