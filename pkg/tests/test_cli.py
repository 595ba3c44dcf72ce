import json
import subprocess
import sys

import jsonschema
import pytest
from hypothesis import given, settings

from conftest import partitions
from hookbias.cli import main
from hookbias.schemas import REPORT_SCHEMA, SERIES_SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_sylvester(capsys):
    assert run(capsys, "sylvester", "psi", "7,5,3,3")[:2] == (0, "7,6,4,1")
    assert run(capsys, "sylvester", "sigma", "1")[:2] == (0, "1")
    assert run(capsys, "sylvester", "sigma", "-")[:2] == (0, "-")


@settings(max_examples=30)
@given(partitions(25, odd=True))
def test_round_trip(pi):
    import contextlib
    import io
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        main(["sylvester", "psi", str(pi)])
    image = buf.getvalue().strip()
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        main(["sylvester", "sigma", image])
    assert buf.getvalue().strip() == str(pi)


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "b2", "--L", "5", "--N", "7")
    assert code == 0 and out.splitlines()[-1].split() == ["7", "4"]
    code, out, _ = run(capsys, "expand", "b2", "--L", "5", "--N", "7", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, SERIES_SCHEMA)
    assert data["coeffs"][-1] == 4
    code, out, _ = run(capsys, "expand", "a2inf", "--N", "4", "--format", "csv")
    assert out.splitlines()[0] == "n,value"


def test_census(capsys):
    code, out, _ = run(capsys, "census", "distinct", "--t", "3", "--L", "5", "--n-max", "7", "--format", "csv")
    assert out.splitlines()[-1] == "7,4"
    code, out, _ = run(capsys, "census", "distinct", "--L", "5", "--n-max", "7", "--refined",
                       "--weight", "m", "--format", "csv")
    assert out.splitlines()[-1] == "7,4"
    code, out, _ = run(capsys, "census", "odd", "--L", "3", "--n-max", "4", "--refined", "--format", "csv")
    assert out.splitlines()[0] == "m,n,value"
    code, _, err = run(capsys, "census", "odd", "--n-max", "4", "--weight", "m")
    assert code == 2


def test_phi(capsys):
    assert run(capsys, "phi", "--L", "7", "6,5|2")[:2] == (0, "9,3|1")
    assert run(capsys, "phi", "--L", "7", "6,5|-")[:2] == (0, "11|-")
    assert run(capsys, "phi", "--L", "7", "6,5,1|")[0] == 2


def test_hooks(capsys):
    code, out, _ = run(capsys, "hooks", "8,6,5,2,1", "--render")
    assert out.splitlines()[0] == "|12|10| 8| 7| 6| 4| 2| 1|"
    code, out, _ = run(capsys, "hooks", "5,2")
    assert out.splitlines() == ["6 5 3 2 1", "2 1"]


def test_verify_and_scan(capsys):
    code, out, _ = run(capsys, "verify", "T2.9", "--N", "30", "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), REPORT_SCHEMA)
    code, out, _ = run(capsys, "verify", "T2.4", "--format", "json")
    assert code == 1 and json.loads(out)["status"] == "violated"
    code, out, _ = run(capsys, "scan", "C4.1", "--L-max", "5", "--n-max", "40", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "evidence-only"
    jsonschema.validate(json.loads(out), REPORT_SCHEMA)


@pytest.mark.parametrize("argv", [
    ["sylvester", "psi", "3,5"],
    ["sylvester", "psi", "4"],
    ["sylvester", "psi", "a,b"],
    ["expand", "zz", "--N", "3"],
    ["verify", "X1"],
    ["verify", "T2.9", "--L-max", "3"],
    ["nonsense"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "s.json"
    assert main(["expand", "a2", "--L", "3", "--N", "6", "--format", "json", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    jsonschema.validate(json.loads(target.read_text()), SERIES_SCHEMA)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hookbias", "sylvester", "psi", "7,5,3,3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "7,6,4,1"
