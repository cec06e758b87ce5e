import json
import shutil
import subprocess

import pytest

from conftest import fixture_text
from parmon.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("k,count", [(1, 2), (2, 15), (3, 203)])
def test_enumerate_diagram_counts(capsys, k, count):
    code, out, _ = run(capsys, "enumerate", "--what", "diagrams", "--k", str(k), "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == count


def test_enumerate_vt_with_end(capsys):
    code, out, _ = run(capsys, "enumerate", "--what", "vt", "--k", "2", "--end", "[1]", "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 3


def test_enumerate_spt(capsys):
    code, out, _ = run(capsys, "enumerate", "--what", "spt", "--k", "2", "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 7


def test_table_matches_reference(capsys):
    code, out, _ = run(capsys, "table", "--k", "2")
    assert code == 0
    assert out.strip() == fixture_text("k2_multiplication_table.csv").strip()


def test_table_randomized(capsys):
    code, out, _ = run(capsys, "table", "--k", "2", "--mode", "randomized", "--seed", "3")
    assert code == 0
    assert out.strip() == fixture_text("k2_multiplication_table.csv").strip()


def test_matrix_determinant(capsys):
    code, out, _ = run(capsys, "matrix", "--k", "2")
    assert code == 0
    data = json.loads(out)
    assert len(data["rows"]) == 15
    assert data["determinant"].startswith("-1/")


def test_units_k1(capsys):
    code, out, _ = run(capsys, "units", "--k", "1")
    assert code == 0
    data = json.loads(out)
    assert [b["size"] for b in data["blocks"]] == [1, 1]
    assert len(data["units"]) == 2


def test_verify_k1_and_k2(capsys):
    for k in ("1", "2"):
        code, out, _ = run(capsys, "verify", "--k", k)
        assert code == 0
        assert out.strip().splitlines()[-1].startswith("all ")


def test_verify_randomized_k2(capsys):
    code, out, _ = run(capsys, "verify", "--k", "2", "--mode", "randomized", "--seed", "5", "--trials", "2")
    assert code == 0
    assert "@" in out


def test_out_file(capsys, tmp_path):
    target = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table", "--k", "2", "--no-verify", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().strip() == fixture_text("k2_multiplication_table.csv").strip()


def test_usage_errors(capsys):
    assert run(capsys, "units", "--k", "5")[0] == 2
    assert run(capsys, "units", "--k", "0")[0] == 2
    assert run(capsys, "enumerate", "--what", "vt", "--k", "2", "--end", "[3]")[0] == 2
    assert run(capsys, "enumerate", "--what", "vt", "--k", "2", "--end", "nope")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["table"])
    assert e.value.code == 2


def test_deterministic(capsys):
    a = run(capsys, "matrix", "--k", "2", "--mode", "randomized", "--seed", "9")[1]
    b = run(capsys, "matrix", "--k", "2", "--mode", "randomized", "--seed", "9")[1]
    assert a == b


def test_console_script():
    exe = shutil.which("parmon")
    assert exe is not None
    res = subprocess.run([exe, "table", "--k", "1", "--no-verify"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip().splitlines()[1:] == ["1,1,2", "2,2,2"]
