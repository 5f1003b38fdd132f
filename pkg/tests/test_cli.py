import json
import subprocess
import sys
from pathlib import Path

import pytest

from filippov.cli import main, parse_arity
from filippov.serialize import InputError

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_ok(capsys):
    code, out, _ = run(["check", str(DATA / "vector_product4.json")], capsys)
    assert code == 0 and json.loads(out)["ok"]


def test_check_mutated(tmp_path, capsys):
    d = json.loads((DATA / "vector_product4.json").read_text())
    d["table"][0]["value"] = [["1", 0]]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(d))
    code, out, _ = run(["check", str(p)], capsys)
    rep = json.loads(out)
    assert code == 1 and not rep["ok"] and rep["jacobi"]


def test_check_malformed(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text('{"arity": 3,\n "table": [}')
    code, _, err = run(["check", str(p)], capsys)
    assert code == 2 and "broken.json:2" in err


@pytest.mark.parametrize("lam,dim", [("1,0,0,0", 5), ("0,0,0,0", 1)])
def test_module(lam, dim, capsys):
    code, out, _ = run(["module", "--m", "1", "--n", "2", "--lambda", lam, "--parity", "even"], capsys)
    d = json.loads(out)
    assert code == 0 and d["dimension"] == dim and len(d["weights"]) == dim


def test_module_inadmissible(capsys):
    code, _, err = run(["module", "--m", "1", "--n", "2", "--lambda", "1,0,-1,0"], capsys)
    assert code == 2 and "nonnegative integer" in err


def test_module_to_file(tmp_path, capsys):
    out = tmp_path / "v.json"
    code, _, _ = run(["module", "--m", "1", "--n", "2", "--lambda", "1,0,0,0", "--out", str(out)], capsys)
    assert code == 0 and json.loads(out.read_text(encoding="utf-8"))["odd_dim"] == 3


def test_scan_a12_slice(tmp_path, capsys):
    cfg = tmp_path / "a.conf"
    cfg.write_text('m = 1\nn = 2\nlambdas = [["1","0","0","0"]]\nparities = ["even", "odd"]\n'
                   'arity_min = 2\narity_max = 3\n')
    out = tmp_path / "r.json"
    code, _, err = run(["scan", "--config", str(cfg), "--out", str(out)], capsys)
    d = json.loads(out.read_text())
    assert code == 0
    assert d["summary"]["items"] == 4 and d["summary"]["certified"] == 4 and d["summary"]["good"] == 0
    assert "4 certificates, 0 good triples" in err


def test_scan_so4_control(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(["scan", "--config", str(DATA / "so4_control.conf"), "--out", str(out)], capsys)
    d = json.loads(out.read_text())
    assert code == 0 and d["summary"]["good"] == 1
    assert d["reports"][0]["algebra"]["arity"] == 3


def test_scan_empty_lambda_list(tmp_path, capsys):
    cfg = tmp_path / "e.conf"
    cfg.write_text("m = 1\nn = 2\nlambdas = []\n")
    code, out, _ = run(["scan", "--config", str(cfg)], capsys)
    assert code == 0 and json.loads(out)["reports"] == []


@pytest.mark.parametrize("body", ["m = 1\nn = 1\nlambdas = []\n",
                                  "m = 1\nn = 2\nlambdas = [[1,0,-1,0]]\n",
                                  "m = 1\nn = 2\nlambdas = [\n",
                                  "m = 1\nn = 2\nlambdas = []\narity_min = 1\n",
                                  "colour = blue\n"])
def test_scan_bad_config(tmp_path, capsys, body):
    cfg = tmp_path / "bad.conf"
    cfg.write_text(body)
    code, _, _ = run(["scan", "--config", str(cfg)], capsys)
    assert code == 2


def test_triple_structure_constant_path(capsys):
    code, out, _ = run(["triple", "--lie", str(DATA / "so3_split.json"), "--module", str(DATA / "so3_natural.json"),
                        "--arity", "2"], capsys)
    d = json.loads(out)
    assert code == 0 and d["status"] == "good-triple" and d["skew_dim"] == 1


def test_triple_amn(capsys):
    code, out, _ = run(["triple", "--m", "1", "--n", "2", "--lambda", "1,0,0,0", "--arity", "3"], capsys)
    d = json.loads(out)
    assert code == 0 and d["certificate"] == "hom-space-zero"


def test_workers_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("WORKERS", "2")
    cfg = tmp_path / "w.conf"
    cfg.write_text('m = 1\nn = 2\nlambdas = [[1,0,0,0], [2,0,0,0]]\nparities = ["even"]\narity_min = 2\n')
    code, out, _ = run(["scan", "--config", str(cfg)], capsys)
    assert code == 0 and json.loads(out)["summary"]["certified"] == 2
    monkeypatch.setenv("WORKERS", "many")
    code, _, _ = run(["scan", "--config", str(cfg)], capsys)
    assert code == 2


def test_parse_arity():
    assert parse_arity("3") == [3]
    assert parse_arity("2-4") == [2, 3, 4]
    assert parse_arity("2,3") == [2, 3]
    with pytest.raises(InputError):
        parse_arity("1")


def test_usage_error_and_module_entry(capsys):
    assert main([]) == 2
    r = subprocess.run([sys.executable, "-m", "filippov", "check", str(DATA / "vector_product4.json")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["ok"]
