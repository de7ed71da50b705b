import json
import math
import re

import pytest

from bianchi_klf import cli
from bianchi_klf.numfield import ImagQuadField


def test_parse_entry():
    F = ImagQuadField.of(-2)
    assert cli.parse_entry(F, "3") == F(3)
    assert cli.parse_entry(F, "2w") == F(0, 2)
    assert cli.parse_entry(F, "1+2w") == F(1, 2)
    assert cli.parse_entry(F, "-1-w") == F(-1, -1)
    assert cli.parse_entry(ImagQuadField.of(-1), "1+i") == ImagQuadField.of(-1)(1, 1)
    for bad in ("", "1+", "x", "1+i", "w2"):
        with pytest.raises(ValueError):
            cli.parse_entry(F, bad)


def test_parse_matrix():
    F = ImagQuadField.of(-1)
    M = cli.parse_matrix(F, "1,1;1,2")
    assert (M.a, M.b, M.c, M.d) == (F(1), F(1), F(1), F(2))
    with pytest.raises(ValueError):
        cli.parse_matrix(F, "1,1;1,1")
    with pytest.raises(ValueError):
        cli.parse_matrix(F, "1,1,1;1")


def test_parse_point():
    u = cli.parse_point("0.3,0.4,0.9")
    assert (u.x, u.y, u.r) == (0.3, 0.4, 0.9)
    with pytest.raises(Exception):
        cli.parse_point("0,0,-1")


def test_encode_17_digits():
    text = cli.encode({"a": 0.1, "b": 1 + 2j, "c": [float("nan")], "d": None})
    assert "0.10000000000000001" in text
    back = json.loads(text)
    assert back["b"] == {"re": 1.0, "im": 2.0}
    assert back["c"] == ["nan"]


def test_config_precedence(tmp_path):
    ini = tmp_path / "run.ini"
    ini.write_text("[field]\nd = -2\n[truncation]\nc_max = 30\n[quadrature]\ngrid = 40\n")
    env = {"BKLF_TRUNCATION_C_MAX": "20", "BKLF_QUADRATURE_GRID": "48"}
    cfg = cli.load_config(str(ini), env=env, overrides={("quadrature", "grid"): 64})
    assert cfg.d == -2
    assert cfg.c_max == 20.0
    assert cfg.grid == 64
    assert cli.load_config(None, env={}).d == -1


@pytest.mark.parametrize(
    "text,path",
    [
        ("[field]\nd = -2\nfoo = 1\n", "field.foo"),
        ("[bogus]\nx = 1\n", "bogus"),
        ("[tolerances]\nmystery = 1e-3\n", "tolerances.mystery"),
        ("[truncation]\nc_max = -1\n", "truncation.c_max"),
        ("[laurent]\neps_schedule = 1e-3, 2e-3, 1e-4\n", "laurent.eps_schedule"),
        ("[field]\nd = -5\n", "field.d"),
    ],
)
def test_config_errors_name_key_path(tmp_path, text, path):
    ini = tmp_path / "bad.ini"
    ini.write_text(text)
    with pytest.raises(cli.ConfigError, match=re.escape(path)):
        cli.load_config(str(ini), env={})


def test_config_error_exit_status(tmp_path, capsys):
    ini = tmp_path / "bad.ini"
    ini.write_text("[field]\nfoo = 1\n")
    assert cli.main(["zeta2", "--config", str(ini)]) == 2
    assert "field.foo" in capsys.readouterr().err


def _records(path):
    return [json.loads(line) for line in path.read_text().splitlines()]


def test_report_fields_and_determinism(tmp_path):
    out1, out2 = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert cli.main(["verify-all", "--criteria", "4,10", "-q", "-o", str(out1)]) == 0
    assert cli.main(["verify-all", "--criteria", "4,10", "-q", "-o", str(out2)]) == 0
    r1, r2 = _records(out1), _records(out2)
    assert all(set(r) == {"id", "anchor", "inputs", "value", "residual", "tol", "status", "ms"} for r in r1)
    assert len({r["id"] for r in r1}) == len(r1)
    strip = lambda rs: [{k: v for k, v in r.items() if k != "ms"} for r in rs]
    assert strip(r1) == strip(r2)


def test_fourier_coeff_command(tmp_path, capsys):
    out = tmp_path / "f.jsonl"
    assert cli.main(["fourier-coeff", "--omega", "0,1", "--quadrature", "-o", str(out)]) == 0
    recs = _records(out)
    assert [r["status"] for r in recs] == ["report-only", "pass"]
    assert "pass" in capsys.readouterr().out


def test_elliptic_dedekind_command(tmp_path):
    out = tmp_path / "e.jsonl"
    assert cli.main(["elliptic-dedekind", "--d", "-2", "--c", "1+w", "--d-entry", "3+w", "-q", "-o", str(out)]) == 0
    value = _records(out)[0]["value"]
    assert abs(value["re"]) < 1e-12 and abs(value["im"]) > 1e-6


def test_klf_command(tmp_path):
    out = tmp_path / "k.jsonl"
    assert cli.main(["klf", "--point", "0.3,0.4,0.9", "-q", "-o", str(out)]) == 0
    recs = {r["id"]: r for r in _records(out)}
    assert recs["klf.residual"]["status"] == "pass"
    assert recs["klf.residual"]["residual"] < 1e-6


def test_dgamma_command_reports_sample_dependence(tmp_path):
    out = tmp_path / "d.jsonl"
    status = cli.main(["dgamma", "--matrix", "1,1;1,2", "-q", "-o", str(out)])
    recs = {r["id"]: r for r in _records(out)}
    assert set(recs) == {"dgamma.value", "dgamma.sample-sd", "dgamma.square"}
    assert status == (1 if any(r["status"] == "fail" for r in recs.values()) else 0)


def test_zeta2_command(tmp_path):
    out = tmp_path / "z.jsonl"
    assert cli.main(["zeta2", "-q", "-o", str(out)]) == 0
    rec = _records(out)[0]
    assert rec["status"] == "report-only"
    assert rec["value"]["zeta_K(2)"] == pytest.approx(1.506703009922985, rel=1e-14)
