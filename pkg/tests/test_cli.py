import dataclasses
import json
import shutil
import subprocess
import sys

import pytest

from bigsurf import cli
from bigsurf.bigness import SweepReport


def run_cli(capsys, *args):
    code = cli.main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


LINE_CONIC_25 = '{"model":"line_conic","a":2,"b":5,"both":0}'


def test_classify_line_conic(capsys):
    code, out, err = run_cli(capsys, "classify", "--json", LINE_CONIC_25)
    assert code == 0
    data = json.loads(out)
    assert data["big"] is True
    assert data["case"] == "ii"
    assert data["type"] == "E6"
    assert data["inequality"] == "13/10"
    assert list(data) == ["big", "case", "inequality", "v", "v_squared",
                          "type", "effective"]


def test_classify_reads_input_file(tmp_path, capsys):
    request = tmp_path / "config.json"
    request.write_text(LINE_CONIC_25, encoding="utf-8")
    code, out, _ = run_cli(capsys, "classify", "--input", str(request))
    assert code == 0
    assert json.loads(out)["type"] == "E6"


def test_classify_missing_input_file(capsys):
    code, out, err = run_cli(capsys, "classify", "--input", "/no/such/file.json")
    assert code == 1
    assert out == ""
    assert "error:" in err


def test_classify_generic_nine_points(capsys):
    code, out, _ = run_cli(capsys, "classify", "--json",
                           '{"model":"generic","r":9}')
    assert code == 0
    data = json.loads(out)
    assert data["big"] is False
    assert data["case"] == "i"
    assert data["type"] is None
    assert data["effective"] is None


def test_classify_rejects_family_params(capsys):
    code, _, err = run_cli(capsys, "classify", "--json",
                           '{"model":"hirzebruch_family","n":2,"k":3,"a":[2,3,7]}')
    assert code == 1
    assert "classify expects a point configuration" in err


def test_check_agreement(capsys):
    code, out, _ = run_cli(capsys, "check", "--json",
                           '{"model":"line_conic","a":3,"b":5}')
    assert code == 0
    data = json.loads(out)
    assert data["agrees"] is True
    assert data["v_orthogonal"] is True
    assert data["sign_consistent"] is True
    assert data["lattice"] is True
    assert data["type"] == "E7"
    keys = list(data)
    assert keys.index("lattice") < keys.index("type")


def test_check_disagreement_exits_two(monkeypatch, capsys):
    real = cli.cross_check

    def tampered(config):
        report = real(config)
        return dataclasses.replace(report, agrees=False)

    monkeypatch.setattr(cli, "cross_check", tampered)
    code, out, err = run_cli(capsys, "check", "--json", LINE_CONIC_25)
    assert code == 2
    assert json.loads(out)["agrees"] is False
    assert "disagrees" in err


def test_roots_generic_eight(capsys):
    code, out, _ = run_cli(capsys, "roots", "--json",
                           '{"model":"generic","r":8}')
    assert code == 0
    data = json.loads(out)
    assert data["type"] == "E8"
    assert data["root_count"] == 240
    assert data["components"] == [["E", 8]]
    assert len(data["basis"]) == 8
    assert len(data["roots"]) == 240


def test_roots_three_lines_example(capsys):
    code, out, _ = run_cli(
        capsys, "roots", "--json",
        '{"model":"three_lines","a":[5,3,2],"intersections":[true,true,true]}')
    assert code == 0
    data = json.loads(out)
    assert data["type"] == "E8"
    assert data["root_count"] == 240


def test_roots_not_big_is_domain_error(capsys):
    code, out, err = run_cli(capsys, "roots", "--json",
                             '{"model":"line_conic","a":3,"b":7}')
    assert code == 1
    assert out == ""
    assert "not negative definite" in err or "not big" in err


def test_roots_dot_output(capsys):
    code, out, _ = run_cli(capsys, "roots", "--format", "dot", "--json",
                           '{"model":"line_conic","a":2,"b":5}')
    assert code == 0
    assert out.startswith("graph coxeter {")
    assert "--" in out
    assert out.endswith("}\n")


def test_dot_rejected_outside_roots(capsys):
    code, _, err = run_cli(capsys, "classify", "--format", "dot",
                           "--json", LINE_CONIC_25)
    assert code == 1
    assert "invalid choice" in err


def test_zariski_frozen_example(capsys):
    code, out, _ = run_cli(capsys, "zariski", "--json",
                           '{"model":"hirzebruch_family","n":2,"k":3,"a":[2,3,7]}')
    assert code == 0
    data = json.loads(out)
    assert data["p_squared"] == "42/43"
    assert data["lc_coefficient"] == "44/43"
    assert data["log_canonical"] is False
    assert all(data["checks"].values())
    assert data["positive_part"][0] == "42/43"


def test_zariski_invalid_params(capsys):
    code, _, err = run_cli(capsys, "zariski", "--json",
                           '{"model":"hirzebruch_family","n":2,"k":9,"a":[2]}')
    assert code == 1
    assert "k must satisfy 3 <= k <= n + 1" in err


def test_enumerate_counts(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--json",
                           '{"model":"generic","r":6}')
    assert code == 0
    data = json.loads(out)
    assert data["minus_one_count"] == 27
    assert data["root_count"] == 72
    assert data["minus_one_classes"][0] == ["0", "1", "0", "0", "0", "0", "0"]


def test_enumerate_out_of_range(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--json",
                           '{"model":"generic","r":9}')
    assert code == 1
    assert "0 <= r <= 8" in err


def test_witness_holds(capsys):
    code, out, _ = run_cli(capsys, "witness", "--json",
                           '{"example":"hirzebruch_b","n":2}')
    assert code == 0
    data = json.loads(out)
    assert data["holds"] is True
    assert data["example"] == "hirzebruch_b"


def test_witness_broken_variant_still_reports(capsys):
    code, out, _ = run_cli(
        capsys, "witness", "--json",
        '{"example":"hirzebruch_b","n":2,"fibers":[[1,true],[1,false],[1,false]]}')
    assert code == 0
    data = json.loads(out)
    assert data["holds"] is False
    assert any(c != "0" for c in data["residual"])


def test_witness_unknown_example(capsys):
    code, _, err = run_cli(capsys, "witness", "--json",
                           '{"example":"pentagon_e"}')
    assert code == 1
    assert "error:" in err


def test_sweep_small(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--max-a", "3", "--max-b", "3",
                           "--max-ai", "2")
    assert code == 0
    data = json.loads(out)
    assert data["disagreements"] == 0
    assert data["flag_violations"] == 0
    assert data["line_conic_count"] == 4 * 4 * 3


def test_sweep_disagreement_exits_two(monkeypatch, capsys):
    monkeypatch.setattr(
        cli, "agreement_sweep",
        lambda *bounds: SweepReport(1, 0, ("LineConic(1, 1, 0)",), ()))
    code, out, err = run_cli(capsys, "sweep")
    assert code == 2
    assert json.loads(out)["disagreements"] == 1
    assert "disagreements" in err


def test_malformed_json(capsys):
    code, _, err = run_cli(capsys, "classify", "--json", '{"model":')
    assert code == 1
    assert "malformed JSON" in err


def test_unknown_field_has_path(capsys):
    code, _, err = run_cli(capsys, "classify", "--json",
                           '{"model":"line_conic","a":2,"b":5,"c":1}')
    assert code == 1
    assert "unknown field: line_conic.c" in err


def test_missing_field_has_path(capsys):
    code, _, err = run_cli(capsys, "classify", "--json",
                           '{"model":"line_conic","a":2}')
    assert code == 1
    assert "missing field: line_conic.b" in err


def test_missing_model(capsys):
    code, _, err = run_cli(capsys, "classify", "--json", '{"a":2,"b":5}')
    assert code == 1
    assert "missing field: model" in err


def test_unknown_model(capsys):
    code, _, err = run_cli(capsys, "classify", "--json", '{"model":"cubic"}')
    assert code == 1
    assert "unknown model" in err


def test_bool_rejected_for_integer_field(capsys):
    code, _, err = run_cli(capsys, "classify", "--json",
                           '{"model":"generic","r":true}')
    assert code == 1
    assert "generic.r must be an integer" in err


def test_intersections_validated(capsys):
    code, _, err = run_cli(capsys, "classify", "--json",
                           '{"model":"three_lines","a":[1,1,1],"intersections":[true]}')
    assert code == 1
    assert "three_lines.intersections" in err


def test_text_format(capsys):
    code, out, _ = run_cli(capsys, "classify", "--format", "text",
                           "--json", LINE_CONIC_25)
    assert code == 0
    assert "big: true" in out
    assert "case: ii" in out
    assert "type: E6" in out


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "classify", "--json", LINE_CONIC_25,
                           "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["type"] == "E6"


def test_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "roots", "--json", '{"model":"generic","r":7}')
    _, second, _ = run_cli(capsys, "roots", "--json", '{"model":"generic","r":7}')
    assert first == second


def test_help_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "--help")
    assert code == 0
    assert "classify" in out


def test_module_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "bigsurf.cli", "classify", "--json", LINE_CONIC_25],
        capture_output=True, text=True)
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["big"] is True
    assert data["type"] == "E6"


def test_package_main_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "bigsurf", "roots", "--json",
         '{"model":"generic","r":6}'],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["type"] == "E6"


@pytest.mark.skipif(shutil.which("bigsurf") is None,
                    reason="console script not on PATH")
def test_console_script():
    proc = subprocess.run(
        ["bigsurf", "enumerate", "--json", '{"model":"generic","r":7}'],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["minus_one_count"] == 56
