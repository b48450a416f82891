import json
import subprocess
import sys

import pytest

from kronlab import cli
from kronlab import partitions as pt


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("KRONLAB_CACHE", str(tmp_path / "cache"))


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_kron_text(capsys):
    code, out, _ = run_cli(capsys, "kron", "2,1", "2,1")
    assert code == 0
    assert out.strip() == "[3] + [2,1] + [1^3]"


def test_kron_size_mismatch_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "kron", "3,1", "2,1")
    assert code == 2
    assert "error" in err


def test_kron_parse_error(capsys):
    code, _, err = run_cli(capsys, "kron", "1,3", "2,2")
    assert code == 2


def test_kron_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "kron", "4,1", "3,2")
    assert code == 0
    data = json.loads(out)
    parsed = cli.parse_decomposition_json(data, 5)
    assert parsed.coeffs == {(4, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1}


def test_kron_method_both(capsys):
    code, out, _ = run_cli(capsys, "kron", "3,2,1", "3,2,1", "--method", "both")
    assert code == 0
    assert "[6]" in out


def test_kroncoeff(capsys):
    code, out, _ = run_cli(capsys, "kroncoeff", "3,2", "4,1", "4,1")
    assert code == 0 and out.strip() == "1"


def test_lr_and_skew(capsys):
    code, out, _ = run_cli(capsys, "lr", "1", "2,2")
    assert code == 0 and out.strip() == "[3,2] + [2^2,1]"
    code, out, _ = run_cli(capsys, "skew", "2,1/1")
    assert code == 0 and out.strip() == "[2] + [1^2]"
    code, out, _ = run_cli(capsys, "classify-skew", "2,2/1")
    assert code == 0 and out.strip() == "rotated-partition [2,1]"
    code, out, _ = run_cli(capsys, "classify-skew", "3,1/1")
    assert code == 0 and out.strip() == "proper-skew"


def test_skew_not_contained_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "skew", "2,2/3")
    assert code == 2


def test_extreme_json(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "extreme", "3,2", "4,1")
    assert code == 0
    data = json.loads(out)
    assert data["m"] == 4 and data["m_tilde"] == 3 and data["count"] == 4
    assert data["width_max"] == {"4,1": 1}


def test_chartable_caches(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "tables"
    monkeypatch.setenv("KRONLAB_CACHE", str(cache))
    from kronlab import characters as ch

    ch._TABLES.pop(3, None)
    code, out, _ = run_cli(capsys, "chartable", "3")
    assert code == 0
    assert (cache / "chartable_3.json").exists()
    assert "[2,1]" in out
    ch._TABLES.pop(3, None)


def test_chartable_out_of_range(capsys):
    code, _, err = run_cli(capsys, "--max-n", "5", "chartable", "9")
    assert code == 2


def test_sweep_stdout_and_file(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "sweep", "--n", "4")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert len(lines) == 15  # 5 partitions of 4, unordered pairs
    assert lines[0]["mu"] == "4"
    target = tmp_path / "catalog.jsonl"
    code, out, _ = run_cli(capsys, "sweep", "--n", "4", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().strip().splitlines()[0] == json.dumps(lines[0])


def test_verify_pass_and_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--theorem", "34c", "--n-max", "6")
    assert code == 0
    assert out.startswith("PASS")
    code, out, _ = run_cli(
        capsys, "--output", "json", "verify", "--theorem", "extcomp", "--n-max", "5"
    )
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_out_of_range(capsys):
    code, _, err = run_cli(capsys, "verify", "--theorem", "34c", "--n-max", "13")
    assert code == 2


def test_unknown_theorem_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--theorem", "nonsense", "--n-max", "4"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_module_entry_point(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "kronlab", "kron", "2,2", "2,2"],
        capture_output=True,
        text=True,
        env={"PATH": "", "KRONLAB_CACHE": str(tmp_path)},
    )
    assert result.returncode == 0
    assert result.stdout.strip() == "[4] + [2^2] + [1^4]"


def test_format_virtual_signs():
    rendered = cli.format_virtual({(3,): 1, (2, 1): -2, (1, 1, 1): 1})
    assert rendered == "[3] - 2[2,1] + [1^3]"
    assert cli.format_virtual({}) == "0"
