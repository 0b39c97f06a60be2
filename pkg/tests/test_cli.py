import json
import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "linkrank", *args],
        capture_output=True,
    )


def test_rank_json_details_matches_golden():
    result = run_cli("rank", "6", "3", "3", "--format", "json", "--details")
    assert result.returncode == 0
    assert result.stdout == (GOLDEN / "rank_6_3_3.json").read_bytes()


def test_framed_json_matches_golden():
    result = run_cli("framed", "8", "5:3", "5:3", "--format", "json")
    assert result.returncode == 0
    assert result.stdout == (GOLDEN / "framed_8_53_53.json").read_bytes()


def test_table2_csv_matches_golden():
    result = run_cli("tables", "table2", "--format", "csv")
    assert result.returncode == 0
    assert result.stdout == (GOLDEN / "table2.csv").read_bytes()


def test_table3_csv_matches_golden():
    result = run_cli("tables", "table3", "--format", "csv")
    assert result.returncode == 0
    assert result.stdout == (GOLDEN / "table3.csv").read_bytes()


def test_rank_text_output():
    result = run_cli("rank", "6", "3", "3")
    assert result.returncode == 0
    text = result.stdout.decode()
    assert "rank: 4" in text
    assert "brunnian rank: 2" in text
    assert "infinite: yes" in text


def test_rank_json_without_details():
    result = run_cli("rank", "8", "5", "5", "--format", "json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["rank"] == 0
    assert payload["infinite"] is False
    assert "decomposition" not in payload


def test_witt_values():
    assert run_cli("witt", "6", "3", "2").stdout.strip() == b"11"
    assert run_cli("witt", "5/2", "3", "2").stdout.strip() == b"0"


def test_stiefel_value():
    assert run_cli("stiefel", "3", "4", "2").stdout.strip() == b"2"


def test_fcs_box():
    result = run_cli("fcs", "even", "odd", "--xmax", "3", "--ymax", "3")
    assert result.returncode == 0
    points = [tuple(map(int, line.split())) for line in result.stdout.decode().split("\n") if line]
    assert points == sorted(points)
    assert (1, 1) in points


def test_oracle_verify_runs_clean():
    result = run_cli("oracle", "verify", "--max-r", "2", "--max-degree", "2",
                     "--max-letters", "4")
    assert result.returncode == 0
    assert b"128 checks" in result.stdout


def test_invalid_input_exits_two():
    assert run_cli("rank", "5", "3", "3").returncode == 2
    assert run_cli("rank", "6", "3", "--brunnian").returncode == 2
    assert run_cli("rank", "6").returncode == 2


def test_budget_exhaustion_exits_three():
    result = run_cli("oracle", "verify", "--max-letters", "6", "--budget", "3")
    assert result.returncode == 3


def test_help_exits_zero():
    assert run_cli("--help").returncode == 0
    assert run_cli("rank", "--help").returncode == 0


def test_error_messages_go_to_stderr():
    result = run_cli("rank", "5", "3", "3")
    assert result.stdout == b""
    assert b"error" in result.stderr.lower()
