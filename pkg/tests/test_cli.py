import subprocess
import sys

import pytest
from click.testing import CliRunner

from nimgraph.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAIL, cli, main
from nimgraph.graph import generate, serialize_instance


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def left_c4_file(tmp_path, golden_c4_mover_win):
    path = tmp_path / "left.nim"
    path.write_text(serialize_instance(golden_c4_mover_win))
    return str(path)


def test_solve_mover_win(runner, left_c4_file):
    result = runner.invoke(cli, ["solve", left_c4_file])
    assert result.exit_code == 0
    assert "winner: mover (p-position)" in result.output
    assert "grundy:" in result.output


def test_generate_then_analyze_ssb(runner, tmp_path):
    out = str(tmp_path / "ssb4.nim")
    result = runner.invoke(
        cli, ["generate", "--family", "ssb", "--j", "4", "--weights", "uniform:1", "-o", out]
    )
    assert result.exit_code == 0
    result = runner.invoke(cli, ["analyze", out])
    assert result.exit_code == 0
    assert "SSBHubStart(j=4" in result.output
    assert "prediction: mover" in result.output


def test_verify_k2j_suite_exit_zero():
    code = main(["verify", "--suite", "k2j", "--max-j", "3"])
    assert code == EXIT_OK


def test_usage_error_exit_two():
    assert main(["verify", "--suite", "nonsense"]) == EXIT_USAGE
    assert main(["frobnicate"]) == EXIT_USAGE


def test_budget_exceeded_exit_three(tmp_path):
    g = generate("complete", n=5, weights=("uniform", 2))
    path = tmp_path / "k5.nim"
    path.write_text(serialize_instance(g))
    assert main(["solve", str(path), "--budget", "10"]) == EXIT_BUDGET


def test_csv_output_deterministic(runner):
    args = ["verify", "--suite", "even-cycles", "--max-n", "4", "--weight-cap", "2",
            "--format", "csv"]
    r1 = runner.invoke(cli, args)
    r2 = runner.invoke(cli, args)
    assert r1.output == r2.output
    assert r1.output.startswith("family,params,start,prediction,oracle,verdict")


def test_generate_to_stdout_round_trips(runner):
    result = runner.invoke(cli, ["generate", "--family", "cycle", "--n", "5",
                                 "--weights", "random:4", "--seed", "9"])
    assert result.exit_code == 0
    from nimgraph.graph import parse_instance

    g = parse_instance(result.output)
    assert g.vertex_count == 5


def test_play_quit_immediately(runner, left_c4_file):
    result = runner.invoke(cli, ["play", left_c4_file], input="q\n")
    assert result.exit_code == 0
    assert "token at: 0" in result.output


def test_play_one_exchange(runner, left_c4_file):
    result = runner.invoke(cli, ["play", left_c4_file, "--engine", "oracle"],
                           input="1 0\nq\n")
    assert result.exit_code == 0
    assert "engine (oracle) plays:" in result.output


def test_module_entrypoint_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "nimgraph.cli", "--help"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "solve" in proc.stdout
