"""Tests for the graphgen entry point."""

from unittest.mock import patch

import pytest

from graphgen import __version__
from graphgen.config import get_settings
from graphgen.main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep GRAPHGEN_* variables from leaking into runs."""
    for name in ("GRAPHGEN_SEED", "GRAPHGEN_LOG_FORMAT", "GRAPHGEN_PARALLEL_REGIONS"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def initiator(tmp_path):
    """A 2x2 initiator file."""
    path = tmp_path / "k.txt"
    path.write_text("0.99 0.5\n0.5 0.2\n")
    return path


def _printed_seed(err):
    lines = [line for line in err.splitlines() if line.startswith("graphgen: seed=")]
    assert len(lines) == 1
    return int(lines[0].split("=", 1)[1])


class TestGenerate:
    """Tests for `graphgen generate`."""

    def test_byte_identical(self, tmp_path, initiator):
        """Test that equal seeds write identical files."""
        outputs = []
        for name in ("a.tsv", "b.tsv"):
            out = tmp_path / name
            argv = ["generate", "kron", "--initiator", str(initiator), "--power", "4"]
            assert main([*argv, "--seed", "0x5EED", "--out", str(out)]) == EXIT_OK
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

    def test_worker_count_keeps_bytes(self, tmp_path, initiator):
        """Test that --parallel-regions does not change the output."""
        outputs = []
        for workers in ("1", "4"):
            out = tmp_path / f"w{workers}.tsv"
            argv = [
                "generate", "kron", "--initiator", str(initiator), "--power", "5",
                "--seed", "11", "--parallel-regions", workers, "--out", str(out),
            ]
            assert main(argv) == EXIT_OK
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

    def test_stdout(self, capsysbinary):
        """Test that output goes to stdout without --out."""
        argv = ["generate", "er", "--nodes", "4", "--fixed-edges", "2", "--seed", "3"]
        assert main(argv) == EXIT_OK
        assert len(capsysbinary.readouterr().out.splitlines()) == 2

    def test_json_logs_on_stderr(self, tmp_path, capsys):
        """Test that diagnostics are logged to stderr, not stdout."""
        out = tmp_path / "g.tsv"
        argv = ["generate", "er", "--nodes", "10", "--prob", "0.3", "--seed", "5"]
        assert main([*argv, "--log-format", "json", "--out", str(out)]) == EXIT_OK
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Graph generated" in captured.err

    @pytest.mark.parametrize(
        "argv",
        [
            ["generate", "er", "--prob", "0.5"],
            ["generate", "er", "--nodes", "5", "--prob", "1.5"],
            ["generate", "sbm", "--sizes", "3,5", "--within", "0.5"],
            ["generate", "kron", "--method", "ball", "--initiator", "k.txt", "--power", "2"],
            ["generate", "smallworld"],
            ["generate", "er", "--seed", "0x1_0000_0000_0000_0000"],
        ],
    )
    def test_usage_errors(self, argv):
        """Test that invalid invocations exit with status 2."""
        assert main(argv) == EXIT_USAGE

    def test_random_seed_reproducible(self, tmp_path, capsys):
        """Test that the printed entropy seed reproduces the same graph."""
        argv = ["generate", "er", "--nodes", "30", "--prob", "0.2"]
        assert main([*argv, "--seed", "random", "--out", str(tmp_path / "a.tsv")]) == EXIT_OK
        seed = _printed_seed(capsys.readouterr().err)
        assert main([*argv, "--seed", str(seed), "--out", str(tmp_path / "b.tsv")]) == EXIT_OK
        assert (tmp_path / "a.tsv").read_bytes() == (tmp_path / "b.tsv").read_bytes()

    def test_zero_workers_rejected(self, tmp_path):
        """Test that --parallel-regions 0 is a usage error."""
        argv = ["generate", "er", "--nodes", "5", "--prob", "0.5", "--parallel-regions", "0"]
        assert main([*argv, "--out", str(tmp_path / "g.tsv")]) == EXIT_USAGE

    def test_missing_input(self, tmp_path):
        """Test that an unreadable degree file exits with status 1."""
        argv = ["generate", "chung-lu", "--degrees", str(tmp_path / "absent.txt")]
        assert main([*argv, "--out", str(tmp_path / "g.tsv")]) == EXIT_FAILURE

    def test_invalid_model(self, tmp_path):
        """Test that an invalid Chung-Lu sequence exits with status 1."""
        degrees = tmp_path / "d.txt"
        degrees.write_text("5\n1\n1\n")
        argv = ["generate", "chung-lu", "--degrees", str(degrees)]
        assert main([*argv, "--out", str(tmp_path / "g.tsv")]) == EXIT_FAILURE


class TestVerify:
    """Tests for `graphgen verify`."""

    def test_region_count(self, capsys):
        """Test that the region-count suite passes."""
        assert main(["verify", "region-count", "--seed", "1"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "PASS regions(4,3) count=20"

    def test_chi_square(self, capsys):
        """Test that the chi-square suite passes."""
        assert main(["verify", "chi-square"]) == EXIT_OK
        assert "PASS dice statistic" in capsys.readouterr().out

    def test_random_seed_printed(self, capsys):
        """Test that verify --seed random prints the seed it ran with."""
        with patch("graphgen.main.run_verify", return_value=0) as run:
            assert main(["verify", "chi-square", "--seed", "random"]) == EXIT_OK
        seed = _printed_seed(capsys.readouterr().err)
        assert run.call_args.kwargs["seed"] == seed

    def test_explicit_seed_not_printed(self, capsys):
        """Test that only entropy seeds are announced."""
        assert main(["verify", "region-count", "--seed", "1"]) == EXIT_OK
        assert "graphgen: seed=" not in capsys.readouterr().err

    def test_summary_logs_seed(self, capsys):
        """Test that the closing record names the seed."""
        assert main(["verify", "chi-square", "--seed", "424242"]) == EXIT_OK
        err = capsys.readouterr().err
        assert "Verification finished" in err
        assert "424242" in err

    def test_samples_passed_through(self):
        """Test that an explicit --samples reaches the runner."""
        with patch("graphgen.main.run_verify", return_value=0) as run:
            assert main(["verify", "chi-square", "--samples", "5"]) == EXIT_OK
        assert run.call_args.kwargs["samples"] == 5

    @pytest.mark.parametrize("flag", ["--samples", "--parallel-regions"])
    def test_zero_counts_rejected(self, flag):
        """Test that zero samples or workers are usage errors."""
        assert main(["verify", "chi-square", flag, "0"]) == EXIT_USAGE

    def test_failure_exit_code(self):
        """Test that failing checks exit with status 1."""
        with patch("graphgen.main.run_verify", return_value=1):
            assert main(["verify", "chi-square"]) == EXIT_FAILURE


def test_version(capsys):
    """Test --version."""
    assert main(["--version"]) == EXIT_OK
    assert __version__ in capsys.readouterr().out


def test_malformed_env_seed(monkeypatch, capsys):
    """Test that a malformed GRAPHGEN_SEED exits with status 2."""
    monkeypatch.setenv("GRAPHGEN_SEED", "not-a-seed")
    get_settings.cache_clear()
    try:
        assert main(["verify", "region-count"]) == EXIT_USAGE
    finally:
        get_settings.cache_clear()
    assert "usage error" in capsys.readouterr().err
