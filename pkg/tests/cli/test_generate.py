"""Tests for the generate command."""

import pytest
from pydantic import ValidationError

from graphgen.cli import SUITES, GenerateRequest, build_parser, request_from_args, resolve_seed
from graphgen.cli.generate import run_generate
from graphgen.config import Settings
from graphgen.errors import CapacityError, ModelValidityError


@pytest.fixture
def settings(monkeypatch):
    """Settings from defaults only."""
    for name in ("GRAPHGEN_SEED", "GRAPHGEN_PARALLEL_REGIONS", "GRAPHGEN_DENSE_ORACLE_CELLS"):
        monkeypatch.delenv(name, raising=False)
    return Settings(_env_file=None)


def _request(**fields):
    return GenerateRequest(seed=7, **fields)


def _pairs(path):
    return [tuple(int(v) for v in line.split("\t")) for line in path.read_text().splitlines()]


class TestGenerateRequest:
    """Tests for request validation."""

    def test_default_method_is_grass(self):
        """Test that a plain er request grass-hops."""
        assert _request(model="er", nodes=5, prob=0.2).method == "grass"

    def test_fixed_edges_implies_fixed(self):
        """Test that --fixed-edges selects the fixed method."""
        assert _request(model="er", nodes=5, fixed_edges=3).method == "fixed"

    @pytest.mark.parametrize(
        "fields",
        [
            {"model": "er", "prob": 0.2},
            {"model": "er", "nodes": 5},
            {"model": "er", "nodes": 5, "prob": 0.2, "fixed_edges": 2, "method": "grass"},
            {"model": "er", "nodes": 5, "prob": 1.5},
            {"model": "kron", "method": "ball", "initiator": "k.txt", "power": 2},
            {"model": "kron", "initiator": "k.txt"},
            {"model": "chung-lu", "method": "coin", "degrees": "d.txt"},
            {"model": "chung-lu"},
            {"model": "sbm", "sizes": [3, 5]},
            {"model": "sbm", "sizes": [3, 5], "within": 0.5, "between": 0.1, "qmatrix": "q.txt"},
            {"model": "sbm", "within": 0.5, "between": 0.1},
        ],
    )
    def test_invalid(self, fields):
        """Test that inconsistent requests raise ValidationError."""
        with pytest.raises(ValidationError):
            _request(**fields)

    def test_seed_range(self):
        """Test that seeds beyond 64 bits are rejected."""
        with pytest.raises(ValidationError):
            GenerateRequest(model="er", nodes=2, prob=0.5, seed=1 << 64)


class TestSeeds:
    """Tests for seed resolution."""

    def test_default(self, settings):
        """Test that no seed falls back to the configured one."""
        assert resolve_seed(None, settings) == settings.seed

    def test_explicit(self, settings):
        """Test that explicit seeds pass through."""
        assert resolve_seed(99, settings) == 99

    def test_random(self, settings):
        """Test that 'random' draws a 64-bit seed."""
        assert 0 <= resolve_seed("random", settings) < 1 << 64

    def test_request_from_args(self, settings):
        """Test that parsed arguments and settings merge into a request."""
        args = build_parser(list(SUITES)).parse_args(
            ["generate", "sbm", "--sizes", "3,5", "--within", "0.7", "--between", "0.1"]
        )
        request = request_from_args(args, settings)
        assert request.seed == settings.seed
        assert request.sizes == [3, 5]
        assert request.parallel_regions == settings.parallel_regions

    def test_request_from_args_explicit(self, settings):
        """Test that a resolved seed and explicit worker count win over settings."""
        args = build_parser(list(SUITES)).parse_args(
            ["generate", "er", "--nodes", "4", "--prob", "0.5", "--parallel-regions", "3"]
        )
        request = request_from_args(args, settings, seed=77)
        assert request.seed == 77
        assert request.parallel_regions == 3


class TestRunGenerate:
    """Tests for run_generate."""

    def test_same_seed_same_bytes(self, tmp_path, settings):
        """Test that output depends only on the request."""
        first = tmp_path / "a.tsv"
        second = tmp_path / "b.tsv"
        run_generate(_request(model="er", nodes=50, prob=0.1, out=first), settings)
        run_generate(_request(model="er", nodes=50, prob=0.1, out=second), settings)
        assert first.read_bytes() == second.read_bytes()
        assert first.stat().st_size > 0

    def test_diagnostics(self, tmp_path, settings):
        """Test that diagnostics report edges and draw counts."""
        out = tmp_path / "g.tsv"
        diagnostics = run_generate(_request(model="er", nodes=40, prob=0.1, out=out), settings)
        assert diagnostics["edges"] == len(_pairs(out))
        assert diagnostics["geometric_draws"] == diagnostics["edges"] + 1
        assert diagnostics["bytes"] == out.stat().st_size

    def test_undirected_fixed_edges(self, tmp_path, settings):
        """Test that two undirected edges are written as four records."""
        out = tmp_path / "g.tsv"
        request = _request(model="er", nodes=4, fixed_edges=2, undirected=True, out=out)
        run_generate(request, settings)
        pairs = _pairs(out)
        assert len(pairs) == 4
        assert {(b, a) for a, b in pairs} == set(pairs)

    def test_sorted_output(self, tmp_path, settings):
        """Test --sort orders records by (src, dst)."""
        out = tmp_path / "g.tsv"
        request = _request(model="er", nodes=30, prob=0.7, method="ball", sort=True, out=out)
        run_generate(request, settings)
        pairs = _pairs(out)
        assert pairs == sorted(pairs)

    def test_complement_variant(self, tmp_path, settings):
        """Test that dense ball dropping reports the complement path."""
        request = _request(model="er", nodes=20, prob=0.8, method="ball", out=tmp_path / "g.tsv")
        assert run_generate(request, settings)["variant"] == "complement"

    def test_kron_inside_grid(self, tmp_path, settings):
        """Test that Kronecker edges stay in [0, 8)^2 for a 2x2 initiator cubed."""
        initiator = tmp_path / "k.txt"
        initiator.write_text("0.99 0.5\n0.5 0.2\n")
        out = tmp_path / "g.tsv"
        diagnostics = run_generate(
            _request(model="kron", initiator=initiator, power=3, out=out), settings
        )
        assert all(0 <= a < 8 and 0 <= b < 8 for a, b in _pairs(out))
        assert diagnostics["regions"] == 20

    def test_sbm_matrix_market(self, tmp_path, settings):
        """Test MatrixMarket output of a planted block model."""
        out = tmp_path / "g.mtx"
        request = _request(
            model="sbm", sizes=[3, 5], within=1.0, between=0.0, format="mm", out=out
        )
        run_generate(request, settings)
        lines = out.read_text().splitlines()
        assert lines[0] == "%%MatrixMarket matrix coordinate pattern general"
        assert lines[1] == "8 8 34"

    def test_chung_lu_from_file(self, tmp_path, settings):
        """Test that a degree file drives the Chung-Lu sampler."""
        degrees = tmp_path / "d.txt"
        degrees.write_text("4\n3\n2\n2\n2\n1\n1\n1\n")
        diagnostics = run_generate(
            _request(model="chung-lu", degrees=degrees, out=tmp_path / "g.tsv"), settings
        )
        assert diagnostics["blocks"] == 16

    def test_invalid_chung_lu(self, tmp_path, settings):
        """Test that max(d)^2 > sum(d) raises ModelValidityError."""
        degrees = tmp_path / "d.txt"
        degrees.write_text("5\n1\n1\n")
        with pytest.raises(ModelValidityError):
            run_generate(_request(model="chung-lu", degrees=degrees, out=tmp_path / "g"), settings)

    def test_coin_capacity(self, tmp_path, settings):
        """Test that coin flipping refuses graphs beyond the oracle cap."""
        request = _request(model="er", nodes=5000, prob=0.1, method="coin", out=tmp_path / "g")
        with pytest.raises(CapacityError):
            run_generate(request, settings)
