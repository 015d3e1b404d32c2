"""Tests for edge list writers and readers."""

import io
from pathlib import Path
from unittest.mock import MagicMock

import numpy as np
import pytest
from scipy.io import mmread

from graphgen.errors import GraphIOError, ParseError, RangeError
from graphgen.formats import MM_HEADER, EdgeFileFormat, read_edges, write_edges
from graphgen.samplers import EdgeList, grass_hop_er

GOLDEN = Path(__file__).parent / "golden"


def _written(edges, fmt):
    sink = io.BytesIO()
    count = write_edges(edges, fmt, sink)
    data = sink.getvalue()
    assert count == len(data)
    return data


class TestEdgeFileFormat:
    """Tests for format lookup."""

    def test_names(self):
        """Test command-line names."""
        assert EdgeFileFormat.from_name("tsv") is EdgeFileFormat.TSV
        assert EdgeFileFormat.from_name(" MM ") is EdgeFileFormat.MATRIX_MARKET

    def test_unknown(self):
        """Test that unknown names raise ParseError."""
        with pytest.raises(ParseError):
            EdgeFileFormat.from_name("graphml")


class TestWriteEdges:
    """Tests for write_edges."""

    def test_tsv_single_edge(self):
        """Test the 0-indexed tab-separated line."""
        assert _written(EdgeList.from_pairs([(0, 1)], 2), EdgeFileFormat.TSV) == b"0\t1\n"

    def test_tsv_keeps_order(self):
        """Test that edges are written in list order."""
        edges = EdgeList.from_pairs([(2, 0), (0, 3)], 4)
        assert _written(edges, EdgeFileFormat.TSV) == b"2\t0\n0\t3\n"

    def test_tsv_empty(self):
        """Test that no edges write no bytes."""
        assert _written(EdgeList.empty(3), EdgeFileFormat.TSV) == b""

    def test_matrix_market_empty(self):
        """Test the header and size line of an empty 4x4 graph."""
        data = _written(EdgeList.empty(4), EdgeFileFormat.MATRIX_MARKET)
        assert data == f"{MM_HEADER}\n4 4 0\n".encode()

    def test_matrix_market_one_indexed(self):
        """Test 1-indexed coordinates after the size line."""
        data = _written(EdgeList.from_pairs([(0, 1), (2, 2)], 3), EdgeFileFormat.MATRIX_MARKET)
        assert data == f"{MM_HEADER}\n3 3 2\n1 2\n3 3\n".encode()

    def test_matrix_market_readable_by_scipy(self, stream):
        """Test that scipy reads the same adjacency back."""
        edges = grass_hop_er(30, 0.1, stream)
        data = _written(edges, EdgeFileFormat.MATRIX_MARKET)
        dense = mmread(io.BytesIO(data)).toarray()
        np.testing.assert_array_equal(dense != 0, edges.to_dense() == 1)

    @pytest.mark.parametrize(
        "name,edges",
        [
            ("empty_3x3.mtx", EdgeList.empty(3)),
            ("path_4.mtx", EdgeList.from_pairs([(0, 1), (1, 2), (2, 3)], 4)),
            ("rect_2x5.mtx", EdgeList.from_pairs([(1, 4), (0, 0), (1, 2)], 2, 5)),
        ],
    )
    def test_matrix_market_golden(self, name, edges):
        """Test byte-for-byte agreement with checked-in MatrixMarket files."""
        golden = (GOLDEN / name).read_bytes()
        assert _written(edges, EdgeFileFormat.MATRIX_MARKET) == golden
        if len(edges):
            dense = mmread(io.BytesIO(golden)).toarray()
            np.testing.assert_array_equal(dense != 0, edges.to_dense() == 1)


    def test_rectangular_size_line(self):
        """Test that rows and columns are reported separately."""
        data = _written(EdgeList.from_pairs([(1, 4)], 2, 5), EdgeFileFormat.MATRIX_MARKET)
        assert data.splitlines()[1] == b"2 5 1"

    def test_sink_failure(self):
        """Test that sink errors surface as GraphIOError."""
        sink = MagicMock()
        sink.write.side_effect = OSError("disk full")
        with pytest.raises(GraphIOError):
            write_edges(EdgeList.from_pairs([(0, 1)], 2), EdgeFileFormat.TSV, sink)


class TestReadEdges:
    """Tests for read_edges."""

    @pytest.mark.parametrize("fmt", list(EdgeFileFormat))
    def test_round_trip(self, stream, fmt):
        """Test that reading written output restores the edge list."""
        edges = grass_hop_er(25, 0.2, stream)
        text = _written(edges, fmt).decode()
        back = read_edges(text, fmt, 25, 25)
        assert back.pairs() == edges.pairs()
        assert (back.num_rows, back.num_cols) == (25, 25)

    @pytest.mark.parametrize("fmt", list(EdgeFileFormat))
    def test_round_trip_random_lists(self, fmt):
        """Test read(write(E)) == E over 100 seeded random edge lists."""
        for seed in range(100):
            rng = np.random.default_rng(seed)
            rows, cols = (int(v) for v in rng.integers(1, 20, size=2))
            count = int(rng.integers(0, rows * cols + 1))
            cells = rng.choice(rows * cols, size=count, replace=False)
            edges = EdgeList.from_linear(cells, rows, cols)
            back = read_edges(_written(edges, fmt).decode(), fmt, rows, cols)
            assert back.pairs() == edges.pairs()
            assert (back.num_rows, back.num_cols) == (rows, cols)


    def test_tsv_infers_dimensions(self):
        """Test that TSV dimensions default to the largest index + 1."""
        edges = read_edges("0\t4\n2\t1\n", EdgeFileFormat.TSV)
        assert (edges.num_rows, edges.num_cols) == (3, 5)

    def test_tsv_bad_line(self):
        """Test that a malformed line reports its number."""
        with pytest.raises(ParseError) as exc:
            read_edges("0\t1\n1 2\n", EdgeFileFormat.TSV)
        assert exc.value.line == 2

    def test_tsv_outside_given_dimensions(self):
        """Test that indices beyond the stated node space raise RangeError."""
        with pytest.raises(RangeError):
            read_edges("0\t5\n", EdgeFileFormat.TSV, 3, 3)

    def test_matrix_market_comments(self):
        """Test that % comment lines are skipped."""
        text = f"{MM_HEADER}\n% sampled\n2 2 1\n2 1\n"
        assert read_edges(text, EdgeFileFormat.MATRIX_MARKET).pairs() == [(1, 0)]

    def test_matrix_market_bad_header(self):
        """Test that a missing banner raises ParseError on line 1."""
        with pytest.raises(ParseError) as exc:
            read_edges("2 2 0\n", EdgeFileFormat.MATRIX_MARKET)
        assert exc.value.line == 1

    def test_matrix_market_count_mismatch(self):
        """Test that nnz must match the entries."""
        with pytest.raises(ParseError):
            read_edges(f"{MM_HEADER}\n2 2 2\n1 1\n", EdgeFileFormat.MATRIX_MARKET)
