"""Tests for matrix and degree sequence readers."""

import pytest

from graphgen.errors import DomainError, GraphIOError, ParseError
from graphgen.formats import read_degrees, read_matrix, read_text


class TestReadMatrix:
    """Tests for read_matrix."""

    def test_whitespace(self):
        """Test a whitespace-separated initiator."""
        assert read_matrix("0.99 0.5\n0.5 0.2\n").tolist() == [[0.99, 0.5], [0.5, 0.2]]

    def test_commas_and_comments(self):
        """Test comma separators with comments and blank lines."""
        text = "# initiator\n0.9, 0.1\n\n0.1,0.9\n"
        assert read_matrix(text).tolist() == [[0.9, 0.1], [0.1, 0.9]]

    def test_ragged(self):
        """Test that rows of different width raise ParseError with the line."""
        with pytest.raises(ParseError) as exc:
            read_matrix("0.1 0.2\n0.3\n")
        assert exc.value.line == 2

    def test_non_numeric(self):
        """Test that text entries raise ParseError."""
        with pytest.raises(ParseError):
            read_matrix("0.1 high\n")

    def test_empty(self):
        """Test that input with no rows raises ParseError."""
        with pytest.raises(ParseError):
            read_matrix("# nothing\n\n")

    def test_out_of_range(self):
        """Test that probabilities above 1 raise DomainError."""
        with pytest.raises(DomainError):
            read_matrix("0.5 1.5\n0.1 0.1\n")


class TestReadDegrees:
    """Tests for read_degrees."""

    def test_one_per_line(self):
        """Test a plain degree file."""
        assert read_degrees("4\n3\n2\n# tail\n1\n").degrees == (4, 3, 2, 1)

    def test_empty(self):
        """Test that empty input gives an empty sequence."""
        assert len(read_degrees("")) == 0

    def test_negative(self):
        """Test that negative degrees raise ParseError."""
        with pytest.raises(ParseError) as exc:
            read_degrees("2\n-1\n")
        assert exc.value.line == 2

    def test_non_integer(self):
        """Test that fractional degrees raise ParseError."""
        with pytest.raises(ParseError):
            read_degrees("2.5\n")


class TestReadText:
    """Tests for read_text."""

    def test_reads_file(self, tmp_path):
        """Test reading a UTF-8 file."""
        path = tmp_path / "deg.txt"
        path.write_text("1\n2\n", encoding="utf-8")
        assert read_text(path) == "1\n2\n"

    def test_missing_file(self, tmp_path):
        """Test that a missing file raises GraphIOError."""
        with pytest.raises(GraphIOError):
            read_text(tmp_path / "absent.txt")
