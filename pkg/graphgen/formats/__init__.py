"""
File formats for graphgen.

Edge list writers and readers (TSV and MatrixMarket) and parsers for model
inputs.
"""

from graphgen.formats.edges_io import MM_HEADER, EdgeFileFormat, read_edges, write_edges
from graphgen.formats.inputs import read_degrees, read_matrix, read_text

__all__ = [
    # Edge lists
    "MM_HEADER",
    "EdgeFileFormat",
    "read_edges",
    "write_edges",
    # Model inputs
    "read_degrees",
    "read_matrix",
    "read_text",
]
