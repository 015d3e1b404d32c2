"""Tests for graphgen.formats."""
