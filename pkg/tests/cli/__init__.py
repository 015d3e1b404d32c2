"""Tests for graphgen.cli."""
