"""Tests for graphgen.combinat."""
