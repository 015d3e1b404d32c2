"""Tests for graphgen.samplers."""
