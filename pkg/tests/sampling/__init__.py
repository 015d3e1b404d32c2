"""Tests for graphgen.sampling."""
