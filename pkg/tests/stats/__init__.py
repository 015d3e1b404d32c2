"""Tests for graphgen.stats."""
