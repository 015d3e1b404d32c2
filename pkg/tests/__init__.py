"""Tests for graphgen."""
