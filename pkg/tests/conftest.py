"""Shared fixtures for graphgen tests."""

import itertools

import numpy as np
import pytest

from graphgen.sampling import RandomStream
from graphgen.samplers import Initiator

TEST_SEED = 0x5EED


@pytest.fixture
def stream():
    """Create a fresh deterministic stream."""
    return RandomStream(TEST_SEED)


@pytest.fixture
def dice_observed():
    """Observed counts from 180 rolls of a six-sided die."""
    return [30, 32, 33, 31, 29, 25]


@pytest.fixture
def dice_expected():
    """Fair-die expectation for 180 rolls."""
    return [30.0] * 6


@pytest.fixture
def two_by_two():
    """The 2x2 initiator [[0.99, 0.5], [0.5, 0.2]]."""
    return Initiator.from_rows([[0.99, 0.5], [0.5, 0.2]])


@pytest.fixture
def scripted_gaps():
    """Build a replacement for geometric_gap_block that yields fixed gaps, then overshoots."""

    def factory(gaps):
        script = itertools.chain(gaps, itertools.repeat(1 << 62))

        def fake(stream, p, size):
            return np.fromiter(itertools.islice(script, size), dtype=np.int64, count=size)

        return fake

    return factory


@pytest.fixture
def scripted_uniforms():
    """Build a fake numpy generator whose random() returns the given values in order."""

    class FakeGenerator:
        def __init__(self, values):
            self.values = list(values)

        def random(self, size=None):
            if size is None:
                return self.values.pop(0)
            taken, self.values = self.values[:size], self.values[size:]
            return np.asarray(taken, dtype=np.float64)

    return FakeGenerator
