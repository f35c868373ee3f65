import pytest

from monsterrep._rng import CounterRng


@pytest.fixture
def rng():
    return CounterRng(20260808)
