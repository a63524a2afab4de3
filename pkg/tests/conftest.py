import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20260810)


def make_rng(seed=20260810):
    return random.Random(seed)
