import random

import pytest

from rulerwrap import Ruler

# the ten-segment instance used throughout: positions 0,5,11,14,18,26,32,34,35,43,48
RUNNING = (5, 6, 3, 4, 8, 6, 2, 1, 8, 5)


@pytest.fixture
def running_ruler():
    return Ruler(RUNNING)


def random_rulers(seed, count, max_n, lo=1, hi=100):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        yield Ruler([rng.randint(lo, hi) for _ in range(n)])
