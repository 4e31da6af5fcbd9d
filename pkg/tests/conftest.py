import random
import sys
from pathlib import Path

import pytest
from gmpy2 import mpq

sys.path.insert(0, str(Path(__file__).resolve().parent))


def rand_q(rng, lo=0, hi=9, den=6):
    return mpq(rng.randint(lo * den, hi * den), rng.randint(1, den))


def chamber_point(rng, alg, zero_ok=True):
    """A random rational point of the closed chamber of ``alg`` (simple or semisimple)."""
    r = alg.rank
    while True:
        x = [rand_q(rng) for _ in range(r)]
        if rng.random() < 0.2:
            x[rng.randrange(r)] = mpq(0)
        if zero_ok or any(x):
            return alg.point_from_values(x)


def any_point(rng, alg):
    """A random rational point of a (not necessarily in the chamber)."""
    r = alg.rank
    return alg.point_from_values([rand_q(rng, -9, 9) for _ in range(r)])


@pytest.fixture
def rng():
    return random.Random(20240611)
