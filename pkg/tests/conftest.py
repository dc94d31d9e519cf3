import random

import pytest

from mirrorqm.biquat import Biquaternion
from mirrorqm.exact import ExactScalar


@pytest.fixture
def rng():
    return random.Random(20240917)


def int_biquaternion(rng, spread=4, exact=True):
    """Biquaternion with small Gaussian-integer coefficients (exact in float64)."""
    def draw():
        re, im = rng.randint(-spread, spread), rng.randint(-spread, spread)
        return ExactScalar.gaussian(re, im) if exact else complex(re, im)
    return Biquaternion(draw(), draw(), draw(), draw())
