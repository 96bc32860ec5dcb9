import random
from fractions import Fraction

import hypothesis
import pytest

hypothesis.settings.register_profile("default", max_examples=40, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.load_profile("default")


def generic_point(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    """Rational point where no B_n Weyl denominator factor vanishes."""
    while True:
        pt = tuple(Fraction(rng.randint(2, 40), rng.randint(1, 12)) for _ in range(n))
        logs_ok = all(y != 1 for y in pt)
        pairs_ok = all(pt[i] != pt[j] and pt[i] * pt[j] != 1
                       for i in range(n) for j in range(i + 1, n))
        if logs_ok and pairs_ok:
            return pt


@pytest.fixture
def rng():
    return random.Random(20241018)
