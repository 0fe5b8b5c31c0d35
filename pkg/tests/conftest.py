from __future__ import annotations

from fractions import Fraction

import pytest

from logbundle import new_arrangement

# Worked 5-line example used across the suite: the coordinate triangle plus
# (1:1:1) and (1:2:3).  Its jumping-line curve is the conic 3xy - 4xz + yz.
EXAMPLE_A_FORMS = [
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (1, 1, 1),
    (1, 2, 3),
]


@pytest.fixture
def example_a():
    return new_arrangement(EXAMPLE_A_FORMS)


def frac(a, b=1) -> Fraction:
    return Fraction(a, b)
