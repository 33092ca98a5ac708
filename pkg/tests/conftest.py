import pathlib

import pytest

from fpdec.groebner import Ideal
from fpdec.mpoly import PolyRing

DATA_DIR = pathlib.Path(__file__).parent / "data"

EXAMPLE1_GENS = ["y^2 - x*z", "z^2 - x^2*y", "x + y + z - 1"]
EXAMPLE3_POLY = "x^6 + x^5 + x^4 + 2"


def random_polynomial(ring, rng, max_exp=3, terms=4):
    """Small random polynomial; may be zero."""
    return ring.from_terms(
        [
            (
                tuple(rng.randrange(max_exp) for _ in range(ring.nvars)),
                rng.randrange(ring.p),
            )
            for _ in range(terms)
        ]
    )


def random_points(rng, p, n, count):
    """Distinct points of F_p^n."""
    points = set()
    while len(points) < count:
        points.add(tuple(rng.randrange(p) for _ in range(n)))
    return sorted(points)


@pytest.fixture
def ring5():
    return PolyRing(5, ["x", "y", "z"], "lex")


@pytest.fixture
def example1(ring5):
    return Ideal(ring5, [ring5.parse(s) for s in EXAMPLE1_GENS])


@pytest.fixture
def ring3x():
    return PolyRing(3, ["x"], "lex")


@pytest.fixture
def example3(ring3x):
    return ring3x.parse(EXAMPLE3_POLY)
