import random

import pytest

from spectral_pair import Mat3, MatrixPair, random_pair

# exact integer fixture: the whole forward map lands on integers, so every
# stage can be checked by hand.
FIXTURE_A = Mat3.diagonal(1, 2, 3)
FIXTURE_B = Mat3.from_rows([[2, 1, 1], [5, 3, -2], [7, 1, 4]])
FIXTURE_H = (1 + 0j, 2 + 0j, 3 + 0j)
FIXTURE_COEFFS = {
    "d1": 6, "d2": -22, "p_plus": 6, "p_minus": 11, "q_plus": 9,
    "q_minus": 16, "r_plus": 29, "r_minus": 19, "t": 34,
}
FIXTURE_DIVISOR = (-9 + 0j, 2 + 0j)


@pytest.fixture
def fixture_pair() -> MatrixPair:
    return MatrixPair(FIXTURE_A, FIXTURE_B)


@pytest.fixture(scope="session")
def seeded_pairs() -> list[MatrixPair]:
    """The first 100 deterministic general-position pairs, shared across
    tests to keep the suite fast."""
    return [random_pair(seed) for seed in range(100)]


def rng_complex(rng: random.Random, radius: float = 1.0) -> complex:
    while True:
        z = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if abs(z) <= radius:
            return z


def rng_matrix(rng: random.Random, radius: float = 1.0) -> Mat3:
    return Mat3(tuple(rng_complex(rng, radius) for _ in range(9)))
