"""Deterministic seeded generation of general-position matrix pairs.

The first matrix is built with prescribed well-separated eigenvalues and a
well-conditioned random eigenbasis; the second is a plain random matrix.
Candidates are rejected until the full general-position report passes, so
every emitted pair is safe for the whole pipeline.
"""

from __future__ import annotations

import random

from .config import DEFAULT_TOL, ToleranceConfig
from .linalg import Mat3, det3, inv3
from .spectral import MatrixPair, general_position_report

_MAX_ATTEMPTS = 1000


def _complex_in_disk(rng: random.Random, radius: float = 1.0) -> complex:
    while True:
        z = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if abs(z) <= radius:
            return z


def _eigenvalue_triple(rng: random.Random) -> tuple[complex, complex, complex]:
    """Three values in the annulus 0.5 <= |h| <= 2 with pairwise gaps >= 0.3."""
    while True:
        triple = []
        for _ in range(3):
            while True:
                z = complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0))
                if 0.5 <= abs(z) <= 2.0:
                    triple.append(z)
                    break
        if (abs(triple[0] - triple[1]) >= 0.3
                and abs(triple[0] - triple[2]) >= 0.3
                and abs(triple[1] - triple[2]) >= 0.3):
            return tuple(triple)


def _random_matrix(rng: random.Random) -> Mat3:
    return Mat3(tuple(_complex_in_disk(rng) for _ in range(9)))


def well_conditioned_matrix(rng: random.Random,
                            max_condition: float = 30.0,
                            tol: ToleranceConfig = DEFAULT_TOL) -> Mat3:
    """Random unit-disk matrix with a bounded condition estimate."""
    for _ in range(_MAX_ATTEMPTS):
        g = _random_matrix(rng)
        f = g.norm()
        if f == 0.0 or abs(det3(g)) <= 1e-3 * f ** 3:
            continue
        g_inv = inv3(g, tol)
        if f * g_inv.norm() <= max_condition:
            return g
    raise RuntimeError("could not draw a well-conditioned matrix")


def _random_pair_with_attempts(seed: int,
                               tol: ToleranceConfig) -> tuple[MatrixPair, int]:
    rng = random.Random(seed)
    for attempt in range(1, _MAX_ATTEMPTS + 1):
        h = _eigenvalue_triple(rng)
        v = well_conditioned_matrix(rng, tol=tol)
        a = v @ Mat3.diagonal(*h) @ inv3(v, tol)
        b = _random_matrix(rng)
        pair = MatrixPair(a, b)
        if general_position_report(pair, tol).passed:
            return pair, attempt
    raise RuntimeError(f"no general-position pair found for seed {seed} "
                       f"within {_MAX_ATTEMPTS} attempts")


def random_pair(seed: int, tol: ToleranceConfig = DEFAULT_TOL) -> MatrixPair:
    """General-position pair for this seed; identical across runs."""
    return _random_pair_with_attempts(seed, tol)[0]


def generation_attempts(seed: int, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """How many candidates the seed burned before one passed every check;
    informational, for tracking the empirical rejection rate."""
    return _random_pair_with_attempts(seed, tol)[1]
