"""Batch verification: round trips, commuting diagrams, conjugation
invariance and word consistency over seeded random pairs.

Each property yields one residual per seed; a seed whose intermediate data
leaves general position is skipped with a note rather than failed, since
the properties are only claimed on the general-position stratum.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .config import DEFAULT_TOL, ToleranceConfig
from .errors import GeneralPositionError
from .gl2z import (
    Generator,
    act_word_on_pair,
    act_word_spectral,
    verify_commutation,
)
from .linalg import Mat3, inv3
from .randgen import random_pair, well_conditioned_matrix
from .reconstruct import canonical_form, reconstruct
from .spectral import (
    MatrixPair,
    normalize_pair,
    spectral_data,
    spectral_residuals,
)

DEFAULT_TOLERANCE = 1e-6

#: per-property slack multipliers on the base tolerance; long words
#: accumulate roundoff over up to six chained reconstructions.
TOLERANCE_MULTIPLIERS = {"word_consistency": 10.0}


@dataclass
class PropertyResult:
    operation: str
    max_residual: float = 0.0
    per_component: dict[str, float] = field(default_factory=dict)
    seeds_run: int = 0
    skipped: list[dict] = field(default_factory=list)
    worst_seed: int | None = None
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def passed(self) -> bool:
        return self.seeds_run > 0 and self.max_residual <= self.tolerance

    def record(self, seed: int, residuals: dict[str, float]) -> None:
        self.seeds_run += 1
        worst = max(residuals.values()) if residuals else 0.0
        if worst >= self.max_residual:
            self.max_residual = worst
            self.worst_seed = seed
        for k, v in residuals.items():
            if v > self.per_component.get(k, 0.0):
                self.per_component[k] = v

    def skip(self, seed: int, code: str) -> None:
        self.skipped.append({"seed": seed, "code": code})


def _pair_residuals(lhs, rhs) -> dict[str, float]:
    out = {}
    for i in range(3):
        x, y = lhs.h[i], rhs.h[i]
        out[f"h{i + 1}"] = abs(x - y) / max(1.0, abs(x), abs(y))
    for k in range(9):
        x, y = lhs.u.entries[k], rhs.u.entries[k]
        out[f"u{k // 3 + 1}{k % 3 + 1}"] = abs(x - y) / max(1.0, abs(x), abs(y))
    return out


def _prop_round_trip_forward(pair, seed, tol):
    np = normalize_pair(pair, None, tol)
    back = reconstruct(spectral_data(pair, None, tol), tol)
    return _pair_residuals(np, back)


def _prop_round_trip_backward(pair, seed, tol):
    sd = spectral_data(pair, None, tol)
    again = spectral_data(reconstruct(sd, tol).as_pair(), None, tol)
    return spectral_residuals(sd, again)


def _make_commute(generator: Generator):
    def prop(pair, seed, tol):
        return verify_commutation(generator, pair, tol).per_component
    return prop


def _prop_conjugation_invariance(pair, seed, tol):
    rng = random.Random((seed << 16) ^ 0x5BD1)
    g = well_conditioned_matrix(rng, tol=tol)
    conjugated = MatrixPair(g @ pair.a @ inv3(g, tol),
                            g @ pair.b @ inv3(g, tol))
    return spectral_residuals(spectral_data(pair, None, tol),
                              spectral_data(conjugated, None, tol))


def _prop_word_consistency(pair, seed, tol):
    rng = random.Random((seed << 16) ^ 0xC0FF)
    word = tuple(rng.choice(list(Generator))
                 for _ in range(rng.randint(1, 6)))
    lhs = act_word_spectral(word, spectral_data(pair, None, tol), tol)
    rhs = canonical_form(
        spectral_data(act_word_on_pair(word, pair, tol), None, tol), tol)
    return spectral_residuals(lhs, rhs)


PROPERTIES = {
    "round_trip_forward": _prop_round_trip_forward,
    "round_trip_backward": _prop_round_trip_backward,
    "commute_swap": _make_commute(Generator.SWAP),
    "commute_invert": _make_commute(Generator.INVERT),
    "commute_shear": _make_commute(Generator.SHEAR),
    "conjugation_invariance": _prop_conjugation_invariance,
    "word_consistency": _prop_word_consistency,
}


def run_property(name: str, seeds: int, tolerance: float = DEFAULT_TOLERANCE,
                 base_seed: int = 0,
                 tol: ToleranceConfig = DEFAULT_TOL) -> PropertyResult:
    prop = PROPERTIES[name]
    result = PropertyResult(
        operation=name,
        tolerance=tolerance * TOLERANCE_MULTIPLIERS.get(name, 1.0))
    for i in range(seeds):
        seed = base_seed + i
        pair = random_pair(seed, tol)
        try:
            result.record(seed, prop(pair, seed, tol))
        except GeneralPositionError as exc:
            result.skip(seed, exc.code)
    return result


def run_suite(seeds: int, tolerance: float = DEFAULT_TOLERANCE,
              base_seed: int = 0,
              tol: ToleranceConfig = DEFAULT_TOL) -> list[PropertyResult]:
    return [run_property(name, seeds, tolerance, base_seed, tol)
            for name in PROPERTIES]
