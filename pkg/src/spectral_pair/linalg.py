"""Fixed-size complex linear algebra: 3x3 determinant, inverse, kernel,
eigendecomposition, and a closed-form cubic solver.

Everything is exact small-case math (cofactor and adjugate formulas) with
explicit conditioning checks; scalars are built-in ``complex``.  All
functions are pure and all values immutable, so they are safe to share
between threads.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ._backend import kernels
from .config import DEFAULT_TOL, ToleranceConfig
from .errors import (
    DegenerateLeadingCoefficient,
    RankNotTwo,
    RepeatedEigenvalues,
    SingularMatrix,
)

Vec3 = tuple[complex, complex, complex]


def _is_finite(z: complex) -> bool:
    return cmath.isfinite(z)


@dataclass(frozen=True)
class Mat3:
    """3x3 complex matrix, flat row-major entries."""

    entries: tuple[complex, ...]

    def __post_init__(self):
        if len(self.entries) != 9:
            raise ValueError("Mat3 needs exactly 9 entries")
        entries = tuple(complex(z) for z in self.entries)
        if not all(_is_finite(z) for z in entries):
            raise ValueError("Mat3 entries must be finite")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows) -> "Mat3":
        return cls(tuple(complex(z) for row in rows for z in row))

    @classmethod
    def identity(cls) -> "Mat3":
        return cls((1, 0, 0, 0, 1, 0, 0, 0, 1))

    @classmethod
    def diagonal(cls, d0: complex, d1: complex, d2: complex) -> "Mat3":
        return cls((d0, 0, 0, 0, d1, 0, 0, 0, d2))

    def __getitem__(self, ij) -> complex:
        i, j = ij
        return self.entries[3 * i + j]

    def __matmul__(self, other: "Mat3") -> "Mat3":
        return Mat3(kernels.matmul3(self.entries, other.entries))

    def __add__(self, other: "Mat3") -> "Mat3":
        return Mat3(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat3") -> "Mat3":
        return Mat3(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scaled(self, c: complex) -> "Mat3":
        return Mat3(tuple(c * z for z in self.entries))

    def apply(self, v: Vec3) -> Vec3:
        return kernels.matvec3(self.entries, v)

    def rows(self):
        e = self.entries
        return (e[0:3], e[3:6], e[6:9])

    def norm(self) -> float:
        """Frobenius norm."""
        return kernels.frob3(self.entries)


@dataclass(frozen=True)
class CubicPoly:
    """c3 x^3 + c2 x^2 + c1 x + c0 over the complex numbers."""

    c3: complex
    c2: complex
    c1: complex
    c0: complex

    @classmethod
    def from_roots(cls, r1: complex, r2: complex, r3: complex) -> "CubicPoly":
        return cls(1.0,
                   -(r1 + r2 + r3),
                   r1 * r2 + r1 * r3 + r2 * r3,
                   -r1 * r2 * r3)

    def __call__(self, x: complex) -> complex:
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0

    def max_coefficient(self) -> float:
        return max(abs(self.c3), abs(self.c2), abs(self.c1), abs(self.c0))


def solve_cubic(p: CubicPoly, tol: ToleranceConfig = DEFAULT_TOL) -> Vec3:
    """Three roots with multiplicity, sorted lexicographically by (re, im)."""
    scale = p.max_coefficient()
    if abs(p.c3) <= tol.leading_coefficient * scale:
        raise DegenerateLeadingCoefficient(
            "leading coefficient is negligible",
            c3=abs(p.c3), scale=scale)
    return kernels.solve_cubic_raw(p.c3, p.c2, p.c1, p.c0)


def det3(m: Mat3) -> complex:
    return kernels.det3(m.entries)


def inv3(m: Mat3, tol: ToleranceConfig = DEFAULT_TOL) -> Mat3:
    f = m.norm()
    d = det3(m)
    if f == 0.0 or abs(d) <= tol.singular * f * f * f:
        raise SingularMatrix("matrix is numerically singular",
                             det=abs(d), norm=f)
    adj = kernels.adj3(m.entries)
    return Mat3(tuple(z / d for z in adj))


def kernel_vector(m: Mat3, tol: ToleranceConfig = DEFAULT_TOL) -> Vec3:
    """Unit kernel vector of a numerically rank-2 matrix.

    Uses the adjugate: when rank(M) = 2 any nonzero adjugate column spans
    ker(M); the largest-norm column is chosen for determinism.
    """
    v, residual, det_measure, minor_measure = kernels.kernel_vector3(m.entries)
    if det_measure > tol.rank or minor_measure <= tol.rank:
        raise RankNotTwo("matrix does not have numerical rank 2",
                         det_measure=det_measure, minor_measure=minor_measure)
    if residual > tol.kernel_residual:
        raise RankNotTwo("adjugate kernel candidate has a large residual",
                         residual=residual)
    return v


def eig3(a: Mat3, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[Vec3, tuple[Vec3, Vec3, Vec3]]:
    """Eigenvalues (sorted by (re, im)) and matching unit eigenvectors.

    Requires pairwise separated eigenvalues; defective and near-defective
    matrices are rejected.
    """
    c2, c1, c0 = kernels.char_poly3(a.entries)
    values = solve_cubic(CubicPoly(1.0, c2, c1, c0), tol)
    scale = max(abs(h) for h in values)
    sep = min(abs(values[0] - values[1]),
              abs(values[0] - values[2]),
              abs(values[1] - values[2]))
    if sep <= tol.eigenvalue_separation * max(scale, 1e-300):
        raise RepeatedEigenvalues("eigenvalues are not pairwise separated",
                                  separation=sep, scale=scale)
    ident = Mat3.identity()
    vectors = []
    for h in values:
        shifted = a - ident.scaled(h)
        vectors.append(kernel_vector(shifted, tol))
    return values, tuple(vectors)


def columns_matrix(v1: Vec3, v2: Vec3, v3: Vec3) -> Mat3:
    return Mat3((v1[0], v2[0], v3[0],
                 v1[1], v2[1], v3[1],
                 v1[2], v2[2], v3[2]))


def vec_norm(v: Vec3) -> float:
    return math.sqrt(abs(v[0]) ** 2 + abs(v[1]) ** 2 + abs(v[2]) ** 2)
