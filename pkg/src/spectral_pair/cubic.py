"""Projective-plane utilities for the spectral cubic: evaluation, lines,
third intersections, and the chord construction that transports the divisor
point when the two matrices are exchanged."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .config import DEFAULT_TOL, ToleranceConfig
from .errors import CoincidentPoints, InputsNotIncident, LineOnCurve
from .spectral import CurveCoefficients


@dataclass(frozen=True)
class ProjectivePoint:
    """Homogeneous coordinates (lam : mu : nu)."""

    lam: complex
    mu: complex
    nu: complex

    def coords(self) -> tuple[complex, complex, complex]:
        return (complex(self.lam), complex(self.mu), complex(self.nu))

    def max_abs(self) -> float:
        return max(abs(self.lam), abs(self.mu), abs(self.nu))

    def normalized(self) -> "ProjectivePoint":
        """Representative with the largest-magnitude coordinate scaled to 1."""
        c = self.coords()
        pivot = max(c, key=abs)
        if pivot == 0:
            raise ValueError("zero projective point")
        return ProjectivePoint(*(z / pivot for z in c))


@dataclass(frozen=True)
class ProjectiveLine:
    """The linear form a*lam + b*mu + c*nu."""

    a: complex
    b: complex
    c: complex

    def __call__(self, p: ProjectivePoint) -> complex:
        return self.a * p.lam + self.b * p.mu + self.c * p.nu

    def max_abs(self) -> float:
        return max(abs(self.a), abs(self.b), abs(self.c))


def _cross(p, q):
    return (p[1] * q[2] - p[2] * q[1],
            p[2] * q[0] - p[0] * q[2],
            p[0] * q[1] - p[1] * q[0])


def _norm3(v) -> float:
    return math.sqrt(abs(v[0]) ** 2 + abs(v[1]) ** 2 + abs(v[2]) ** 2)


def projective_distance(p: ProjectivePoint, q: ProjectivePoint) -> float:
    """Scale-free distance: norm of the cross product of unit representatives
    (the sine of the Fubini-Study angle)."""
    pc, qc = p.coords(), q.coords()
    np_, nq = _norm3(pc), _norm3(qc)
    if np_ == 0.0 or nq == 0.0:
        raise ValueError("zero projective point")
    return _norm3(_cross(pc, qc)) / (np_ * nq)


def evaluate_curve_raw(coeffs: CurveCoefficients, lam: complex, mu: complex,
                       nu: complex) -> complex:
    """Value of the cubic at the given (unnormalized) coordinates."""
    return kernels.eval_curve9(coeffs.as_tuple(), lam, mu, nu)


def evaluate_curve(coeffs: CurveCoefficients, p: ProjectivePoint) -> complex:
    """Value of the cubic at the normalized representative of p."""
    n = p.normalized()
    return kernels.eval_curve9(coeffs.as_tuple(), n.lam, n.mu, n.nu)


def line_through(p: ProjectivePoint, q: ProjectivePoint,
                 tol: ToleranceConfig = DEFAULT_TOL) -> ProjectiveLine:
    """Line through two distinct points, via the coordinate cross product."""
    pn, qn = p.normalized(), q.normalized()
    cross = _cross(pn.coords(), qn.coords())
    if _norm3(cross) <= tol.coincident_points * 4.0:
        raise CoincidentPoints("points are projectively equal",
                               distance=_norm3(cross))
    return ProjectiveLine(*cross)


def third_intersection(coeffs: CurveCoefficients, line: ProjectiveLine,
                       p1: ProjectivePoint, p2: ProjectivePoint,
                       tol: ToleranceConfig = DEFAULT_TOL) -> ProjectivePoint:
    """Third point where the line meets the cubic, given two incident points.

    The cubic restricted to s*p1 + t*p2 is c30 s^3 + c21 s^2 t + c12 s t^2
    + c03 t^3 with c30 = c03 = 0 forced by incidence, so the remaining root
    is (s : t) = (-c12 : c21).  Exact deflation avoids any root matching.
    """
    p1n, p2n = p1.normalized(), p2.normalized()
    cscale = coeffs.max_magnitude()
    for name, pt in (("p1", p1n), ("p2", p2n)):
        if abs(evaluate_curve(coeffs, pt)) > tol.incidence * cscale:
            raise InputsNotIncident(f"{name} is not on the curve",
                                    which=name,
                                    residual=abs(evaluate_curve(coeffs, pt)))
        lres = abs(line(pt)) / max(line.max_abs(), 1e-300)
        if lres > tol.incidence:
            raise InputsNotIncident(f"{name} is not on the line",
                                    which=name, residual=lres)
    if projective_distance(p1n, p2n) <= tol.incidence:
        raise InputsNotIncident("the two base points coincide")

    c9 = coeffs.as_tuple()

    def at(s: complex, t: complex) -> complex:
        return kernels.eval_curve9(
            c9,
            s * p1n.lam + t * p2n.lam,
            s * p1n.mu + t * p2n.mu,
            s * p1n.nu + t * p2n.nu)

    c30 = at(1.0, 0.0)
    c03 = at(0.0, 1.0)
    f11 = at(1.0, 1.0)
    f1m = at(1.0, -1.0)
    c21 = 0.5 * (f11 - f1m) - c03
    c12 = 0.5 * (f11 + f1m) - c30

    if max(abs(c30), abs(c03)) > tol.deflation * cscale:
        raise InputsNotIncident("restricted cubic keeps nonzero known-root coefficients",
                                c30=abs(c30), c03=abs(c03))
    if max(abs(c21), abs(c12)) <= tol.deflation * cscale:
        raise LineOnCurve("restricted cubic vanishes identically; "
                          "the line is a component of the curve")

    s, t = -c12, c21
    point = ProjectivePoint(
        s * p1n.lam + t * p2n.lam,
        s * p1n.mu + t * p2n.mu,
        s * p1n.nu + t * p2n.nu).normalized()
    residual = abs(evaluate_curve(coeffs, point)) / cscale
    if residual > tol.third_point_on_curve:
        raise InputsNotIncident("deflated third point misses the curve",
                                residual=residual)
    return point


def chord_swap_divisor(coeffs: CurveCoefficients, p_first: ProjectivePoint,
                       x_first: ProjectivePoint, q: ProjectivePoint,
                       tol: ToleranceConfig = DEFAULT_TOL) -> ProjectivePoint:
    """Transport the divisor point across the exchange of the two matrices.

    Draw the chord through x_first and the divisor point q, take its third
    intersection T with the cubic, then the chord through p_first and T; the
    third intersection Y of that line completes the divisor equivalent to
    the original one with the fixed points moved from the nu = 0 line to the
    mu = 0 line.
    """
    t_point = third_intersection(coeffs, line_through(x_first, q, tol),
                                 x_first, q, tol)
    return third_intersection(coeffs, line_through(p_first, t_point, tol),
                              p_first, t_point, tol)
