"""Forward map: matrix pair -> normalized gauge -> curve coefficients and
divisor point.

A pair (A, B) of nondegenerate 3x3 matrices, taken up to simultaneous
conjugation, determines a plane cubic det(lam + mu*A + nu*B) = 0 together
with a distinguished point on it.  With A's eigenvalues ordered and B's
matrix U in the eigenbasis gauge-fixed to u12 = u13 = 1, both become
explicit closed forms in (h, U).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._backend import kernels
from .config import DEFAULT_TOL, ToleranceConfig
from .errors import (
    DegenerateDivisor,
    GaugeDegenerate,
    GeneralPositionError,
    InvariantViolation,
    SingularMatrix,
)
from .linalg import Mat3, Vec3, columns_matrix, det3, eig3, inv3


@dataclass(frozen=True)
class MatrixPair:
    """Raw input: two nondegenerate 3x3 matrices, considered up to
    simultaneous conjugation."""

    a: Mat3
    b: Mat3


@dataclass(frozen=True)
class NormalizedPair:
    """Ordered eigenvalues of the first matrix plus the gauge-fixed matrix of
    the second one in that eigenbasis (entries (1,2) and (1,3) exactly 1)."""

    h: Vec3
    u: Mat3

    def as_pair(self) -> MatrixPair:
        return MatrixPair(Mat3.diagonal(*self.h), self.u)


@dataclass(frozen=True)
class CurveCoefficients:
    """The nine non-normalized coefficients of the spectral cubic

        lam^3 + d1 mu^3 + d2 nu^3 + p_plus lam^2 mu + p_minus lam mu^2
        + q_plus lam^2 nu + q_minus lam nu^2 + r_plus mu^2 nu
        + r_minus mu nu^2 + t lam mu nu = 0.
    """

    d1: complex
    d2: complex
    p_plus: complex
    p_minus: complex
    q_plus: complex
    q_minus: complex
    r_plus: complex
    r_minus: complex
    t: complex

    _FIELDS = ("d1", "d2", "p_plus", "p_minus", "q_plus", "q_minus",
               "r_plus", "r_minus", "t")

    def as_tuple(self) -> tuple[complex, ...]:
        return (self.d1, self.d2, self.p_plus, self.p_minus, self.q_plus,
                self.q_minus, self.r_plus, self.r_minus, self.t)

    def items(self):
        return zip(self._FIELDS, self.as_tuple())

    def max_magnitude(self) -> float:
        return max(1.0, *(abs(c) for c in self.as_tuple()))


@dataclass(frozen=True)
class DivisorPoint:
    """Affine coordinates of the distinguished curve point (L : M : 1)."""

    L: complex
    M: complex


@dataclass(frozen=True)
class SpectralData:
    """Full invariant of a pair: ordered eigenvalues, curve coefficients and
    the divisor point.  The eigenvalue ordering is part of the data."""

    h: Vec3
    coeffs: CurveCoefficients
    divisor: DivisorPoint


def principal_minors(u: Mat3) -> tuple[complex, complex, complex]:
    """The 2x2 principal minors on rows/columns (1,2), (1,3), (2,3)."""
    m12 = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
    m13 = u[0, 0] * u[2, 2] - u[0, 2] * u[2, 0]
    m23 = u[1, 1] * u[2, 2] - u[1, 2] * u[2, 1]
    return m12, m13, m23


def _check_nondegenerate(m: Mat3, name: str, tol: ToleranceConfig) -> None:
    f = m.norm()
    d = abs(det3(m))
    if f == 0.0 or d <= tol.pair_determinant * f ** 3:
        raise SingularMatrix(f"matrix {name} is numerically singular",
                             which=name, det=d, norm=f)


def _reorder_to_match(values: Vec3, vectors, target: Vec3):
    """Permutation of (values, vectors) minimizing total distance to target."""
    import itertools

    best = None
    best_cost = None
    for perm in itertools.permutations(range(3)):
        cost = sum(abs(values[perm[i]] - target[i]) for i in range(3))
        if best_cost is None or cost < best_cost:
            best, best_cost = perm, cost
    return (tuple(values[i] for i in best),
            tuple(vectors[i] for i in best))


def normalize_pair(pair: MatrixPair,
                   ordering: Vec3 | None = None,
                   tol: ToleranceConfig = DEFAULT_TOL) -> NormalizedPair:
    """Diagonalize the first matrix and gauge-fix the second.

    Eigenvalues are sorted by (re, im) unless ``ordering`` supplies three
    target values to match instead.  The residual diagonal-conjugation
    freedom is killed by rescaling so the (1,2) and (1,3) entries of the
    second matrix become exactly 1; the result is then a complete invariant
    of the simultaneous-conjugation class.
    """
    _check_nondegenerate(pair.a, "A", tol)
    _check_nondegenerate(pair.b, "B", tol)

    values, vectors = eig3(pair.a, tol)
    if ordering is not None:
        values, vectors = _reorder_to_match(values, vectors, ordering)

    v = columns_matrix(*vectors)
    u0 = inv3(v, tol) @ pair.b @ v

    scale = u0.norm()
    u12, u13 = u0[0, 1], u0[0, 2]
    if abs(u12) <= tol.gauge * scale or abs(u13) <= tol.gauge * scale:
        raise GaugeDegenerate(
            "second matrix has negligible (1,2) or (1,3) entry in the eigenbasis",
            u12=abs(u12), u13=abs(u13), scale=scale)

    d = Mat3.diagonal(1.0, u12, u13)
    d_inv = Mat3.diagonal(1.0, 1.0 / u12, 1.0 / u13)
    u = d @ u0 @ d_inv
    # pin the gauge entries exactly
    e = list(u.entries)
    e[1] = 1.0 + 0.0j
    e[2] = 1.0 + 0.0j
    return NormalizedPair(values, Mat3(tuple(e)))


def curve_coefficients(np: NormalizedPair) -> CurveCoefficients:
    """The nine cubic coefficients as closed forms in (h, U).

    Convention (verified against direct trilinear expansion of the
    determinant): det(lam + mu*diag(h) + nu*U) expands with all plus signs.
    """
    h1, h2, h3 = np.h
    u = np.u
    m12, m13, m23 = principal_minors(u)
    return CurveCoefficients(
        d1=h1 * h2 * h3,
        d2=det3(u),
        p_plus=h1 + h2 + h3,
        p_minus=h1 * h2 + h1 * h3 + h2 * h3,
        q_plus=u[0, 0] + u[1, 1] + u[2, 2],
        q_minus=m12 + m13 + m23,
        r_plus=h1 * h2 * u[2, 2] + h1 * h3 * u[1, 1] + h2 * h3 * u[0, 0],
        r_minus=h3 * m12 + h2 * m13 + h1 * m23,
        t=(h1 + h2) * u[2, 2] + (h1 + h3) * u[1, 1] + (h2 + h3) * u[0, 0],
    )


def divisor_point(np: NormalizedPair,
                  tol: ToleranceConfig = DEFAULT_TOL) -> DivisorPoint:
    """The third zero (L : M : 1) of the first-coordinate section.

    At this point the pencil matrix lam + mu*diag(h) + nu*U has a kernel
    vector with vanishing first coordinate; the other two zeros are the
    fixed points (h2 : -1 : 0) and (h3 : -1 : 0).  Sign convention: the
    mu-coordinate carries denominator (h2 - h3), fixed here by the on-curve
    and kernel checks.
    """
    h1, h2, h3 = np.h
    u = np.u
    u12, u13 = u[0, 1], u[0, 2]
    den = u12 * u13 * (h3 - h2)
    scale = max(1.0, abs(h1), abs(h2), abs(h3)) * max(1.0, u.norm()) ** 2
    if abs(den) <= tol.divisor_denominator * scale:
        raise DegenerateDivisor("divisor denominator u12*u13*(h3 - h2) is negligible",
                                denominator=abs(den), scale=scale)
    det_a = u12 * u[1, 2] - u13 * u[1, 1]   # rows (1,2) of the pencil minors
    det_b = u12 * u[2, 2] - u13 * u[2, 1]   # rows (1,3)
    l_val = (u12 * h3 * det_a + u13 * h2 * det_b) / den
    m_val = -(u12 * det_a + u13 * det_b) / den
    return DivisorPoint(l_val, m_val)


def spectral_data_of_normalized(np: NormalizedPair,
                                tol: ToleranceConfig = DEFAULT_TOL) -> SpectralData:
    sd = SpectralData(np.h, curve_coefficients(np), divisor_point(np, tol))
    validate_spectral_data(sd, tol)
    return sd


def spectral_data(pair: MatrixPair,
                  ordering: Vec3 | None = None,
                  tol: ToleranceConfig = DEFAULT_TOL) -> SpectralData:
    """Full forward map; invariant under simultaneous conjugation."""
    return spectral_data_of_normalized(normalize_pair(pair, ordering, tol), tol)


def curve_residual(coeffs: CurveCoefficients, lam: complex, mu: complex,
                   nu: complex) -> float:
    """Scaled residual |C(lam, mu, nu)| at the (unnormalized) point."""
    value = kernels.eval_curve9(coeffs.as_tuple(), lam, mu, nu)
    scale = coeffs.max_magnitude() * max(1.0, abs(lam), abs(mu), abs(nu)) ** 3
    return abs(value) / scale


def validate_spectral_data(sd: SpectralData,
                           tol: ToleranceConfig = DEFAULT_TOL) -> None:
    """Consistency checks: eigenvalues reproduce (p_plus, p_minus, d1) as
    their elementary symmetric functions, and the divisor point lies on the
    curve."""
    h1, h2, h3 = sd.h
    c = sd.coeffs
    pairs = (
        ("p_plus", h1 + h2 + h3, c.p_plus),
        ("p_minus", h1 * h2 + h1 * h3 + h2 * h3, c.p_minus),
        ("d1", h1 * h2 * h3, c.d1),
    )
    for name, lhs, rhs in pairs:
        scale = max(1.0, abs(lhs), abs(rhs))
        if abs(lhs - rhs) > tol.symmetric_functions * scale:
            raise InvariantViolation(
                f"eigenvalues do not match coefficient {name}",
                component=name, residual=abs(lhs - rhs) / scale)
    residual = curve_residual(c, sd.divisor.L, sd.divisor.M, 1.0)
    if residual > tol.on_curve:
        raise InvariantViolation("divisor point does not lie on the curve",
                                 component="divisor", residual=residual)


def spectral_residuals(lhs: SpectralData, rhs: SpectralData) -> dict[str, float]:
    """Componentwise relative residuals between two spectral data."""
    out: dict[str, float] = {}
    for i in range(3):
        x, y = lhs.h[i], rhs.h[i]
        out[f"h{i + 1}"] = abs(x - y) / max(1.0, abs(x), abs(y))
    for (name, x), (_, y) in zip(lhs.coeffs.items(), rhs.coeffs.items()):
        out[name] = abs(x - y) / max(1.0, abs(x), abs(y))
    out["L"] = abs(lhs.divisor.L - rhs.divisor.L) / max(
        1.0, abs(lhs.divisor.L), abs(rhs.divisor.L))
    out["M"] = abs(lhs.divisor.M - rhs.divisor.M) / max(
        1.0, abs(lhs.divisor.M), abs(rhs.divisor.M))
    return out


@dataclass(frozen=True)
class PositionCheck:
    name: str
    passed: bool
    margin: float | None
    threshold: float
    note: str = ""


@dataclass(frozen=True)
class GeneralPositionReport:
    checks: tuple[PositionCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failing(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


def general_position_report(pair: MatrixPair,
                            tol: ToleranceConfig = DEFAULT_TOL) -> GeneralPositionReport:
    """Run every general-position check with margins; never raises.

    Checks that depend on earlier stages are reported as failed with a note
    when those stages cannot be completed.
    """
    from .cubic import ProjectivePoint, projective_distance
    from .linalg import CubicPoly, solve_cubic

    checks: list[PositionCheck] = []

    def add(name, margin, threshold, note=""):
        checks.append(PositionCheck(name, margin is not None and margin > threshold,
                                    margin, threshold, note))

    for name, m in (("determinant_a", pair.a), ("determinant_b", pair.b)):
        f = m.norm()
        margin = abs(det3(m)) / f ** 3 if f > 0 else 0.0
        add(name, margin, tol.margin_determinant)

    np = None
    try:
        values, _ = eig3(pair.a, tol)
        scale = max(abs(h) for h in values)
        sep = min(abs(values[0] - values[1]), abs(values[0] - values[2]),
                  abs(values[1] - values[2]))
        add("eigenvalue_separation", sep / scale, tol.margin_eigenvalue_separation)
    except GeneralPositionError as exc:
        add("eigenvalue_separation", None, tol.margin_eigenvalue_separation, exc.code)

    try:
        # gauge margin measured on the un-rescaled eigenbasis matrix
        values, vectors = eig3(pair.a, tol)
        v = columns_matrix(*vectors)
        u0 = inv3(v, tol) @ pair.b @ v
        margin = min(abs(u0[0, 1]), abs(u0[0, 2])) / u0.norm()
        add("gauge_entries", margin, tol.margin_gauge)
        np = normalize_pair(pair, None, tol)
    except GeneralPositionError as exc:
        add("gauge_entries", None, tol.margin_gauge, exc.code)

    if np is None:
        add("divisor_denominator", None, tol.margin_divisor_denominator, "unavailable")
        add("divisor_on_curve", None, tol.on_curve, "unavailable")
        add("axis_point_separation", None, tol.margin_axis_point_separation, "unavailable")
        return GeneralPositionReport(tuple(checks))

    h1, h2, h3 = np.h
    add("divisor_denominator", abs(h3 - h2) / max(abs(h1), abs(h2), abs(h3)),
        tol.margin_divisor_denominator)

    try:
        sd = spectral_data_of_normalized(np, tol)
        add("divisor_on_curve",
            tol.on_curve - curve_residual(sd.coeffs, sd.divisor.L, sd.divisor.M, 1.0),
            0.0)
    except GeneralPositionError as exc:
        add("divisor_on_curve", None, tol.on_curve, exc.code)
        return GeneralPositionReport(tuple(checks))

    c = sd.coeffs
    try:
        xi = solve_cubic(CubicPoly(1.0, -c.q_plus, c.q_minus, -c.d2), tol)
        lam0 = solve_cubic(CubicPoly(c.d1, c.r_plus, c.r_minus, c.d2), tol)
        points = ([ProjectivePoint(h, -1.0, 0.0) for h in np.h]
                  + [ProjectivePoint(x, 0.0, -1.0) for x in xi]
                  + [ProjectivePoint(0.0, s, 1.0) for s in lam0])
        min_dist = min(projective_distance(points[i], points[j])
                       for i in range(9) for j in range(i + 1, 9))
        add("axis_point_separation", min_dist, tol.margin_axis_point_separation)
    except GeneralPositionError as exc:
        add("axis_point_separation", None, tol.margin_axis_point_separation, exc.code)

    return GeneralPositionReport(tuple(checks))
