"""Inverse map: spectral data back to the normalized pair.

The diagonal of U comes from a linear system in closed form, the first row
is the gauge (1, 1, 1-free), u23/u32 follow from the divisor point, and the
remaining two entries (u21, u31) are computed twice: by long closed forms
and by solving the two remaining coefficient equations, which are linear in
them.  The linear solve is authoritative; disagreement raises, because it
can only mean a transcription bug in the closed forms.
"""

from __future__ import annotations

from .config import DEFAULT_TOL, ToleranceConfig
from .errors import (
    ClosedFormMismatch,
    LinearSystemSingular,
    RepeatedEigenvalues,
)
from .linalg import CubicPoly, Mat3, Vec3, solve_cubic
from .spectral import (
    CurveCoefficients,
    NormalizedPair,
    SpectralData,
    spectral_data,
)


def _check_separation(h: Vec3, tol: ToleranceConfig) -> None:
    scale = max(abs(z) for z in h)
    sep = min(abs(h[0] - h[1]), abs(h[0] - h[2]), abs(h[1] - h[2]))
    if scale == 0.0 or sep <= tol.eigenvalue_separation * scale:
        raise RepeatedEigenvalues("eigenvalue triple is not pairwise separated",
                                  separation=sep, scale=scale)


def eigenvalues_from_coefficients(coeffs: CurveCoefficients,
                                  tol: ToleranceConfig = DEFAULT_TOL) -> Vec3:
    """Unordered eigenvalue triple from (p_plus, p_minus, d1), returned in
    the canonical (re, im) order."""
    roots = solve_cubic(
        CubicPoly(1.0, -coeffs.p_plus, coeffs.p_minus, -coeffs.d1), tol)
    _check_separation(roots, tol)
    return roots


def diagonal_entries(coeffs: CurveCoefficients, h: Vec3,
                     tol: ToleranceConfig = DEFAULT_TOL) -> Vec3:
    """Diagonal of U from (q_plus, t, r_plus) and the ordered eigenvalues."""
    _check_separation(h, tol)
    h1, h2, h3 = h
    qp, rp, t = coeffs.q_plus, coeffs.r_plus, coeffs.t
    u11 = (qp * h1 * h1 - t * h1 + rp) / ((h1 - h2) * (h1 - h3))
    u22 = (qp * h2 * h2 - t * h2 + rp) / ((h2 - h1) * (h2 - h3))
    u33 = (qp * h3 * h3 - t * h3 + rp) / ((h3 - h1) * (h3 - h2))
    return (u11, u22, u33)


def _closed_form_lower_left(coeffs: CurveCoefficients, h: Vec3,
                            L: complex, M: complex) -> tuple[complex, complex]:
    """Long closed forms for (u21, u31); cross-check only."""
    h1, h2, h3 = h
    qp, qm = coeffs.q_plus, coeffs.q_minus
    rp, rm = coeffs.r_plus, coeffs.r_minus
    t = coeffs.t
    ab = (L + h2 * M) * (L + h3 * M)
    m_bracket = rp * (h1 - h2 - h3) - qp * h1 * h2 * h3 + t * h2 * h3
    l_bracket = qp * (h2 * h3 - h1 * h2 - h1 * h3) - rp + t * h1

    def corner(ha: complex, hb: complex) -> complex:
        # ha plays the row's own eigenvalue (h2 for u21, h3 for u31)
        return ((h1 - ha) / (ha - hb) * ab
                + M / ((h1 - hb) * (ha - hb)) * m_bracket
                + L / ((h1 - hb) * (ha - hb)) * l_bracket
                + (rm - qm * ha) / (ha - hb)
                + (qp * ha * ha - t * ha + rp) * (qp * h1 * h1 - t * h1 + rp)
                / ((h1 - ha) ** 2 * (hb - h1) * (ha - hb)))

    return corner(h2, h3), corner(h3, h2)


def reconstruct(sd: SpectralData,
                tol: ToleranceConfig = DEFAULT_TOL) -> NormalizedPair:
    """Normalized pair from spectral data, using the ordering carried by it.

    The divisor point is used as given; nothing is projected back onto the
    curve, so feeding an off-curve point returns a pair whose own spectral
    data differs from the input.
    """
    h = sd.h
    _check_separation(h, tol)
    h1, h2, h3 = h
    c = sd.coeffs
    L, M = sd.divisor.L, sd.divisor.M

    u11, u22, u33 = diagonal_entries(c, h, tol)
    u23 = L + h2 * M + u22
    u32 = L + h3 * M + u33

    # the two unused coefficient equations, linear in (u21, u31):
    #   u21 + u31                = u11 u22 + u11 u33 + u22 u33 - u23 u32 - q_minus
    #   h3 u21 + h2 u31          = h3 u11 u22 + h2 u11 u33
    #                              + h1 (u22 u33 - u23 u32) - r_minus
    den = h3 - h2
    scale = max(abs(h1), abs(h2), abs(h3))
    if abs(den) <= tol.linear_system * scale:
        raise LinearSystemSingular("linear system for (u21, u31) is singular",
                                   denominator=abs(den))
    rhs1 = u11 * u22 + u11 * u33 + u22 * u33 - u23 * u32 - c.q_minus
    rhs2 = (h3 * u11 * u22 + h2 * u11 * u33
            + h1 * (u22 * u33 - u23 * u32) - c.r_minus)
    u21 = (rhs2 - h2 * rhs1) / den
    u31 = (h3 * rhs1 - rhs2) / den

    u21_cf, u31_cf = _closed_form_lower_left(c, h, L, M)
    ref = max(1.0, abs(u21), abs(u31))
    mismatch = max(abs(u21 - u21_cf), abs(u31 - u31_cf)) / ref
    if mismatch > tol.closed_form_agreement:
        raise ClosedFormMismatch(
            "closed forms for (u21, u31) disagree with the linear solve",
            mismatch=mismatch,
            linear=(u21, u31), closed=(u21_cf, u31_cf))

    u = Mat3((u11, 1.0, 1.0,
              u21, u22, u23,
              u31, u32, u33))
    return NormalizedPair(h, u)


def canonical_form(sd: SpectralData,
                   tol: ToleranceConfig = DEFAULT_TOL) -> SpectralData:
    """Spectral data recomputed with the canonical eigenvalue ordering.

    This is the common ground for comparing data that carry different
    orderings: reconstruct the pair, renormalize from scratch, remap.
    """
    pair = reconstruct(sd, tol).as_pair()
    return spectral_data(pair, None, tol)
