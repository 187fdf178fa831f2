"""GL(2,Z) machinery: the three generator actions on matrix pairs and on
spectral data, Euclidean decomposition of integer matrices into generator
words, and commuting-diagram verification.

Word convention: a word acts on a pair by folding left to right (first
letter applied first); the matrix of a word is the left-to-right product of
the generator matrices.  With that pairing, applying a word to a pair and
multiplying generator matrices are compatible, which the abelianization
test pins down.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .config import DEFAULT_TOL, ToleranceConfig
from .cubic import ProjectivePoint, chord_swap_divisor
from .errors import (
    DeterminantNotUnit,
    GeneralPositionError,
    IntermediateDegeneracy,
    SingularA,
    SwappedPairDegenerate,
)
from .linalg import CubicPoly, Mat3, Vec3, inv3, solve_cubic
from .reconstruct import canonical_form
from .spectral import (
    CurveCoefficients,
    DivisorPoint,
    MatrixPair,
    SpectralData,
    spectral_data,
    spectral_residuals,
    validate_spectral_data,
)


class Generator(Enum):
    """The three moves generating GL(2,Z): exchange the pair, invert the
    first matrix, multiply the second by the first."""

    SWAP = "S"
    INVERT = "I"
    SHEAR = "T"


Word = tuple[Generator, ...]

_LETTERS = {g.value: g for g in Generator}


def parse_word(text: str) -> Word:
    """Parse a comma-separated word like "S,I,T"; empty string is the
    identity."""
    text = text.strip()
    if not text:
        return ()
    letters = []
    for token in text.split(","):
        token = token.strip().upper()
        if token not in _LETTERS:
            raise ValueError(f"unknown generator letter {token!r} "
                             f"(expected S, I or T)")
        letters.append(_LETTERS[token])
    return tuple(letters)


def word_to_str(word: Word) -> str:
    return ",".join(g.value for g in word)


@dataclass(frozen=True)
class GL2ZMatrix:
    """Integer 2x2 matrix with determinant +-1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if det not in (1, -1):
            raise DeterminantNotUnit(
                f"determinant must be +1 or -1, got {det}", det=det)

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "GL2ZMatrix") -> "GL2ZMatrix":
        return GL2ZMatrix(self.a * other.a + self.b * other.c,
                          self.a * other.b + self.b * other.d,
                          self.c * other.a + self.d * other.c,
                          self.c * other.b + self.d * other.d)

    @classmethod
    def identity(cls) -> "GL2ZMatrix":
        return cls(1, 0, 0, 1)


GENERATOR_MATRICES = {
    Generator.SWAP: GL2ZMatrix(0, 1, 1, 0),
    Generator.INVERT: GL2ZMatrix(-1, 0, 0, 1),
    Generator.SHEAR: GL2ZMatrix(1, 1, 0, 1),
}


def matrix_of_word(word: Word) -> GL2ZMatrix:
    out = GL2ZMatrix.identity()
    for g in word:
        out = out * GENERATOR_MATRICES[g]
    return out


def act_on_pair(g: Generator, pair: MatrixPair,
                tol: ToleranceConfig = DEFAULT_TOL) -> MatrixPair:
    """Generator action on raw pairs: (B, A), (A^-1, B) or (A, A B)."""
    if g is Generator.SWAP:
        return MatrixPair(pair.b, pair.a)
    if g is Generator.INVERT:
        return MatrixPair(inv3(pair.a, tol), pair.b)
    return MatrixPair(pair.a, pair.a @ pair.b)


def act_word_on_pair(word: Word, pair: MatrixPair,
                     tol: ToleranceConfig = DEFAULT_TOL) -> MatrixPair:
    for g in word:
        pair = act_on_pair(g, pair, tol)
    return pair


def _sorted_triple(values: Vec3) -> Vec3:
    return tuple(sorted(values, key=lambda z: (z.real, z.imag)))


def swap_spectral(sd: SpectralData,
                  tol: ToleranceConfig = DEFAULT_TOL) -> SpectralData:
    """Spectral side of exchanging the two matrices.

    The cubic's mu and nu swap roles, so the coefficients permute; the new
    eigenvalues are the second matrix's spectrum, read off the curve.  The
    new divisor point is the chord-construction transport, with mu and nu
    exchanged in its coordinates.
    """
    c = sd.coeffs
    swapped = CurveCoefficients(
        d1=c.d2, d2=c.d1,
        p_plus=c.q_plus, p_minus=c.q_minus,
        q_plus=c.p_plus, q_minus=c.p_minus,
        r_plus=c.r_minus, r_minus=c.r_plus,
        t=c.t)
    xi = solve_cubic(CubicPoly(1.0, -c.q_plus, c.q_minus, -c.d2), tol)
    xi = _sorted_triple(xi)
    scale = max(abs(z) for z in xi)
    sep = min(abs(xi[0] - xi[1]), abs(xi[0] - xi[2]), abs(xi[1] - xi[2]))
    if scale == 0.0 or sep <= tol.eigenvalue_separation * scale:
        raise SwappedPairDegenerate(
            "second matrix has nearly repeated eigenvalues", separation=sep)

    p_first = ProjectivePoint(sd.h[0], -1.0, 0.0)
    x_first = ProjectivePoint(xi[0], 0.0, -1.0)
    q_point = ProjectivePoint(sd.divisor.L, sd.divisor.M, 1.0)
    y = chord_swap_divisor(c, p_first, x_first, q_point, tol)

    y_swapped = ProjectivePoint(y.lam, y.nu, y.mu)
    if abs(y_swapped.nu) <= tol.divisor_denominator * y_swapped.max_abs():
        raise SwappedPairDegenerate(
            "transported divisor point lies on the line at infinity",
            nu=abs(y_swapped.nu))
    out = SpectralData(
        xi, swapped,
        DivisorPoint(y_swapped.lam / y_swapped.nu, y_swapped.mu / y_swapped.nu))
    validate_spectral_data(out, tol)
    return out


def tilde_r_minus(coeffs: CurveCoefficients, h: Vec3, divisor: DivisorPoint) -> complex:
    """The one transformed coefficient that has no short expression.

    Derived by eliminating U from the weighted principal-minor sum of the
    inverted pair; equals (h1 h2 M12 + h1 h3 M13 + h2 h3 M23) / d1 in terms
    of the minors of U.  Note the (L + M h2)(L + M h3) term enters with the
    opposite sign from the rest.
    """
    h1, h2, h3 = h
    L, M = divisor.L, divisor.M
    qp, qm = coeffs.q_plus, coeffs.q_minus
    rp, rm = coeffs.r_plus, coeffs.r_minus
    t = coeffs.t
    d1 = coeffs.d1
    ab = (h1 - h2) * (h1 - h3) * (L + M * h2) * (L + M * h3)
    l_term = L * (rp - t * h1 + qp * (h1 * h2 + h1 * h3 - h2 * h3))
    m_term = M * (rp * (h2 + h3 - h1) - t * h2 * h3 + qp * h1 * h2 * h3)
    return (l_term + m_term + qm * h1 * (h2 + h3) - h1 * rm - ab) / d1


def invert_spectral(sd: SpectralData,
                    tol: ToleranceConfig = DEFAULT_TOL) -> SpectralData:
    """Spectral side of inverting the first matrix.

    Eigenvalues invert in place (ordering inherited, not re-sorted here);
    the second matrix's own coefficients are untouched; the rest transform
    by the closed-form table, all expressed in the original eigenvalues.
    """
    h1, h2, h3 = sd.h
    c = sd.coeffs
    scale = max(abs(h1), abs(h2), abs(h3))
    if min(abs(h1), abs(h2), abs(h3)) <= tol.singular * max(1.0, scale) \
            or abs(c.d1) <= tol.singular * max(1.0, scale) ** 3:
        raise SingularA("first matrix is numerically singular", d1=abs(c.d1))
    d1 = c.d1
    L, M = sd.divisor.L, sd.divisor.M
    out = SpectralData(
        (1.0 / h1, 1.0 / h2, 1.0 / h3),
        CurveCoefficients(
            d1=1.0 / d1,
            d2=c.d2,
            p_plus=c.p_minus / d1,
            p_minus=c.p_plus / d1,
            q_plus=c.q_plus,
            q_minus=c.q_minus,
            r_plus=(c.q_plus * c.p_plus - c.t) / d1,
            r_minus=tilde_r_minus(c, sd.h, sd.divisor),
            t=(c.q_plus * c.p_minus - c.r_plus) / d1),
        DivisorPoint(L + M * (h2 + h3), -h2 * h3 * M))
    validate_spectral_data(out, tol)
    return out


def shear_spectral(sd: SpectralData,
                   tol: ToleranceConfig = DEFAULT_TOL) -> SpectralData:
    """Spectral side of (A, B) -> (A, A B).

    The first matrix's data (eigenvalues, d1, p_plus, p_minus) are fixed;
    the remaining coefficients follow from rewriting the new pencil through
    the inverted one with lam and mu exchanged, which also exchanges the
    roles of the divisor coordinates.
    """
    h1, h2, h3 = sd.h
    c = sd.coeffs
    L, M = sd.divisor.L, sd.divisor.M
    out = SpectralData(
        sd.h,
        CurveCoefficients(
            d1=c.d1,
            d2=c.d1 * c.d2,
            p_plus=c.p_plus,
            p_minus=c.p_minus,
            q_plus=c.q_plus * c.p_plus - c.t,
            q_minus=c.d1 * tilde_r_minus(c, sd.h, sd.divisor),
            r_plus=c.d1 * c.q_plus,
            r_minus=c.d1 * c.q_minus,
            t=c.p_minus * c.q_plus - c.r_plus),
        DivisorPoint(-h2 * h3 * M, L + M * (h2 + h3)))
    validate_spectral_data(out, tol)
    return out


_SPECTRAL_ACTIONS = {
    Generator.SWAP: swap_spectral,
    Generator.INVERT: invert_spectral,
    Generator.SHEAR: shear_spectral,
}


def act_spectral(g: Generator, sd: SpectralData,
                 tol: ToleranceConfig = DEFAULT_TOL) -> SpectralData:
    return _SPECTRAL_ACTIONS[g](sd, tol)


def act_word_spectral(word: Word, sd: SpectralData,
                      tol: ToleranceConfig = DEFAULT_TOL) -> SpectralData:
    """Left-to-right fold of the generator actions, recanonicalizing the
    eigenvalue ordering between steps; reports the failing prefix when an
    intermediate leaves general position."""
    current = canonical_form(sd, tol)
    for i, g in enumerate(word):
        try:
            current = canonical_form(act_spectral(g, current, tol), tol)
        except GeneralPositionError as exc:
            raise IntermediateDegeneracy(
                f"word left general position after {word_to_str(word[:i + 1])}",
                prefix=word[:i + 1], cause=exc) from exc
    return current


def decompose_gl2z(m: GL2ZMatrix) -> Word:
    """Word in {SWAP, INVERT, SHEAR} whose matrix product equals m exactly.

    Euclidean reduction in integer arithmetic: peel generators off the left
    so the running remainder's first column shrinks by division steps, then
    clear the off-diagonal entry and fix the signs.  Row operations used:
    emitting SHEAR subtracts row 2 from row 1, SWAP exchanges rows, INVERT
    negates row 1, and the block [SWAP, INVERT, SWAP] negates row 2.
    """
    word: list[Generator] = []
    a, b, c, d = m.a, m.b, m.c, m.d

    def emit(g: Generator):
        word.append(g)

    # zero out c with a subtractive/division Euclid on the first column
    while c != 0:
        if abs(a) < abs(c):
            emit(Generator.SWAP)
            a, b, c, d = c, d, a, b
            continue
        q = a // c
        if q < 0:
            emit(Generator.INVERT)
            a, b = -a, -b
            continue
        for _ in range(q):
            emit(Generator.SHEAR)
        a, b = a - q * c, b - q * d
        if c != 0:
            emit(Generator.SWAP)
            a, b, c, d = c, d, a, b

    # remainder is upper triangular with a, d in {+1, -1}
    if a == -1:
        emit(Generator.INVERT)
        a, b = -a, -b
    q = b * d
    if q >= 0:
        for _ in range(q):
            emit(Generator.SHEAR)
        b -= q * d
    else:
        # negate row 2 first so the shear count is positive
        emit(Generator.SWAP)
        emit(Generator.INVERT)
        emit(Generator.SWAP)
        c, d = -c, -d
        q = b * d
        for _ in range(q):
            emit(Generator.SHEAR)
        b -= q * d
    if d == -1:
        emit(Generator.SWAP)
        emit(Generator.INVERT)
        emit(Generator.SWAP)
        c, d = -c, -d

    assert (a, b, c, d) == (1, 0, 0, 1)
    # S and I are involutions, so adjacent repeats cancel exactly
    reduced: list[Generator] = []
    for g in word:
        if reduced and g is reduced[-1] and g is not Generator.SHEAR:
            reduced.pop()
        else:
            reduced.append(g)
    result = tuple(reduced)
    assert matrix_of_word(result) == m
    return result


@dataclass(frozen=True)
class CommutationReport:
    """Residuals between the spectral-side and matrix-side routes for one
    generator applied to one pair."""

    operation: str
    per_component: dict[str, float]
    max_residual: float


def verify_commutation(g: Generator, pair: MatrixPair,
                       tol: ToleranceConfig = DEFAULT_TOL) -> CommutationReport:
    """Compare the two routes around the square: generator-then-map versus
    map-then-generator-formula, both canonicalized."""
    sd = spectral_data(pair, None, tol)
    lhs = canonical_form(act_spectral(g, sd, tol), tol)
    rhs = canonical_form(spectral_data(act_on_pair(g, pair, tol), None, tol), tol)
    residuals = spectral_residuals(lhs, rhs)
    return CommutationReport(
        operation=f"commute_{g.name.lower()}",
        per_component=residuals,
        max_residual=max(residuals.values()))
