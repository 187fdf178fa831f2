import random
from fractions import Fraction

import pytest

from spectral_pair import (
    DeterminantNotUnit,
    GL2ZMatrix,
    Generator,
    GeneralPositionError,
    IntermediateDegeneracy,
    Mat3,
    MatrixPair,
    act_on_pair,
    act_spectral,
    act_word_on_pair,
    act_word_spectral,
    canonical_form,
    decompose_gl2z,
    det3,
    inv3,
    invert_spectral,
    matrix_of_word,
    parse_word,
    shear_spectral,
    spectral_data,
    spectral_residuals,
    swap_spectral,
    verify_commutation,
    well_conditioned_matrix,
    word_to_str,
)

from oracles import evaluate_word_at, exponent_sums, word_images

S, I, T = Generator.SWAP, Generator.INVERT, Generator.SHEAR


def random_word(rng, length):
    return tuple(rng.choice([S, I, T]) for _ in range(length))


def test_parse_and_format():
    assert parse_word("S,I,T") == (S, I, T)
    assert parse_word("") == ()
    assert word_to_str((T, T, S)) == "T,T,S"
    with pytest.raises(ValueError):
        parse_word("S,X")


def test_generator_matrices():
    assert GENERATORS_EXPECTED == {
        g: (m.a, m.b, m.c, m.d)
        for g, m in ((g, matrix_of_word((g,))) for g in Generator)}


GENERATORS_EXPECTED = {
    S: (0, 1, 1, 0),
    I: (-1, 0, 0, 1),
    T: (1, 1, 0, 1),
}


def test_act_on_pair_involutions(seeded_pairs):
    pair = seeded_pairs[0]
    double_swap = act_word_on_pair((S, S), pair)
    assert double_swap.a.entries == pair.a.entries
    double_invert = act_word_on_pair((I, I), pair)
    assert max(abs(x - y) for x, y in
               zip(double_invert.a.entries, pair.a.entries)) < 1e-10


def test_word_action_matches_free_group_evaluation(seeded_pairs):
    rng = random.Random(20)
    for trial in range(20):
        pair = seeded_pairs[trial]
        word = random_word(rng, rng.randint(1, 6))
        acted = act_word_on_pair(word, pair)
        img1, img2 = word_images([g.value for g in word])
        expected_a = evaluate_word_at(img1, pair.a, pair.b, inv3)
        expected_b = evaluate_word_at(img2, pair.a, pair.b, inv3)
        scale = max(1.0, acted.a.norm(), acted.b.norm())
        assert max(abs(x - y) for x, y in
                   zip(acted.a.entries, expected_a.entries)) < 1e-8 * scale
        assert max(abs(x - y) for x, y in
                   zip(acted.b.entries, expected_b.entries)) < 1e-8 * scale
        # first-matrix determinant equals d1 of the acted pair's data
        d1 = spectral_data(acted).coeffs.d1
        assert abs(d1 - det3(acted.a)) < 1e-8 * max(1.0, abs(d1))


def test_sigma_consistency():
    """Exponent-sum abelianization of a word equals the transpose of the
    generator-matrix product, pinning the composition convention."""
    rng = random.Random(8)
    for _ in range(50):
        word = random_word(rng, rng.randint(0, 8))
        img1, img2 = word_images([g.value for g in word])
        e11, e12 = exponent_sums(img1)
        e21, e22 = exponent_sums(img2)
        m = matrix_of_word(word)
        assert (m.a, m.b, m.c, m.d) == (e11, e21, e12, e22)


FIXTURE_INVERT = {
    "h": (1, Fraction(1, 2), Fraction(1, 3)),
    "d1": Fraction(1, 6), "d2": -22, "p_plus": Fraction(11, 6), "p_minus": 1,
    "q_plus": 9, "q_minus": 16, "r_plus": Fraction(10, 3),
    "r_minus": Fraction(89, 6), "t": Fraction(35, 3),
    "L": 1, "M": -12,
}

FIXTURE_SHEAR = {
    "h": (1, 2, 3),
    "d1": 6, "d2": -132, "p_plus": 6, "p_minus": 11, "q_plus": 20,
    "q_minus": 89, "r_plus": 54, "r_minus": 96, "t": 70,
    "L": -12, "M": 1,
}


def _assert_matches_fixture(sd, expected):
    for i in range(3):
        assert abs(sd.h[i] - float(expected["h"][i])) < 1e-10
    for name, value in sd.coeffs.items():
        assert abs(value - float(expected[name])) < 1e-9, name
    assert abs(sd.divisor.L - float(expected["L"])) < 1e-9
    assert abs(sd.divisor.M - float(expected["M"])) < 1e-9


def test_invert_spectral_integer_fixture(fixture_pair):
    _assert_matches_fixture(invert_spectral(spectral_data(fixture_pair)),
                            FIXTURE_INVERT)


def test_shear_spectral_integer_fixture(fixture_pair):
    _assert_matches_fixture(shear_spectral(spectral_data(fixture_pair)),
                            FIXTURE_SHEAR)


def test_invert_keeps_second_matrix_coefficients(seeded_pairs):
    for pair in seeded_pairs[:10]:
        sd = spectral_data(pair)
        tilde = invert_spectral(sd)
        assert tilde.coeffs.d2 == sd.coeffs.d2
        assert tilde.coeffs.q_plus == sd.coeffs.q_plus
        assert tilde.coeffs.q_minus == sd.coeffs.q_minus


def test_invert_symmetric_function_identity(fixture_pair):
    sd = spectral_data(fixture_pair)
    tilde = invert_spectral(sd)
    assert abs(tilde.coeffs.p_plus - (1 + 1 / 2 + 1 / 3)) < 1e-12


def test_shear_fixes_first_matrix_data(seeded_pairs):
    for pair in seeded_pairs[:10]:
        sd = spectral_data(pair)
        starred = shear_spectral(sd)
        assert starred.h == sd.h
        assert starred.coeffs.d1 == sd.coeffs.d1
        assert starred.coeffs.p_plus == sd.coeffs.p_plus
        assert starred.coeffs.p_minus == sd.coeffs.p_minus


def test_shear_d2_is_product_determinant(seeded_pairs):
    for pair in seeded_pairs[:10]:
        sd = spectral_data(pair)
        starred = shear_spectral(sd)
        expected = det3(pair.a @ pair.b)
        assert abs(starred.coeffs.d2 - expected) < 1e-8 * max(1.0, abs(expected))


def test_swap_coefficient_permutation(seeded_pairs):
    for pair in seeded_pairs[:10]:
        sd = spectral_data(pair)
        swapped = swap_spectral(sd)
        other = spectral_data(MatrixPair(pair.b, pair.a))
        for name, value in swapped.coeffs.items():
            expected = dict(other.coeffs.items())[name]
            assert abs(value - expected) < 1e-8 * max(1.0, abs(expected)), name


def test_swap_involution(seeded_pairs):
    for pair in seeded_pairs[:10]:
        sd = spectral_data(pair)
        back = canonical_form(swap_spectral(swap_spectral(sd)))
        assert max(spectral_residuals(back, canonical_form(sd)).values()) < 1e-6


def test_invert_involution(seeded_pairs):
    for pair in seeded_pairs[:10]:
        sd = spectral_data(pair)
        back = canonical_form(invert_spectral(invert_spectral(sd)))
        assert max(spectral_residuals(back, canonical_form(sd)).values()) < 1e-6


@pytest.mark.parametrize("generator", list(Generator))
def test_commuting_diagram(generator, seeded_pairs):
    for pair in seeded_pairs[:25]:
        report = verify_commutation(generator, pair)
        assert report.max_residual < 1e-6, report


def test_commutation_report_conjugation_invariant(seeded_pairs):
    rng = random.Random(5150)
    pair = seeded_pairs[1]
    g = well_conditioned_matrix(rng)
    g_inv = inv3(g)
    conj = MatrixPair(g @ pair.a @ g_inv, g @ pair.b @ g_inv)
    for generator in Generator:
        r1 = verify_commutation(generator, pair)
        r2 = verify_commutation(generator, conj)
        diff = max(abs(r1.per_component[k] - r2.per_component[k])
                   for k in r1.per_component)
        assert diff < 1e-7


def test_commutation_degenerate_pair_raises():
    degenerate = MatrixPair(Mat3.diagonal(1, 2, 3), Mat3.identity())
    with pytest.raises(GeneralPositionError):
        verify_commutation(Generator.SWAP, degenerate)


def test_act_word_spectral_empty_is_canonical(seeded_pairs):
    sd = spectral_data(seeded_pairs[0])
    out = act_word_spectral((), sd)
    assert max(spectral_residuals(out, canonical_form(sd)).values()) < 1e-9


def test_act_word_spectral_double_swap(seeded_pairs):
    sd = spectral_data(seeded_pairs[0])
    out = act_word_spectral((S, S), sd)
    assert max(spectral_residuals(out, canonical_form(sd)).values()) < 1e-6


def test_act_word_spectral_matches_matrix_side(seeded_pairs):
    rng = random.Random(99)
    for trial in range(15):
        pair = seeded_pairs[trial]
        word = random_word(rng, rng.randint(1, 6))
        lhs = act_word_spectral(word, spectral_data(pair))
        rhs = canonical_form(spectral_data(act_word_on_pair(word, pair)))
        assert max(spectral_residuals(lhs, rhs).values()) < 1e-5, word_to_str(word)


def test_intermediate_degeneracy_reports_prefix():
    # second matrix with a repeated spectrum: the swap is degenerate
    a = Mat3.diagonal(1, 2, 3)
    b = Mat3.from_rows([[1, 1, 1], [0, 1, 1], [0, 0, 2]])
    sd = spectral_data(MatrixPair(a, b))
    with pytest.raises(IntermediateDegeneracy) as info:
        act_word_spectral((S,), sd)
    assert info.value.prefix == (S,)


def test_gl2z_determinant_validation():
    with pytest.raises(DeterminantNotUnit):
        GL2ZMatrix(2, 0, 0, 1)


def test_decompose_identity_and_single_shear():
    assert decompose_gl2z(GL2ZMatrix.identity()) == ()
    assert decompose_gl2z(GL2ZMatrix(1, 1, 0, 1)) == (T,)


def test_decompose_generators_and_small_cases():
    for matrix in (GL2ZMatrix(0, 1, 1, 0), GL2ZMatrix(-1, 0, 0, 1),
                   GL2ZMatrix(1, -1, 0, 1), GL2ZMatrix(1, 0, 0, -1),
                   GL2ZMatrix(0, -1, 1, 0), GL2ZMatrix(-3, 2, 7, -5)):
        word = decompose_gl2z(matrix)
        assert matrix_of_word(word) == matrix


def test_decompose_random_products():
    rng = random.Random(1234)
    checked = 0
    while checked < 60:
        word = random_word(rng, 40)
        m = matrix_of_word(word)
        if max(abs(x) for x in (m.a, m.b, m.c, m.d)) > 10 ** 6:
            continue
        recovered = decompose_gl2z(m)
        assert matrix_of_word(recovered) == m
        assert len(recovered) <= 4 * 40
        checked += 1


def test_act_spectral_dispatch(seeded_pairs):
    sd = spectral_data(seeded_pairs[0])
    assert act_spectral(S, sd).coeffs.d1 == sd.coeffs.d2
    assert act_spectral(T, sd).h == sd.h
    pair = seeded_pairs[0]
    inv_pair = act_on_pair(I, pair)
    assert max(abs(x - y) for x, y in
               zip((inv_pair.a @ pair.a).entries, Mat3.identity().entries)) < 1e-10
