import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from opalg.core import FreePolynomial, IDENTITY_WORD, Letter, Word, adjoint, normal_order
from opalg.errors import UnsupportedFragmentError
from opalg.scalars import HbarScalar
from opalg.weyl import (
    WeylMonomial,
    WeylPolynomial,
    expand,
    expand_polynomial,
    normal_form_of_weyl,
    symmetrize,
    weyl_derivative,
    weyl_product,
)

Q, P = Letter.Q, Letter.P
q = FreePolynomial.from_letters(Q)
p = FreePolynomial.from_letters(P)


def mono(n, m, deriv=None) -> WeylPolynomial:
    return WeylPolynomial.from_monomial(WeylMonomial(n, m, deriv))


# -- symmetrize -----------------------------------------------------------------


def test_symmetrize_qp():
    assert symmetrize(q * p) == mono(1, 1)


def test_symmetrize_kills_hbar_terms():
    assert symmetrize(FreePolynomial.from_word(Word.of(Q), HbarScalar.of(1, 0, 1))).is_zero


def test_count_invariance_on_reorderings():
    assert symmetrize(FreePolynomial.from_word(Word.of(Q, P, Q, P))) == symmetrize(
        FreePolynomial.from_word(Word.of(Q, Q, P, P))
    )


def test_symmetrize_rejects_negative_grades():
    poly = FreePolynomial.from_word(Word.of(Q), HbarScalar.of(1, 0, -1))
    with pytest.raises(UnsupportedFragmentError):
        symmetrize(poly)


def test_symmetrize_rejects_bare_state_symbol():
    with pytest.raises(UnsupportedFragmentError):
        symmetrize(FreePolynomial.from_letters(Letter.RHO))


def test_symmetrize_rejects_two_derivative_letters():
    with pytest.raises(UnsupportedFragmentError):
        symmetrize(FreePolynomial.from_letters(Letter.DRHO_Q, Letter.DRHO_Q))
    with pytest.raises(UnsupportedFragmentError):
        symmetrize(FreePolynomial.from_letters(Letter.DRHO_Q, Letter.DRHO_P))


def test_symmetrize_keeps_single_derivative_letter():
    assert symmetrize(FreePolynomial.from_letters(Q, Letter.DRHO_P)) == mono(
        1, 0, Letter.DRHO_P
    )


@given(st.lists(st.sampled_from([Q, P]), max_size=6))
def test_symmetrize_depends_only_on_counts(letters):
    word = Word.of(*letters)
    sorted_word = Word.of(*sorted(letters))
    assert symmetrize(FreePolynomial.from_word(word)) == symmetrize(
        FreePolynomial.from_word(sorted_word)
    )


@given(st.lists(st.tuples(st.lists(st.sampled_from([Q, P]), max_size=5), st.sampled_from([1, -1, 2])), max_size=3))
def test_symmetrize_is_invariant_under_rewriting(raw):
    x = FreePolynomial(
        (Word.of(*letters), HbarScalar.real(c)) for letters, c in raw
    )
    assert symmetrize(x) == symmetrize(normal_order(x))


# -- expand ----------------------------------------------------------------------


def test_six_term_expansion():
    sixth = HbarScalar.real(Fraction(1, 6))
    expected = FreePolynomial(
        (Word.of(*letters), sixth)
        for letters in [
            (Q, Q, P, P),
            (Q, P, Q, P),
            (Q, P, P, Q),
            (P, Q, Q, P),
            (P, Q, P, Q),
            (P, P, Q, Q),
        ]
    )
    assert expand(WeylMonomial(2, 2)) == expected


def test_expansion_of_identity():
    assert expand(WeylMonomial(0, 0)) == FreePolynomial.one()


def test_expansion_word_count():
    for n in range(5):
        for m in range(5):
            expansion = expand(WeylMonomial(n, m))
            words = [w for w, _ in expansion.items()]
            assert len(words) == comb(n + m, n)
            assert len(set(words)) == len(words)


def test_derivative_letter_pairing_with_momentum():
    half = HbarScalar.real(Fraction(1, 2))
    expected = FreePolynomial(
        [
            (Word.of(P, Letter.DRHO_Q), half),
            (Word.of(Letter.DRHO_Q, P), half),
        ]
    )
    assert expand(WeylMonomial(0, 1, Letter.DRHO_Q)) == expected


def test_derivative_letter_with_coordinate_powers():
    for n in range(5):
        coeff = HbarScalar.real(Fraction(1, n + 1))
        expected = FreePolynomial(
            (Word.of(*([Q] * k + [Letter.DRHO_P] + [Q] * (n - k))), coeff)
            for k in range(n + 1)
        )
        assert expand(WeylMonomial(n, 0, Letter.DRHO_P)) == expected


def test_round_trip_symmetrize_of_expansion():
    for n in range(4):
        for m in range(4):
            monomial = WeylMonomial(n, m)
            assert symmetrize(expand(monomial)) == WeylPolynomial.from_monomial(monomial)


# -- the symmetric product ---------------------------------------------------------


def test_exponents_add():
    assert weyl_product(mono(1, 1), mono(1, 1)) == mono(2, 2)
    assert weyl_product(mono(2, 1), mono(1, 2)) == mono(3, 3)


def test_unit():
    x = mono(3, 1) + mono(0, 2).scale(Fraction(1, 2))
    assert weyl_product(WeylPolynomial.one(), x) == x


def test_two_derivative_factors_are_rejected():
    with pytest.raises(UnsupportedFragmentError):
        weyl_product(mono(1, 0, Letter.DRHO_Q), mono(0, 1, Letter.DRHO_P))


def test_derivative_factor_is_carried():
    assert weyl_product(mono(2, 0), mono(0, 1, Letter.DRHO_P)) == mono(
        2, 1, Letter.DRHO_P
    )


def test_two_step_agreement_on_monomials():
    for n1 in range(4):
        for m1 in range(4 - n1):
            for n2 in range(4):
                for m2 in range(4 - n2):
                    x, y = mono(n1, m1), mono(n2, m2)
                    two_step = symmetrize(expand_polynomial(x) * expand_polynomial(y))
                    assert weyl_product(x, y) == two_step


def test_two_step_agreement_on_random_polynomials():
    rng = random.Random(9)
    for _ in range(25):
        x = WeylPolynomial(
            (WeylMonomial(rng.randint(0, 3), rng.randint(0, 3)), HbarScalar.real(rng.choice((1, -1, 2))))
            for _ in range(rng.randint(1, 3))
        )
        y = WeylPolynomial(
            (WeylMonomial(rng.randint(0, 3), rng.randint(0, 3)), HbarScalar.real(rng.choice((1, Fraction(1, 2)))))
            for _ in range(rng.randint(1, 3))
        )
        assert weyl_product(x, y) == symmetrize(expand_polynomial(x) * expand_polynomial(y))


@given(
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=3),
)
def test_commutativity(n1, m1, n2, m2):
    assert weyl_product(mono(n1, m1), mono(n2, m2)) == weyl_product(
        mono(n2, m2), mono(n1, m1)
    )


def test_associativity_on_monomials():
    for n1, m1, n2, m2, n3, m3 in [(1, 0, 0, 1, 1, 1), (2, 1, 1, 2, 0, 0), (3, 0, 0, 3, 1, 1)]:
        a, b, c = mono(n1, m1), mono(n2, m2), mono(n3, m3)
        assert weyl_product(weyl_product(a, b), c) == weyl_product(a, weyl_product(b, c))


# -- weyl derivative and normal forms ------------------------------------------------


def test_weyl_derivative_lowers_exponents():
    assert weyl_derivative(mono(3, 2), Q) == mono(2, 2).scale(3)
    assert weyl_derivative(mono(3, 2), P) == mono(3, 1).scale(2)
    assert weyl_derivative(mono(0, 2), Q).is_zero


def test_weyl_derivative_keeps_derivative_letter():
    assert weyl_derivative(mono(2, 0, Letter.DRHO_P), Q) == mono(
        1, 0, Letter.DRHO_P
    ).scale(2)


def test_normal_form_of_qp_monomial():
    expected = q * p - FreePolynomial.from_word(
        IDENTITY_WORD, HbarScalar.of(0, Fraction(1, 2), 1)
    )
    assert normal_form_of_weyl(WeylMonomial(1, 1)) == expected


def test_normal_form_of_q2p2_monomial():
    # q^2 p^2 - 2 i hbar q p - hbar^2/2, cross-checked against the oracle
    expected = (
        FreePolynomial.from_word(Word.of(Q, Q, P, P))
        - FreePolynomial.from_word(Word.of(Q, P), HbarScalar.of(0, 2, 1))
        - FreePolynomial.from_word(IDENTITY_WORD, HbarScalar.of(Fraction(1, 2), 0, 2))
    )
    assert normal_form_of_weyl(WeylMonomial(2, 2)) == expected


def test_pure_powers_are_already_normal():
    for n in range(5):
        assert normal_form_of_weyl(WeylMonomial(n, 0)) == FreePolynomial.from_word(
            Word.of(*([Q] * n))
        )


def test_expansions_are_self_adjoint():
    for n in range(4):
        for m in range(4):
            expansion = expand(WeylMonomial(n, m))
            assert adjoint(expansion) == expansion


def test_hermitian_witness_consistency():
    # the symmetric square of (q p + p q)/2 equals the symmetric square of
    # its rewritten form q p - i hbar / 2
    anticomm = (q * p + p * q).scale(Fraction(1, 2))
    rewritten = q * p - FreePolynomial.from_word(
        IDENTITY_WORD, HbarScalar.of(0, Fraction(1, 2), 1)
    )
    z = mono(2, 1)
    assert weyl_product(symmetrize(anticomm), z) == weyl_product(symmetrize(rewritten), z)
