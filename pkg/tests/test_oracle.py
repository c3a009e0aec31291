import random
from fractions import Fraction

import pytest

from opalg.core import FreePolynomial, IDENTITY_WORD, Letter, Word, normal_order
from opalg.errors import UnsupportedFragmentError
from opalg.oracle import TestFunction, apply_operator, oracle_equal
from opalg.scalars import HbarScalar, I_HBAR, ONE
from opalg.weyl import WeylMonomial, expand

Q, P = Letter.Q, Letter.P
q = FreePolynomial.from_letters(Q)
p = FreePolynomial.from_letters(P)


def test_p_on_constant():
    pq = FreePolynomial.from_word(Word.of(P, Q))
    assert apply_operator(pq, TestFunction.x_power(0)) == TestFunction.x_power(
        0, HbarScalar.of(0, -1, 1)
    )


def test_ccr_acts_as_i_hbar():
    commutator = q * p - p * q
    rng = random.Random(3)
    for _ in range(20):
        f = TestFunction(
            (rng.randint(0, 6), HbarScalar.real(Fraction(rng.randint(-4, 4), rng.randint(1, 3))))
            for _ in range(3)
        )
        assert apply_operator(commutator, f) == f.scale(I_HBAR)


def test_representation_is_a_homomorphism():
    rng = random.Random(5)
    for _ in range(20):
        a = FreePolynomial.from_word(
            Word.of(*(rng.choice((Q, P)) for _ in range(rng.randint(0, 5))))
        )
        b = FreePolynomial.from_word(
            Word.of(*(rng.choice((Q, P)) for _ in range(rng.randint(0, 5))))
        )
        f = TestFunction.x_power(rng.randint(0, 4))
        assert apply_operator(a * b, f) == apply_operator(a, apply_operator(b, f))


def test_representation_respects_the_relation():
    rng = random.Random(11)
    for _ in range(30):
        word = Word.of(*(rng.choice((Q, P)) for _ in range(rng.randint(0, 7))))
        x = FreePolynomial.from_word(word)
        f = TestFunction.x_power(rng.randint(0, 8))
        assert apply_operator(normal_order(x), f) == apply_operator(x, f)


def test_half_anticommutator_equals_rewritten_form():
    lhs = (q * p + p * q).scale(Fraction(1, 2))
    rhs = q * p - FreePolynomial.from_word(IDENTITY_WORD, HbarScalar.of(0, Fraction(1, 2), 1))
    assert oracle_equal(lhs, rhs)


def test_qp_vs_pq_differ():
    assert not oracle_equal(q * p, p * q)


def test_symmetric_expansion_equals_its_normal_form():
    expansion = expand(WeylMonomial(2, 2))
    assert oracle_equal(expansion, normal_order(expansion))


def test_state_words_are_rejected():
    with pytest.raises(UnsupportedFragmentError):
        apply_operator(FreePolynomial.from_letters(Letter.RHO), TestFunction.x_power(0))
    with pytest.raises(UnsupportedFragmentError):
        oracle_equal(q, FreePolynomial.from_letters(Letter.DRHO_P))


def test_explicit_bound_below_degree_is_rejected():
    with pytest.raises(ValueError):
        oracle_equal(q * q * q, q, max_test_degree=1)


def test_verdict_matches_normal_form_equality():
    rng = random.Random(42)
    for _ in range(100):
        words = [
            Word.of(*(rng.choice((Q, P)) for _ in range(rng.randint(0, 8))))
            for _ in range(4)
        ]
        a = FreePolynomial((w, ONE) for w in words[:2])
        b = normal_order(a) if rng.random() < 0.5 else FreePolynomial(
            (w, ONE) for w in words[2:]
        )
        assert oracle_equal(a, b) == (normal_order(a) == normal_order(b))
