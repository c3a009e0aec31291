"""Independent exactness oracle: the polynomial Schrodinger representation.

The pure q/p algebra acts faithfully on polynomials in a formal variable x
by ``q = multiply by x`` and ``p = -i*hbar * d/dx``, with hbar kept formal
and all coefficients exact.  This gives a second, structurally unrelated
route to operator equality: two operators are compared by applying them to
the monomials ``x**k`` instead of by rewriting.

Why a finite test degree suffices: write an operator in normal form as a
sum of ``c * hbar**k * q**a p**b``.  Acting on ``x**j`` (for ``j >= b``)
contributes ``c * (-i*hbar)**b * j!/(j-b)! * x**(j + a - b)``.  Group terms
by the offset ``a - b``: within one offset, the contribution to the image
of ``x**j`` is a linear combination of the falling factorials
``j!/(j-b)!``, and the matrix of falling factorials over ``j = 0..D`` is
triangular with nonzero diagonal once ``D`` reaches the largest ``b``.  So
the images of ``x**0 .. x**D`` determine every coefficient with p-degree at
most ``D``, and testing up to the total degree of the operands decides
equality exactly.  (State words have no faithful finite action here and are
rejected; identities involving them are settled by the free normal form.)
"""

from __future__ import annotations

from .core import FreePolynomial, Letter, STATE_LETTERS, Word
from .errors import UnsupportedFragmentError
from .scalars import HbarScalar, ONE
from .terms import GradedTerms

# p acts as -i*hbar * d/dx
_P_FACTOR = HbarScalar.of(0, -1, 1)


class TestFunction(GradedTerms):
    """An exact polynomial in x, keyed by degree, with graded coefficients."""

    __test__ = False  # not a pytest class, despite the name
    __slots__ = ()

    @classmethod
    def _validate_pair(cls, key: int, scalar: HbarScalar) -> None:
        if not isinstance(key, int) or key < 0:
            raise TypeError("TestFunction keys are non-negative integer degrees")

    @classmethod
    def x_power(cls, degree: int, coeff: HbarScalar = ONE) -> TestFunction:
        return cls([(degree, coeff)])

    def times_x(self) -> TestFunction:
        return TestFunction((degree + 1, c) for degree, c in self.items())

    def differentiate(self) -> TestFunction:
        return TestFunction(
            (degree - 1, c * degree) for degree, c in self.items() if degree > 0
        )


def _apply_word(word: Word, f: TestFunction) -> TestFunction:
    for letter in reversed(word.letters):
        if letter is Letter.Q:
            f = f.times_x()
        elif letter is Letter.P:
            f = f.differentiate().scale(_P_FACTOR)
        else:
            raise UnsupportedFragmentError(
                "the polynomial representation acts on q/p words only"
            )
    return f


def apply_operator(op: FreePolynomial, f: TestFunction) -> TestFunction:
    """Act with ``op`` on ``f``, letters applied right to left; exact and linear."""
    return TestFunction(
        (degree, c * coeff)
        for word, coeff in op.items()
        for degree, c in _apply_word(word, f).items()
    )


def oracle_equal(
    a: FreePolynomial, b: FreePolynomial, max_test_degree: int | None = None
) -> bool:
    """Decide operator equality by action on ``x**k`` for ``k <= max_test_degree``.

    The default bound is one more than the larger total degree of the two
    operands, which per the module docstring is already past the faithful
    threshold.  An explicit bound below the operands' degree is rejected.
    """
    for poly in (a, b):
        for word, _ in poly.items():
            if any(letter in STATE_LETTERS for letter in word.letters):
                raise UnsupportedFragmentError(
                    "the polynomial representation acts on q/p words only"
                )
    needed = max(a.max_word_length, b.max_word_length)
    if max_test_degree is None:
        max_test_degree = needed + 1
    elif max_test_degree < needed:
        raise ValueError(
            f"max_test_degree={max_test_degree} is below the operand degree {needed}"
        )
    return all(
        apply_operator(a, TestFunction.x_power(k))
        == apply_operator(b, TestFunction.x_power(k))
        for k in range(max_test_degree + 1)
    )
