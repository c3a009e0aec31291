"""The symmetrized (Weyl) basis and the ordering superoperator.

The symmetrizer is the linear map sending any word to the average of all
distinct arrangements of its letters.  Only the letter counts matter, so
its image is spanned by basis monomials indexed by a q-count, a p-count,
and an optional state-derivative letter.  Terms whose coefficient carries a
positive hbar grade are annihilated: hbar only ever enters through the
commutation relation, so annihilating it is exactly what makes the
symmetrizer well defined on rewriting-equivalent inputs.

The symmetric product on the basis adds exponents.  That fast path agrees
with the two-step definition (expand both factors, multiply freely, then
symmetrize); the test suite checks the agreement exhaustively rather than
assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinatorics import multiset_permutations
from .core import (
    DERIVATIVE_LETTERS,
    FreePolynomial,
    Letter,
    Word,
    normal_order,
)
from .errors import UnsupportedFragmentError
from .scalars import HbarScalar, ONE
from .terms import GradedTerms

_DERIV_RANK = {None: 0, Letter.DRHO_Q: 1, Letter.DRHO_P: 2}


@dataclass(frozen=True, slots=True)
class WeylMonomial:
    """The symmetrization of any word with ``n`` q's, ``m`` p's and at most
    one state-derivative letter."""

    n: int
    m: int
    deriv: Letter | None = None

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise TypeError("exponents must be integers")
        if self.n < 0 or self.m < 0:
            raise ValueError("exponents must be non-negative")
        if self.deriv is not None and self.deriv not in DERIVATIVE_LETTERS:
            raise ValueError("deriv must be None, DRHO_Q or DRHO_P")

    @property
    def degree(self) -> int:
        return self.n + self.m

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (self.n, self.m, _DERIV_RANK[self.deriv])

    def __str__(self) -> str:
        parts = []
        if self.n:
            parts.append("q" if self.n == 1 else f"q^{self.n}")
        if self.m:
            parts.append("p" if self.m == 1 else f"p^{self.m}")
        if self.deriv is not None:
            parts.append(self.deriv.symbol)
        return " o ".join(parts) if parts else "1"


class WeylPolynomial(GradedTerms):
    """A finite sum of Weyl basis monomials with exact graded coefficients."""

    __slots__ = ()

    @classmethod
    def _key_sort(cls, key: WeylMonomial):
        return key.sort_key

    @classmethod
    def _validate_pair(cls, key: WeylMonomial, scalar: HbarScalar) -> None:
        if not isinstance(key, WeylMonomial):
            raise TypeError("WeylPolynomial keys must be WeylMonomial values")

    @classmethod
    def zero(cls) -> WeylPolynomial:
        return cls()

    @classmethod
    def one(cls) -> WeylPolynomial:
        return cls.from_monomial(WeylMonomial(0, 0))

    @classmethod
    def from_monomial(cls, monomial: WeylMonomial, coeff: HbarScalar = ONE) -> WeylPolynomial:
        return cls([(monomial, coeff)])

    def __mul__(self, other):
        if isinstance(other, WeylPolynomial):
            return weyl_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


def _monomial_of_word(word: Word) -> WeylMonomial:
    n_q, n_p, n_rho, n_dq, n_dp = word.counts()
    if n_rho:
        raise UnsupportedFragmentError(
            "the symmetrizer is not defined on words containing the bare state symbol"
        )
    if n_dq + n_dp > 1:
        raise UnsupportedFragmentError(
            "the symmetrizer supports at most one state-derivative letter per word"
        )
    deriv = Letter.DRHO_Q if n_dq else (Letter.DRHO_P if n_dp else None)
    return WeylMonomial(n_q, n_p, deriv)


def symmetrize(x: FreePolynomial) -> WeylPolynomial:
    """Apply the ordering superoperator term by term.

    A term of hbar grade >= 1 maps to zero; a grade-0 term maps to the basis
    monomial of its letter counts, the source ordering being irrelevant.
    Negative grades never reach the symmetrizer in a well-formed pipeline
    (bracket prefactors stay outside it), so they are rejected loudly.
    """
    pairs = []
    for word, coeff in x.items():
        if coeff.hbar_power < 0:
            raise UnsupportedFragmentError(
                "the symmetrizer is not defined on negative hbar grades"
            )
        if coeff.hbar_power >= 1:
            continue
        pairs.append((_monomial_of_word(word), coeff))
    return WeylPolynomial(pairs)


@lru_cache(maxsize=None)
def expand(w: WeylMonomial) -> FreePolynomial:
    """The symmetric average as an explicit free polynomial.

    All distinct arrangements of ``n`` q's, ``m`` p's and the optional
    derivative letter, in lexicographic order, each weighted by
    ``n! * m! / (n + m + e)!`` where ``e`` counts the derivative letter.
    """
    letters: list[Letter] = [Letter.Q] * w.n + [Letter.P] * w.m
    extra = 0
    if w.deriv is not None:
        letters.append(w.deriv)
        extra = 1
    coeff = ONE * Fraction(
        factorial(w.n) * factorial(w.m), factorial(w.n + w.m + extra)
    )
    return FreePolynomial(
        (Word(arrangement), coeff) for arrangement in multiset_permutations(letters)
    )


def expand_polynomial(x: WeylPolynomial) -> FreePolynomial:
    """Linear extension of :func:`expand` to whole Weyl polynomials."""
    return FreePolynomial(
        (word, c * coeff)
        for monomial, coeff in x.items()
        for word, c in expand(monomial).items()
    )


def weyl_product(x: WeylPolynomial, y: WeylPolynomial) -> WeylPolynomial:
    """The symmetric product: bilinear, with exponents adding per term pair.

    At most one factor of each term pair may carry a state-derivative
    letter; two derivative letters would leave the supported fragment.
    """
    pairs = []
    for ma, ca in x.items():
        for mb, cb in y.items():
            if ma.deriv is not None and mb.deriv is not None:
                raise UnsupportedFragmentError(
                    "cannot multiply two terms that both carry a state-derivative letter"
                )
            deriv = ma.deriv if ma.deriv is not None else mb.deriv
            pairs.append((WeylMonomial(ma.n + mb.n, ma.m + mb.m, deriv), ca * cb))
    return WeylPolynomial(pairs)


def weyl_derivative(x: WeylPolynomial, wrt: Letter) -> WeylPolynomial:
    """Partial derivative in the Weyl basis: the symmetrization is preserved,
    so ``q**n o p**m`` maps to ``n * q**(n-1) o p**m`` and symmetrically."""
    if wrt not in (Letter.Q, Letter.P):
        raise ValueError("partial derivatives are taken with respect to Q or P")
    pairs = []
    for monomial, coeff in x.items():
        if wrt is Letter.Q and monomial.n > 0:
            pairs.append(
                (WeylMonomial(monomial.n - 1, monomial.m, monomial.deriv), coeff * monomial.n)
            )
        elif wrt is Letter.P and monomial.m > 0:
            pairs.append(
                (WeylMonomial(monomial.n, monomial.m - 1, monomial.deriv), coeff * monomial.m)
            )
    return WeylPolynomial(pairs)


def normal_form_of_weyl(w: WeylMonomial) -> FreePolynomial:
    """Expansion followed by normal ordering; the printable canonical form."""
    return normal_order(expand(w))
