"""Exception types shared across the package."""

from __future__ import annotations


class UnsupportedFragmentError(ValueError):
    """Raised when an operation is applied outside its supported operator fragment.

    Examples: adjoint of a word containing the state symbol, symmetrizing a
    word with two state-derivative letters, or a symmetric product in which
    both factors carry a state-derivative letter.
    """


class ParseError(ValueError):
    """Syntax, lexical, arity, or ambiguity error with source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class EvalError(ValueError):
    """Evaluation error for a well-formed expression, carrying the source span."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
