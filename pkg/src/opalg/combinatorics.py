"""Deterministic enumeration of the distinct arrangements of a multiset."""

from __future__ import annotations

from typing import Iterator, Sequence, TypeVar

T = TypeVar("T")


def multiset_permutations(items: Sequence[T]) -> Iterator[tuple[T, ...]]:
    """Yield every distinct arrangement of ``items`` exactly once.

    Arrangements are produced in lexicographic order with respect to the
    natural order of the elements, via the classic next-permutation step.
    The number of results is the multinomial ``len(items)! / prod(k_v!)``
    over the multiplicities ``k_v``.
    """
    current = sorted(items)
    n = len(current)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(current)
        # Rightmost ascent; none means current is the last arrangement.
        i = n - 2
        while i >= 0 and current[i] >= current[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while current[j] <= current[i]:
            j -= 1
        current[i], current[j] = current[j], current[i]
        current[i + 1 :] = reversed(current[i + 1 :])
