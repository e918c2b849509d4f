"""Closed-form decompositions of wedge powers of wedge-square and sym-square.

The two families are enumerated directly in Frobenius coordinates: the
constituents of the j-th wedge of the wedge square are exactly the weight-2j
shapes (m_1..m_r | m_1+1..m_r+1) with strictly decreasing arms, and the
sym-square family consists of their conjugates.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .partitions import FrobeniusForm, conjugate, from_frobenius

WEDGE2 = "wedge2"
SYM2 = "sym2"


def _strict_arm_sequences(j: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing arm tuples (m_1 > ... > m_r >= 0) with sum(m_i + 1) = j."""

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining - 1), -1, -1):
            for rest in rec(remaining - first - 1, first - 1):
                yield (first,) + rest

    yield from rec(j, j)


@lru_cache(maxsize=None)
def _wedge_of_wedge2_all(j: int) -> tuple[tuple[int, ...], ...]:
    if j == 0:
        return ((),)
    shapes = []
    for arms in _strict_arm_sequences(j):
        legs = tuple(m + 1 for m in arms)
        shapes.append(from_frobenius(FrobeniusForm(arms, legs)))
    return tuple(sorted(shapes))


def wedge_of_wedge2(j: int, n: int | None = None) -> list[tuple[int, ...]]:
    """Schur constituents of the j-th wedge power of wedge^2 of an n-space.

    All constituents are multiplicity-free.  Length filtering happens last so
    the n-independent list is cached across callers; pass n=None for the
    unfiltered list.
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    shapes = _wedge_of_wedge2_all(j)
    if n is None:
        return list(shapes)
    return [s for s in shapes if len(s) <= n]


def wedge_of_sym2(j: int, n: int | None = None) -> list[tuple[int, ...]]:
    """Schur constituents of the j-th wedge power of the symmetric square."""
    if j < 0:
        raise ValueError("j must be non-negative")
    shapes = sorted(conjugate(s) for s in _wedge_of_wedge2_all(j))
    if n is None:
        return list(shapes)
    return [s for s in shapes if len(s) <= n]


def leading_sum_bound(kind: str, j: int, s: int) -> int:
    """Upper bound for the sum of the first s rows of any constituent shape."""
    if s < 0:
        raise ValueError("s must be non-negative")
    if kind == WEDGE2:
        return j + s * (s - 1) // 2
    if kind == SYM2:
        return j + s * (s + 1) // 2
    raise ValueError(f"unknown kind {kind!r}")


def graded_entry_bound(kind: str, j: int, s: int) -> int:
    """Bound for any s entries drawn across a graded-quotient block tuple.

    Numerically identical to leading_sum_bound, but it applies to arbitrary
    entries of the per-block partitions produced by filtration_quotients, not
    just leading rows of one shape.
    """
    return leading_sum_bound(kind, j, s)
