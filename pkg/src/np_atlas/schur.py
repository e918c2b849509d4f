"""Littlewood-Richardson coefficients and Schur-power combinatorics.

Two genuinely different algorithms live here on purpose: lr_coefficient
counts lattice skew tableaux directly, while schur_character sums over
semistandard tableaux and serves as an independent cross-check of the whole
tensor calculus.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple

from .partitions import conjugate, contains, normalize, pad, weight


class SchurSummand(NamedTuple):
    """One irreducible constituent with its multiplicity."""

    shape: tuple
    multiplicity: int


def partitions_of(n: int, max_part: int | None = None,
                  max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n subject to optional part/length caps."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(n, max_part, max_length)


def subpartitions_of(outer: tuple[int, ...], n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n contained in the diagram of outer."""
    outer = normalize(outer)

    def rec(idx, remaining, cap):
        if remaining == 0:
            yield ()
            return
        if idx >= len(outer):
            return
        top = min(cap, outer[idx], remaining)
        for first in range(top, 0, -1):
            for rest in rec(idx + 1, remaining - first, first):
                yield (first,) + rest

    yield from rec(0, n, n)


def _count_lr_tableaux(lam: tuple[int, ...], mu: tuple[int, ...],
                       nu: tuple[int, ...]) -> int:
    """Count LR skew tableaux of shape lam/mu and content nu.

    Cells are filled in reading order (top row to bottom, right to left
    within a row) so the lattice-word condition can be enforced on the fly.
    """
    rows = len(lam)
    mu_p = pad(mu, rows)
    cells = []
    for i in range(rows):
        for j in range(lam[i] - 1, mu_p[i] - 1, -1):
            cells.append((i, j))
    filling: dict[tuple[int, int], int] = {}
    content = list(nu) + [0]  # sentinel so v+1 lookups are safe
    counts = [0] * (len(nu) + 1)

    def rec(pos: int) -> int:
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        right = filling.get((i, j + 1))
        above = filling.get((i - 1, j)) if i > 0 and j >= mu_p[i - 1] else None
        total = 0
        for v in range(1, len(nu) + 1):
            if counts[v - 1] >= content[v - 1]:
                continue  # rows of the recording content filled in order
            if right is not None and v > right:
                continue
            if above is not None and v <= above:
                continue
            # lattice condition: prefix counts stay weakly decreasing in v
            if v > 1 and counts[v - 1] + 1 > counts[v - 2]:
                continue
            filling[(i, j)] = v
            counts[v - 1] += 1
            total += rec(pos + 1)
            counts[v - 1] -= 1
            del filling[(i, j)]
        return total

    return rec(0)


@lru_cache(maxsize=None)
def lr_coefficient(lam: tuple[int, ...], mu: tuple[int, ...],
                   nu: tuple[int, ...]) -> int:
    """Multiplicity of S^lam inside S^mu (x) S^nu."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if weight(lam) != weight(mu) + weight(nu):
        return 0
    if not contains(lam, mu) or not contains(lam, nu):
        return 0
    return _count_lr_tableaux(lam, mu, nu)


def tensor_decompose(mu: tuple[int, ...], nu: tuple[int, ...],
                     max_length: int) -> list[SchurSummand]:
    """Complete decomposition of S^mu (x) S^nu into Schur summands.

    Only shapes of length <= max_length are reported.
    """
    mu, nu = normalize(mu), normalize(nu)
    total = weight(mu) + weight(nu)
    out = []
    max_part = (mu[0] if mu else 0) + (nu[0] if nu else 0)
    for lam in partitions_of(total, max_part=max_part, max_length=max_length):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append(SchurSummand(lam, c))
    out.sort(key=lambda s: s.shape)
    return out


@lru_cache(maxsize=None)
def schur_character(lam: tuple[int, ...], m: int) -> dict[tuple[int, ...], int]:
    """The Schur polynomial s_lam(x_1..x_m) as {exponent vector: coefficient}.

    Independent oracle: direct sum over semistandard tableaux.  Returns the
    zero polynomial when lam has more than m rows.
    """
    lam = normalize(lam)
    if m < 1:
        raise ValueError("need at least one variable")
    if len(lam) > m:
        return {}
    poly: dict[tuple[int, ...], int] = {}
    rows = len(lam)
    tableau = [[0] * r for r in lam]

    def rec(i: int, j: int, expo: list[int]) -> None:
        if i == rows:
            key = tuple(expo)
            poly[key] = poly.get(key, 0) + 1
            return
        ni, nj = (i, j + 1) if j + 1 < lam[i] else (i + 1, 0)
        lo = tableau[i][j - 1] if j > 0 else 1
        for v in range(lo, m + 1):
            if i > 0 and j < lam[i - 1] and v <= tableau[i - 1][j]:
                continue
            tableau[i][j] = v
            expo[v - 1] += 1
            rec(ni, nj, expo)
            expo[v - 1] -= 1

    if rows:
        rec(0, 0, [0] * m)
    else:
        poly[(0,) * m] = 1
    return dict(poly)


def character_product(a: dict[tuple[int, ...], int],
                      b: dict[tuple[int, ...], int]) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _mult_in_product(target: tuple[int, ...], shapes: tuple[tuple[int, ...], ...]) -> int:
    """Multiplicity of S^target in the iterated product of the given shapes."""
    if not shapes:
        return 1 if target == () else 0
    # fold left-to-right, pruning intermediates that cannot grow into target
    current: dict[tuple[int, ...], int] = {shapes[0]: 1}
    if not contains(target, shapes[0]):
        return 0
    for nxt in shapes[1:]:
        grown: dict[tuple[int, ...], int] = {}
        for lam, mult in current.items():
            for summand in tensor_decompose(lam, nxt, max_length=len(target) or 1):
                if not contains(target, summand.shape):
                    continue
                grown[summand.shape] = grown.get(summand.shape, 0) \
                    + mult * summand.multiplicity
        current = grown
        if not current:
            return 0
    return current.get(target, 0)


def filtration_quotients(alpha: tuple[int, ...],
                         ranks: tuple[int, ...]) -> list[SchurSummand]:
    """Graded pieces of S^alpha of a bundle filtered with quotient ranks.

    Returns SchurSummand entries whose shape is a tuple of partitions, one
    per block, with the multiplicity of S^alpha in their tensor product.
    """
    alpha = normalize(alpha)
    ranks = tuple(ranks)
    if len(alpha) > sum(ranks):
        raise ValueError(f"partition {alpha} too long for total rank {sum(ranks)}")
    total = weight(alpha)
    out = []

    def shapes_of(w: int, r: int):
        return [()] if w == 0 else partitions_of(w, max_length=r)

    def rec(block: int, remaining: int, acc: tuple[tuple[int, ...], ...]) -> None:
        if block == len(ranks) - 1:
            for rho in shapes_of(remaining, ranks[block]):
                tup = acc + (rho,)
                mult = _mult_in_product(alpha, tup)
                if mult:
                    out.append(SchurSummand(tup, mult))
            return
        for w in range(remaining + 1):
            for rho in shapes_of(w, ranks[block]):
                rec(block + 1, remaining - w, acc + (rho,))

    if not ranks:
        if alpha == ():
            out.append(SchurSummand((), 1))
    else:
        rec(0, total, ())
    out.sort(key=lambda s: s.shape)
    return out
