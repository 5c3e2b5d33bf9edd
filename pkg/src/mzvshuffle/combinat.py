"""Binomials with the vanishing convention, and composition enumeration."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever k < 0 or k > n.

    The convention covers negative n as well (then k < 0 or k > n always
    holds), which the closed-form expansions rely on.
    """
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def vandermonde_check(k: int, l: int, n: int, cap: int = 10_000) -> bool:
    """True iff sum_i binom(k,i) binom(l,n-i) equals binom(k+l,n)."""
    for value in (k, l, n):
        if not 0 <= value <= cap:
            raise ValueError(f"arguments must lie in [0, {cap}], got {(k, l, n)}")
    return sum(binom(k, i) * binom(l, n - i) for i in range(n + 1)) == binom(k + l, n)


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if total < 0 or parts < 0:
        raise ValueError("total and parts must be nonnegative")
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for cut in cuts:
            out.append(cut - prev - 1)
            prev = cut
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` positive integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts:
        return
    for weak in weak_compositions(total - parts, parts):
        yield tuple(w + 1 for w in weak)


@lru_cache(maxsize=None)
def weak_composition_list(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    return tuple(weak_compositions(total, parts))


@lru_cache(maxsize=None)
def composition_list(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    return tuple(compositions(total, parts))


def prefix_sums(seq) -> tuple[int, ...]:
    """(0, s1, s1+s2, ...): prefix_sums(seq)[i] is the sum of the first i items."""
    out = [0]
    acc = 0
    for value in seq:
        acc += value
        out.append(acc)
    return tuple(out)
