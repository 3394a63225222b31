"""Increasing index tuples and permutation signs."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence


def sort_with_sign(idx: Sequence[int]) -> tuple[int, tuple]:
    """Sort ``idx`` and return ``(sign, sorted_tuple)``; sign is 0 on repeats."""
    arr = list(idx)
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(arr)):
        j = i
        while j > 0 and arr[j - 1] > arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and arr[j - 1] == arr[j]:
            return 0, ()
    return sign, tuple(arr)


@lru_cache(maxsize=None)
def increasing_tuples(d: int, k: int) -> tuple:
    """All strictly increasing ``k``-tuples from ``range(d)``, lexicographic."""
    if k < 0:
        return ()
    return tuple(combinations(range(d), k))


@lru_cache(maxsize=None)
def tuple_index(d: int, k: int) -> dict:
    return {t: i for i, t in enumerate(increasing_tuples(d, k))}


def alternating_terms(xs: Sequence[Sequence]) -> dict:
    """Expand ``x_1 ^ ... ^ x_k`` over increasing index tuples.

    Returns ``{increasing tuple: coefficient}`` with zero terms dropped.
    """
    supports = [[(i, a) for i, a in enumerate(x) if a] for x in xs]
    out: dict = {}
    for combo in product(*supports):
        sign, key = sort_with_sign([i for i, _ in combo])
        if not sign:
            continue
        c = Fraction(sign)
        for _, a in combo:
            c *= a
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def replace_at(t: tuple, pos: int, value: int) -> tuple:
    return t[:pos] + (value,) + t[pos + 1:]
