"""Brute-force reference computations, independent of the package code paths."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache


def _deletions(w: tuple[int, ...]):
    for k in range(len(w) - 1):
        if w[k] == -w[k + 1]:
            yield w[:k] + w[k + 2 :]


@lru_cache(maxsize=None)
def _normal_forms_cached(w: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    return _normal_forms(w)


def _normal_forms(w: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    succ = list(_deletions(w))
    if not succ:
        return frozenset([w])
    out: set[tuple[int, ...]] = set()
    for v in succ:
        out |= _normal_forms_cached(v) if len(v) <= 6 else _normal_forms(v)
    return frozenset(out)


def normal_forms(w) -> frozenset[tuple[int, ...]]:
    """Every irreducible word reachable by deleting cancelling pairs in any order."""
    return _normal_forms(tuple(w))


def all_raw_words(max_len: int, indices=(1, 2, 3)):
    symbols = [s * i for i in indices for s in (1, -1)]
    for n in range(max_len + 1):
        yield from itertools.product(symbols, repeat=n)


def naive_collapse(syms, N):
    """Collapse written literally: rewrite, then cancel by repeated scanning."""
    rewritten = [(N if s > 0 else -N) if abs(s) <= N else s for s in syms]
    return naive_reduce(rewritten)


def naive_reduce(syms) -> tuple[int, ...]:
    w = list(syms)
    changed = True
    while changed:
        changed = False
        for k in range(len(w) - 1):
            if w[k] == -w[k + 1]:
                del w[k : k + 2]
                changed = True
                break
    return tuple(w)


def random_raw(rng: random.Random, max_len: int, max_index: int) -> list[int]:
    n = rng.randint(0, max_len)
    return [rng.choice((1, -1)) * rng.randint(1, max_index) for _ in range(n)]


def random_reduced(rng: random.Random, max_len: int, max_index: int) -> tuple[int, ...]:
    """Random reduced word built letter by letter, never appending an inverse."""
    n = rng.randint(0, max_len)
    out: list[int] = []
    while len(out) < n:
        s = rng.choice((1, -1)) * rng.randint(1, max_index)
        if out and out[-1] == -s:
            continue
        out.append(s)
    return tuple(out)
