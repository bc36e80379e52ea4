"""Concrete elements and element families, plus the pairwise separation harness.

Families:

* ``counterexample`` -- in G^1 but outside the Hawaiian earring group
* ``intro-trivial``  -- x1 x2^-1 (x3 x4 ...) x1 x2^-1 (... x4^-1 x3^-1), in the kernel
* ``intro-essential`` -- x1 x2^-1 x3 x4^-1 ..., not in the kernel
* ``cor1`` -- x1 x2^-1 w x1 x2^-1 w^-1 for w over x3, x4, ...
* ``cor2`` -- the word x_{tau(1)} x_{tau(2)} ... for a block-swap permutation tau
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .archipelago import substitute_collapse
from .errors import IndexRangeError, PreconditionError
from .free_word import ReducedWord, word
from .transfinite import (
    Finite,
    InverseElement,
    LetterStream,
    LevelRule,
    ProductElement,
    Stream,
    TransfiniteElement,
    counterexample_element,
)

__all__ = [
    "OddChoice",
    "SupportedPermutation",
    "tau_of",
    "window_permutation",
    "permutation_element",
    "ascending_stream",
    "cor1_element",
    "intro_trivial_element",
    "intro_essential_element",
    "inequivalent_choices",
    "PairRecord",
    "HarnessReport",
    "distinctness_harness",
    "FAMILY_NAMES",
    "build_family",
]


@dataclass(frozen=True)
class OddChoice:
    """A function from the odd positive integers to {0, 1}."""

    rule: Callable[[int], int]
    label: str = "rule"

    def __call__(self, k: int) -> int:
        if k < 1 or k % 2 == 0:
            raise PreconditionError(f"OddChoice is defined on odd positive integers, got {k}")
        return 1 if self.rule(k) else 0

    @classmethod
    def constant(cls, value: int) -> OddChoice:
        return cls(lambda k: value, label=f"const{value}")

    @classmethod
    def from_support(cls, support: Iterable[int], default: int = 0) -> OddChoice:
        """``default`` everywhere except on the finite set ``support``."""
        s = frozenset(support)
        if any(k < 1 or k % 2 == 0 for k in s):
            raise PreconditionError("support must consist of odd positive integers")
        return cls(lambda k: (1 - default) if k in s else default, label=f"support{sorted(s)}/{default}")

    @classmethod
    def periodic(cls, bits: Sequence[int]) -> OddChoice:
        """f(2j-1) = bits[(j-1) mod len(bits)]."""
        pattern = tuple(1 if b else 0 for b in bits)
        if not pattern:
            raise PreconditionError("periodic pattern must be nonempty")
        return cls(lambda k: pattern[(k // 2) % len(pattern)], label="periodic:" + "".join(map(str, pattern)))


@dataclass(frozen=True)
class SupportedPermutation:
    """A permutation of positive integers, position k -> tau(k), with a horizon.

    ``horizon(n)`` is a position beyond which every image exceeds n.
    """

    rule: Callable[[int], int]
    horizon: Callable[[int], int]
    label: str = "tau"

    def __call__(self, k: int) -> int:
        return self.rule(k)

    def verify(self, upto: int, window: int = 1000) -> str | None:
        """Spot-check injectivity on 1..upto and the horizon up to level upto."""
        images = [self.rule(k) for k in range(1, upto + 1)]
        if len(set(images)) != len(images):
            return f"not injective on 1..{upto}"
        for n in range(1, upto + 1):
            p = self.horizon(n)
            for k in range(p + 1, p + window + 1):
                if self.rule(k) <= n:
                    return f"horizon({n})={p} but tau({k})={self.rule(k)}"
        return None


def tau_of(f: OddChoice) -> SupportedPermutation:
    """Fix or swap each block {2m-1, 2m} according to f(2m-1)."""

    def rule(k: int) -> int:
        if k % 2:
            return k + 1 if f(k) else k
        return k - 1 if f(k - 1) else k

    return SupportedPermutation(rule, lambda n: n + 1, label=f"tau[{f.label}]")


def window_permutation(images: Sequence[int], offset: int = 0) -> SupportedPermutation:
    """Positions 1..m go to ``images`` (a permutation of offset+1..offset+m); k > m goes to k+offset."""
    m = len(images)
    if sorted(images) != list(range(offset + 1, offset + m + 1)):
        raise PreconditionError(f"images must permute {offset + 1}..{offset + m}")
    table = tuple(images)

    def rule(k: int) -> int:
        return table[k - 1] if k <= m else k + offset

    return SupportedPermutation(rule, lambda n: max(m, n - offset), label=f"window{list(table)}+{offset}")


def permutation_element(tau: SupportedPermutation) -> TransfiniteElement:
    """The positive word x_{tau(1)} x_{tau(2)} ...; each index occurs at most once."""

    def multiplicity(i: int) -> int:
        return int(any(tau(k) == i for k in range(1, tau.horizon(i) + 1)))

    return Stream(LetterStream(tau.rule, tau.horizon), multiplicity=multiplicity, name=tau.label)


def ascending_stream(start: int = 3) -> TransfiniteElement:
    """x_start x_{start+1} x_{start+2} ..."""
    return Stream(
        LetterStream(lambda k: k + start - 1, lambda n: max(n - start + 1, 0)),
        multiplicity=lambda i: 1 if i >= start else 0,
        name=f"ascending{start}",
    )


def _guard_min_index(w: TransfiniteElement, lowest: int) -> TransfiniteElement:
    def rule(n: int) -> ReducedWord:
        p = w.projection_at(n)
        if any(abs(s) < lowest for s in p.syms):
            raise IndexRangeError(f"level {n} of {w!r} uses an index below {lowest}", level=n)
        return p

    return LevelRule(rule, multiplicity=w.multiplicity, name=repr(w))


_X1_X2INV = word(1, -2)


def cor1_element(w: TransfiniteElement) -> TransfiniteElement:
    """x1 x2^-1 w x1 x2^-1 w^-1; w may only use x3, x4, ... (checked level by level)."""
    g = _guard_min_index(w, 3)
    return ProductElement((Finite(_X1_X2INV), g, Finite(_X1_X2INV), InverseElement(g)))


def intro_trivial_element() -> TransfiniteElement:
    return cor1_element(ascending_stream(3))


def intro_essential_element() -> TransfiniteElement:
    return Stream(
        LetterStream(lambda k: k if k % 2 else -k, lambda n: n),
        multiplicity=lambda i: 1,
        name="essential",
    )


def inequivalent_choices(count: int, period: int = 20, seed: int = 0) -> list[OddChoice]:
    """``count`` periodic choices with pairwise distinct patterns of the given period.

    Distinct periodic patterns disagree on infinitely many odds, so the choices
    lie in pairwise distinct "agree except on a finite set" classes. Any
    ``period`` consecutive blocks already show the disagreement.
    """
    if count > 2**period:
        raise PreconditionError(f"only {2**period} patterns of period {period}")
    rng = random.Random(seed)
    codes = rng.sample(range(2**period), count)
    return [OddChoice.periodic([(c >> b) & 1 for b in range(period)]) for c in codes]


@dataclass(frozen=True)
class PairRecord:
    """Separation of elements ``a`` and ``b``: ``levels[N-1]`` is the first
    level n with q_N(a b^-1) nontrivial at n, or ``None`` if none up to depth."""

    a: int
    b: int
    levels: tuple[int | None, ...]

    @property
    def separated(self) -> bool:
        return all(lv is not None for lv in self.levels)

    def unseparated_thresholds(self) -> list[int]:
        return [N for N, lv in enumerate(self.levels, start=1) if lv is None]


@dataclass(frozen=True)
class HarnessReport:
    size: int
    N_max: int
    depth: int
    pairs: tuple[PairRecord, ...]

    @property
    def unseparated(self) -> list[PairRecord]:
        return [p for p in self.pairs if not p.separated]

    @property
    def max_level(self) -> int:
        return max((lv for p in self.pairs for lv in p.levels if lv is not None), default=0)


def distinctness_harness(
    elements: Sequence[TransfiniteElement],
    N_max: int,
    depth: int,
    pairs: Iterable[tuple[int, int]] | None = None,
) -> HarnessReport:
    """Look for q_N-separation of every pair (default: all i < j) for N = 1..N_max.

    q_N(a b^-1) at level n is trivial exactly when the collapsed level-n words
    of a and b coincide, so each element's collapsed words are computed once
    and compared.
    """
    if not elements:
        raise PreconditionError("distinctness_harness needs at least one element")
    if not 1 <= N_max <= depth:
        raise PreconditionError(f"need 1 <= N_max <= depth, got N_max={N_max}, depth={depth}")
    cache: dict[tuple[int, int, int], tuple[int, ...]] = {}

    def image(idx: int, N: int, n: int) -> tuple[int, ...]:
        key = (idx, N, n)
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = substitute_collapse(elements[idx].projection_at(n), N).syms
        return hit

    if pairs is None:
        pairs = ((i, j) for i in range(len(elements)) for j in range(i + 1, len(elements)))
    records = []
    for i, j in pairs:
        levels: list[int | None] = []
        for N in range(1, N_max + 1):
            found = None
            for n in range(N, depth + 1):
                if image(i, N, n) != image(j, N, n):
                    found = n
                    break
            levels.append(found)
        records.append(PairRecord(i, j, tuple(levels)))
    return HarnessReport(len(elements), N_max, depth, tuple(records))


FAMILY_NAMES = ("counterexample", "intro-trivial", "intro-essential", "cor1", "cor2")


def build_family(
    name: str,
    w: TransfiniteElement | None = None,
    choice: OddChoice | None = None,
) -> TransfiniteElement:
    """Family element by name. ``cor1`` defaults to w = x3 x4 ..., ``cor2`` to f = 0."""
    if name == "counterexample":
        return counterexample_element()
    if name == "intro-trivial":
        return intro_trivial_element()
    if name == "intro-essential":
        return intro_essential_element()
    if name == "cor1":
        return cor1_element(ascending_stream(3) if w is None else w)
    if name == "cor2":
        return permutation_element(tau_of(OddChoice.constant(0) if choice is None else choice))
    raise PreconditionError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")
