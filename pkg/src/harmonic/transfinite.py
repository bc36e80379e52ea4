"""Lazily projected elements of the inverse limit G^1.

An element is known only through its level projections ``projection_at(n)``,
the reduced word w_n on x_1..x_n of its canonical sequence. Each element also
carries declared letter multiplicities; a finite multiplicity for every index
is what separates Hawaiian earring group elements from the rest of G^1.
"""

from __future__ import annotations

import enum
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Iterable, Union

from .errors import IndexRangeError, MultiplicityViolation, PreconditionError
from .free_word import EMPTY, Letter, RawWord, ReducedWord, invert, multiply, occurrence_counts, reduce
from .inverse_limit import TruncatedSequence, check_compatibility, delete_above

__all__ = [
    "Bound",
    "Multiplicity",
    "LetterStream",
    "TransfiniteElement",
    "Finite",
    "Stream",
    "LevelRule",
    "ProductElement",
    "InverseElement",
    "product",
    "inverse",
    "projection_at",
    "to_truncated",
    "Member",
    "NotMember",
    "MembershipUnknown",
    "HEClassification",
    "classify_HE",
    "counterexample_element",
]


class Bound(enum.Enum):
    UNBOUNDED = "unbounded"
    UNKNOWN = "unknown"


Multiplicity = Union[int, Bound]


def _symbol(item: Letter | int) -> int:
    return item.symbol if isinstance(item, Letter) else item


@dataclass(frozen=True)
class LetterStream:
    """An infinite word given by a letter rule and a horizon.

    ``letter_at(k)`` is the k-th letter (k >= 1). ``horizon(n)`` bounds the
    positions that can carry an index <= n: every position past it has a
    larger index, so level-n projections are finite.
    """

    letter_at: Callable[[int], Letter | int]
    horizon: Callable[[int], int]

    def symbols(self, stop: int) -> list[int]:
        return [_symbol(self.letter_at(k)) for k in range(1, stop + 1)]

    def verify_horizon(self, max_level: int, window: int = 1000) -> tuple[int, int] | None:
        """Spot-check the horizon guarantee for levels 1..max_level.

        Returns the first offending ``(level, position)`` or ``None``.
        """
        prev = 0
        for n in range(1, max_level + 1):
            p = self.horizon(n)
            if p < prev:
                return (n, p)
            prev = p
            for k in range(p + 1, p + window + 1):
                if abs(_symbol(self.letter_at(k))) <= n:
                    return (n, k)
        return None


class TransfiniteElement(ABC):
    """Base class; projections are memoized per level, thread-safely."""

    def __init__(self) -> None:
        self._cache: dict[int, ReducedWord] = {}
        self._lock = threading.Lock()

    def projection_at(self, n: int) -> ReducedWord:
        if n < 1:
            raise PreconditionError(f"level must be >= 1, got {n}")
        with self._lock:
            hit = self._cache.get(n)
        if hit is not None:
            return hit
        w = self._project(n)
        with self._lock:
            return self._cache.setdefault(n, w)

    @abstractmethod
    def _project(self, n: int) -> ReducedWord: ...

    @abstractmethod
    def multiplicity(self, i: int) -> Multiplicity:
        """Declared bound on occurrences of x_i over all levels."""

    def __mul__(self, other: TransfiniteElement) -> TransfiniteElement:
        if not isinstance(other, TransfiniteElement):
            return NotImplemented
        return ProductElement((self, other))

    def __invert__(self) -> TransfiniteElement:
        return InverseElement(self)


class Finite(TransfiniteElement):
    def __init__(self, w: ReducedWord | RawWord) -> None:
        super().__init__()
        self.word = reduce(w)

    def _project(self, n: int) -> ReducedWord:
        return delete_above(self.word, n)

    def multiplicity(self, i: int) -> int:
        return occurrence_counts(self.word)[i]

    def __repr__(self) -> str:
        return f"Finite({str(self.word)!r})"


class Stream(TransfiniteElement):
    def __init__(
        self,
        stream: LetterStream,
        multiplicity: Callable[[int], Multiplicity] | None = None,
        name: str = "stream",
    ) -> None:
        super().__init__()
        self.stream = stream
        self._multiplicity = multiplicity
        self.name = name
        self._prefix: list[int] = []

    def _letters(self, stop: int) -> list[int]:
        with self._lock:
            have = len(self._prefix)
        if have < stop:
            more = [_symbol(self.stream.letter_at(k)) for k in range(have + 1, stop + 1)]
            with self._lock:
                if len(self._prefix) == have:
                    self._prefix.extend(more)
        with self._lock:
            return self._prefix[:stop]

    def _project(self, n: int) -> ReducedWord:
        return reduce(s for s in self._letters(self.stream.horizon(n)) if -n <= s <= n)

    def multiplicity(self, i: int) -> Multiplicity:
        return Bound.UNKNOWN if self._multiplicity is None else self._multiplicity(i)

    def __repr__(self) -> str:
        return f"Stream({self.name})"


class LevelRule(TransfiniteElement):
    """Element given directly by its canonical sequence ``n -> w_n``."""

    def __init__(
        self,
        rule: Callable[[int], ReducedWord | RawWord],
        multiplicity: Callable[[int], Multiplicity] | None = None,
        name: str = "rule",
    ) -> None:
        super().__init__()
        self.rule = rule
        self._multiplicity = multiplicity
        self.name = name

    def _project(self, n: int) -> ReducedWord:
        w = reduce(self.rule(n))
        bad = [abs(s) for s in w.syms if abs(s) > n]
        if bad:
            raise IndexRangeError(f"{self.name}: level {n} produced x{max(bad)}", level=n)
        return w

    def multiplicity(self, i: int) -> Multiplicity:
        return Bound.UNKNOWN if self._multiplicity is None else self._multiplicity(i)

    def __repr__(self) -> str:
        return f"LevelRule({self.name})"


class ProductElement(TransfiniteElement):
    def __init__(self, factors: Iterable[TransfiniteElement]) -> None:
        super().__init__()
        self.factors = tuple(factors)

    def _project(self, n: int) -> ReducedWord:
        out = EMPTY
        for f in self.factors:
            out = multiply(out, f.projection_at(n))
        return out

    def multiplicity(self, i: int) -> Multiplicity:
        # one unbounded factor among finite ones stays unbounded (cancellation
        # removes at most the other factors' letters); two can cancel each other
        total, unbounded = 0, 0
        for f in self.factors:
            m = f.multiplicity(i)
            if m is Bound.UNKNOWN:
                return Bound.UNKNOWN
            if m is Bound.UNBOUNDED:
                unbounded += 1
            else:
                total += m
        if unbounded == 1:
            return Bound.UNBOUNDED
        if unbounded > 1:
            return Bound.UNKNOWN
        return total

    def __repr__(self) -> str:
        return "Product(" + ", ".join(map(repr, self.factors)) + ")"


class InverseElement(TransfiniteElement):
    def __init__(self, element: TransfiniteElement) -> None:
        super().__init__()
        self.element = element

    def _project(self, n: int) -> ReducedWord:
        return invert(self.element.projection_at(n))

    def multiplicity(self, i: int) -> Multiplicity:
        return self.element.multiplicity(i)

    def __repr__(self) -> str:
        return f"Inverse({self.element!r})"


def product(*factors: TransfiniteElement) -> TransfiniteElement:
    return ProductElement(factors)


def inverse(a: TransfiniteElement) -> TransfiniteElement:
    return InverseElement(a)


def projection_at(e: TransfiniteElement, n: int) -> ReducedWord:
    return e.projection_at(n)


def to_truncated(e: TransfiniteElement, depth: int, check: bool = True) -> TruncatedSequence:
    """Levels 1..depth of ``e`` as a truncated canonical sequence.

    With ``check`` the window is verified to be bonding-compatible.
    """
    if depth < 1:
        raise PreconditionError("depth must be >= 1")
    seq = TruncatedSequence(1, depth, tuple(e.projection_at(n) for n in range(1, depth + 1)))
    if check:
        v = check_compatibility(seq)
        if v is not None:
            raise PreconditionError(
                f"{e!r} is not bonding-compatible at level {v.level}: expected {v.expected}, found {v.found}"
            )
    return seq


@dataclass(frozen=True)
class Member:
    bounds: dict[int, int]
    verified_depth: int
    kind: str = field(default="Member", init=False, repr=False)


@dataclass(frozen=True)
class NotMember:
    witness_index: int
    growth_samples: tuple[tuple[int, int], ...]
    kind: str = field(default="NotMember", init=False, repr=False)

    def __post_init__(self) -> None:
        counts = [c for _, c in self.growth_samples]
        if len(counts) < 3 or any(b <= a for a, b in zip(counts, counts[1:])):
            raise ValueError("growth samples must strictly increase over at least 3 levels")


@dataclass(frozen=True)
class MembershipUnknown:
    verified_depth: int
    kind: str = field(default="Unknown", init=False, repr=False)


HEClassification = Union[Member, NotMember, MembershipUnknown]


def classify_HE(e: TransfiniteElement, depth: int) -> HEClassification:
    """Evidence for whether ``e`` lies in the Hawaiian earring group.

    Finite declared multiplicities for every index <= depth give ``Member``,
    after checking them against the projections at levels 1..depth. Otherwise
    an index whose count strictly increases at every level from its first
    appearance up to ``depth`` (at least 3 levels) gives ``NotMember``.
    """
    if depth < 2:
        raise PreconditionError("classification needs depth >= 2")
    counts = {n: occurrence_counts(e.projection_at(n)) for n in range(1, depth + 1)}
    declared = {i: e.multiplicity(i) for i in range(1, depth + 1)}

    if all(isinstance(m, int) for m in declared.values()):
        for n, cnt in counts.items():
            for i, c in cnt.items():
                if c > declared[i]:
                    raise MultiplicityViolation(f"x{i} occurs {c} times at level {n}, declared bound {declared[i]}")
        return Member(dict(declared), depth)  # type: ignore[arg-type]

    for i in range(1, depth + 1):
        series = [(n, counts[n][i]) for n in range(i, depth + 1)]
        series = series[next((k for k, (_, c) in enumerate(series) if c > 0), len(series)) :]
        if len(series) >= 3 and all(b[1] > a[1] for a, b in zip(series, series[1:])):
            return NotMember(i, tuple(series))
    return MembershipUnknown(depth)


def _counterexample_rule(n: int) -> ReducedWord:
    syms: list[int] = []
    for j in range(2, n + 1):
        syms += [1, j, -1, -j]
    return reduce(syms)


def counterexample_element() -> TransfiniteElement:
    """The canonical sequence ([x1,x2][x1,x3]...[x1,x_n])_n, in G^1 but not in G_1."""
    return LevelRule(
        _counterexample_rule,
        multiplicity=lambda i: Bound.UNBOUNDED if i == 1 else 2,
        name="counterexample",
    )
