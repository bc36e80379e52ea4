"""Words in the free group on x_1, x_2, ...

A letter x_i^{+1} / x_i^{-1} is stored compactly as the signed integer
``+i`` / ``-i``; :class:`Letter` is the readable view of one such symbol.
Words are immutable; :class:`ReducedWord` always holds the freely reduced
normal form, the empty word being the identity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "Letter",
    "RawWord",
    "ReducedWord",
    "EMPTY",
    "reduce",
    "multiply",
    "invert",
    "occurrence_count",
    "occurrence_counts",
    "is_trivial",
    "max_index",
    "word",
]


@dataclass(frozen=True, slots=True)
class Letter:
    index: int
    sign: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"generator index must be a positive integer, got {self.index!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    @classmethod
    def from_symbol(cls, sym: int) -> Letter:
        return cls(abs(sym), 1 if sym > 0 else -1)

    @property
    def symbol(self) -> int:
        return self.sign * self.index

    def inverse(self) -> Letter:
        return Letter(self.index, -self.sign)

    def __str__(self) -> str:
        return f"x{self.index}" if self.sign == 1 else f"x{self.index}^-1"


LetterLike = Union[Letter, int]


def _symbols(letters: Iterable[LetterLike]) -> tuple[int, ...]:
    out = []
    for item in letters:
        if isinstance(item, Letter):
            out.append(item.symbol)
        elif isinstance(item, int) and not isinstance(item, bool) and item != 0:
            out.append(item)
        else:
            raise ValueError(f"not a letter: {item!r}")
    return tuple(out)


def _free_reduce(syms: Iterable[int]) -> tuple[int, ...]:
    # single left-to-right pass with a stack of surviving letters
    stack: list[int] = []
    push, pop = stack.append, stack.pop
    for s in syms:
        if stack and stack[-1] == -s:
            pop()
        else:
            push(s)
    return tuple(stack)


class _WordBase:
    __slots__ = ("syms", "_hash")

    syms: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.syms)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter.from_symbol(s) for s in self.syms)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(self)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.syms == other.syms  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        try:
            return self._hash
        except AttributeError:
            h = hash((type(self).__name__, self.syms))
            object.__setattr__(self, "_hash", h)
            return h

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __str__(self) -> str:
        if not self.syms:
            return "1"
        return " ".join(str(Letter.from_symbol(s)) for s in self.syms)


class RawWord(_WordBase):
    """A finite, possibly unreduced, sequence of letters."""

    __slots__ = ()

    def __init__(self, letters: Iterable[LetterLike] = ()) -> None:
        object.__setattr__(self, "syms", _symbols(letters))

    def __repr__(self) -> str:
        return f"RawWord({str(self)!r})"

    def __add__(self, other: RawWord) -> RawWord:
        if not isinstance(other, _WordBase):
            return NotImplemented
        return RawWord(self.syms + other.syms)


class ReducedWord(_WordBase):
    """A freely reduced word; construction rejects adjacent cancelling pairs.

    Supports ``*`` (product), ``** k`` (integer powers) and ``~`` (inverse).
    """

    __slots__ = ()

    def __init__(self, letters: Iterable[LetterLike] = ()) -> None:
        syms = _symbols(letters)
        for k in range(len(syms) - 1):
            if syms[k] == -syms[k + 1]:
                raise ValueError(f"word is not reduced: cancelling pair at position {k + 1}")
        object.__setattr__(self, "syms", syms)

    @classmethod
    def _trusted(cls, syms: tuple[int, ...]) -> ReducedWord:
        obj = object.__new__(cls)
        object.__setattr__(obj, "syms", syms)
        return obj

    def __repr__(self) -> str:
        return f"ReducedWord({str(self)!r})"

    def __mul__(self, other: ReducedWord) -> ReducedWord:
        if not isinstance(other, ReducedWord):
            return NotImplemented
        return multiply(self, other)

    def __invert__(self) -> ReducedWord:
        return invert(self)

    def __pow__(self, k: int) -> ReducedWord:
        base = self if k >= 0 else invert(self)
        return reduce(base.syms * abs(k))

    def max_index(self) -> int:
        return max_index(self)

    def is_trivial(self) -> bool:
        return not self.syms


EMPTY = ReducedWord._trusted(())

WordLike = Union[RawWord, ReducedWord, Sequence[LetterLike]]


def reduce(w: WordLike | Iterable[int]) -> ReducedWord:
    """Freely reduce ``w``; linear time."""
    syms = w.syms if isinstance(w, _WordBase) else _symbols(w)
    if not syms:
        return EMPTY
    return ReducedWord._trusted(_free_reduce(syms))


def multiply(a: ReducedWord, b: ReducedWord) -> ReducedWord:
    """Product of two reduced words (concatenate, then cancel at the seam)."""
    x, y = a.syms, b.syms
    if not x:
        return b
    if not y:
        return a
    i, j = len(x), 0
    while i > 0 and j < len(y) and x[i - 1] == -y[j]:
        i -= 1
        j += 1
    return ReducedWord._trusted(x[:i] + y[j:])


def invert(w: ReducedWord) -> ReducedWord:
    if not w.syms:
        return EMPTY
    return ReducedWord._trusted(tuple(-s for s in reversed(w.syms)))


def occurrence_count(w: _WordBase, i: int) -> int:
    """Number of letters of ``w`` with index ``i``, either sign."""
    return sum(1 for s in w.syms if s == i or s == -i)


def occurrence_counts(w: _WordBase) -> Counter[int]:
    return Counter(abs(s) for s in w.syms)


def is_trivial(w: ReducedWord) -> bool:
    return not w.syms


def max_index(w: _WordBase) -> int:
    return max((abs(s) for s in w.syms), default=0)


def word(*syms: int) -> ReducedWord:
    """Shorthand: ``word(1, -2)`` is x1 x2^-1, reduced."""
    return reduce(syms)
