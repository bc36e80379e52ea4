"""Finite windows of canonical sequences in the inverse limit of F_{N,N} <- F_{N,N+1} <- ...

Level ``n`` holds a reduced word on x_N..x_n; the bonding map from level
n+1 to level n deletes x_{n+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DSLSyntaxError, PreconditionError
from .free_word import EMPTY, ReducedWord, invert, max_index, multiply, reduce
from .word_dsl import format_word, parse_word

__all__ = [
    "delete_above",
    "bonding",
    "TruncatedSequence",
    "Violation",
    "check_compatibility",
    "pointwise_multiply",
    "pointwise_invert",
    "truncations",
    "dumps",
    "loads",
]


def delete_above(w: ReducedWord, n: int) -> ReducedWord:
    """Delete every letter with index > n, then reduce."""
    syms = w.syms
    if not syms or max(abs(s) for s in syms) <= n:
        return w
    return reduce(s for s in syms if -n <= s <= n)


def bonding(w: ReducedWord, n: int) -> ReducedWord:
    """The bonding homomorphism F_{N,n+1} -> F_{N,n} killing x_{n+1}."""
    if max_index(w) > n + 1:
        raise PreconditionError(f"bonding to level {n} needs indices <= {n + 1}, word has x{max_index(w)}")
    return delete_above(w, n)


@dataclass(frozen=True)
class TruncatedSequence:
    """Entries ``w_N, ..., w_D`` of a canonical sequence with base N and depth D."""

    base: int
    depth: int
    entries: tuple[ReducedWord, ...]

    def __post_init__(self) -> None:
        if self.base < 1:
            raise PreconditionError("base must be >= 1")
        if self.depth < self.base:
            raise PreconditionError(f"depth {self.depth} is below base {self.base}")
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.depth - self.base + 1:
            raise PreconditionError(
                f"expected {self.depth - self.base + 1} entries for levels {self.base}..{self.depth}, got {len(entries)}"
            )
        for n, w in zip(self.levels(), entries):
            if any(not (self.base <= abs(s) <= n) for s in w.syms):
                raise PreconditionError(f"entry at level {n} uses an index outside {self.base}..{n}")

    @classmethod
    def constant_empty(cls, base: int, depth: int) -> TruncatedSequence:
        return cls(base, depth, (EMPTY,) * (depth - base + 1))

    def levels(self) -> range:
        return range(self.base, self.depth + 1)

    def __getitem__(self, n: int) -> ReducedWord:
        if not self.base <= n <= self.depth:
            raise KeyError(n)
        return self.entries[n - self.base]

    def items(self) -> Iterator[tuple[int, ReducedWord]]:
        return zip(self.levels(), self.entries)


@dataclass(frozen=True)
class Violation:
    level: int
    expected: ReducedWord
    found: ReducedWord


def check_compatibility(s: TruncatedSequence) -> Violation | None:
    """Return the first level where bonding fails, or ``None`` when compatible.

    ``expected`` is the bonding image of the next entry, ``found`` the entry itself.
    """
    for n in range(s.base, s.depth):
        expected = delete_above(s[n + 1], n)
        if expected != s[n]:
            return Violation(n, expected, s[n])
    return None


def _same_shape(a: TruncatedSequence, b: TruncatedSequence) -> None:
    if (a.base, a.depth) != (b.base, b.depth):
        raise PreconditionError(
            f"shape mismatch: base={a.base} depth={a.depth} vs base={b.base} depth={b.depth}"
        )


def pointwise_multiply(a: TruncatedSequence, b: TruncatedSequence) -> TruncatedSequence:
    _same_shape(a, b)
    return TruncatedSequence(a.base, a.depth, tuple(multiply(x, y) for x, y in zip(a.entries, b.entries)))


def pointwise_invert(a: TruncatedSequence) -> TruncatedSequence:
    return TruncatedSequence(a.base, a.depth, tuple(invert(x) for x in a.entries))


def truncations(w: ReducedWord, base: int, depth: int) -> TruncatedSequence:
    """The sequence n -> delete_above(w, n) for a finite word over indices >= base."""
    return TruncatedSequence(base, depth, tuple(delete_above(w, n) for n in range(base, depth + 1)))


def dumps(s: TruncatedSequence) -> str:
    lines = [f"base={s.base} depth={s.depth}"]
    lines.extend(format_word(w) for w in s.entries)
    return "\n".join(lines) + "\n"


def loads(text: str) -> TruncatedSequence:
    """Inverse of :func:`dumps`; ``#`` comments and blank lines are ignored."""
    rows = [(k, line.split("#", 1)[0].strip()) for k, line in enumerate(text.splitlines(), start=1)]
    rows = [(k, line) for k, line in rows if line]
    if not rows:
        raise PreconditionError("empty sequence text")
    k, header = rows[0]
    fields = dict(part.split("=", 1) for part in header.split() if "=" in part)
    try:
        base, depth = int(fields["base"]), int(fields["depth"])
    except (KeyError, ValueError):
        raise PreconditionError(f"line {k}: header must read 'base=N depth=D'") from None
    entries = []
    for k, line in rows[1:]:
        try:
            entries.append(parse_word(line))
        except DSLSyntaxError as exc:
            raise DSLSyntaxError(exc.position, exc.expected, line, line=k) from None
    return TruncatedSequence(base, depth, tuple(entries))

