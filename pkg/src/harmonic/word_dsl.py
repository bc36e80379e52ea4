"""A small expression language for words.

Grammar (whitespace separates juxtaposed terms and is otherwise ignored)::

    expr := term+
    term := atom ("^" signed-int)?
    atom := "x" digits | "1" | "(" expr ")" | "[" expr "," expr "]"

``[a,b]`` is the commutator a b a^-1 b^-1 and ``1`` is the identity.
Example: ``"[x1,x2] x3^-2"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import DSLSyntaxError
from .free_word import RawWord, ReducedWord, reduce

__all__ = [
    "Generator",
    "Inverse",
    "Power",
    "Product",
    "Commutator",
    "WordExpr",
    "MAX_EXPONENT",
    "parse",
    "evaluate",
    "format_word",
    "parse_word",
    "parse_lines",
]

MAX_EXPONENT = 10**6


@dataclass(frozen=True)
class Generator:
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError("generator index must be >= 1")


@dataclass(frozen=True)
class Inverse:
    expr: WordExpr


@dataclass(frozen=True)
class Power:
    expr: WordExpr
    exponent: int


@dataclass(frozen=True)
class Product:
    items: tuple[WordExpr, ...] = ()


@dataclass(frozen=True)
class Commutator:
    left: WordExpr
    right: WordExpr


WordExpr = Union[Generator, Inverse, Power, Product, Commutator]


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, expected: str, at: int | None = None) -> DSLSyntaxError:
        return DSLSyntaxError((self.pos if at is None else at) + 1, expected, self.text)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"'{ch}'")
        self.pos += 1

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start : self.pos]

    def parse(self) -> WordExpr:
        expr = self.expr()
        if self.peek():
            raise self.error("a term or end of input")
        return expr

    def expr(self) -> WordExpr:
        terms = [self.term()]
        while self.peek() in ("x", "1", "(", "["):
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Product(tuple(terms))

    def term(self) -> WordExpr:
        atom = self.atom()
        if self.peek() != "^":
            return atom
        self.pos += 1
        self.skip_ws()
        start = self.pos
        sign = 1
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        ds = self.digits()
        if not ds:
            raise self.error("an integer exponent")
        exponent = sign * int(ds)
        if abs(exponent) > MAX_EXPONENT:
            raise self.error(f"an exponent with absolute value <= {MAX_EXPONENT}", at=start)
        return Power(atom, exponent)

    def atom(self) -> WordExpr:
        ch = self.peek()
        if ch == "x":
            self.pos += 1
            start = self.pos
            ds = self.digits()
            if not ds:
                raise self.error("a generator index after 'x'")
            index = int(ds)
            if index == 0:
                raise self.error("a generator index >= 1", at=start)
            return Generator(index)
        if ch == "1":
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                raise self.error("'x', '1', '(' or '['", at=self.pos - 1)
            return Product(())
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            return inner
        if ch == "[":
            self.pos += 1
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Commutator(left, right)
        raise self.error("'x', '1', '(' or '['")


def parse(text: str) -> WordExpr:
    """Parse ``text``; raises :class:`DSLSyntaxError` with a 1-based position."""
    return _Parser(text).parse()


def _expand(e: WordExpr) -> list[int]:
    if isinstance(e, Generator):
        return [e.index]
    if isinstance(e, Inverse):
        return [-s for s in reversed(_expand(e.expr))]
    if isinstance(e, Power):
        base = _expand(e.expr)
        if e.exponent < 0:
            base = [-s for s in reversed(base)]
        return base * abs(e.exponent)
    if isinstance(e, Product):
        out: list[int] = []
        for item in e.items:
            out.extend(_expand(item))
        return out
    if isinstance(e, Commutator):
        a, b = _expand(e.left), _expand(e.right)
        return a + b + [-s for s in reversed(a)] + [-s for s in reversed(b)]
    raise TypeError(f"not a word expression: {e!r}")


def evaluate(e: WordExpr) -> RawWord:
    """Expand ``e`` structurally; no cancellation is performed."""
    return RawWord(_expand(e))


def format_word(w: ReducedWord | RawWord) -> str:
    """Canonical text, runs of one signed letter written as powers; ``"1"`` if empty."""
    syms = w.syms
    if not syms:
        return "1"
    parts = []
    k = 0
    while k < len(syms):
        s = syms[k]
        run = 1
        while k + run < len(syms) and syms[k + run] == s:
            run += 1
        exp = run if s > 0 else -run
        parts.append(f"x{abs(s)}" if exp == 1 else f"x{abs(s)}^{exp}")
        k += run
    return " ".join(parts)


def parse_word(text: str) -> ReducedWord:
    """parse, evaluate and reduce in one step."""
    return reduce(evaluate(parse(text)))


def parse_lines(text: str) -> Iterator[tuple[int, WordExpr]]:
    """Yield ``(line_number, expr)`` for each expression in fixture text.

    One expression per line; ``#`` starts a comment; blank lines are skipped.
    """
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            yield lineno, parse(line)
        except DSLSyntaxError as exc:
            raise DSLSyntaxError(exc.position, exc.expected, raw, line=lineno) from None
