"""Collapsing the first N circles, and kernel certificates for pi_1(HE) -> pi_1(HA).

``substitute_collapse(w, N)`` rewrites every x_i with i <= N as x_N. An
element is in the kernel iff for some N every collapsed level word v_n,
n >= N, reduces to the identity. Only finitely many levels and thresholds
are ever checked, and the verdicts say so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import HarmonicError, PreconditionError
from .free_word import ReducedWord, reduce
from .transfinite import TransfiniteElement

__all__ = [
    "DEFAULT_N_MAX",
    "DEFAULT_DEPTH",
    "substitute_collapse",
    "merge_top",
    "qN_projection",
    "TrivialThrough",
    "WitnessLevel",
    "kernel_check_at",
    "InKernel",
    "RefutedUpTo",
    "KernelUnknown",
    "KernelVerdict",
    "kernel_search",
]

DEFAULT_N_MAX = 20
DEFAULT_DEPTH = 50


def substitute_collapse(w: ReducedWord, N: int) -> ReducedWord:
    """Replace x_i by x_N for every i <= N (signs kept) and reduce."""
    if N < 1:
        raise PreconditionError("collapse threshold must be >= 1")
    return reduce((N if s > 0 else -N) if -N <= s <= N else s for s in w.syms)


def merge_top(w: ReducedWord, N: int) -> ReducedWord:
    """Rewrite x_N as x_{N+1} and reduce; moves a collapse at N up to N+1."""
    return reduce(((N + 1) if s > 0 else -(N + 1)) if s in (N, -N) else s for s in w.syms)


def qN_projection(e: TransfiniteElement, N: int, n: int) -> ReducedWord:
    """Level-n word of the image of ``e`` under collapse at N; indices in N..n."""
    if not 1 <= N <= n:
        raise PreconditionError(f"need 1 <= N <= n, got N={N}, n={n}")
    return substitute_collapse(e.projection_at(n), N)


@dataclass(frozen=True)
class TrivialThrough:
    depth: int


@dataclass(frozen=True)
class WitnessLevel:
    level: int
    word: ReducedWord


def kernel_check_at(e: TransfiniteElement, N: int, depth: int) -> TrivialThrough | WitnessLevel:
    """Smallest level in N..depth whose collapsed word is nontrivial, if any."""
    if depth < N:
        raise PreconditionError(f"depth {depth} is below threshold N={N}")
    for n in range(N, depth + 1):
        v = qN_projection(e, N, n)
        if v.syms:
            return WitnessLevel(n, v)
    return TrivialThrough(depth)


@dataclass(frozen=True)
class InKernel:
    N: int
    verified_depth: int
    kind: str = field(default="InKernel", init=False, repr=False)


@dataclass(frozen=True)
class RefutedUpTo:
    N_max: int
    depth: int
    witnesses: dict[int, WitnessLevel]
    kind: str = field(default="RefutedUpTo", init=False, repr=False)


@dataclass(frozen=True)
class KernelUnknown:
    N_max: int
    depth: int
    reason: str = ""
    kind: str = field(default="Unknown", init=False, repr=False)


KernelVerdict = Union[InKernel, RefutedUpTo, KernelUnknown]


def kernel_search(e: TransfiniteElement, N_max: int = DEFAULT_N_MAX, depth: int = DEFAULT_DEPTH) -> KernelVerdict:
    """Try thresholds N = 1..N_max in order; the first certificate wins.

    A projection failure (for instance a level rule leaving its index range)
    ends the search with ``KernelUnknown`` rather than an exception.
    """
    if not 1 <= N_max <= depth:
        raise PreconditionError(f"need 1 <= N_max <= depth, got N_max={N_max}, depth={depth}")
    witnesses: dict[int, WitnessLevel] = {}
    for N in range(1, N_max + 1):
        try:
            result = kernel_check_at(e, N, depth)
        except HarmonicError as exc:
            return KernelUnknown(N_max, depth, reason=f"N={N}: {exc}")
        if isinstance(result, TrivialThrough):
            return InKernel(N, depth)
        witnesses[N] = result
    return RefutedUpTo(N_max, depth, witnesses)
