"""Exit criteria. Each test prints a PASS/FAIL line in the "acceptance criteria"
section of the pytest summary. Tolerances are exact and time budgets are
asserted."""

import io
import random
import time
from pathlib import Path

import pytest

from harmonic.archipelago import (
    InKernel,
    RefutedUpTo,
    WitnessLevel,
    kernel_check_at,
    kernel_search,
    merge_top,
    qN_projection,
    substitute_collapse,
)
from harmonic.cli import run
from harmonic.families import (
    OddChoice,
    ascending_stream,
    cor1_element,
    distinctness_harness,
    inequivalent_choices,
    intro_essential_element,
    intro_trivial_element,
    permutation_element,
    tau_of,
    window_permutation,
)
from harmonic.free_word import ReducedWord, max_index, multiply, reduce
from harmonic.inverse_limit import bonding
from harmonic.transfinite import NotMember, classify_HE, counterexample_element, to_truncated
from harmonic.word_dsl import evaluate, format_word, parse

from oracles import all_raw_words, normal_forms, random_reduced

pytestmark = pytest.mark.acceptance

GOLDEN = Path(__file__).parent / "golden"


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


def test_criterion_01_reduction_oracle():
    with Budget(30):
        mismatches = 0
        count = 0
        for raw in all_raw_words(8, (1, 2, 3)):
            count += 1
            if normal_forms(raw) != {reduce(raw).syms}:
                mismatches += 1
    assert count == sum(6**k for k in range(9))
    assert mismatches == 0


def test_criterion_02_counterexample_sequence():
    with Budget(1):
        seq = to_truncated(counterexample_element(), 3)
        expected = tuple(
            reduce(evaluate(parse(t))) for t in ("1", "x1 x2 x1^-1 x2^-1", "x1 x2 x1^-1 x2^-1 x1 x3 x1^-1 x3^-1")
        )
        c = classify_HE(counterexample_element(), 30)
    assert seq.base == 1 and seq.depth == 3 and seq.entries == expected
    assert isinstance(c, NotMember) and c.witness_index == 1
    assert len(c.growth_samples) >= 3
    assert all(count == 2 * (n - 1) for n, count in c.growth_samples)
    assert [n for n, _ in c.growth_samples] == list(range(2, 31))


def test_criterion_03_intro_trivial():
    with Budget(1):
        verdict = kernel_search(intro_trivial_element(), 20, 50)
    assert verdict == InKernel(2, 50)


def test_criterion_04_intro_essential():
    with Budget(1):
        e = intro_essential_element()
        verdict = kernel_search(e, 20, 40)
        top_level = {N: qN_projection(e, N, N + 1) for N in range(1, 21)}
    assert isinstance(verdict, RefutedUpTo) and verdict.N_max == 20
    assert sorted(verdict.witnesses) == list(range(1, 21))
    for N, wit in verdict.witnesses.items():
        assert wit.word.syms and N <= wit.level <= N + 1
    # a nontrivial collapsed word at level N+1 for every N
    assert all(w.syms for w in top_level.values())


def _random_window_word(rng):
    top = rng.randint(3, 40)
    images = list(range(3, top + 1))
    rng.shuffle(images)
    return permutation_element(window_permutation(images, offset=2))


def test_criterion_05_cor1_family():
    rng = random.Random(5)
    with Budget(10):
        results = []
        for _ in range(100):
            e = cor1_element(_random_window_word(rng))
            results.append((kernel_search(e, 20, 50), kernel_check_at(e, 1, 50)))
    for verdict, at_one in results:
        assert verdict == InKernel(2, 50)
        assert isinstance(at_one, WitnessLevel) and at_one.level <= 5 and at_one.word.syms


def test_criterion_06_cor2_distinctness():
    with Budget(300):
        choices = inequivalent_choices(1000, period=20, seed=6)
        elements = [permutation_element(tau_of(f)) for f in choices]
        report = distinctness_harness(elements, 10, 50)
    assert len(report.pairs) == 499500
    assert report.unseparated == []
    assert report.max_level <= 50


def test_criterion_07_homomorphism_laws():
    rng = random.Random(7)
    violations = 0
    with Budget(30):
        for _ in range(10_000):
            a = ReducedWord(random_reduced(rng, 30, 15))
            b = ReducedWord(random_reduced(rng, 30, 15))
            ab = multiply(a, b)
            N = rng.randint(1, 14)
            if substitute_collapse(ab, N) != multiply(substitute_collapse(a, N), substitute_collapse(b, N)):
                violations += 1
            if merge_top(substitute_collapse(a, N), N) != substitute_collapse(a, N + 1):
                violations += 1
            n = max(max_index(a), max_index(b), 2) - 1
            if bonding(ab, n) != multiply(bonding(a, n), bonding(b, n)):
                violations += 1
    assert violations == 0


def _family_elements():
    yield counterexample_element()
    yield intro_trivial_element()
    yield intro_essential_element()
    yield ascending_stream(3)
    yield cor1_element(ascending_stream(3))
    yield cor1_element(permutation_element(window_permutation([7, 3, 5, 4, 6], offset=2)))
    for f in (OddChoice.constant(0), OddChoice.constant(1), OddChoice.periodic([1, 0, 0]), OddChoice.from_support([3, 9])):
        yield permutation_element(tau_of(f))


def test_criterion_08_bonding_compatibility():
    violations = 0
    with Budget(10):
        for e in _family_elements():
            for n in range(1, 51):
                if bonding(e.projection_at(n + 1), n) != e.projection_at(n):
                    violations += 1
    assert violations == 0


def test_criterion_09_dsl_round_trip():
    rng = random.Random(9)
    with Budget(5):
        words = [ReducedWord(random_reduced(rng, 40, 60)) for _ in range(1000)]
        failures = [w for w in words if reduce(evaluate(parse(format_word(w)))) != w]
    assert failures == []


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["reduce", "x1 x2 x2^-1"], "reduce.txt"),
        (["kernel", "intro-trivial", "--depth", "50"], "kernel_intro_trivial.txt"),
        (["classify", "counterexample", "--depth", "30"], "classify_counterexample.txt"),
    ],
)
def test_criterion_10_cli_golden(argv, golden):
    with Budget(5):
        out = io.StringIO()
        status = run(argv, out=out, err=io.StringIO())
    assert status == 0
    assert out.getvalue().encode("utf-8") == (GOLDEN / golden).read_bytes()
