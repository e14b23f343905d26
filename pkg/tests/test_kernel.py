import random
from fractions import Fraction

import pytest

from spherex import kernel
from spherex.cyclo import Accumulator, Cyc


def build_workload(seed, count=40, big=False):
    rng = random.Random(seed)
    items = []
    for _ in range(count):
        n = rng.choice([4, 8, 11, 44, 88])  # conductors dividing 88
        a = Cyc.make(n, [(rng.randrange(n), rng.randint(-4, 4)) for _ in range(3)])
        b = Cyc.make(n, [(rng.randrange(n), rng.randint(-4, 4)) for _ in range(2)])
        scale = rng.randint(-(10 ** 30), 10 ** 30) if big else rng.randint(-9, 9)
        items.append((a, b, scale, rng.randint(1, 11)))
    return items


def run_accumulator(items, force_pure):
    saved = kernel.HAVE_FAST
    kernel.HAVE_FAST = kernel.HAVE_FAST and not force_pure
    try:
        acc = Accumulator(88)
        for a, b, scale, den in items:
            acc.add_product(a, b, scale, den)
        return acc.finalize()
    finally:
        kernel.HAVE_FAST = saved


@pytest.mark.skipif(not kernel.HAVE_FAST, reason="compiled kernel not built")
def test_compiled_matches_pure():
    items = build_workload(5)
    assert run_accumulator(items, force_pure=False) == run_accumulator(items, force_pure=True)


def test_overflow_falls_back_to_bigint():
    # scales around 2^100 overflow int64 immediately; the result must still be exact
    items = build_workload(6, count=10, big=True)
    got = run_accumulator(items, force_pure=False)
    ref = Cyc.rational(0)
    for a, b, scale, den in items:
        ref = ref + a * b * Fraction(scale, den)
    assert got == ref


def test_partial_overflow_keeps_accumulator_consistent():
    # a big addend after small ones must not corrupt earlier contributions
    small = build_workload(7, count=5)
    acc = Accumulator(88)
    ref = Cyc.rational(0)
    for a, b, scale, den in small:
        acc.add_product(a, b, scale, den)
        ref = ref + a * b * Fraction(scale, den)
    huge = 2 ** 80
    acc.add_product(Cyc.root(8), Cyc.root(11), huge)
    ref = ref + Cyc.root(8) * Cyc.root(11) * huge
    assert acc.finalize() == ref
