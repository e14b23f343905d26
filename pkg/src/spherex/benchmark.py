"""Benchmark the compiled kernel against the pure-Python path.

Run as:  python -m spherex.benchmark
"""

import random
import time

from . import kernel
from .cyclo import Accumulator, Cyc
from .invariants import InvariantContext
from .matgroup import build_group


def _workload_micro(rounds=300):
    rng = random.Random(11)
    terms = []
    for _ in range(40):
        n = rng.choice([8, 11, 16, 88, 176])
        a = Cyc.make(n, [(rng.randrange(n), rng.randint(-4, 4)) for _ in range(3)])
        b = Cyc.make(n, [(rng.randrange(n), rng.randint(-4, 4)) for _ in range(3)])
        terms.append((a, b, rng.randint(1, 9), rng.randint(1, 7)))
    def run():
        acc = Accumulator(176)
        for _ in range(rounds):
            for a, b, s, d in terms:
                acc.add_product(a, b, s, d)
        return acc.finalize()
    return run


def _workload_xi(spec):
    g = build_group(spec)
    ctx = InvariantContext(g)
    ctx.defects  # cache the per-class defects outside the timed region

    def run():
        ctx._xi_cache.clear()
        return [str(ctx.xi(item.character)) for item in ctx.catalog]
    return run


def _time(fn):
    t0 = time.perf_counter()
    result = fn()
    return time.perf_counter() - t0, result


def main():
    workloads = [
        ("sparse accumulate, conductor 176", _workload_micro()),
        ("xi table of D:3,3 (order 112)", _workload_xi("D:3,3")),
        ("xi table of D:4,5 (order 352)", _workload_xi("D:4,5")),
    ]
    have_fast = kernel.HAVE_FAST
    print("compiled kernel available: %s" % have_fast)
    for name, fn in workloads:
        fn()  # warm reduction-row caches so both paths are measured fairly
        rows = []
        if have_fast:
            kernel.HAVE_FAST = True
            t_fast, r_fast = _time(fn)
            rows.append(("compiled", t_fast, r_fast))
        kernel.HAVE_FAST = False
        t_pure, r_pure = _time(fn)
        rows.append(("pure", t_pure, r_pure))
        kernel.HAVE_FAST = have_fast
        results = {repr(r) for _, _, r in rows}
        assert len(results) == 1, "kernel paths disagree on %s" % name
        line = "%-34s " % name
        line += "  ".join("%s %.3fs" % (mode, t) for mode, t, _ in rows)
        if len(rows) == 2:
            line += "  speedup %.1fx" % (rows[1][1] / rows[0][1])
        print(line)


if __name__ == "__main__":
    main()
