"""Compare the compiled reducer with the pure-Python fallback on Groebner workloads.

Usage: python3 benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import time

from dseq.corpus import sop_corpus
from dseq.groebner import _buchberger
from dseq.hilbert import hs_table
from dseq.kernel import HAVE_COMPILED
from dseq.polyring import GREVLEX, Ring


def cyclic(n):
    names = tuple(f"x{i}" for i in range(n))
    gens = ["+".join("*".join(names[(i + j) % n] for j in range(k)) for i in range(n)) for k in range(1, n)]
    gens.append("*".join(names) + " - 1")
    return Ring(names, 32003), gens


def katsura4():
    ring = Ring(("a", "b", "c", "d", "e"), 32003)
    gens = ["a + 2*b + 2*c + 2*d + 2*e - 1", "a^2 + 2*b^2 + 2*c^2 + 2*d^2 + 2*e^2 - a",
            "2*a*b + 2*b*c + 2*c*d + 2*d*e - b", "b^2 + 2*a*c + 2*b*d + 2*c*e - c",
            "2*b*c + 2*a*d + 2*b*e - d"]
    return ring, gens


SYSTEMS = {"cyclic4": cyclic(4), "katsura4": katsura4(), "cyclic5": cyclic(5), "cyclic6": cyclic(6)}


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not HAVE_COMPILED:
        print("compiled extension not built; only the fallback is available")
        return
    print(f"{'workload':<12} {'compiled (s)':>13} {'python (s)':>11} {'speedup':>8}")
    for name, (R, gens) in SYSTEMS.items():
        polys = [R(g) for g in gens]
        fast = best_of(lambda: _buchberger(R, GREVLEX, polys, compiled=True), args.repeat)
        slow = best_of(lambda: _buchberger(R, GREVLEX, polys, compiled=False), args.repeat)
        assert [g.terms for g in _buchberger(R, GREVLEX, polys, True)] == \
            [g.terms for g in _buchberger(R, GREVLEX, polys, False)]
        print(f"{name:<12} {fast:>13.4f} {slow:>11.4f} {slow / fast:>7.1f}x")

    # an end-to-end workload: Hilbert-Samuel tables on the s.o.p. corpus, fresh contexts each run
    import dseq.kernel as kernel

    def corpus_run():
        for ctx in sop_corpus(seed=11, count=20):
            hs_table(ctx, 4)

    fast = best_of(corpus_run, 1)
    saved, kernel.CReducer = kernel.CReducer, None
    try:
        slow = best_of(corpus_run, 1)
    finally:
        kernel.CReducer = saved
    print(f"{'hs corpus':<12} {fast:>13.4f} {slow:>11.4f} {slow / fast:>7.1f}x")


if __name__ == "__main__":
    main()
