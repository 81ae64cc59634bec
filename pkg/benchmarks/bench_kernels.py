"""Compare the compiled and pure-Python kernels on the workloads that dominate runtime.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from nsk import _purecore

try:
    from nsk import _core
except ImportError:
    _core = None


def _relations_workload(impl):
    # all factorization graphs below the default search bound, as minimal_relations does
    total = 0
    for gaps in sorted(_purecore.gap_sets_by_genus(9))[::4]:
        gens = _gens_from_gaps(gaps)
        conductor = gaps[-1] + 1
        for n in range(2, 2 * conductor + 2 * max(gens) + 1):
            total += len(impl.factorization_components(gens, n))
    return total


def _gens_from_gaps(gaps):
    gapset = set(gaps)
    c = gaps[-1] + 1
    m = next(n for n in range(1, c + 1) if n not in gapset)
    member = lambda n: n >= c or n not in gapset  # noqa: E731
    return [x for x in range(m, c + m)
            if member(x) and not any(member(a) and member(x - a) for a in range(m, x // 2 + 1))]


def _rank_workload(impl):
    rng = random.Random(7)
    total = 0
    for _ in range(3000):
        rows = [[rng.randint(-6, 6) for _ in range(8)] for _ in range(rng.randint(1, 20))]
        total += impl.integer_rank(rows)
    return total


WORKLOADS = {
    "tree walk, genus 18": lambda impl: len(impl.gap_sets_by_genus(18)),
    "factorization graphs, genus 9": _relations_workload,
    "integer rank, 3000 matrices": _rank_workload,
    "membership tables": lambda impl: sum(impl.membership_table([a, a + 3, 2 * a + 1])[1]
                                          for a in range(5, 400)),
}


def timeit(fn, impl, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(impl)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _core is None:
        print("compiled extension not built; only the pure backend is available")
    print(f"{'workload':32s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn in WORKLOADS.items():
        t_py, r_py = timeit(fn, _purecore, args.repeat)
        if _core is None:
            print(f"{name:32s} {t_py:10.4f} {'-':>10s} {'-':>8s}")
            continue
        t_c, r_c = timeit(fn, _core, args.repeat)
        assert r_py == r_c, f"backends disagree on {name}"
        print(f"{name:32s} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
