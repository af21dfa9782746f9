"""Compare the compiled and pure-Python kernels on matching and permanent
workloads.

Run as: python benchmarks/bench_kernels.py [n_max]
"""

import random
import sys
import time

from matchperm._kernels import _pure

try:
    from matchperm._kernels import _core
except ImportError:
    _core = None


def bench_ryser(mod, n, rows, reps):
    start = time.perf_counter()
    for _ in range(reps):
        result = mod.ryser(rows, n)
    return result, (time.perf_counter() - start) / reps


def bench_matching(mod, adj, nl, nr, reps):
    start = time.perf_counter()
    for _ in range(reps):
        size = mod.max_matching(adj, nl, nr)[0]
    return size, (time.perf_counter() - start) / reps


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 16
    rng = random.Random(0)
    mods = [("pure", _pure)]
    if _core is not None:
        mods.append(("cython", _core))
    else:
        print("compiled kernel unavailable; benchmarking pure only")

    print("== Ryser permanent (dense random 0/1) ==")
    for n in range(8, n_max + 1, 2):
        rows = [rng.randint(0, 1) for _ in range(n * n)]
        reps = max(1, 2 ** max(0, 14 - n))
        line = "n=%2d" % n
        results = []
        for name, mod in mods:
            value, sec = bench_ryser(mod, n, rows, reps)
            results.append(value)
            line += "  %s %.4fs" % (name, sec)
        assert len(set(results)) == 1, "kernel disagreement"
        print(line)

    print("== Hopcroft-Karp maximum matching (sparse random) ==")
    for n in (100, 400, 1000):
        adj = [[v for v in range(n) if rng.random() < 8.0 / n]
               for _ in range(n)]
        line = "n=%4d" % n
        sizes = []
        for name, mod in mods:
            size, sec = bench_matching(mod, adj, n, n, 3)
            sizes.append(size)
            line += "  %s %.4fs" % (name, sec)
        assert len(set(sizes)) == 1, "kernel disagreement"
        print(line)


if __name__ == "__main__":
    main()
