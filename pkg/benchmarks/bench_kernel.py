"""Time the compiled and pure-Python simplex kernels on the same workloads.

    python3 benchmarks/bench_kernel.py [--repeat N]
"""
import argparse
import random
import time
from fractions import Fraction

from glspace import _backend
from glspace.abs_sums import build_e_sum, validate_absolute
from glspace.corpus import CorpusSpec, hex_tilde, random_symmetric_polygon
from glspace.gl_analysis import is_gl
from glspace.lp import LpProblem, solve_lp
from glspace.normed_space import PolyhedralSpace


def random_lps(count=200, seed=7):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n, m = rng.randint(3, 6), rng.randint(4, 10)
        rows = [([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)],
                 Fraction(rng.randint(0, 9))) for _ in range(m)]
        rows += [([1 if j == i else 0 for j in range(n)], 5) for i in range(n)]
        rows += [([-1 if j == i else 0 for j in range(n)], 5) for i in range(n)]
        c = [rng.randint(-5, 5) for _ in range(n)]
        out.append(LpProblem.build(c, rows))
    return out


def workloads():
    lps = random_lps()
    polys = [PolyhedralSpace(random_symmetric_polygon(CorpusSpec("polygon", s, pairs=6)))
             for s in range(10)]
    E = validate_absolute(hex_tilde())
    S = build_e_sum(E, [hex_tilde(), hex_tilde()]).space
    return {
        "random LPs (200)": lambda: [solve_lp(p) for p in lps],
        "GL sweep, 10 dodecagons": lambda: [is_gl(X) for X in polys],
        "GL sweep, 4D hexagon sum": lambda: is_gl(S),
    }


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _backend.available()
    if "compiled" not in backends:
        print("compiled kernel not built; only the pure-Python timings are shown")
    jobs = workloads()
    print(f"{'workload':28s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for name, fn in jobs.items():
        times = {}
        for b in backends:
            _backend.use_backend(b)
            times[b] = timed(fn, args.repeat)
        row = f"{name:28s}" + "".join(f"{times[b]:11.3f}s" for b in backends)
        if "compiled" in times:
            row += f"{times['python'] / times['compiled']:11.2f}x"
        print(row)


if __name__ == "__main__":
    main()
