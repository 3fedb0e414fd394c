"""Compare the compiled and pure-Python rewrite kernels.

    python3 benchmarks/bench_kernel.py [--words 20000] [--maxlen 12]

Both kernels are fed identical tables and words; the script checks that the
outputs agree before reporting timings.
"""
import argparse
import random
import time

from regsem import bifun, corpus
from regsem._kernel_py import Kernel as PyKernel
from regsem.rewrite import RewriteSystem

try:
    from regsem._kernel import Kernel as CyKernel
except ImportError:
    CyKernel = None


def clone(kernel_cls, rs):
    """A kernel of the given class built from the system's own tables."""
    S, G, rc, n = rs.S, rs.G, rs.rc, rs.n
    B, BR, BL = bifun.tables(S, G, rc)
    args = [n, S.zero,
        [S.table[i][j] for i in range(n) for j in range(n)],
        [int(G.leqL[i][j]) for i in range(n) for j in range(n)],
        [int(G.leqR[i][j]) for i in range(n) for j in range(n)],
        [rc.r(s) if s != S.zero else -1 for s in range(n)],
        [rc.l(s) if s != S.zero else -1 for s in range(n)],
        B, BR, BL,
    ]
    return kernel_cls(*args)


def bench(fn, reps=3):
    best = float("inf")
    for _ in range(reps):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--words", type=int, default=20000)
    ap.add_argument("--maxlen", type=int, default=12)
    ap.add_argument("--members", default="lz3,z4,b2,rb22one,chain5")
    args = ap.parse_args(argv)
    if CyKernel is None:
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'member':10} {'task':12} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name in args.members.split(","):
        rs = RewriteSystem(corpus.load(name))
        rng = random.Random(0)
        alpha = rs.alphabet()
        words = [tuple(rng.choice(alpha) for _ in range(rng.randint(1, args.maxlen))) for _ in range(args.words)]
        cap = 10**6
        kernels = {"python": clone(PyKernel, rs)}
        if CyKernel is not None:
            kernels["cython"] = clone(CyKernel, rs)
        tasks = {
            "normal_form": lambda k: [k.normal_form(w, cap) for w in words],
            "successors": lambda k: [k.successors(w) for w in words],
        }
        for task, fn in tasks.items():
            res = {kind: bench(lambda k=k: fn(k)) for kind, k in kernels.items()}
            if "cython" in res:
                assert res["python"][1] == res["cython"][1], f"kernels disagree on {name}/{task}"
                py, cy = res["python"][0], res["cython"][0]
                print(f"{name:10} {task:12} {py:10.3f} {cy:10.3f} {py / cy:8.1f}x")
            else:
                print(f"{name:10} {task:12} {res['python'][0]:10.3f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
