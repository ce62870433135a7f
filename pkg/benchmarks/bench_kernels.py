"""Compare the compiled and pure-python sparse kernels on a realistic
workload: the B(3) Casimir products on the degree-4 block (1008 dims).

Run:  python3 benchmarks/bench_kernels.py
"""

import time

from spinalg._kernels import pure

try:
    from spinalg._kernels import _fast
except ImportError:
    _fast = None


def workload_rows():
    from spinalg.casimir import casimir, spin_module

    mod = spin_module(3, 5)
    a = casimir([1, 2, 3, 4], mod, method="closed_form").block(0, 4)
    b = casimir([3, 4, 5, 6], mod, method="closed_form").block(0, 4)
    return a.rows, b.rows


def bench(impl, a, b, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        impl.matmul(a, b)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    a, b = workload_rows()
    nnz = sum(len(r) for r in a)
    print(f"block: {len(a)}x{len(a)}, nnz(A) = {nnz}")
    t_pure = bench(pure, a, b)
    print(f"pure:  {t_pure * 1000:8.1f} ms")
    if _fast is None:
        print("fast:  (extension not built)")
        return
    t_fast = bench(_fast, a, b)
    print(f"fast:  {t_fast * 1000:8.1f} ms   ({t_pure / t_fast:.2f}x speedup)")
    assert _fast.matmul(a, b) == pure.matmul(a, b)
    print("results agree exactly")


if __name__ == "__main__":
    main()
