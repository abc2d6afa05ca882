"""Compiled kernels vs the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Prints the best-of-N wall time per kernel and the speedup. Inputs mirror the
workloads of the verification suites: small Hermitian eigenproblems, batches
of random readout bases, and Monte Carlo shards.
"""
import argparse
import timeit

import numpy as np

from wwk import _kernels_py
from wwk.linalg import random_unitaries

try:
    from wwk import _kernels
except ImportError:
    _kernels = None


def _workloads(rng):
    h = []
    for d in (3, 4, 6, 8):
        m = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        h.append(m + m.conj().T)

    d = 6
    a = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    b = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    a /= np.linalg.norm(a)
    b /= np.linalg.norm(b)
    bases = np.ascontiguousarray(np.swapaxes(random_unitaries(rng, 4096, d), 1, 2))

    grid, n_out, m = 2**14, 4, 2**18
    w = rng.random(grid * n_out)
    cdf = np.cumsum(w) / w.sum()
    mc = (cdf, rng.random(m), rng.random(m), grid, rng.random(n_out), np.array([1, 0, 1, 0], dtype=np.uint8), 32)

    return {
        "jacobi_eigh (4 matrices, d=3..8)": lambda k: [k.jacobi_eigh(x) for x in h],
        "batch_knowledge (4096 bases, d=6)": lambda k: k.batch_knowledge(a, b, bases),
        "mc_tally (2^18 events)": lambda k: k.mc_tally(*mc),
    }


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()

    work = _workloads(np.random.default_rng(0))
    print(f"{'kernel':38s} {'python [ms]':>12s} {'cython [ms]':>12s} {'speedup':>8s}")
    for name, fn in work.items():
        t_py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{name:38s} {1e3 * t_py:12.3f} {'n/a':>12s} {'n/a':>8s}")
            continue
        t_c = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat))
        print(f"{name:38s} {1e3 * t_py:12.3f} {1e3 * t_c:12.3f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
