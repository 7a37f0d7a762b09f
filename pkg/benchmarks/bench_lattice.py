"""Compare the compiled and pure-Python lattice-point kernels.

    python3 benchmarks/bench_lattice.py [--repeat 3]

Both backends are timed on the same dilated chain and order polytopes and
their point lists are checked to be identical.
"""
from __future__ import annotations

import argparse
import time

from pbwpoly import lattice
from pbwpoly.polytope import CHAIN, ORDER, _shifted, polytope_of
from pbwpoly.poset import LSequence, build_poset

CASES = [
    (LSequence(2, 4, (4, 4)), CHAIN, 8),
    (LSequence(2, 4, (4, 4)), ORDER, 8),
    (LSequence(3, 5, (4, 5, 5)), CHAIN, 4),
    (LSequence(3, 5, (5, 5, 5)), ORDER, 4),
    (LSequence(2, 6, (5, 6)), CHAIN, 4),
]


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if lattice.BACKEND != "cython":
        print("compiled kernel not available; only the Python backend would run")
        return
    print(f"{'case':28s} {'points':>8s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for seq, kind, m in CASES:
        prep = _shifted(polytope_of(build_poset(seq), kind, m))
        A, b, ub, _ = prep
        py = lattice.enumerate_points(A, b, ub, backend="python")
        cy = lattice.enumerate_points(A, b, ub, backend="cython")
        assert py == cy, f"backends disagree on {seq} {kind} m={m}"
        t_py = best_of(lambda: lattice.enumerate_points(A, b, ub, backend="python"), args.repeat)
        t_cy = best_of(lambda: lattice.enumerate_points(A, b, ub, backend="cython"), args.repeat)
        label = f"{kind} ell={','.join(map(str, seq.ell))} m={m}"
        print(f"{label:28s} {len(py):8d} {t_py:10.4f} {t_cy:10.4f} {t_py / t_cy:8.1f}x")


if __name__ == "__main__":
    main()
