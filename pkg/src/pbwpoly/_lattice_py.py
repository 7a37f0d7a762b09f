"""Pure-Python twin of the compiled lattice-point kernel.

Same contract as ``pbwpoly._lattice``: integer points ``x`` with
``0 <= x <= ub`` and ``A x <= b`` in lexicographic order.
"""
from __future__ import annotations


def _prepare(A, b, ub):
    ncols = len(ub)
    restmin = []
    for row in A:
        acc = 0
        tail = [0] * ncols
        for c in range(ncols - 1, -1, -1):
            tail[c] = acc
            term = row[c] * ub[c]
            if term < 0:
                acc += term
        restmin.append(tail)
    touching = [[r for r, row in enumerate(A) if row[c]] for c in range(ncols)]
    feasible = all(bound >= 0 for row, bound in zip(A, b) if not any(row))
    return restmin, touching, feasible


def _search(A, b, ub):
    """Yield ``(prefix, lo, hi)`` for every feasible leaf interval."""
    N = len(ub)
    restmin, touching, feasible = _prepare(A, b, ub)
    if not feasible:
        return
    if N == 0:
        yield (), 0, 0
        return
    partial = [0] * len(A)
    x = [0] * N
    lo = [0] * N
    hi = [0] * N

    def bounds(d):
        low, high = 0, ub[d]
        for r in touching[d]:
            a = A[r][d]
            res = b[r] - partial[r] - restmin[r][d]
            if a > 0:
                high = min(high, res // a)
            else:
                low = max(low, -(res // -a))
        lo[d], hi[d] = low, high

    def shift(d, v):
        for r in touching[d]:
            partial[r] += A[r][d] * v

    d = 0
    bounds(0)
    x[0] = lo[0] - 1
    while d >= 0:
        if x[d] >= lo[d]:
            shift(d, -x[d])
        x[d] += 1
        if x[d] > hi[d]:
            d -= 1
            continue
        if d == N - 1:
            yield tuple(x[:-1]), x[d], hi[d]
            x[d] = lo[d] - 1
            d -= 1
            continue
        shift(d, x[d])
        d += 1
        bounds(d)
        x[d] = lo[d] - 1


def enumerate_points(A, b, ub):
    if not ub:
        return [()] if all(v >= 0 for v in b) else []
    return [prefix + (v,) for prefix, low, high in _search(A, b, ub) for v in range(low, high + 1)]


def count_points(A, b, ub):
    return sum(high - low + 1 for _, low, high in _search(A, b, ub))
