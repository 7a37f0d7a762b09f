"""Exact linear algebra over Q on sparse vectors.

Vectors are dicts ``key -> number`` with hashable, mutually comparable keys.
"""
from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping, Sequence
from fractions import Fraction

SparseVector = dict


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, len(m)):
            a = m[r][c]
            m[r] = [(p * m[r][k] - a * m[rank][k]) // prev for k in range(ncols)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of a nonempty point set."""
    if not points:
        return -1
    base = points[0]
    return integer_rank([[a - b for a, b in zip(p, base)] for p in points[1:]])


def add_scaled(target: dict, vec: Mapping, scale) -> None:
    for k, v in vec.items():
        nv = target.get(k, 0) + scale * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class ExactVectorSpace:
    """Incrementally built subspace with an echelon basis.

    Each stored row has a pivot (its smallest key) with coefficient 1 and no
    other row shares that pivot, so :meth:`reduce` is a finite sweep.
    """

    def __init__(self, vectors: Iterable[Mapping] = ()) -> None:
        self._rows: dict[Hashable, dict] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def copy(self) -> ExactVectorSpace:
        other = ExactVectorSpace()
        other._rows = dict(self._rows)
        return other

    def reduce(self, vec: Mapping) -> dict:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        while True:
            hits = [k for k in v if k in self._rows]
            if not hits:
                return v
            k = min(hits)
            add_scaled(v, self._rows[k], -v[k])

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return True iff the dimension grew."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v)
        lead = v[pivot]
        self._rows[pivot] = {k: c / lead for k, c in v.items()}
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def solve_in_span(columns: Sequence[Mapping], target: Mapping, modulo: ExactVectorSpace | None = None) -> dict[int, Fraction] | None:
    """Coefficients ``c`` with ``sum c[r] * columns[r] == target`` modulo a subspace.

    Returns ``None`` when no solution exists.  Zero coefficients are omitted.
    """
    base = modulo.copy() if modulo is not None else ExactVectorSpace()
    # echelon rows tagged with the combination of input columns they represent
    rows: dict[Hashable, tuple[dict, dict]] = {}

    def reduce(vec: dict, combo: dict) -> tuple[dict, dict]:
        vec = base.reduce(vec)
        while True:
            hits = [k for k in vec if k in rows]
            if not hits:
                return vec, combo
            k = min(hits)
            rvec, rcombo = rows[k]
            s = -vec[k]
            add_scaled(vec, rvec, s)
            add_scaled(combo, rcombo, s)

    for r, col in enumerate(columns):
        vec, combo = reduce(dict(col), {r: Fraction(1)})
        if vec:
            pivot = min(vec)
            lead = vec[pivot]
            rows[pivot] = ({k: c / lead for k, c in vec.items()}, {k: c / lead for k, c in combo.items()})
    residue, combo = reduce(dict(target), {})
    if residue:
        return None
    # reduce() drove target + combo to zero, so target = -combo
    return {k: -c for k, c in combo.items() if c}
