"""The grid posets P_ell attached to a weakly increasing sequence ell.

A sequence ``ell = (l_1 <= ... <= l_i)`` with ``i-1 <= l_k <= n`` defines the
poset with vertices ``(k, j)``, ``1 <= k <= i``, ``i <= j <= l_k`` and order

    (k1, j1) >= (k2, j2)  iff  k1 <= k2 and j1 >= j2.

Vertices are always listed in the canonical total order used for
coordinates everywhere in the package (see :func:`total_order_key`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations_with_replacement

Vertex = tuple[int, int]


@dataclass(frozen=True)
class LSequence:
    i: int
    n: int
    ell: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ell", tuple(int(v) for v in self.ell))
        if not 1 <= self.i <= self.n:
            raise ValueError(f"need 1 <= i <= n, got i={self.i}, n={self.n}")
        if len(self.ell) != self.i:
            raise ValueError(f"ell must have exactly i={self.i} entries, got {len(self.ell)}")
        prev = self.i - 1
        for k, v in enumerate(self.ell, start=1):
            if v < self.i - 1:
                raise ValueError(f"ell_{k}={v} violates the lower bound i-1={self.i - 1}")
            if v > self.n:
                raise ValueError(f"ell_{k}={v} violates the upper bound n={self.n}")
            if v < prev:
                raise ValueError(f"ell_{k}={v} < ell_{k - 1}={prev}: sequence must weakly increase")
            prev = v

    def __getitem__(self, k: int) -> int:
        """1-based access; ``ell[0]`` is the sentinel ``i - 1``."""
        if k == 0:
            return self.i - 1
        if not 1 <= k <= self.i:
            raise IndexError(k)
        return self.ell[k - 1]

    @property
    def size(self) -> int:
        return sum(v + 1 - self.i for v in self.ell)

    def __str__(self) -> str:
        return f"i={self.i},n={self.n},ell={','.join(map(str, self.ell))}"


def all_sequences(n: int, i: int) -> list[LSequence]:
    """Every valid sequence for fixed (n, i); there are C(n+1, i) of them."""
    return [LSequence(i, n, c) for c in combinations_with_replacement(range(i - 1, n + 1), i)]


def all_sequences_upto(n_max: int, n_min: int = 1) -> list[LSequence]:
    return [s for n in range(n_min, n_max + 1) for i in range(1, n + 1) for s in all_sequences(n, i)]


def total_order_key(v: Vertex) -> tuple[int, int]:
    """Sort key of the total order extending the poset (smaller first).

    ``x_{k2,j2} < x_{k1,j1}`` iff ``j1-k1 > j2-k2``, or the differences agree
    and ``k2 < k1``.
    """
    k, j = v
    return (j - k, k)


def leq(a: Vertex, b: Vertex) -> bool:
    """``a <= b`` in the closed-form poset relation."""
    return b[0] <= a[0] and b[1] >= a[1]


@dataclass(frozen=True)
class PosetP:
    seq: LSequence
    vertices: tuple[Vertex, ...]
    covers: frozenset[tuple[Vertex, Vertex]]
    index: dict[Vertex, int] = field(compare=False, repr=False)

    @property
    def i(self) -> int:
        return self.seq.i

    @property
    def n(self) -> int:
        return self.seq.n

    def __len__(self) -> int:
        return len(self.vertices)

    def geq(self, a: Vertex, b: Vertex) -> bool:
        return leq(b, a)

    def comparable(self, a: Vertex, b: Vertex) -> bool:
        return leq(a, b) or leq(b, a)

    @cached_property
    def upper_covers(self) -> dict[Vertex, tuple[Vertex, ...]]:
        up: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for hi, lo in self.covers:
            up[lo].append(hi)
        return {v: tuple(sorted(u, key=total_order_key)) for v, u in up.items()}

    @cached_property
    def lower_covers(self) -> dict[Vertex, tuple[Vertex, ...]]:
        down: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for hi, lo in self.covers:
            down[hi].append(lo)
        return {v: tuple(sorted(d, key=total_order_key)) for v, d in down.items()}

    @cached_property
    def maximal(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if not self.upper_covers[v])

    @cached_property
    def minimal(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if not self.lower_covers[v])

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "n": self.n,
            "ell": list(self.seq.ell),
            "vertices": [list(v) for v in self.vertices],
            "covers": sorted([list(a), list(b)] for a, b in self.covers),
        }


def build_poset(seq: LSequence) -> PosetP:
    i = seq.i
    verts = [(k, j) for k in range(1, i + 1) for j in range(i, seq[k] + 1)]
    verts.sort(key=total_order_key)
    present = set(verts)
    covers = set()
    for k, j in verts:
        for lower in ((k + 1, j), (k, j - 1)):
            if lower in present:
                covers.add(((k, j), lower))
    return PosetP(seq, tuple(verts), frozenset(covers), {v: r for r, v in enumerate(verts)})


def maximal_chains(p: PosetP) -> list[tuple[Vertex, ...]]:
    """All maximal chains, each listed from its maximal element downwards."""
    chains: list[tuple[Vertex, ...]] = []

    def walk(path: list[Vertex]) -> None:
        below = p.lower_covers[path[-1]]
        if not below:
            chains.append(tuple(path))
            return
        for nxt in below:
            path.append(nxt)
            walk(path)
            path.pop()

    for top in p.maximal:
        walk([top])
    return chains


def antichains(p: PosetP) -> list[frozenset[Vertex]]:
    out: list[frozenset[Vertex]] = []
    verts = p.vertices

    def grow(start: int, chosen: list[Vertex]) -> None:
        out.append(frozenset(chosen))
        for r in range(start, len(verts)):
            v = verts[r]
            if all(not p.comparable(v, c) for c in chosen):
                chosen.append(v)
                grow(r + 1, chosen)
                chosen.pop()

    grow(0, [])
    return out


def filters(p: PosetP) -> list[frozenset[Vertex]]:
    """All up-closed subsets, built top-down along the reversed total order."""
    order = list(reversed(p.vertices))
    out: list[frozenset[Vertex]] = []

    def decide(r: int, chosen: set[Vertex]) -> None:
        if r == len(order):
            out.append(frozenset(chosen))
            return
        v = order[r]
        decide(r + 1, chosen)
        if all(u in chosen for u in p.upper_covers[v]):
            chosen.add(v)
            decide(r + 1, chosen)
            chosen.remove(v)

    decide(0, set())
    return out


def antichains_and_filters(p: PosetP) -> tuple[list[frozenset[Vertex]], list[frozenset[Vertex]]]:
    return antichains(p), filters(p)


def is_pure(p: PosetP) -> bool:
    """True iff all maximal chains have the same number of elements."""
    return len({len(c) for c in maximal_chains(p)}) <= 1
