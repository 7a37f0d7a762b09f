"""Chain and order polytopes of P_ell, lattice points, Ehrhart data and faces.

Points are integer tuples aligned with ``HPolytope.labels`` (the canonical
vertex order of the poset); :func:`as_mapping` turns one into a
``{(k, j): s}`` dict when a named view is wanted.
"""
from __future__ import annotations

from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import lattice
from .linalg import affine_rank, integer_rank
from .poset import LSequence, PosetP, Vertex, antichains, filters, maximal_chains

MultiExponent = tuple[int, ...]

CHAIN = "chain"
ORDER = "order"
KINDS = (CHAIN, ORDER)


class TooLargeError(ValueError):
    """Raised when a computation is refused by a size guard."""


@dataclass(frozen=True)
class HPolytope:
    """``{x : A x <= b}`` with integer data and labelled coordinates."""

    labels: tuple[Hashable, ...]
    A: tuple[tuple[int, ...], ...]
    b: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def inequalities(self) -> list[tuple[tuple[int, ...], int]]:
        return list(zip(self.A, self.b))

    def dilate(self, t: int) -> HPolytope:
        return HPolytope(self.labels, self.A, tuple(t * v for v in self.b))

    def contains(self, x: Sequence[int]) -> bool:
        return all(sum(a * v for a, v in zip(row, x)) <= bound for row, bound in zip(self.A, self.b))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "labels": [list(v) if isinstance(v, tuple) else v for v in self.labels],
            "inequalities": [{"coeffs": list(row), "bound": bound} for row, bound in zip(self.A, self.b)],
        }


def as_mapping(labels: Sequence[Hashable], point: Sequence[int]) -> dict:
    return {v: s for v, s in zip(labels, point) if s}


def support(labels: Sequence[Hashable], point: Sequence[int]) -> frozenset:
    return frozenset(v for v, s in zip(labels, point) if s)


def chain_polytope(p: PosetP, m: int = 1) -> HPolytope:
    if m < 1:
        raise ValueError("m must be >= 1")
    N = len(p)
    rows, rhs = [], []
    for r in range(N):
        rows.append(tuple(-1 if c == r else 0 for c in range(N)))
        rhs.append(0)
    for chain in maximal_chains(p):
        members = {p.index[v] for v in chain}
        rows.append(tuple(1 if c in members else 0 for c in range(N)))
        rhs.append(m)
    return HPolytope(p.vertices, tuple(rows), tuple(rhs))


def order_polytope(p: PosetP, m: int = 1) -> HPolytope:
    if m < 1:
        raise ValueError("m must be >= 1")
    N = len(p)

    def row(entries: dict[int, int]) -> tuple[int, ...]:
        return tuple(entries.get(c, 0) for c in range(N))

    rows, rhs = [], []
    for hi, lo in sorted(p.covers, key=lambda c: (p.index[c[1]], p.index[c[0]])):
        rows.append(row({p.index[lo]: 1, p.index[hi]: -1}))
        rhs.append(0)
    for v in p.minimal:
        rows.append(row({p.index[v]: -1}))
        rhs.append(0)
    for v in p.maximal:
        rows.append(row({p.index[v]: 1}))
        rhs.append(m)
    return HPolytope(p.vertices, tuple(rows), tuple(rhs))


def polytope_of(p: PosetP, kind: str, m: int = 1) -> HPolytope:
    if kind == CHAIN:
        return chain_polytope(p, m)
    if kind == ORDER:
        return order_polytope(p, m)
    raise ValueError(f"unknown polytope kind {kind!r}; expected one of {KINDS}")


# -- lattice points -------------------------------------------------------

def coordinate_bounds(h: HPolytope, max_rounds: int = 10_000) -> tuple[list[int], list[int]] | None:
    """Integer interval hull of each coordinate by constraint propagation.

    Returns ``None`` if the propagation proves the polytope has no integer
    point.  Raises ``ValueError`` if some coordinate stays unbounded.
    """
    N = h.dim
    lo: list[int | None] = [None] * N
    hi: list[int | None] = [None] * N
    for _ in range(max_rounds):
        changed = False
        for row, bound in zip(h.A, h.b):
            # minimal contribution of each term, None when unbounded below
            mins = []
            for a, l, u in zip(row, lo, hi):
                if a == 0:
                    mins.append(0)
                elif a > 0:
                    mins.append(None if l is None else a * l)
                else:
                    mins.append(None if u is None else a * u)
            unknown = [c for c, v in enumerate(mins) if v is None]
            if len(unknown) > 1:
                continue
            total = sum(v for v in mins if v is not None)
            for c, a in enumerate(row):
                if a == 0:
                    continue
                if unknown and unknown[0] != c:
                    continue
                rest = total - (mins[c] if mins[c] is not None else 0)
                slack = bound - rest
                if a > 0:
                    new = slack // a
                    if hi[c] is None or new < hi[c]:
                        hi[c] = new
                        changed = True
                else:
                    new = -(slack // -a)
                    if lo[c] is None or new > lo[c]:
                        lo[c] = new
                        changed = True
                if lo[c] is not None and hi[c] is not None and lo[c] > hi[c]:
                    return None
        if not changed:
            break
    missing = [h.labels[c] for c in range(N) if lo[c] is None or hi[c] is None]
    if missing:
        raise ValueError(f"polytope is unbounded along coordinates {missing}")
    return lo, hi  # type: ignore[return-value]


def _shifted(h: HPolytope):
    """Translate so every coordinate starts at 0; returns (A, b', ub, lo) or None."""
    bounds = coordinate_bounds(h)
    if bounds is None:
        return None
    lo, hi = bounds
    b = [bound - sum(a * l for a, l in zip(row, lo)) for row, bound in zip(h.A, h.b)]
    ub = [u - l for l, u in zip(lo, hi)]
    return h.A, b, ub, lo


def lattice_points(h: HPolytope, backend: str | None = None) -> list[MultiExponent]:
    """All integer points of ``h`` in lexicographic order of the coordinates."""
    if h.dim == 0:
        return [()] if all(v >= 0 for v in h.b) else []
    prep = _shifted(h)
    if prep is None:
        return []
    A, b, ub, lo = prep
    pts = lattice.enumerate_points(A, b, ub, backend)
    if any(lo):
        return [tuple(v + l for v, l in zip(pt, lo)) for pt in pts]
    return pts


def count_lattice_points(h: HPolytope, backend: str | None = None) -> int:
    if h.dim == 0:
        return int(all(v >= 0 for v in h.b))
    prep = _shifted(h)
    if prep is None:
        return 0
    A, b, ub, _ = prep
    return lattice.count_points(A, b, ub, backend)


# -- Minkowski sums and normality ----------------------------------------

def peel(p: PosetP, kind: str, s: Sequence[int]) -> MultiExponent:
    """One point of the 1-dilation that can be split off ``s``.

    For chain polytopes this is the indicator of the minimal elements of the
    support (an antichain); for order polytopes the indicator of the support
    (a filter).  ``s`` minus the result lies in the next smaller dilation.
    """
    supp = support(p.vertices, s)
    if kind == CHAIN:
        chosen = {v for v in supp if not any(u in supp for u in _strictly_below(p, v))}
    elif kind == ORDER:
        chosen = supp
    else:
        raise ValueError(f"unknown polytope kind {kind!r}")
    return tuple(1 if v in chosen else 0 for v in p.vertices)


def _strictly_below(p: PosetP, v: Vertex) -> list[Vertex]:
    k, j = v
    return [u for u in p.vertices if u != v and u[0] >= k and u[1] <= j]


def decompose(p: PosetP, kind: str, s: Sequence[int], m: int) -> list[MultiExponent]:
    """Write a point of the m-dilation as a sum of m points of the 1-dilation.

    Raises ``ValueError`` if the constructive peeling leaves the polytope,
    which would refute normality.
    """
    one = polytope_of(p, kind, 1)
    rest = tuple(s)
    parts = []
    for r in range(m, 0, -1):
        piece = peel(p, kind, rest)
        rest = tuple(a - c for a, c in zip(rest, piece))
        if not one.contains(piece) or not one.dilate(r - 1).contains(rest):
            raise ValueError(f"peeling failed for {s} at step {m - r + 1}")
        parts.append(piece)
    return parts


def sum_set(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> set[MultiExponent]:
    return {tuple(x + y for x, y in zip(u, v)) for u in a for v in b}


def minkowski_check(p: PosetP, kind: str, m: int, n: int, backend: str | None = None) -> bool:
    """Lattice points of the (m+n)-dilation equal the sum-set of those of m and n."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    base = polytope_of(p, kind, 1)
    pm = lattice_points(base.dilate(m), backend)
    pn = pm if n == m else lattice_points(base.dilate(n), backend)
    return sum_set(pm, pn) == set(lattice_points(base.dilate(m + n), backend))


# -- Ehrhart data ----------------------------------------------------------

def chain_counts(p: PosetP, t_max: int) -> list[int]:
    """``|t C_ell ∩ Z^N|`` for ``t = 0..t_max`` by a column-profile DP.

    Every maximal chain ends in the minimum, so a point lies in ``t C`` iff
    the largest chain sum through the minimum is at most ``t``.  The DP tracks
    for each row the largest chain sum from above ending in the most recent
    column and records the histogram of the final value.
    """
    seq = p.seq
    i = seq.i
    if len(p) == 0:
        return [1] * (t_max + 1)
    height = seq.n - i + 1
    states: dict[tuple[int, ...], int] = {tuple([-1] * height): 1}
    for k in range(1, i + 1):
        for j in range(seq[k], i - 1, -1):
            r = j - i
            nxt: dict[tuple[int, ...], int] = {}
            for prof, cnt in states.items():
                above = max(prof[r], prof[r + 1] if r + 1 < height and j + 1 <= seq[k] else -1, 0)
                for g in range(above, t_max + 1):
                    new = prof[:r] + (g,) + prof[r + 1:]
                    nxt[new] = nxt.get(new, 0) + cnt
            states = nxt
    hist = [0] * (t_max + 1)
    for prof, cnt in states.items():
        hist[prof[0]] += cnt
    out, acc = [], 0
    for v in hist:
        acc += v
        out.append(acc)
    return out


def _filter_masks(p: PosetP) -> list[int]:
    return [sum(1 << p.index[v] for v in f) for f in filters(p)]


def order_counts(p: PosetP, t_max: int) -> list[int]:
    """``|t O_ell ∩ Z^N|`` for ``t = 0..t_max`` via multichains of filters.

    A point of ``t O`` is a weakly decreasing sequence of ``t`` filters
    ``{x >= 1} ⊇ ... ⊇ {x >= t}``.
    """
    masks = _filter_masks(p)
    out = [1]
    # ways[f] = number of length-t sequences ending in filter f
    ways = {f: 1 for f in masks}
    for t in range(1, t_max + 1):
        if t > 1:
            ways = {g: sum(c for f, c in ways.items() if f & g == g) for g in masks}
        out.append(sum(ways.values()))
    return out[: t_max + 1]


def counts(p: PosetP, kind: str, t_max: int) -> list[int]:
    if kind == CHAIN:
        return chain_counts(p, t_max)
    if kind == ORDER:
        return order_counts(p, t_max)
    raise ValueError(f"unknown polytope kind {kind!r}")


def forward_differences(values: Sequence[int]) -> list[int]:
    """Coefficients ``a_k`` with ``values[t] = sum_k a_k C(t, k)``."""
    row = list(values)
    out = []
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out


def binomial_to_monomial(coeffs: Sequence[int]) -> list[Fraction]:
    """Convert ``sum a_k C(t, k)`` into monomial coefficients, constant first."""
    result = [Fraction(0)] * max(len(coeffs), 1)
    for k, a in enumerate(coeffs):
        if not a:
            continue
        # C(t, k) = t (t-1) ... (t-k+1) / k!
        poly = [Fraction(1)]
        for r in range(k):
            poly = [Fraction(0)] + poly
            for d in range(len(poly) - 1):
                poly[d] -= r * poly[d + 1]
        for d, c in enumerate(poly):
            result[d] += a * c / factorial(k)
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return result


def hstar_from_values(values: Sequence[int], dim: int) -> list[int]:
    """h*-vector from ``values[0..dim]`` of an Ehrhart polynomial of degree ``dim``."""
    return [sum((-1) ** j * comb(dim + 1, j) * values[k - j] for j in range(k + 1)) for k in range(dim + 1)]


@dataclass(frozen=True)
class EhrhartData:
    dim: int
    values: tuple[int, ...]
    binomial: tuple[int, ...]
    polynomial: tuple[Fraction, ...]
    hstar: tuple[int, ...]

    def __call__(self, t: int) -> int:
        return sum(a * comb(t, k) for k, a in enumerate(self.binomial))

    @property
    def normalized_volume(self) -> int:
        return sum(self.hstar)

    def is_palindromic(self) -> bool:
        h = list(self.hstar)
        while len(h) > 1 and h[-1] == 0:
            h.pop()
        return h == h[::-1]

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "values": list(self.values),
            "polynomial": [str(c) for c in self.polynomial],
            "hstar": list(self.hstar),
        }


def ehrhart_from_values(values: Sequence[int], dim: int) -> EhrhartData:
    if len(values) < dim + 2:
        raise ValueError(f"need {dim + 2} values to certify degree {dim}, got {len(values)}")
    diffs = forward_differences(values)
    if any(diffs[dim + 1:]):
        raise ValueError("values are not interpolated by a polynomial of the expected degree")
    binomial = diffs[: dim + 1]
    return EhrhartData(dim, tuple(values), tuple(binomial), tuple(binomial_to_monomial(binomial)), tuple(hstar_from_values(values, dim)))


def ehrhart(p: PosetP, kind: str) -> EhrhartData:
    """Ehrhart data at ``t = 0..N+1``; the extra value certifies the degree."""
    N = len(p)
    return ehrhart_from_values(counts(p, kind, N + 1), N)


# -- facets, vertices, faces -----------------------------------------------

def facet_counts_closed_form(seq: LSequence) -> tuple[int, int]:
    """(order facets, chain facets) from the sequence alone.

    Order facets are covers plus the minimum plus the maximal elements; the
    maximal elements are the tops ``(k, l_k)`` of the distinct nonempty
    column heights.  Chain facets are the coordinates plus the maximal chains,
    ``C(l_k - k, i - k)`` of them starting at each top.
    """
    i = seq.i
    if seq.size == 0:
        raise ValueError("the poset is empty: a point has no facets")
    tops = len({v for v in seq.ell if v >= i})
    vertical = sum(v - i for v in seq.ell if v >= i)
    horizontal = sum(seq[k] + 1 - i for k in range(1, i))
    order = tops + 1 + vertical + horizontal
    chain = seq.size + sum(comb(seq[k] - k, i - k) for k in range(1, i + 1) if seq[k] != seq[k - 1])
    return order, chain


def _tight(h: HPolytope, x: Sequence[int]) -> list[int]:
    return [r for r, (row, bound) in enumerate(zip(h.A, h.b)) if sum(a * v for a, v in zip(row, x)) == bound]


def is_vertex(h: HPolytope, x: Sequence[int]) -> bool:
    """Rank test: ``x`` is a vertex iff its tight constraints have rank ``dim``."""
    return integer_rank([h.A[r] for r in _tight(h, x)]) == h.dim


def lattice_vertices(h: HPolytope, backend: str | None = None) -> list[MultiExponent]:
    """Vertices of a lattice polytope (all vertices integral)."""
    return [x for x in lattice_points(h, backend) if is_vertex(h, x)]


def vertex_sets(p: PosetP, kind: str) -> list[MultiExponent]:
    """Indicator vectors of filters (order) or antichains (chain), each rank-certified."""
    if kind == ORDER:
        sets = filters(p)
    elif kind == CHAIN:
        sets = antichains(p)
    else:
        raise ValueError(f"unknown polytope kind {kind!r}")
    h = polytope_of(p, kind, 1)
    pts = sorted(tuple(1 if v in s else 0 for v in p.vertices) for s in sets)
    for x in pts:
        if not is_vertex(h, x):
            raise AssertionError(f"{x} is not a vertex of the {kind} polytope of {p.seq}")
    return pts


def _incidence(h: HPolytope, verts: Sequence[Sequence[int]]) -> list[int]:
    """Bitmask of vertices on each inequality's hyperplane."""
    masks = []
    for row, bound in zip(h.A, h.b):
        mask = 0
        for r, x in enumerate(verts):
            if sum(a * v for a, v in zip(row, x)) == bound:
                mask |= 1 << r
        masks.append(mask)
    return masks


def _points_of(mask: int, verts: Sequence[Sequence[int]]) -> list[Sequence[int]]:
    return [x for r, x in enumerate(verts) if mask >> r & 1]


def facet_masks(h: HPolytope, verts: Sequence[Sequence[int]] | None = None) -> list[int]:
    """Distinct vertex sets of facets (irredundant inequalities)."""
    if verts is None:
        verts = lattice_vertices(h)
    d = affine_rank(verts)
    seen: list[int] = []
    for mask in _incidence(h, verts):
        if mask in seen or mask == (1 << len(verts)) - 1:
            continue
        if affine_rank(_points_of(mask, verts)) == d - 1:
            seen.append(mask)
    return seen


def count_facets(h: HPolytope) -> int:
    return len(facet_masks(h))


def f_vector(h: HPolytope, max_dim: int = 10) -> list[int]:
    """``(f_0, ..., f_{d-1})`` by closing facet vertex sets under intersection."""
    if h.dim > max_dim:
        raise TooLargeError(f"f_vector refuses dimension {h.dim} > {max_dim}: face enumeration is exponential")
    verts = lattice_vertices(h)
    d = affine_rank(verts)
    if d <= 0:
        return []
    facets = facet_masks(h, verts)
    faces = set(facets)
    frontier = list(facets)
    while frontier:
        nxt = []
        for face in frontier:
            for fac in facets:
                sub = face & fac
                if sub and sub not in faces:
                    faces.add(sub)
                    nxt.append(sub)
        frontier = nxt
    f = [0] * d
    for face in faces:
        f[affine_rank(_points_of(face, verts))] += 1
    return f


# -- criteria ----------------------------------------------------------------

def unimodular_equivalence_criterion(seq: LSequence) -> bool:
    """``l_{i-2} < i+1`` or ``l_{i-1} < i+2``; indices below 1 count as satisfied."""
    i = seq.i
    if i - 2 < 1:
        return True
    return seq[i - 2] < i + 1 or seq[i - 1] < i + 2


def contains_x_subposet(p: PosetP) -> bool:
    """Whether some element has two incomparable elements above and two below."""
    verts = p.vertices

    def has_incomparable_pair(items: list[Vertex]) -> bool:
        return any(not p.comparable(a, b) for r, a in enumerate(items) for b in items[r + 1:])

    for c in verts:
        above = [v for v in verts if v != c and p.geq(v, c)]
        below = [v for v in verts if v != c and p.geq(c, v)]
        if has_incomparable_pair(above) and has_incomparable_pair(below):
            return True
    return False


def gorenstein_criterion(seq: LSequence) -> bool:
    """All column tops ``(k, l_k)`` with ``l_k != l_{k-1}`` share ``l_k - k``."""
    return len({seq[k] - k for k in range(1, seq.i + 1) if seq[k] != seq[k - 1]}) <= 1
