"""Gelfand-Tsetlin patterns for ``m * omega_{n+1-i}``, Kogan faces and characters.

Entries ``s_{k,j}`` sit in rows ``k = 0..n`` with ``j = 1..n+1-k``; row 0 is
fixed to ``(m, ..., m, 0, ..., 0)`` with ``n+1-i`` copies of ``m``.  The
equality ``A_{k,j}`` means ``x_{k,j} = x_{k+1,j}``.

Weights use the dualized convention: the coefficient of ``e_a`` is
``r_a - r_{a-1}`` for row sums ``r`` (``r_{n+1} = 0``).  This silently
exchanges ``i`` and ``n+1-i``, so patterns of ``m * omega_{n+1-i}`` carry
the weights of ``V(m * omega_i)``.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .poset import LSequence, Vertex, all_sequences, build_poset
from .polytope import HPolytope, lattice_points, order_polytope
from .weyl import Permutation, Word, from_word, is_reduced, tau_of, perm_of_ell

Entry = tuple[int, int]
Equality = tuple[int, int]
Weight = tuple[int, ...]


# -- weights and characters --------------------------------------------------

def normalize_weight(coords: Iterable[int]) -> Weight:
    """Representative of an sl_{n+1} weight with minimum coordinate 0."""
    c = tuple(coords)
    low = min(c)
    return tuple(v - low for v in c)


class Character(Counter):
    """Multiset of normalized weights."""

    @classmethod
    def of(cls, weights: Iterable[Sequence[int]]) -> Character:
        return cls(normalize_weight(w) for w in weights)

    def terms(self) -> list[tuple[Weight, int]]:
        return sorted((w, k) for w, k in self.items() if k)

    def to_json(self) -> list[dict]:
        return [{"weight": list(w), "mult": k} for w, k in self.terms()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Counter):
            return NotImplemented
        return {w: k for w, k in self.items() if k} == {w: k for w, k in other.items() if k}

    __hash__ = None  # type: ignore[assignment]


def format_weight(w: Sequence[int]) -> str:
    parts = []
    for a, c in enumerate(w, start=1):
        if c == 1:
            parts.append(f"e{a}")
        elif c:
            parts.append(f"{c}e{a}")
    return "+".join(parts) or "0"


# -- patterns ------------------------------------------------------------------

def top_row(n: int, i: int, m: int) -> tuple[int, ...]:
    return tuple(m if j <= n + 1 - i else 0 for j in range(1, n + 2))


def gt_entries(n: int) -> list[Entry]:
    """Free entries (rows 1..n) in row-major order; these are the coordinates."""
    return [(k, j) for k in range(1, n + 1) for j in range(1, n + 2 - k)]


@dataclass(frozen=True)
class GTPattern:
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, kj: Entry) -> int:
        k, j = kj
        return self.rows[k][j - 1]

    def is_valid(self) -> bool:
        n = self.n
        for k in range(1, n + 1):
            if len(self.rows[k]) != n + 1 - k:
                return False
            for j in range(1, n + 2 - k):
                if not self[(k - 1, j)] >= self[(k, j)] >= self[(k - 1, j + 1)]:
                    return False
        return True

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def pattern_from_point(n: int, i: int, m: int, point: Sequence[int]) -> GTPattern:
    rows = [top_row(n, i, m)]
    pos = 0
    for k in range(1, n + 1):
        width = n + 1 - k
        rows.append(tuple(point[pos:pos + width]))
        pos += width
    return GTPattern(tuple(rows))


def gt_weight(p: GTPattern) -> Weight:
    sums = [sum(r) for r in p.rows] + [0]
    return normalize_weight(sums[a] - sums[a - 1] for a in range(1, p.n + 2))


def char_of_patterns(patterns: Iterable[GTPattern]) -> Character:
    return Character.of(gt_weight(p) for p in patterns)


def _validate(n: int, i: int, m: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    if m < 1:
        raise ValueError("m must be >= 1")


def gt_polytope(n: int, i: int, m: int, equalities: Iterable[Equality] = ()) -> HPolytope:
    """Interlacing inequalities on rows 1..n, optionally cut by equalities ``A_{k,j}``."""
    _validate(n, i, m)
    entries = gt_entries(n)
    col = {e: c for c, e in enumerate(entries)}
    top = top_row(n, i, m)
    N = len(entries)
    rows: list[tuple[int, ...]] = []
    rhs: list[int] = []

    def add(terms: dict[Entry, int], const: int) -> None:
        # sum(coef * x) + const <= 0, with row-0 entries folded into const
        vec = [0] * N
        for e, a in terms.items():
            if e[0] == 0:
                const += a * top[e[1] - 1]
            else:
                vec[col[e]] += a
        rows.append(tuple(vec))
        rhs.append(-const)

    for k, j in entries:
        add({(k, j): 1, (k - 1, j): -1}, 0)
        add({(k - 1, j + 1): 1, (k, j): -1}, 0)
    for k, j in sorted(set(equalities)):
        add({(k, j): 1, (k + 1, j): -1}, 0)
        add({(k + 1, j): 1, (k, j): -1}, 0)
    return HPolytope(tuple(entries), tuple(rows), tuple(rhs))


# -- Kogan faces --------------------------------------------------------------

def equality_positions(n: int) -> list[Equality]:
    """All ``A_{k,j}``, in reading order (rows from the bottom, left to right)."""
    return [(k, j) for k in range(n - 1, -1, -1) for j in range(1, n - k + 1)]


@dataclass(frozen=True)
class KoganFace:
    n: int
    i: int
    m: int
    equalities: frozenset[Equality]

    def __post_init__(self) -> None:
        object.__setattr__(self, "equalities", frozenset(tuple(e) for e in self.equalities))
        _validate(self.n, self.i, self.m)
        valid = set(equality_positions(self.n))
        bad = sorted(e for e in self.equalities if e not in valid)
        if bad:
            raise ValueError(f"equalities {bad} are outside the triangle for n={self.n}")

    def with_equalities(self, eqs: Iterable[Equality]) -> KoganFace:
        return KoganFace(self.n, self.i, self.m, frozenset(eqs))

    def to_json(self) -> list[list[int]]:
        return [list(e) for e in sorted(self.equalities)]

    @cached_property
    def word(self) -> Word:
        return reading_word(self.n, self.equalities)


def reading_word(n: int, equalities: Iterable[Equality]) -> Word:
    eqs = set(equalities)
    return tuple(k + j for k, j in equality_positions(n) if (k, j) in eqs)


def kogan_type(f: KoganFace) -> tuple[Word, Permutation]:
    return f.word, from_word(f.word, f.n)


def is_kogan(f: KoganFace) -> bool:
    """Only equality sets with a reduced reading word count as Kogan faces."""
    return is_reduced(f.word, f.n)


def kogan_faces(n: int, i: int, m: int) -> dict[Permutation, list[KoganFace]]:
    """All Kogan faces grouped by type (brute force over equality subsets)."""
    pos = equality_positions(n)
    out: dict[Permutation, list[KoganFace]] = {}
    for r in range(len(pos) + 1):
        for sub in combinations(pos, r):
            word = reading_word(n, sub)
            if is_reduced(word, n):
                out.setdefault(from_word(word, n), []).append(KoganFace(n, i, m, frozenset(sub)))
    return out


def face_lattice_points(f: KoganFace) -> list[GTPattern]:
    h = gt_polytope(f.n, f.i, f.m, f.equalities)
    return [pattern_from_point(f.n, f.i, f.m, x) for x in lattice_points(h)]


# -- implicit equations --------------------------------------------------------

@dataclass(frozen=True)
class Closure:
    fixed: dict[Entry, str]  # entry -> "m" or "0"
    equalities: frozenset[Equality]
    diagonal_counts: tuple[int, ...]


def implicit_closure(f: KoganFace) -> Closure:
    """Entries forced to ``m`` or ``0`` and all equalities ``A_{k,j}`` implied by ``f``.

    Builds the preorder generated by interlacing and the equalities of ``f``
    on all entries (row 0 included).  An entry is forced to ``m`` when it
    dominates some top entry equal to ``m``, forced to ``0`` when a zero top
    entry dominates it, and two entries are forced equal when they are
    mutually comparable.  The result does not depend on ``m``.
    """
    n, i = f.n, f.i
    entries = [(k, j) for k in range(n + 1) for j in range(1, n + 2 - k)]
    above: dict[Entry, set[Entry]] = {e: set() for e in entries}  # e <= each member
    for k, j in entries:
        if k == 0:
            continue
        above[(k, j)].add((k - 1, j))
        above[(k - 1, j + 1)].add((k, j))
    for k, j in f.equalities:
        above[(k, j)].add((k + 1, j))
        above[(k + 1, j)].add((k, j))

    def reach(start: Entry, graph: dict[Entry, set[Entry]]) -> set[Entry]:
        seen = {start}
        stack = [start]
        while stack:
            for nxt in graph[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen

    below: dict[Entry, set[Entry]] = {e: set() for e in entries}
    for e, ups in above.items():
        for u in ups:
            below[u].add(e)
    top = top_row(n, i, 1)
    fixed: dict[Entry, str] = {}
    for j in range(1, n + 2):
        value = "m" if top[j - 1] else "0"
        # entries forced to m sit above an m-entry; entries forced to 0 sit below a 0-entry
        for e in reach((0, j), above if value == "m" else below):
            fixed[e] = value
    ups = {e: reach(e, above) for e in entries}

    def same(a: Entry, b: Entry) -> bool:
        if a in fixed and b in fixed:
            return fixed[a] == fixed[b]
        return b in ups[a] and a in ups[b]

    implied = frozenset(e for e in equality_positions(n) if same(e, (e[0] + 1, e[1])))
    counts = []
    for d in range(n + 1):
        c = 0
        for r in range(d + 1):
            e = (d - r, r + 1)
            if fixed.get(e) != "m":
                break
            c += 1
        counts.append(c)
    return Closure(fixed, implied, tuple(counts))


def constant_equalities(f: KoganFace) -> frozenset[Equality]:
    """Oracle for :func:`implicit_closure`: equalities constant over the m=1 lattice points."""
    pts = face_lattice_points(KoganFace(f.n, f.i, 1, f.equalities))
    return frozenset(e for e in equality_positions(f.n) if all(p[e] == p[(e[0] + 1, e[1])] for p in pts))


def expected_diagonal_counts(seq: LSequence) -> tuple[int, ...]:
    """Diagonal counts of the maximal face for ``seq``: ``k+1`` up to ``n-i``, then ``n - l_p``."""
    n, i = seq.n, seq.i
    return tuple(k + 1 for k in range(n - i + 1)) + tuple(n - seq[p] for p in range(1, i + 1))


# -- ladder moves ------------------------------------------------------------

class LadderMoveError(ValueError):
    pass


def ladder_move(f: KoganFace, j: int, k: int, size: int) -> KoganFace:
    """Replace ``A_{j+size,k}`` by ``A_{j,k+1}``; type is preserved on reduced faces."""
    eqs = f.equalities
    valid = set(equality_positions(f.n))
    if size < 1:
        raise LadderMoveError("move size must be >= 1")
    for e in ((j, k), (j, k + 1), (j + size, k), (j + size, k + 1)):
        if e not in valid and e != (j + size, k + 1):
            raise LadderMoveError(f"A_{e} is outside the triangle")
    for e in ((j, k), (j, k + 1), (j + size, k + 1)):
        if e in eqs:
            raise LadderMoveError(f"A_{{{e[0]},{e[1]}}} must be absent")
    for jj in range(j + 1, j + size):
        for kk in (k, k + 1):
            if (jj, kk) not in eqs:
                raise LadderMoveError(f"A_{{{jj},{kk}}} must be present")
    if (j + size, k) not in eqs:
        raise LadderMoveError(f"A_{{{j + size},{k}}} must be present")
    return f.with_equalities((eqs - {(j + size, k)}) | {(j, k + 1)})


def legal_ladder_moves(f: KoganFace) -> list[tuple[int, int, int]]:
    out = []
    n = f.n
    for j in range(0, n):
        for k in range(1, n + 1):
            for size in range(1, n + 1):
                try:
                    ladder_move(f, j, k, size)
                except LadderMoveError:
                    continue
                out.append((j, k, size))
    return out


# -- maximal faces and the order polytope ------------------------------------

def maximal_face_for_ell(seq: LSequence, m: int = 1) -> KoganFace:
    n, i = seq.n, seq.i
    eqs = {(seq[k] - i + k, c) for k in range(1, i + 1) for c in range(1, n - seq[k] + 1)}
    return KoganFace(n, i, m, frozenset(eqs))


def tau_word(seq: LSequence) -> Word:
    """Bracket form of ``tau``: for ``k = i..1`` the letters ``l_k-i+k+1 .. n-i+k``."""
    n, i = seq.n, seq.i
    word: list[int] = []
    for k in range(i, 0, -1):
        word.extend(range(seq[k] - i + k + 1, n - i + k + 1))
    return tuple(word)


def ell_for_tau(tau: Permutation, i: int) -> LSequence:
    """The sequence whose ``w * w0^{-1}`` is ``tau``; rejects other shapes."""
    for seq in all_sequences(tau.n, i):
        if tau_of(perm_of_ell(seq), i) == tau:
            return seq
    raise ValueError(f"{tau} is not of the form w * w0^-1 with w a minimal representative for i={i}")


def maximal_kogan_face(tau: Permutation, n: int, i: int, m: int = 1) -> KoganFace:
    if tau.n != n:
        raise ValueError("tau has the wrong size")
    face = maximal_face_for_ell(ell_for_tau(tau, i), m)
    if kogan_type(face)[1] != tau:
        raise AssertionError(f"maximal face for {tau} has type {kogan_type(face)[1]}")
    return face


def order_polytope_iso(f_max: KoganFace) -> dict[Vertex, Entry]:
    """Poset vertex ``x_{p,q}`` of P_ell -> free GT entry ``x_{p+q-i, n+1-q}``."""
    n, i = f_max.n, f_max.i
    for seq in all_sequences(n, i):
        if maximal_face_for_ell(seq, f_max.m).equalities == f_max.equalities:
            break
    else:
        raise ValueError("face is not a maximal Kogan face")
    p = build_poset(seq)
    return {(a, b): (a + b - i, n + 1 - b) for a, b in p.vertices}


def iso_is_bijection(f_max: KoganFace) -> bool:
    """Face lattice points restricted to the mapped entries equal the order-polytope points."""
    mapping = order_polytope_iso(f_max)
    n, i, m = f_max.n, f_max.i, f_max.m
    seq = next(s for s in all_sequences(n, i) if maximal_face_for_ell(s, m).equalities == f_max.equalities)
    p = build_poset(seq)
    closure = implicit_closure(f_max)
    free = {e for e in gt_entries(n) if e not in closure.fixed}
    if free != set(mapping.values()):
        return False
    pts = face_lattice_points(f_max)
    if not len(p):
        return len(pts) == 1
    image = sorted(tuple(pt[mapping[v]] for v in p.vertices) for pt in pts)
    return len(set(image)) == len(pts) and image == sorted(lattice_points(order_polytope(p, m)))
