"""Grassmannian permutations of S_{n+1} and their root combinatorics.

Permutations are windows ``(w(1), ..., w(n+1))``.  A word ``s_{a1} ... s_{ar}``
evaluates by starting from the identity and swapping window positions
``a, a+1`` for each letter from left to right, so ``s_1 s_3 s_2`` is
``[2, 4, 1, 3]``.  The root ``alpha_{k,j} = e_k - e_{j+1}`` is the pair
``(k, j)``.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .poset import LSequence, PosetP, Vertex, build_poset

Root = tuple[int, int]
Word = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "window", tuple(int(v) for v in self.window))
        if sorted(self.window) != list(range(1, len(self.window) + 1)):
            raise ValueError(f"{list(self.window)} is not a permutation of 1..{len(self.window)}")

    @property
    def n(self) -> int:
        return len(self.window) - 1

    def __call__(self, k: int) -> int:
        return self.window[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: ``(self * other)(k) = self(other(k))``."""
        return Permutation(tuple(self(other(k)) for k in range(1, len(self.window) + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.window)
        for k, v in enumerate(self.window, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def length(self) -> int:
        w = self.window
        return sum(1 for a, b in combinations(range(len(w)), 2) if w[a] > w[b])

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.window, start=1))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.window)) + "]"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 2)))


def from_word(word: Iterable[int], n: int) -> Permutation:
    w = list(range(1, n + 2))
    for a in word:
        if not 1 <= a <= n:
            raise ValueError(f"letter s_{a} outside 1..{n}")
        w[a - 1], w[a] = w[a], w[a - 1]
    return Permutation(tuple(w))


def word_str(word: Sequence[int]) -> str:
    return "".join(f"s{a}" for a in word) or "e"


def parse_word(text: str) -> Word:
    """Parse ``"s1s3s2"``, ``"1,3,2"`` or ``"e"`` (empty)."""
    text = text.strip()
    if text in ("", "e", "id"):
        return ()
    if "s" in text:
        parts = [p for p in text.replace(" ", "").split("s") if p]
    else:
        parts = [p for p in text.replace(" ", ",").split(",") if p]
    return tuple(int(p) for p in parts)


def reduced_word(w: Permutation) -> Word:
    """Some reduced word, peeling right descents."""
    win = list(w.window)
    letters: list[int] = []
    while True:
        for a in range(len(win) - 1):
            if win[a] > win[a + 1]:
                win[a], win[a + 1] = win[a + 1], win[a]
                letters.append(a + 1)
                break
        else:
            break
    return tuple(reversed(letters))


def is_reduced(word: Sequence[int], n: int) -> bool:
    return from_word(word, n).length() == len(word)


def is_minimal_rep(w: Permutation, i: int) -> bool:
    """Increasing on positions ``1..i`` and on ``i+1..n+1``."""
    win = w.window
    return all(win[a] < win[a + 1] for a in range(len(win) - 1) if a + 1 != i)


def minimal_representatives(n: int, i: int) -> list[Permutation]:
    """All of W^i, sorted by window."""
    full = range(1, n + 2)
    out = []
    for head in combinations(full, i):
        rest = tuple(v for v in full if v not in head)
        out.append(Permutation(head + rest))
    return sorted(out)


def inversion_roots(w: Permutation) -> frozenset[Root]:
    n = w.n
    return frozenset((k, j) for k in range(1, n + 1) for j in range(k, n + 1) if w(j + 1) < w(k))


def ell_of(w: Permutation, i: int) -> LSequence:
    if not is_minimal_rep(w, i):
        raise ValueError(f"{w} is not a minimal coset representative for i={i}")
    roots = inversion_roots(w)
    n = w.n
    ell = tuple(max([i - 1] + [j for j in range(i, n + 1) if (k, j) in roots]) for k in range(1, i + 1))
    return LSequence(i, n, ell)


def word_of_ell(seq: LSequence) -> tuple[Word, Permutation]:
    """Reduced word built from descending brackets ``s_{l_k-(i-k)} ... s_k``."""
    i = seq.i
    word: list[int] = []
    for k in range(1, i + 1):
        word.extend(range(seq[k] - (i - k), k - 1, -1))
    return tuple(word), from_word(word, seq.n)


def perm_of_ell(seq: LSequence) -> Permutation:
    return word_of_ell(seq)[1]


def longest_grassmannian(n: int, i: int) -> Permutation:
    return perm_of_ell(LSequence(i, n, (n,) * i))


def tau_of(w: Permutation, i: int) -> Permutation:
    """``w * w0^{-1}`` with ``w0`` the longest element of W^i."""
    return w * longest_grassmannian(w.n, i).inverse()


def _check_minimal(w: Permutation, i: int, name: str) -> None:
    if not is_minimal_rep(w, i):
        raise ValueError(f"{name}={w} is not a minimal coset representative for i={i}")


def bruhat_leq(tau: Permutation, w: Permutation, i: int | None = None) -> bool:
    """Bruhat order by comparing sorted prefixes of the windows.

    With ``i`` given both arguments must lie in W^i, where only the prefix of
    length ``i`` can differ.
    """
    if tau.n != w.n:
        raise ValueError("permutations of different size")
    if i is not None:
        _check_minimal(tau, i, "tau")
        _check_minimal(w, i, "w")
    for p in range(1, len(w.window)):
        if any(a > b for a, b in zip(sorted(tau.window[:p]), sorted(w.window[:p]))):
            return False
    return True


def bruhat_leq_subword(tau: Permutation, w: Permutation) -> bool:
    """Subword criterion; exponential, used as an oracle for small ranks."""
    word = reduced_word(w)
    target = tau.window
    n = w.n
    for r in range(len(word) + 1):
        for idx in combinations(range(len(word)), r):
            if from_word((word[a] for a in idx), n).window == target:
                return True
    return False


# -- root poset ------------------------------------------------------------

def root_vector(alpha: Root, n: int) -> tuple[int, ...]:
    k, j = alpha
    vec = [0] * (n + 1)
    vec[k - 1] += 1
    vec[j] -= 1
    return tuple(vec)


def root_geq(a: Root, b: Root) -> bool:
    """``a >= b`` in the root poset: ``a - b`` is a nonnegative sum of positive roots.

    On type A roots this is interval containment.
    """
    return a[0] <= b[0] and a[1] >= b[1]


def root_order_closure(n: int) -> set[tuple[Root, Root]]:
    """Pairs ``(a, b)`` with ``a >= b``, as the transitive closure of "difference is a positive root"."""
    roots = [(k, j) for k in range(1, n + 1) for j in range(k, n + 1)]
    vec = {r: root_vector(r, n) for r in roots}
    positive = set(vec.values())
    rel = {(a, a) for a in roots}
    rel |= {(a, b) for a in roots for b in roots if tuple(x - y for x, y in zip(vec[a], vec[b])) in positive}
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


def poset_isomorphism(w: Permutation, i: int) -> dict[Root, Vertex]:
    """The map ``alpha_{p,q} -> x_{p,q}``, checked to be an order isomorphism onto P_ell."""
    roots = inversion_roots(w)
    p = build_poset(ell_of(w, i))
    if set(roots) != set(p.vertices):
        raise AssertionError(f"inversion set of {w} does not match the vertices of P_ell")
    for a in roots:
        for b in roots:
            if root_geq(a, b) != p.geq(a, b):
                raise AssertionError(f"order mismatch between roots {a}, {b}")
    return {r: r for r in sorted(roots)}


def is_poset_isomorphic(w: Permutation, i: int, closure: set[tuple[Root, Root]] | None = None) -> bool:
    """Independent check against the closure of the positive-root relation."""
    roots = inversion_roots(w)
    p: PosetP = build_poset(ell_of(w, i))
    if set(roots) != set(p.vertices):
        return False
    rel = closure if closure is not None else root_order_closure(w.n)
    return all(((a, b) in rel) == p.geq(a, b) for a in roots for b in roots)


@dataclass(frozen=True)
class FaceRestriction:
    zero_roots: frozenset[Root]
    face_points: tuple[tuple[int, ...], ...]
    tau_points: tuple[tuple[int, ...], ...]

    @property
    def matches(self) -> bool:
        return self.face_points == self.tau_points


def face_restriction(tau: Permutation, w: Permutation, i: int, m: int = 1) -> FaceRestriction:
    """Compare the face ``{s_alpha = 0 : alpha in R_w minus R_tau}`` of ``m C_w`` with ``m C_tau``.

    Points on both sides are written in the canonical coordinates of P_{ell_tau}.
    """
    from .polytope import chain_polytope, lattice_points

    if not bruhat_leq(tau, w, i):
        raise ValueError(f"tau={tau} is not below w={w} in the Bruhat order")
    pw = build_poset(ell_of(w, i))
    pt = build_poset(ell_of(tau, i))
    zero = frozenset(inversion_roots(w) - inversion_roots(tau))
    keep = [pw.index[v] for v in pt.vertices]
    zero_idx = [pw.index[v] for v in zero]
    face = sorted(tuple(x[c] for c in keep) for x in lattice_points(chain_polytope(pw, m)) if all(x[c] == 0 for c in zero_idx))
    own = sorted(lattice_points(chain_polytope(pt, m)))
    return FaceRestriction(zero, tuple(face), tuple(own))
