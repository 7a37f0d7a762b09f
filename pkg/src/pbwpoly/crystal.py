"""Kashiwara crystal on rectangular tableaux of shape ``m * omega_i``.

A tableau is a tuple of ``m`` columns, each a strictly increasing tuple of
``i`` letters from ``1..n+1``, with rows weakly increasing left to right.

Bracketing: the reading word lists columns left to right, each column from
bottom to top.  A letter ``k+1`` pairs with a later (right) letter ``k``;
``f_k`` raises the rightmost unpaired ``k`` and ``e_k`` lowers the leftmost
unpaired ``k+1``.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations

from .gt import Character, GTPattern, gt_weight, normalize_weight
from .poset import LSequence, build_poset
from .polytope import chain_polytope, lattice_points
from .weyl import Permutation, Word, is_reduced, perm_of_ell, word_of_ell

Column = tuple[int, ...]
Tableau = tuple[Column, ...]


def highest(n: int, i: int, m: int) -> Tableau:
    """``b_{m omega_i}``: row ``r`` is constant ``r``."""
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    return (tuple(range(1, i + 1)),) * m


def is_semistandard(t: Tableau, n: int) -> bool:
    for col in t:
        if any(a >= b for a, b in zip(col, col[1:])) or col[0] < 1 or col[-1] > n + 1:
            return False
    return all(a <= b for left, right in zip(t, t[1:]) for a, b in zip(left, right))


def all_tableaux(n: int, i: int, m: int) -> list[Tableau]:
    cols = list(combinations(range(1, n + 2), i))
    out: list[Tableau] = []

    def grow(prefix: list[Column]) -> None:
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for c in cols:
            if not prefix or all(a <= b for a, b in zip(prefix[-1], c)):
                prefix.append(c)
                grow(prefix)
                prefix.pop()

    grow([])
    return out


def _reading(t: Tableau) -> list[tuple[int, int]]:
    """Cell positions ``(column, row)`` in reading order."""
    return [(c, r) for c in range(len(t)) for r in range(len(t[c]) - 1, -1, -1)]


def _unpaired(t: Tableau, k: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Unpaired cells holding ``k`` and ``k+1``, in reading order."""
    open_upper: list[tuple[int, int]] = []
    free_lower: list[tuple[int, int]] = []
    for c, r in _reading(t):
        v = t[c][r]
        if v == k + 1:
            open_upper.append((c, r))
        elif v == k:
            if open_upper:
                open_upper.pop()
            else:
                free_lower.append((c, r))
    return free_lower, open_upper


def _replace(t: Tableau, cell: tuple[int, int], value: int) -> Tableau:
    c, r = cell
    col = list(t[c])
    col[r] = value
    return t[:c] + (tuple(col),) + t[c + 1:]


def crystal_f(t: Tableau, k: int) -> Tableau | None:
    lower, _ = _unpaired(t, k)
    if not lower:
        return None
    return _replace(t, lower[-1], k + 1)


def crystal_e(t: Tableau, k: int) -> Tableau | None:
    _, upper = _unpaired(t, k)
    if not upper:
        return None
    return _replace(t, upper[0], k)


def f_string(t: Tableau, k: int) -> list[Tableau]:
    """``t, f_k t, f_k^2 t, ...`` until the operator vanishes."""
    out = [t]
    while (nxt := crystal_f(out[-1], k)) is not None:
        out.append(nxt)
    return out


def demazure_crystal(word: Sequence[int], n: int, i: int, m: int) -> frozenset[Tableau]:
    """``{f_{a1}^{t1} ... f_{ar}^{tr} b : t >= 0}`` by saturating letters right to left."""
    if not is_reduced(word, n):
        raise ValueError(f"word {list(word)} is not reduced")
    current = {highest(n, i, m)}
    for a in reversed(word):
        current = {u for t in current for u in f_string(t, a)}
    return frozenset(current)


def tableau_weight(t: Tableau, n: int) -> tuple[int, ...]:
    content = [0] * (n + 1)
    for col in t:
        for v in col:
            content[v - 1] += 1
    return tuple(content)


def char_of(tableaux: Iterable[Tableau], n: int) -> Character:
    return Character.of(tableau_weight(t, n) for t in tableaux)


def a_s_product(p: GTPattern, i: int, m: int) -> Tableau | None:
    """Apply the operator product attached to a GT point to ``b_{m omega_i}``.

    Factors are applied for ``k = 0..i-1`` in turn, and inside factor ``k``
    the operators ``f_r^{m - s_{r, n-k+1-r}}`` for ``r = i-k`` up to ``n-k``.
    Returns ``None`` if some operator vanishes, which happens for a few
    points once ``m >= 2``.
    """
    n = p.n
    t: Tableau | None = highest(n, i, m)
    for k in range(i):
        for r in range(i - k, n - k + 1):
            for _ in range(m - p[(r, n - k + 1 - r)]):
                t = crystal_f(t, r)
                if t is None:
                    return None
    return t


def layers(p: GTPattern, m: int) -> list[GTPattern]:
    """Threshold layers ``[s >= c]`` for ``c = 1..m``; each is a point of the ``m = 1`` polytope."""
    return [GTPattern(tuple(tuple(int(v >= c) for v in row) for row in p.rows)) for c in range(1, m + 1)]


def a_s_map(p: GTPattern, i: int, m: int) -> Tableau:
    """Weight-preserving bijection from GT points to tableaux of shape ``m * omega_i``.

    Column ``c`` is the operator product of the layer ``[s >= c]`` applied to
    ``b_{omega_i}``.  For ``m = 1`` this is :func:`a_s_product`; for larger
    ``m`` it agrees with it wherever the latter does not vanish.
    """
    cols = []
    for layer in layers(p, m):
        t = a_s_product(layer, i, 1)
        if t is None:
            raise ValueError(f"an operator vanished on layer {layer.to_json()} of {p.to_json()}")
        cols.append(t[0])
    return tuple(cols)


def apply_weyl(w: Permutation, weight: Sequence[int]) -> tuple[int, ...]:
    """``w(e_a) = e_{w(a)}``."""
    out = [0] * len(weight)
    for a, c in enumerate(weight, start=1):
        out[w(a) - 1] = c
    return tuple(out)


def polytope_character(seq: LSequence, m: int) -> Character:
    """``e^{w(m omega_i)} * sum_s e^{w(-wt s)}`` over lattice points of ``m C_ell``.

    Here ``wt s = sum_alpha s_alpha alpha`` with ``alpha_{k,j} = e_k - e_{j+1}``.
    """
    n, i = seq.n, seq.i
    w = perm_of_ell(seq)
    p = build_poset(seq)
    weights = []
    for s in lattice_points(chain_polytope(p, m)):
        vec = [m if a < i else 0 for a in range(n + 1)]
        for (k, j), c in zip(p.vertices, s):
            vec[k - 1] -= c
            vec[j] += c
        weights.append(apply_weyl(w, vec))
    return Character.of(weights)


def demazure_character(seq: LSequence, m: int) -> Character:
    return char_of(demazure_crystal(word_of_ell(seq)[0], seq.n, seq.i, m), seq.n)


def is_weight_preserving(p: GTPattern, i: int, m: int) -> bool:
    return gt_weight(p) == normalize_weight(tableau_weight(a_s_map(p, i, m), p.n))


def tableau_to_json(t: Tableau) -> list[list[int]]:
    return [list(c) for c in t]


def reduced_words(w: Permutation) -> list[Word]:
    """All reduced words, by recursion on right descents."""
    win = w.window
    if w.is_identity():
        return [()]
    out = []
    for a in range(len(win) - 1):
        if win[a] > win[a + 1]:
            swapped = list(win)
            swapped[a], swapped[a + 1] = swapped[a + 1], swapped[a]
            for prefix in reduced_words(Permutation(tuple(swapped))):
                out.append(prefix + (a + 1,))
    return out
