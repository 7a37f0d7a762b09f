"""Brute-force oracle for PBW-graded Demazure modules of ``V(m * omega_i)``.

The module ``V(omega_i)`` is the exterior power with basis ``e_S``, ``S`` an
``i``-subset of ``1..n+1``; for ``m > 1`` we work inside the ``m``-fold
tensor power and take the cyclic span of ``v ⊗ ... ⊗ v``.  The root vector
``f_{(k,j)}`` sends letter ``k`` to ``j+1``.

Monomials ``f^s`` are exponent tuples aligned with the canonical vertex
order of P_ell (ascending in the total order on roots).
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement

from .gt import Weight, normalize_weight
from .linalg import ExactVectorSpace, add_scaled, solve_in_span
from .poset import LSequence, Vertex, build_poset
from .polytope import TooLargeError, chain_polytope, lattice_points
from .weyl import Root

BasisTensor = tuple[tuple[int, ...], ...]
Vector = dict
Monomial = tuple[int, ...]

MAX_N = 5
MAX_M = 3


def check_guard(n: int, m: int) -> None:
    if n > MAX_N or m > MAX_M:
        raise TooLargeError(
            f"the linear-algebra oracle is limited to n <= {MAX_N}, m <= {MAX_M} (got n={n}, m={m}); "
            "the ambient dimension grows like C(n+1, i)^m"
        )


def root_action(alpha: Root, vec: Vector) -> Vector:
    """``f_alpha`` acting on a vector of the tensor power, as a derivation."""
    k, j = alpha
    b = j + 1
    out: dict = {}
    for basis, c in vec.items():
        for pos, S in enumerate(basis):
            if k not in S or b in S:
                continue
            sign = -1 if sum(1 for x in S if k < x < b) % 2 else 1
            T = tuple(sorted((set(S) - {k}) | {b}))
            nb = basis[:pos] + (T,) + basis[pos + 1:]
            out[nb] = out.get(nb, 0) + sign * c
    return {t: c for t, c in out.items() if c}


def highest_vector(i: int, m: int) -> Vector:
    return {(tuple(range(1, i + 1)),) * m: 1}


def basis_weight(basis: BasisTensor, n: int) -> Weight:
    content = [0] * (n + 1)
    for S in basis:
        for a in S:
            content[a - 1] += 1
    return tuple(content)


def vector_weight(vec: Vector, n: int) -> Weight | None:
    if not vec:
        return None
    return basis_weight(next(iter(vec)), n)


def homogeneous_key(s: Sequence[int]) -> tuple:
    """Sort key of the homogeneous lexicographic order on monomials.

    Total degree first, then exponents compared starting from the largest
    root in the total order.
    """
    return (sum(s), tuple(reversed(s)))


def monomials(nvars: int, degree: int) -> list[Monomial]:
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for c in combo:
            e[c] += 1
        out.append(tuple(e))
    return sorted(out, key=homogeneous_key)


@dataclass
class DemazureOracle:
    """PBW filtration ``M_0 ⊆ M_1 ⊆ ...`` of ``U(n_w^-) · v`` for ``w`` given by ``seq``."""

    seq: LSequence
    m: int
    roots: tuple[Vertex, ...] = field(init=False)
    # spans[d][weight] = M_d ∩ (weight space)
    spans: list[dict[Weight, ExactVectorSpace]] = field(init=False, repr=False)
    new_by_degree: list[list[Vector]] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        check_guard(self.seq.n, self.m)
        self.roots = build_poset(self.seq).vertices
        self._build()

    @property
    def n(self) -> int:
        return self.seq.n

    @property
    def i(self) -> int:
        return self.seq.i

    @cached_property
    def v(self) -> Vector:
        return highest_vector(self.i, self.m)

    def _build(self) -> None:
        n = self.n
        current: dict[Weight, ExactVectorSpace] = {}
        w0 = vector_weight(self.v, n)
        current[w0] = ExactVectorSpace([self.v])
        self.spans = [{k: s.copy() for k, s in current.items()}]
        self.new_by_degree = [[self.v]]
        frontier = [self.v]
        while frontier:
            added = []
            for u in frontier:
                for alpha in self.roots:
                    img = root_action(alpha, u)
                    if not img:
                        continue
                    wt = vector_weight(img, n)
                    space = current.setdefault(wt, ExactVectorSpace())
                    if space.add(img):
                        added.append(img)
            if not added:
                break
            self.spans.append({k: s.copy() for k, s in current.items()})
            self.new_by_degree.append(added)
            frontier = added

    @property
    def graded_dims(self) -> list[int]:
        return [len(v) for v in self.new_by_degree]

    @property
    def dimension(self) -> int:
        return sum(self.graded_dims)

    @property
    def top_degree(self) -> int:
        return len(self.new_by_degree) - 1

    def graded_weights(self) -> Counter:
        """Multiset of ``(degree, normalized weight)`` over a graded basis."""
        return Counter((d, normalize_weight(vector_weight(u, self.n))) for d, vs in enumerate(self.new_by_degree) for u in vs)

    def below(self, degree: int, weight: Weight) -> ExactVectorSpace:
        """``M_{degree-1}`` in the given weight space."""
        if degree <= 0:
            return ExactVectorSpace()
        layer = self.spans[min(degree - 1, len(self.spans) - 1)]
        return layer.get(weight, ExactVectorSpace())

    def apply_monomial(self, s: Sequence[int], vec: Vector | None = None, order: Sequence[int] | None = None) -> Vector:
        """``f^s`` applied to ``vec`` (default ``v``); factors go largest root first unless ``order`` is given."""
        out = dict(self.v if vec is None else vec)
        idx = list(order) if order is not None else list(range(len(self.roots) - 1, -1, -1))
        for c in idx:
            for _ in range(s[c]):
                out = root_action(self.roots[c], out)
                if not out:
                    return out
        return out

    def monomial_weight(self, s: Sequence[int]) -> Weight:
        wt = list(vector_weight(self.v, self.n))
        for (k, j), c in zip(self.roots, s):
            wt[k - 1] -= c
            wt[j] += c
        return tuple(wt)

    def graded_class(self, s: Sequence[int], order: Sequence[int] | None = None) -> dict:
        """Image of ``f^s v`` in ``M_{|s|} / M_{|s|-1}``, as a reduced vector."""
        img = self.apply_monomial(s, order=order)
        return self.below(sum(s), self.monomial_weight(s)).reduce(img)


# -- theorem checks ----------------------------------------------------------

@dataclass(frozen=True)
class GradedResult:
    graded_dims: tuple[int, ...]
    dimension: int

    def to_json(self) -> dict:
        return {"graded_dims": list(self.graded_dims), "dimension": self.dimension}


def demazure_graded(seq: LSequence, m: int) -> GradedResult:
    o = DemazureOracle(seq, m)
    return GradedResult(tuple(o.graded_dims), o.dimension)


@dataclass(frozen=True)
class IndependenceCertificate:
    independent: bool
    graded_dims: tuple[int, ...]
    lattice_count: int
    per_degree: tuple[tuple[int, int, int], ...]  # (degree, monomials, rank)

    def to_json(self) -> dict:
        return {
            "independent": self.independent,
            "graded_dims": list(self.graded_dims),
            "lattice_count": self.lattice_count,
            "per_degree": [{"degree": d, "monomials": k, "rank": r} for d, k, r in self.per_degree],
        }


def monomial_independence(seq: LSequence, m: int, oracle: DemazureOracle | None = None) -> IndependenceCertificate:
    """Check that ``{f^s v : s in m C}`` maps onto a basis of every graded piece."""
    o = oracle or DemazureOracle(seq, m)
    pts = lattice_points(chain_polytope(build_poset(seq), m))
    by_degree: dict[int, list[Monomial]] = {}
    for s in pts:
        by_degree.setdefault(sum(s), []).append(s)
    dims = o.graded_dims
    ok = True
    rows = []
    for d in range(max(len(dims), max(by_degree, default=0) + 1)):
        group = by_degree.get(d, [])
        spaces: dict[Weight, ExactVectorSpace] = {}
        rank = 0
        for s in group:
            cls = o.graded_class(s)
            wt = o.monomial_weight(s)
            if spaces.setdefault(wt, ExactVectorSpace()).add(cls):
                rank += 1
        expected = dims[d] if d < len(dims) else 0
        rows.append((d, len(group), rank))
        ok = ok and rank == len(group) == expected
    return IndependenceCertificate(ok, tuple(dims), len(pts), tuple(rows))


def essential_monomials(seq: LSequence, m: int, oracle: DemazureOracle | None = None, key=homogeneous_key) -> list[Monomial]:
    """Greedy scan in increasing monomial order, keeping ``f^p v`` when it enlarges the span."""
    o = oracle or DemazureOracle(seq, m)
    N = len(o.roots)
    total = o.dimension
    kept: list[Monomial] = []
    spaces: dict[Weight, ExactVectorSpace] = {}
    d = 0
    while len(kept) < total:
        if d > o.top_degree:
            raise AssertionError("greedy scan ran past the top degree without spanning the module")
        for s in sorted(monomials(N, d), key=key):
            img = o.apply_monomial(s)
            if not img:
                continue
            if spaces.setdefault(o.monomial_weight(s), ExactVectorSpace()).add(img):
                kept.append(s)
        d += 1
    return sorted(kept)


# -- annihilation -------------------------------------------------------------

Poly = dict  # exponent tuple over all positive roots -> Fraction


def positive_roots(n: int) -> list[Root]:
    return [(k, j) for k in range(1, n + 1) for j in range(k, n + 1)]


def delta(gamma: Root, beta: Root) -> tuple[int, Root] | None:
    """``delta_gamma f_beta`` as ``(sign, root)``, or ``None`` when it vanishes.

    Structure constants of ``[e_gamma, f_beta]`` projected to the negative part:
    ``+f_{beta-gamma}`` when the roots share their upper end and ``-f_{beta-gamma}``
    when they share their lower end.
    """
    p, q = gamma
    k, j = beta
    if q == j and k < p:
        return 1, (k, p - 1)
    if p == k and q < j:
        return -1, (q + 1, j)
    return None


def apply_delta(gamma: Root, poly: Poly, index: dict[Root, int], roots: Sequence[Root]) -> Poly:
    out: Poly = {}
    for expo, c in poly.items():
        for r, a in enumerate(expo):
            if not a:
                continue
            hit = delta(gamma, roots[r])
            if hit is None:
                continue
            sign, target = hit
            e = list(expo)
            e[r] -= 1
            e[index[target]] += 1
            key = tuple(e)
            out[key] = out.get(key, 0) + sign * a * c
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class AnnihilationResult:
    generators: tuple[dict, ...]  # polynomials over R_w in canonical coordinates
    annihilate: bool
    quotient_dims: tuple[int, ...]
    graded_dims: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.annihilate and self.quotient_dims == self.graded_dims + (0,)

    def to_json(self) -> dict:
        return {
            "generators": len(self.generators),
            "annihilate": self.annihilate,
            "quotient_dims": list(self.quotient_dims),
            "graded_dims": list(self.graded_dims),
        }


def orbit_generators(seq: LSequence, m: int) -> list[dict]:
    """Span of ``U(n+) · f_alpha^{m+1}`` (alpha in R_w) intersected with ``S(n_w^-)``.

    Returned polynomials use exponent tuples over the roots of R_w in the
    canonical order.
    """
    n = seq.n
    roots = positive_roots(n)
    index = {r: c for c, r in enumerate(roots)}
    inside = build_poset(seq).vertices
    inside_set = set(inside)

    def key(expo: tuple[int, ...]) -> tuple:
        outside = any(a and roots[r] not in inside_set for r, a in enumerate(expo))
        return (0 if outside else 1, expo)

    space = ExactVectorSpace()
    frontier: list[Poly] = []
    for alpha in inside:
        e = [0] * len(roots)
        e[index[alpha]] = m + 1
        poly = {key(tuple(e)): 1}
        if space.add(poly):
            frontier.append(poly)
    while frontier:
        nxt = []
        for poly in frontier:
            raw = {k[1]: c for k, c in poly.items()}
            for gamma in roots:
                img = apply_delta(gamma, raw, index, roots)
                if not img:
                    continue
                keyed = {key(k): c for k, c in img.items()}
                if space.add(keyed):
                    nxt.append(keyed)
        frontier = nxt
    pos = [index[v] for v in inside]
    gens = []
    for pivot, row in sorted(space._rows.items()):
        if pivot[0] == 1:
            gens.append({tuple(k[1][c] for c in pos): v for k, v in row.items()})
    return gens


def evaluate(o: DemazureOracle, poly: dict) -> Vector:
    out: dict = {}
    for s, c in poly.items():
        add_scaled(out, o.apply_monomial(s), c)
    return out


def _quotient_dims(gens: list[dict], nvars: int, top: int) -> list[int]:
    dims = []
    for d in range(top + 1):
        total = len(monomials(nvars, d))
        space = ExactVectorSpace()
        for g in gens:
            gd = sum(next(iter(g)))
            if gd > d:
                continue
            for mono in monomials(nvars, d - gd):
                space.add({tuple(a + b for a, b in zip(k, mono)): c for k, c in g.items()})
        dims.append(total - space.dim)
    return dims


def annihilation_check(seq: LSequence, m: int, oracle: DemazureOracle | None = None) -> AnnihilationResult:
    """Orbit elements act as zero on ``v`` in the graded module, and cut out the right dimensions."""
    o = oracle or DemazureOracle(seq, m)
    gens = orbit_generators(seq, m)
    ok = True
    for g in gens:
        img = evaluate(o, g)
        if img and not o.below(m + 1, vector_weight(img, o.n)).contains(img):
            ok = False
            break
    dims = tuple(o.graded_dims)
    qd = tuple(_quotient_dims(gens, len(o.roots), len(dims)))
    return AnnihilationResult(tuple(gens), ok, qd, dims)


# -- straightening --------------------------------------------------------------

def on_single_chain(seq: LSequence, s: Sequence[int]) -> bool:
    p = build_poset(seq)
    supp = [v for v, c in zip(p.vertices, s) if c]
    return all(p.comparable(a, b) for a in supp for b in supp)


def straightening_witness(seq: LSequence, m: int, s: Sequence[int], oracle: DemazureOracle | None = None) -> dict[Monomial, Fraction]:
    """Coefficients ``c_t`` (``t`` smaller than ``s``, same degree) with ``f^s v ≡ sum c_t f^t v``.

    The congruence holds modulo ``M_{|s|-1}``.  An empty result means
    ``f^s v`` already vanishes there.
    """
    s = tuple(s)
    if sum(s) <= m:
        raise ValueError(f"need |s| > m, got |s|={sum(s)} with m={m}")
    if not on_single_chain(seq, s):
        raise ValueError("the support of s is not a chain")
    o = oracle or DemazureOracle(seq, m)
    d = sum(s)
    wt = o.monomial_weight(s)
    smaller = [t for t in monomials(len(o.roots), d) if homogeneous_key(t) < homogeneous_key(s) and o.monomial_weight(t) == wt]
    target = o.apply_monomial(s)
    cols = [o.apply_monomial(t) for t in smaller]
    sol = solve_in_span(cols, target, modulo=o.below(d, wt))
    if sol is None:
        raise AssertionError(f"no straightening relation for {s}")
    return {smaller[r]: c for r, c in sorted(sol.items())}


def abelian_class_agrees(o: DemazureOracle, s: Sequence[int]) -> bool:
    """The graded class of ``f^s v`` does not depend on the factor order."""
    order_a = list(range(len(o.roots) - 1, -1, -1))
    order_b = list(range(len(o.roots)))
    diff = dict(o.apply_monomial(s, order=order_a))
    add_scaled(diff, o.apply_monomial(s, order=order_b), -1)
    return not diff or o.below(sum(s), o.monomial_weight(s)).contains(diff)


def conjugated_weights(o: DemazureOracle, w) -> Counter:
    """Weights of the module moved by ``w``: ``e_a -> e_{w(a)}``."""
    from .crystal import apply_weyl

    out: Counter = Counter()
    for vs in o.new_by_degree:
        for u in vs:
            out[normalize_weight(apply_weyl(w, vector_weight(u, o.n)))] += 1
    return out


def lattice_graded_weights(seq: LSequence, m: int, oracle: DemazureOracle | None = None) -> Counter:
    o = oracle or DemazureOracle(seq, m)
    pts = lattice_points(chain_polytope(build_poset(seq), m))
    return Counter((sum(s), normalize_weight(o.monomial_weight(s))) for s in pts)


def sum_set_in_basis(seq: LSequence, m: int) -> bool:
    """Lattice points of ``m C`` plus those of ``C`` lie in the certified basis index set at ``m+1``."""
    p = build_poset(seq)
    base = lattice_points(chain_polytope(p, 1))
    pm = lattice_points(chain_polytope(p, m))
    target = set(lattice_points(chain_polytope(p, m + 1)))
    cert = monomial_independence(seq, m + 1)
    sums = {tuple(a + b for a, b in zip(x, y)) for x in pm for y in base}
    return cert.independent and sums <= target


def wedge_support(vec: Vector) -> list[tuple[BasisTensor, int]]:
    return sorted(vec.items())


def iter_roots(seq: LSequence) -> Iterable[Vertex]:
    return build_poset(seq).vertices
