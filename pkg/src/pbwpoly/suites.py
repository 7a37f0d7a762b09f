"""Verification suites: each one sweeps a parameter range and checks an identity.

A suite expands a :class:`Ranges` into cases (plain dicts, so they pickle
across worker processes) and checks each case independently.  Failures carry
the full input and both sides of the violated identity.
"""
from __future__ import annotations

import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Any

from . import crystal, gt, pbw, polytope, weyl
from .poset import LSequence, all_sequences, build_poset, is_pure


class UsageError(ValueError):
    """Bad suite name, bad range or a range outside a guard."""


@dataclass(frozen=True)
class Ranges:
    n: int | None = None
    i: int | None = None
    ell: tuple[int, ...] | None = None
    m: int | None = None
    n_max: int | None = None
    m_max: int | None = None

    def to_json(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.__dict__.items() if v is not None}


@dataclass
class CaseResult:
    params: dict
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"input": self.params, "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    suite: str
    ranges: dict
    results: list[CaseResult]
    wall_time: float | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CaseResult]:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> dict:
        doc: dict[str, Any] = {
            "suite": self.suite,
            "ranges": self.ranges,
            "passed": self.passed,
            "cases": len(self.results),
            "failures": [r.to_json() for r in self.failures],
            "results": [r.to_json() for r in self.results],
        }
        if self.wall_time is not None:
            doc["wall_time"] = round(self.wall_time, 3)
        return doc


@dataclass(frozen=True)
class Suite:
    name: str
    check: Callable[[dict], CaseResult]
    shape: str  # "seq", "seq_m", "ni", "ni_m"
    n_max: int
    m_max: int = 1
    guard_n: int = 8
    guard_m: int = 4
    skip_empty: bool = False
    doc: str = ""


def seq_of(params: dict) -> LSequence:
    return LSequence(params["i"], params["n"], tuple(params["ell"]))


def params_of(seq: LSequence, **extra) -> dict:
    return {"n": seq.n, "i": seq.i, "ell": list(seq.ell), **extra}


# -- polytope suites ------------------------------------------------------------

def check_ehrhart(params: dict) -> CaseResult:
    seq = seq_of(params)
    p = build_poset(seq)
    t_max = seq.size + 1
    chain = polytope.chain_counts(p, t_max)
    order = polytope.order_counts(p, t_max)
    if chain != order:
        return CaseResult(params, False, {"chain": chain, "order": order})
    data = polytope.ehrhart_from_values(chain, seq.size)
    return CaseResult(params, True, {"values": chain, "hstar": list(data.hstar)})


def check_minkowski(params: dict) -> CaseResult:
    seq = seq_of(params)
    p = build_poset(seq)
    total = params["m"]
    checked = 0
    for kind in polytope.KINDS:
        for a in range(1, total):
            for b in range(1, total - a + 1):
                if not polytope.minkowski_check(p, kind, a, b):
                    lhs = polytope.sum_set(
                        polytope.lattice_points(polytope.polytope_of(p, kind, a)),
                        polytope.lattice_points(polytope.polytope_of(p, kind, b)),
                    )
                    rhs = polytope.lattice_points(polytope.polytope_of(p, kind, a + b))
                    return CaseResult(params, False, {"kind": kind, "m": a, "n": b, "sum_set": len(lhs), "dilation": len(rhs)})
                checked += 1
        for m in range(2, total + 1):
            for s in polytope.lattice_points(polytope.polytope_of(p, kind, m)):
                try:
                    polytope.decompose(p, kind, s, m)
                except ValueError as exc:
                    return CaseResult(params, False, {"kind": kind, "m": m, "point": list(s), "error": str(exc)})
    return CaseResult(params, True, {"identities": checked})


def check_facets(params: dict) -> CaseResult:
    seq = seq_of(params)
    p = build_poset(seq)
    closed = polytope.facet_counts_closed_form(seq)
    counted = (polytope.count_facets(polytope.order_polytope(p)), polytope.count_facets(polytope.chain_polytope(p)))
    detail = {"closed_form": list(closed), "irredundant": list(counted)}
    return CaseResult(params, closed == counted, detail)


def check_vertices(params: dict) -> CaseResult:
    seq = seq_of(params)
    p = build_poset(seq)
    sizes = {}
    for kind in polytope.KINDS:
        combinatorial = polytope.vertex_sets(p, kind)
        geometric = polytope.lattice_vertices(polytope.polytope_of(p, kind))
        if sorted(combinatorial) != sorted(geometric):
            return CaseResult(params, False, {"kind": kind, "combinatorial": combinatorial, "geometric": geometric})
        sizes[kind] = len(combinatorial)
    return CaseResult(params, sizes[polytope.CHAIN] == sizes[polytope.ORDER], sizes)


def check_unimodular(params: dict) -> CaseResult:
    seq = seq_of(params)
    p = build_poset(seq)
    crit = polytope.unimodular_equivalence_criterion(seq)
    order_f, chain_f = polytope.facet_counts_closed_form(seq)
    fv_chain = polytope.f_vector(polytope.chain_polytope(p))
    fv_order = polytope.f_vector(polytope.order_polytope(p))
    detail = {
        "criterion": crit,
        "facets": [order_f, chain_f],
        "f_vector_chain": fv_chain,
        "f_vector_order": fv_order,
    }
    return CaseResult(params, crit == (order_f == chain_f) == (fv_chain == fv_order), detail)


def check_gorenstein(params: dict) -> CaseResult:
    seq = seq_of(params)
    p = build_poset(seq)
    data = polytope.ehrhart(p, polytope.CHAIN)
    crit = polytope.gorenstein_criterion(seq)
    pure = is_pure(p)
    pal = data.is_palindromic()
    detail = {"criterion": crit, "pure": pure, "palindromic": pal, "hstar": list(data.hstar)}
    return CaseResult(params, crit == pure == pal, detail)


# -- Weyl group suites -------------------------------------------------------------

def check_weyl_bijection(params: dict) -> CaseResult:
    n, i = params["n"], params["i"]
    reps = weyl.minimal_representatives(n, i)
    if len(reps) != comb(n + 1, i):
        return CaseResult(params, False, {"representatives": len(reps), "expected": comb(n + 1, i)})
    closure = weyl.root_order_closure(n)
    seen = set()
    for w in reps:
        seq = weyl.ell_of(w, i)
        word, back = weyl.word_of_ell(seq)
        problems = []
        if back != w:
            problems.append("round trip")
        if len(word) != seq.size or not weyl.is_reduced(word, n):
            problems.append("word length")
        if not weyl.is_poset_isomorphic(w, i, closure):
            problems.append("poset isomorphism")
        if problems:
            return CaseResult(params, False, {"w": list(w.window), "ell": list(seq.ell), "word": list(word), "problems": problems})
        seen.add(seq)
    if seen != set(all_sequences(n, i)):
        return CaseResult(params, False, {"sequences_hit": len(seen), "sequences": comb(n + 1, i)})
    return CaseResult(params, True, {"representatives": len(reps)})


def check_poset_iso(params: dict) -> CaseResult:
    n, i = params["n"], params["i"]
    closure = weyl.root_order_closure(n)
    for w in weyl.minimal_representatives(n, i):
        if not weyl.is_poset_isomorphic(w, i, closure):
            return CaseResult(params, False, {"w": list(w.window), "roots": sorted(weyl.inversion_roots(w))})
    return CaseResult(params, True, {"checked": comb(n + 1, i)})


def check_bruhat_shadow(params: dict) -> CaseResult:
    n, i, m = params["n"], params["i"], params["m"]
    reps = weyl.minimal_representatives(n, i)
    faces = 0
    for tau in reps:
        for w in reps:
            sides = {
                "prefix": weyl.bruhat_leq(tau, w, i),
                "subword": weyl.bruhat_leq_subword(tau, w),
                "roots": weyl.inversion_roots(tau) <= weyl.inversion_roots(w),
                "ell": all(a <= b for a, b in zip(weyl.ell_of(tau, i).ell, weyl.ell_of(w, i).ell)),
            }
            if len(set(sides.values())) != 1:
                return CaseResult(params, False, {"tau": list(tau.window), "w": list(w.window), **sides})
            if sides["prefix"]:
                res = weyl.face_restriction(tau, w, i, m)
                if not res.matches:
                    return CaseResult(params, False, {
                        "tau": list(tau.window), "w": list(w.window),
                        "face_points": res.face_points, "tau_points": res.tau_points,
                    })
                faces += 1
    return CaseResult(params, True, {"pairs": len(reps) ** 2, "faces": faces})


# -- GT / Kogan suites ---------------------------------------------------------------

def check_kogan_maximality(params: dict) -> CaseResult:
    n, i, m = params["n"], params["i"], params["m"]
    groups = gt.kogan_faces(n, i, m)
    checked = 0
    for seq in all_sequences(n, i):
        tau = weyl.tau_of(weyl.perm_of_ell(seq), i)
        f_max = gt.maximal_kogan_face(tau, n, i, m)
        expected = gt.expected_diagonal_counts(seq)
        got = gt.implicit_closure(f_max).diagonal_counts
        if got != expected:
            return CaseResult(params, False, {"ell": list(seq.ell), "diagonal_counts": got, "expected": expected})
        top = set(gt.face_lattice_points(f_max))
        for f in groups.get(tau, []):
            pts = set(gt.face_lattice_points(f))
            counts = gt.implicit_closure(f).diagonal_counts
            if not pts <= top or any(c < e for c, e in zip(counts, expected)):
                return CaseResult(params, False, {
                    "ell": list(seq.ell), "face": f.to_json(), "maximal": f_max.to_json(),
                    "outside": [p.to_json() for p in sorted(pts - top, key=lambda p: p.rows)],
                    "diagonal_counts": counts, "maximal_counts": expected,
                })
            checked += 1
        if not gt.iso_is_bijection(f_max):
            return CaseResult(params, False, {"ell": list(seq.ell), "maximal": f_max.to_json(), "problem": "order polytope map"})
    return CaseResult(params, True, {"faces": checked})


def check_ladder(params: dict) -> CaseResult:
    n, i = params["n"], params["i"]
    moves = 0
    for tau, faces in gt.kogan_faces(n, i, 1).items():
        for f in faces:
            for j, k, size in gt.legal_ladder_moves(f):
                g = gt.ladder_move(f, j, k, size)
                word, perm = gt.kogan_type(g)
                if perm != tau or not weyl.is_reduced(word, n):
                    return CaseResult(params, False, {
                        "face": f.to_json(), "move": [j, k, size], "result": g.to_json(),
                        "type_before": list(tau.window), "type_after": list(perm.window),
                    })
                moves += 1
    return CaseResult(params, True, {"moves": moves})


def check_character_triple(params: dict) -> CaseResult:
    seq = seq_of(params)
    m = params["m"]
    sides = {
        "crystal": crystal.demazure_character(seq, m),
        "kogan": gt.char_of_patterns(gt.face_lattice_points(gt.maximal_face_for_ell(seq, m))),
        "polytope": crystal.polytope_character(seq, m),
    }
    ok = sides["crystal"] == sides["kogan"] == sides["polytope"]
    if ok:
        return CaseResult(params, True, {"terms": sum(sides["crystal"].values())})
    return CaseResult(params, False, {k: v.to_json() for k, v in sides.items()})


# -- PBW suites ----------------------------------------------------------------------

def check_pbw_basis(params: dict) -> CaseResult:
    seq = seq_of(params)
    m = params["m"]
    o = pbw.DemazureOracle(seq, m)
    cert = pbw.monomial_independence(seq, m, o)
    tableaux = crystal.demazure_crystal(weyl.word_of_ell(seq)[0], seq.n, seq.i, m)
    kogan = gt.face_lattice_points(gt.maximal_face_for_ell(seq, m))
    dims = {"module": o.dimension, "lattice": cert.lattice_count, "crystal": len(tableaux), "kogan_face": len(kogan)}
    graded_ok = o.graded_weights() == pbw.lattice_graded_weights(seq, m, o)
    conj_ok = pbw.conjugated_weights(o, weyl.perm_of_ell(seq)) == crystal.char_of(tableaux, seq.n)
    ok = cert.independent and len(set(dims.values())) == 1 and graded_ok and conj_ok
    detail = {**cert.to_json(), "dimensions": dims, "graded_weights": graded_ok, "conjugation": conj_ok}
    return CaseResult(params, ok, detail)


def check_essential(params: dict) -> CaseResult:
    seq = seq_of(params)
    m = params["m"]
    got = pbw.essential_monomials(seq, m)
    want = sorted(polytope.lattice_points(polytope.chain_polytope(build_poset(seq), m)))
    if got == want:
        return CaseResult(params, True, {"monomials": len(got)})
    return CaseResult(params, False, {"essential": got, "chain_points": want})


def check_annihilation(params: dict) -> CaseResult:
    seq = seq_of(params)
    res = pbw.annihilation_check(seq, params["m"])
    return CaseResult(params, res.passed, res.to_json())


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("ehrhart", check_ehrhart, "seq", n_max=6, guard_n=9, doc="chain and order Ehrhart values agree for t <= N+1"),
        Suite("minkowski", check_minkowski, "seq_m", n_max=5, m_max=4, guard_n=6, guard_m=5,
              doc="sum-set identities for m+n' <= m-max and decomposition of dilations"),
        Suite("facets", check_facets, "seq", n_max=6, guard_n=7, skip_empty=True, doc="closed-form facet counts vs irredundant inequalities"),
        Suite("vertices", check_vertices, "seq", n_max=6, guard_n=7, doc="filters/antichains are the vertices; equal vertex counts"),
        Suite("unimodular", check_unimodular, "seq", n_max=5, guard_n=5, skip_empty=True,
              doc="criterion <=> equal facet counts <=> equal f-vectors"),
        Suite("gorenstein", check_gorenstein, "seq", n_max=5, guard_n=7, skip_empty=True, doc="criterion <=> pure <=> palindromic h*"),
        Suite("weyl-bijection", check_weyl_bijection, "ni", n_max=7, guard_n=9,
              doc="representatives, ell round trip, word length, root poset isomorphism"),
        Suite("poset-iso", check_poset_iso, "ni", n_max=7, guard_n=9, doc="inversion roots with the root order are isomorphic to P_ell"),
        Suite("kogan-maximality", check_kogan_maximality, "ni_m", n_max=4, m_max=2, guard_n=4, guard_m=3,
              doc="faces of a type lie in the maximal face; diagonal counts; order polytope map"),
        Suite("ladder", check_ladder, "ni", n_max=4, guard_n=5, doc="ladder moves preserve the type"),
        Suite("character-triple", check_character_triple, "seq_m", n_max=4, m_max=2, guard_n=5, guard_m=3,
              doc="crystal, Kogan face and polytope characters agree"),
        Suite("pbw-basis", check_pbw_basis, "seq_m", n_max=4, m_max=2, guard_n=pbw.MAX_N, guard_m=pbw.MAX_M,
              doc="chain-polytope monomials give a graded basis; dimension chain"),
        Suite("essential", check_essential, "seq_m", n_max=4, m_max=2, guard_n=pbw.MAX_N, guard_m=pbw.MAX_M,
              doc="essential monomials are the chain-polytope points"),
        Suite("annihilation", check_annihilation, "seq_m", n_max=4, m_max=2, guard_n=pbw.MAX_N, guard_m=pbw.MAX_M,
              doc="orbit relations annihilate and cut out the graded dimensions"),
        Suite("bruhat-shadow", check_bruhat_shadow, "ni_m", n_max=4, m_max=2, guard_n=5, guard_m=3,
              doc="Bruhat order characterizations and face restriction to C_tau"),
    ]
}


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None


def expand(suite: Suite, r: Ranges) -> list[dict]:
    """Cases for a suite; explicit values override the default range."""
    if r.ell is not None and (r.n is None or r.i is None):
        raise UsageError("--ell needs --n and --i")
    n_hi = r.n if r.n is not None else (r.n_max if r.n_max is not None else suite.n_max)
    n_lo = r.n if r.n is not None else 1
    m_hi = r.m if r.m is not None else (r.m_max if r.m_max is not None else suite.m_max)
    m_lo = r.m if r.m is not None else 1
    if n_lo < 1 or m_lo < 1:
        raise UsageError("n and m must be positive")
    if n_hi > suite.guard_n:
        raise UsageError(f"suite {suite.name} is limited to n <= {suite.guard_n} (asked for {n_hi})")
    if suite.shape.endswith("_m") and m_hi > suite.guard_m:
        raise UsageError(f"suite {suite.name} is limited to m <= {suite.guard_m} (asked for {m_hi})")
    if suite.name == "minkowski":
        ms = [m_hi]  # m is the bound on m + n'
    else:
        ms = list(range(m_lo, m_hi + 1))
    cases: list[dict] = []
    for n in range(n_lo, n_hi + 1):
        i_values = [r.i] if r.i is not None else list(range(1, n + 1))
        for i in i_values:
            if not 1 <= i <= n:
                raise UsageError(f"need 1 <= i <= n, got i={i}, n={n}")
            if suite.shape in ("ni", "ni_m"):
                for m in ms if suite.shape == "ni_m" else [None]:
                    cases.append({"n": n, "i": i} | ({"m": m} if m is not None else {}))
                continue
            if r.ell is not None:
                try:
                    seqs = [LSequence(i, n, r.ell)]
                except ValueError as exc:
                    raise UsageError(str(exc)) from None
            else:
                seqs = all_sequences(n, i)
            for seq in seqs:
                if suite.skip_empty and seq.size == 0:
                    continue
                for m in ms if suite.shape == "seq_m" else [None]:
                    cases.append(params_of(seq) | ({"m": m} if m is not None else {}))
    return cases


def _run_one(args: tuple[str, dict]) -> CaseResult:
    name, params = args
    return SUITES[name].check(params)


def run_suite(name: str, ranges: Ranges, jobs: int = 1, timing: bool = True) -> VerificationReport:
    suite = get_suite(name)
    cases = expand(suite, ranges)
    start = time.perf_counter()
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, [(name, c) for c in cases]))
    else:
        results = [suite.check(c) for c in cases]
    elapsed = time.perf_counter() - start
    return VerificationReport(name, ranges.to_json(), results, elapsed if timing else None)
