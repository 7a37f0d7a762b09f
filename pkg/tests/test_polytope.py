from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings

from conftest import sequences
from oracles import brute_points, hull_facets, raw_geq
from pbwpoly.poset import LSequence, all_sequences_upto, build_poset, is_pure
from pbwpoly.polytope import (
    CHAIN,
    KINDS,
    ORDER,
    HPolytope,
    TooLargeError,
    chain_counts,
    chain_polytope,
    contains_x_subposet,
    coordinate_bounds,
    count_facets,
    count_lattice_points,
    decompose,
    ehrhart,
    ehrhart_from_values,
    f_vector,
    facet_counts_closed_form,
    gorenstein_criterion,
    hstar_from_values,
    lattice_points,
    lattice_vertices,
    minkowski_check,
    order_counts,
    order_polytope,
    peel,
    polytope_of,
    unimodular_equivalence_criterion,
    vertex_sets,
)

INTRO = LSequence(2, 3, (2, 3))


def test_intro_chain_points():
    pts = lattice_points(chain_polytope(build_poset(INTRO)))
    assert pts == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0)]


def test_intro_ehrhart_data():
    data = ehrhart(build_poset(INTRO), CHAIN)
    assert data.values == (1, 5, 14, 30, 55)
    assert data.hstar == (1, 1, 0, 0)
    assert data.normalized_volume == 2
    assert [data(t) for t in range(7)] == [1, 5, 14, 30, 55, 91, 140]
    assert data.is_palindromic()


def test_intro_f_vectors():
    p = build_poset(INTRO)
    assert f_vector(chain_polytope(p)) == [5, 8, 5]
    assert f_vector(order_polytope(p)) == [5, 8, 5]


def test_worked_facet_example():
    seq = LSequence(4, 6, (4, 5, 6, 6))
    p = build_poset(seq)
    assert facet_counts_closed_form(seq) == (15, 16)
    assert count_facets(order_polytope(p)) == 15
    assert count_facets(chain_polytope(p)) == 16


def test_facet_closed_form_rejects_empty_poset():
    with pytest.raises(ValueError):
        facet_counts_closed_form(LSequence(2, 3, (1, 1)))


@pytest.mark.parametrize("seq", [s for s in all_sequences_upto(4) if s.size >= 2], ids=str)
def test_facets_against_qhull(seq):
    p = build_poset(seq)
    order_f, chain_f = facet_counts_closed_form(seq)
    assert hull_facets(lattice_points(order_polytope(p))) == order_f
    assert hull_facets(lattice_points(chain_polytope(p))) == chain_f


@pytest.mark.parametrize("seq", all_sequences_upto(4), ids=str)
def test_lattice_points_against_brute_force(seq):
    p = build_poset(seq)
    for kind in KINDS:
        for m in (1, 2):
            assert lattice_points(polytope_of(p, kind, m)) == brute_points(seq.i, seq.ell, kind, m)


@pytest.mark.parametrize("backend", ["python", None])
def test_backends_give_identical_points(backend):
    p = build_poset(LSequence(3, 5, (4, 5, 5)))
    for kind in KINDS:
        h = polytope_of(p, kind, 3)
        assert lattice_points(h, backend) == lattice_points(h, "python")
        assert count_lattice_points(h, backend) == len(lattice_points(h))


@given(sequences(n_max=6))
@settings(max_examples=40)
def test_counting_dp_matches_enumeration(seq):
    p = build_poset(seq)
    for m in range(4):
        if m == 0:
            assert chain_counts(p, 0) == [1] == order_counts(p, 0)
            continue
        if seq.size > 9 and m > 2:
            continue
        assert chain_counts(p, m)[m] == len(lattice_points(chain_polytope(p, m)))
        assert order_counts(p, m)[m] == len(lattice_points(order_polytope(p, m)))


def linear_extensions(p) -> int:
    verts = p.vertices
    count = 0
    for perm in permutations(verts):
        pos = {v: r for r, v in enumerate(perm)}
        if all(pos[a] > pos[b] for a in verts for b in verts if a != b and raw_geq(a, b)):
            count += 1
    return count


@pytest.mark.parametrize("seq", [s for s in all_sequences_upto(4) if s.size <= 7], ids=str)
def test_normalized_volume_counts_linear_extensions(seq):
    p = build_poset(seq)
    assert ehrhart(p, ORDER).normalized_volume == linear_extensions(p)


@given(sequences(n_max=6))
@settings(max_examples=40)
def test_ehrhart_polynomial_extrapolates(seq):
    p = build_poset(seq)
    data = ehrhart(p, CHAIN)
    far = seq.size + 3
    assert data(far) == chain_counts(p, far)[far] == order_counts(p, far)[far]
    assert sum(data.polynomial[k] * far**k for k in range(len(data.polynomial))) == data(far)


def test_hstar_of_a_unit_cube_and_bad_values():
    # [0,1]^2: L(t) = (t+1)^2
    assert hstar_from_values([1, 4, 9, 16], 2) == [1, 1, 0]
    with pytest.raises(ValueError):
        ehrhart_from_values([1, 2, 3], 2)
    with pytest.raises(ValueError):
        ehrhart_from_values([1, 2, 4, 8, 16], 2)


def test_minkowski_and_peeling():
    p = build_poset(INTRO)
    for kind in KINDS:
        assert minkowski_check(p, kind, 1, 1)
        assert minkowski_check(p, kind, 2, 1)
        for s in lattice_points(polytope_of(p, kind, 3)):
            parts = decompose(p, kind, s, 3)
            assert len(parts) == 3
            assert tuple(map(sum, zip(*parts))) == s
    assert peel(p, CHAIN, (1, 1, 1)) == (1, 0, 0)
    assert peel(p, ORDER, (0, 2, 1)) == (0, 1, 1)
    with pytest.raises(ValueError):
        minkowski_check(p, CHAIN, 0, 1)
    with pytest.raises(ValueError):
        decompose(p, CHAIN, (2, 2, 0), 2)


def test_vertices_are_filters_and_antichains():
    p = build_poset(INTRO)
    for kind in KINDS:
        assert len(vertex_sets(p, kind)) == 5
        assert vertex_sets(p, kind) == lattice_vertices(polytope_of(p, kind))
    empty = build_poset(LSequence(2, 3, (1, 1)))
    assert vertex_sets(empty, CHAIN) == [()]


def test_f_vector_guard():
    p = build_poset(LSequence(3, 6, (6, 6, 6)))
    with pytest.raises(TooLargeError):
        f_vector(chain_polytope(p))


def test_criterion_examples():
    assert unimodular_equivalence_criterion(INTRO)
    assert unimodular_equivalence_criterion(LSequence(1, 4, (4,)))
    bad = LSequence(3, 5, (4, 5, 5))
    assert not unimodular_equivalence_criterion(bad)
    p = build_poset(bad)
    assert f_vector(chain_polytope(p)) != f_vector(order_polytope(p))
    assert gorenstein_criterion(INTRO)
    assert gorenstein_criterion(LSequence(2, 3, (1, 1)))
    worked = LSequence(4, 6, (4, 5, 6, 6))
    assert gorenstein_criterion(worked) == is_pure(build_poset(worked)) == ehrhart(build_poset(worked), CHAIN).is_palindromic()


@pytest.mark.parametrize("seq", [s for s in all_sequences_upto(5) if s.size], ids=str)
def test_unimodular_criterion_is_the_x_subposet_test(seq):
    assert unimodular_equivalence_criterion(seq) == (not contains_x_subposet(build_poset(seq)))


def test_hpolytope_helpers():
    h = HPolytope(("a", "b"), ((1, 1), (-1, 0), (0, -1)), (2, 0, 0))
    assert h.contains((1, 1)) and not h.contains((2, 1))
    assert h.dilate(2).b == (4, 0, 0)
    assert coordinate_bounds(h) == ([0, 0], [2, 2])
    doc = h.to_json()
    assert doc["inequalities"][0] == {"coeffs": [1, 1], "bound": 2}
    with pytest.raises(ValueError):
        coordinate_bounds(HPolytope(("a",), ((-1,),), (0,)))
    with pytest.raises(ValueError):
        polytope_of(build_poset(INTRO), "simplex")
    with pytest.raises(ValueError):
        chain_polytope(build_poset(INTRO), 0)
