from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given

from conftest import sequences
from oracles import all_chains, binomial_count, raw_geq, raw_vertices
from pbwpoly.poset import (
    LSequence,
    all_sequences,
    all_sequences_upto,
    antichains,
    build_poset,
    filters,
    is_pure,
    maximal_chains,
    total_order_key,
)


def test_canonical_order_of_the_intro_poset():
    p = build_poset(LSequence(2, 3, (2, 3)))
    assert p.vertices == ((2, 2), (1, 2), (2, 3))
    assert p.maximal == ((1, 2), (2, 3))
    assert p.minimal == ((2, 2),)


@pytest.mark.parametrize(
    "i, n, ell",
    [(0, 3, ()), (4, 3, (3, 3, 3, 3)), (2, 3, (2,)), (2, 3, (0, 2)), (2, 3, (2, 4)), (3, 4, (3, 2, 4))],
)
def test_invalid_sequences_are_rejected(i, n, ell):
    with pytest.raises(ValueError):
        LSequence(i, n, ell)


def test_sentinel_and_bounds():
    seq = LSequence(2, 3, (2, 3))
    assert seq[0] == 1 and seq[1] == 2 and seq[2] == 3
    with pytest.raises(IndexError):
        seq[3]
    assert seq.size == 3
    assert str(seq) == "i=2,n=3,ell=2,3"


@pytest.mark.parametrize("n", range(1, 7))
def test_sequence_count_is_binomial(n):
    for i in range(1, n + 1):
        assert len(all_sequences(n, i)) == binomial_count(n, i)


def test_sequences_upto_covers_every_rank():
    assert len(all_sequences_upto(3)) == sum(binomial_count(n, i) for n in range(1, 4) for i in range(1, n + 1))


@given(sequences(n_max=5))
def test_vertices_and_order_match_the_definition(seq):
    p = build_poset(seq)
    assert sorted(p.vertices) == sorted(raw_vertices(seq.i, seq.ell))
    for a in p.vertices:
        for b in p.vertices:
            assert p.geq(a, b) == raw_geq(a, b)


@given(sequences(n_max=5))
def test_covers_have_nothing_in_between(seq):
    p = build_poset(seq)
    verts = p.vertices
    expected = {
        (a, b)
        for a in verts
        for b in verts
        if a != b and raw_geq(a, b) and not any(c not in (a, b) and raw_geq(a, c) and raw_geq(c, b) for c in verts)
    }
    assert set(p.covers) == expected


@given(sequences(n_max=5))
def test_total_order_extends_the_partial_order(seq):
    p = build_poset(seq)
    for a in p.vertices:
        for b in p.vertices:
            if a != b and p.geq(a, b):
                assert total_order_key(a) > total_order_key(b)


@given(sequences(n_max=4))
def test_maximal_chains_against_brute_force(seq):
    p = build_poset(seq)
    chains = [set(c) for c in all_chains(list(p.vertices))]
    maximal = [c for c in chains if not any(c < d for d in chains)]
    got = maximal_chains(p)
    assert sorted(map(sorted, got)) == sorted(map(sorted, maximal))
    for c in got:
        assert all(p.geq(a, b) for a, b in zip(c, c[1:]))


@given(sequences(n_max=4))
def test_antichains_and_filters_against_brute_force(seq):
    p = build_poset(seq)
    verts = p.vertices
    subsets = [frozenset(s) for r in range(len(verts) + 1) for s in combinations(verts, r)]
    brute_anti = {s for s in subsets if all(not p.comparable(a, b) for a, b in combinations(s, 2))}
    brute_filt = {s for s in subsets if all(b in s for a in s for b in verts if p.geq(b, a))}
    assert set(antichains(p)) == brute_anti
    assert set(filters(p)) == brute_filt
    assert len(brute_anti) == len(brute_filt)


def test_empty_poset():
    p = build_poset(LSequence(2, 3, (1, 1)))
    assert len(p) == 0
    assert antichains(p) == [frozenset()]
    assert filters(p) == [frozenset()]
    assert is_pure(p)


def test_purity_examples():
    assert is_pure(build_poset(LSequence(2, 3, (2, 3))))
    assert not is_pure(build_poset(LSequence(2, 4, (2, 4))))


def test_json_shape():
    doc = build_poset(LSequence(2, 3, (2, 3))).to_json()
    assert doc["vertices"] == [[2, 2], [1, 2], [2, 3]]
    assert doc["covers"] == [[[1, 2], [2, 2]], [[2, 3], [2, 2]]]
