from __future__ import annotations

import itertools

import pytest

from nilgraph.cayley import corpus, cyclic, group_iso_small, homomorphisms
from nilgraph.graphs import maps_multigraph
from nilgraph.group2graph import (
    arc_violations,
    build_gamma,
    extend_homomorphism,
    gamma_iso,
    gamma_iso_check,
    group_iso_from_gamma,
    triple_index,
)

GROUPS = corpus()


def test_z3_multigraph_size():
    gamma = build_gamma(cyclic(3))
    assert gamma.n == 30 and (gamma.n_elem, gamma.n_triple) == (3, 27)


def test_arcs_of_a_triple():
    G = cyclic(4)
    gamma = build_gamma(G)
    t = triple_index(G, 1, 2, 3)  # 1 + 2 = 3
    assert gamma.multiplicity(1, t) == 1
    assert gamma.multiplicity(2, t) == 2
    assert gamma.multiplicity(t, 3) == 1
    s = triple_index(G, 1, 2, 0)
    assert gamma.multiplicity(1, s) == 1 and gamma.multiplicity(2, s) == 1
    assert not any(gamma.multiplicity(s, w) for w in range(4))


def test_coincident_arcs_merge():
    G = cyclic(3)
    gamma = build_gamma(G)
    assert gamma.multiplicity(0, triple_index(G, 0, 0, 0)) == 3
    assert gamma.multiplicity(0, triple_index(G, 0, 0, 1)) == 2


def test_too_small_group():
    with pytest.raises(ValueError):
        build_gamma(cyclic(2))


def test_degrees():
    for G in GROUPS.values():
        gamma = build_gamma(G)
        degs = gamma.degrees()
        m = G.m
        assert sorted(set(degs[m:])) == [2, 4]
        assert degs[m:].count(4) == m * m
        assert min(degs[:m]) > 4


@pytest.mark.parametrize(
    "a,b",
    [("Z4", "Z2xZ2"), ("Z6", "S3"), ("Z8", "D4"), ("D4", "Q8"), ("Z2xZ4", "Z2^3"), ("Q8", "Z2xZ4")],
)
def test_non_isomorphic_same_order(a, b):
    assert not gamma_iso_check(GROUPS[a], GROUPS[b])


def test_relabelled_copy_is_recognised():
    G = GROUPS["D4"]
    H = G.relabel([3, 0, 6, 1, 7, 2, 5, 4])
    assert gamma_iso_check(G, H)
    b = gamma_iso(G, H)
    assert maps_multigraph(b, build_gamma(G), build_gamma(H))
    h = group_iso_from_gamma(G, H)
    assert G.is_homomorphism(h, H)


def test_homomorphisms_preserve_arcs():
    G, H = GROUPS["Z6"], GROUPS["Z3"]
    for h in homomorphisms(G, H):
        f = extend_homomorphism(h, G, H)
        assert arc_violations(f, build_gamma(G), build_gamma(H)) == []


def test_non_homomorphism_is_caught():
    G = GROUPS["Z4"]
    shift = [1, 2, 3, 0]
    with pytest.raises(ValueError):
        extend_homomorphism(shift, G, G)
    f = shift + [triple_index(G, shift[u], shift[v], shift[w]) for u, v, w in itertools.product(range(4), repeat=3)]
    assert arc_violations(f, build_gamma(G), build_gamma(G))


def test_order_limit():
    big = cyclic(9)
    with pytest.raises(ValueError):
        gamma_iso_check(big, big)
