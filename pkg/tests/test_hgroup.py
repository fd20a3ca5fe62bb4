from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilgraph.graphs import Graph, VertexBijection, all_graphs, complete_graph, graph_iso, path_graph
from nilgraph.halgebra import build_graph_algebra, build_h_algebra, check_iso_witness, induced_iso
from nilgraph.hgroup import (
    HGroup,
    algebra_iso_from_group_iso,
    commutator,
    element_order,
    evaluate_word,
    export_presentation,
    group_inv,
    group_mul,
    group_order,
    group_pow,
    reconstruct_algebra,
    renewal_map,
    transport_iso,
)


def k2_group(p=3, chi=None):
    return HGroup(build_h_algebra(complete_graph(2), p), chi)


def test_closure_of_generators_is_whole_group():
    """Breadth-first closure of {g1, g2} reaches all 27*27*3 elements."""
    G = k2_group()
    seen = {G.identity()}
    frontier = [G.identity()]
    gens = [G.gen(0), G.gen(1)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group_mul(G, x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    assert len(seen) == 2187 == group_order(G)


def test_square_of_product():
    G = k2_group()
    g1, g2 = G.gen(0), G.gen(1)
    lhs = group_pow(G, group_mul(G, g1, g2), 2)
    rhs = group_mul(G, group_mul(G, group_pow(G, g1, 2), group_pow(G, g2, 2)), group_inv(G, G.central_gen(0)))
    assert lhs == rhs


def test_generator_commutator_is_pair_generator():
    for chi in (None, VertexBijection((1, 0))):
        G = k2_group(chi=chi)
        c = commutator(G, G.gen(0), G.gen(1))
        assert c.alpha == (0, 0)
        sign = 1 if chi is None else -1
        assert c.central == ((sign) % 3,)


def test_element_orders():
    G = HGroup(build_h_algebra(path_graph(3), 5))
    assert all(element_order(G, G.gen(t)) == 125 for t in range(3))
    assert [element_order(G, G.central_gen(k)) for k in range(3)] == [5, 25, 5]
    assert element_order(G, G.identity()) == 1


def test_commutative_base_rejected():
    with pytest.raises(ValueError):
        HGroup(build_graph_algebra(complete_graph(2), 3))


def test_inverse_matches_repeated_multiplication():
    rng = random.Random(0)
    G = HGroup(build_h_algebra(Graph.from_edges(3, [(0, 1)]), 3), VertexBijection((2, 0, 1)))
    for _ in range(50):
        x = G.random_element(rng)
        assert group_inv(G, x) == group_pow(G, x, 27 * 9 - 1)
        assert group_mul(G, group_inv(G, x), x) == G.identity()


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5]), st.integers(0, 63), st.permutations(range(4)), st.randoms(use_true_random=False))
def test_group_laws(p, mask, chi, rng):
    g = all_graphs(4)[mask]
    G = HGroup(build_h_algebra(g, p), VertexBijection(tuple(chi)))
    x, y, z = (G.random_element(rng) for _ in range(3))
    assert group_mul(G, group_mul(G, x, y), z) == group_mul(G, x, group_mul(G, y, z))
    assert group_pow(G, x, p**3) == G.identity()
    assert commutator(G, commutator(G, x, y), z) == G.identity()
    # the quotient by the centre part is abelian (Z/p^3)^n
    assert group_mul(G, x, y).alpha == tuple((a + b) % G.q for a, b in zip(x.alpha, y.alpha))


def test_presentation_golden(golden):
    assert export_presentation(k2_group()).to_gap() == golden("k2_presentation_p3.txt")


def test_single_vertex_presentation():
    pres = export_presentation(HGroup(build_h_algebra(Graph(1), 3)))
    assert pres.names == ["g1"]
    assert [r.text for r in pres.relators] == ["g1^27"]


def test_k3_presentation_counts():
    G = HGroup(build_h_algebra(complete_graph(3), 3))
    pres = export_presentation(G)
    assert pres.count("commutator") == 3
    assert [r.text for r in pres.relators if r.kind == "power"][3:] == ["a12^3", "a13^3", "a23^3"]
    for r in pres.relators:
        assert evaluate_word(G, pres, r.word) == G.identity()


def test_nonedge_power_relators():
    G = HGroup(build_h_algebra(Graph(3), 5))
    pres = export_presentation(G)
    assert [r.text for r in pres.relators if r.kind == "power"][3:] == ["a12^25", "a13^25", "a23^25"]


def _iso_setup(g, perm, p, chi1, chi2):
    h = g.relabel(perm)
    A1, A2 = build_h_algebra(g, p), build_h_algebra(h, p)
    G1, G2 = HGroup(A1, VertexBijection(chi1)), HGroup(A2, VertexBijection(chi2))
    f = induced_iso(VertexBijection(tuple(perm)), A1, A2)
    return G1, G2, f


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([3, 5]),
    st.integers(0, 63),
    st.permutations(range(4)),
    st.permutations(range(4)),
    st.permutations(range(4)),
    st.randoms(use_true_random=False),
)
def test_transport_closed_form_matches_collection(p, mask, perm, chi1, chi2, rng):
    G1, G2, f = _iso_setup(all_graphs(4)[mask], perm, p, chi1, chi2)
    phi = transport_iso(f, G1, G2)
    assert phi.check_on_generators()
    for _ in range(20):
        x, y = G1.random_element(rng), G1.random_element(rng)
        assert phi(x) == phi.by_collection(x)
        assert phi(group_mul(G1, x, y)) == group_mul(G2, phi(x), phi(y))
    assert all(phi(G1.gen(t)) == G2.gen(phi.perm(t)) for t in range(4))


def test_transport_round_trip():
    rng = random.Random(2)
    g = path_graph(4)
    perm = (2, 0, 3, 1)
    G1, G2, f = _iso_setup(g, perm, 3, (1, 2, 3, 0), (0, 1, 2, 3))
    inv = VertexBijection(perm).inverse()
    back = transport_iso(induced_iso(inv, G2.base, G1.base), G2, G1)
    phi = transport_iso(f, G1, G2)
    for _ in range(100):
        x = G1.random_element(rng)
        assert back(phi(x)) == x


def test_transport_rejects_bad_iso():
    A = build_h_algebra(path_graph(3), 3)
    B = build_h_algebra(Graph.from_edges(3, [(0, 1), (0, 2)]), 3)
    from nilgraph.halgebra import vertex_map_iso

    with pytest.raises(ValueError):
        transport_iso(vertex_map_iso(VertexBijection((0, 1, 2)), A, B), HGroup(A), HGroup(B))


@pytest.mark.parametrize("p", [3, 5])
def test_renewal_map_for_all_small_graphs(p):
    rng = random.Random(p)
    for n in range(1, 4):
        for g in all_graphs(n):
            chi = list(range(n))
            rng.shuffle(chi)
            G = HGroup(build_h_algebra(g, p), VertexBijection(tuple(chi)))
            L = reconstruct_algebra(G)
            assert check_iso_witness(renewal_map(G, L), G.base, L)


def test_group_iso_pulls_back():
    for g in all_graphs(3):
        for perm in itertools.permutations(range(3)):
            G1, G2, f = _iso_setup(g, perm, 3, (2, 0, 1), (1, 2, 0))
            phi = transport_iso(f, G1, G2)
            assert check_iso_witness(algebra_iso_from_group_iso(phi, G1, G2), G1.base, G2.base)
