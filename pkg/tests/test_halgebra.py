from __future__ import annotations

import itertools
import random

import pytest

from nilgraph.graphs import Graph, VertexBijection, all_graphs, complete_graph, maps_graph, path_graph
from nilgraph.graphs.textio import ParseError
from nilgraph.halgebra import (
    COMMUTATIVE,
    LIE,
    bracket,
    build_graph_algebra,
    build_h_algebra,
    check_iso_witness,
    identity_iso,
    induced_iso,
    multiply,
    read_algebra,
    vertex_map_iso,
    write_algebra,
)


def test_k2_lie_product():
    A = build_h_algebra(complete_graph(2), 3)
    v1, v2 = A.v_gen(0), A.v_gen(1)
    assert multiply(A, v1, v2) == A.a(0, 1)
    assert multiply(A, v2, v1) == A.neg(A.a(0, 1))
    assert A.additive_order(A.a(0, 1)) == 3
    assert A.central_moduli == (3,)
    assert bracket is multiply


def test_nonedge_has_order_p_squared():
    A = build_h_algebra(Graph(2), 5)
    assert A.additive_order(A.a(0, 1)) == 25
    assert A.additive_order(A.v_gen(0)) == 125


def test_commutative_kind_is_symmetric():
    A = build_graph_algebra(path_graph(3), 3)
    assert A.kind == COMMUTATIVE
    for i, j in itertools.permutations(range(3), 2):
        assert multiply(A, A.v_gen(i), A.v_gen(j)) == multiply(A, A.v_gen(j), A.v_gen(i))


@pytest.mark.parametrize("p", [3, 5])
def test_orders_follow_edges(p):
    for g in all_graphs(4):
        A = build_h_algebra(g, p)
        assert A.dim == 4 + 6
        assert A.order() == p ** (3 * 4) * p ** (len(g.edges) + 2 * (6 - len(g.edges)))
        for i, j in g.pairs():
            assert A.additive_order(A.a(i, j)) == (p if g.has_edge(i, j) else p * p)


def test_p_two_rejected():
    with pytest.raises(ValueError):
        build_h_algebra(complete_graph(2), 2)


def _random(A, rng):
    return A.element([rng.randrange(A.q) for _ in range(A.n)], [rng.randrange(m) for m in A.central_moduli])


@pytest.mark.parametrize("p", [3, 5, 7])
def test_lie_identities_on_random_elements(p):
    rng = random.Random(p)
    A = build_h_algebra(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]), p)
    zero = A.zero()
    for _ in range(300):
        x, y, z = _random(A, rng), _random(A, rng), _random(A, rng)
        assert multiply(A, x, x) == zero
        assert multiply(A, x, y) == A.neg(multiply(A, y, x))
        assert multiply(A, multiply(A, x, y), z) == zero
        assert multiply(A, A.add(x, y), z) == A.add(multiply(A, x, z), multiply(A, y, z))
        s = rng.randrange(A.q)
        assert multiply(A, A.scale(s, x), y) == A.scale(s, multiply(A, x, y))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_induced_iso_iff_graph_iso(n):
    graphs = all_graphs(n)
    algebras = [build_h_algebra(g, 3) for g in graphs]
    for (g1, A1), (g2, A2) in itertools.product(zip(graphs, algebras), repeat=2):
        for perm in itertools.permutations(range(n)):
            b = VertexBijection(perm)
            f = induced_iso(b, A1, A2)
            assert (f is not None) == maps_graph(b, g1, g2)
            if f is not None and n <= 3:
                assert check_iso_witness(f, A1, A2)


def test_witness_rejects_non_edge_preserving_map():
    A1 = build_h_algebra(path_graph(3), 3)
    A2 = build_h_algebra(Graph.from_edges(3, [(0, 1), (0, 2)]), 3)
    f = vertex_map_iso(VertexBijection((0, 1, 2)), A1, A2)
    assert not check_iso_witness(f, A1, A2)
    assert check_iso_witness(identity_iso(A1), A1, A1)


def test_witness_rejects_singular_map():
    A = build_h_algebra(complete_graph(2), 3)
    f = identity_iso(A)
    collapsed = type(f)(A, A, (A.v_gen(0), A.v_gen(0)), f.c_images)
    assert not check_iso_witness(collapsed, A, A)


def test_dump_golden(golden):
    assert write_algebra(build_h_algebra(complete_graph(2), 3)) == golden("k2_lie_p3.txt")
    assert write_algebra(build_graph_algebra(path_graph(3), 3)) == golden("p3_commutative_p3.txt")


def test_dump_round_trip():
    for g in all_graphs(3):
        for kind_builder in (build_h_algebra, build_graph_algebra):
            A = kind_builder(g, 5)
            B = read_algebra(write_algebra(A))
            assert B.graph == g and B.kind == A.kind


def test_dump_tamper_detected(golden):
    text = golden("k2_lie_p3.txt").replace("2 * a_12", "1 * a_12")
    with pytest.raises(ParseError):
        read_algebra(text)
    with pytest.raises(ParseError):
        read_algebra("")


def test_bilinear_expansion_example():
    A = build_h_algebra(complete_graph(2), 3)
    x = A.element((1, 1))
    y = A.element((1, 26))
    assert multiply(A, x, y) == A.a(0, 1)  # -2 a12 = a12 mod 3


def test_isolated_pair_orders():
    A = build_graph_algebra(Graph(2), 3)
    a = multiply(A, A.v_gen(0), A.v_gen(1))
    assert a == A.a(0, 1)
    assert A.scale(9, a) == A.zero() and A.scale(3, a) != A.zero()


def test_identity_rebase_keeps_structure_constants():
    from nilgraph.halgebra import rebase

    A = build_h_algebra(path_graph(3), 5)
    B, back = rebase(A, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert B.table == A.table and B.central_moduli == A.central_moduli
    assert check_iso_witness(back, B, A)


def test_central_products_vanish():
    for builder in (build_h_algebra, build_graph_algebra):
        A = builder(complete_graph(3), 3)
        for x in A.basis():
            for k in range(3):
                assert multiply(A, A.c_gen(k), x) == A.zero() == multiply(A, x, A.c_gen(k))
