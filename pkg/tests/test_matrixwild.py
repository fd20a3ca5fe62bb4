from __future__ import annotations

import itertools
import random

import pytest

from nilgraph.graphs import Graph, complete_graph
from nilgraph.graphs.textio import ParseError
from nilgraph.halgebra import build_h_algebra
from nilgraph.hgroup import HGroup
from nilgraph.matrixwild import (
    MatrixPair,
    center_order_bound,
    charpoly,
    general_linear,
    is_similarity_witness,
    matinv,
    matmul,
    pair_problem,
    random_invertible,
    random_pair,
    read_matrix_pair,
    simsim,
    write_matrix_pair,
)


def test_general_linear_sizes():
    assert sum(1 for _ in general_linear(2, 3)) == 48
    assert sum(1 for _ in general_linear(1, 5)) == 4


def test_matinv():
    rng = random.Random(0)
    for _ in range(20):
        S = random_invertible(3, 3, rng)
        assert matmul(S, matinv(S, 3), 3) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_charpoly_examples():
    assert charpoly(((1, 0), (0, 2)), 3) == (1, 0, 2)
    assert charpoly(((1, 0, 0), (0, 2, 0), (0, 0, 0)), 3) == (1, 0, 2, 0)


def test_charpoly_is_similarity_invariant():
    rng = random.Random(1)
    for _ in range(30):
        x = random_pair(3, 3, rng)
        y = x.conjugate(random_invertible(3, 3, rng))
        assert charpoly(x.A, 3) == charpoly(y.A, 3)


def test_simsim_finds_conjugator():
    rng = random.Random(2)
    for _ in range(20):
        x = random_pair(2, 3, rng)
        y = x.conjugate(random_invertible(2, 3, rng))
        S = simsim(x, y)
        assert S is not None and is_similarity_witness(S, x, y)


def test_simsim_negative():
    x = MatrixPair(((1, 0), (0, 0)), ((0, 0), (0, 0)), 3)
    y = MatrixPair(((1, 0), (0, 1)), ((0, 0), (0, 0)), 3)
    assert simsim(x, y) is None
    # same A, B that is not similar under the stabiliser of A
    z = MatrixPair(((1, 0), (0, 0)), ((0, 1), (0, 0)), 3)
    w = MatrixPair(((1, 0), (0, 0)), ((0, 0), (0, 0)), 3)
    assert simsim(z, w) is None


def test_simsim_limits():
    with pytest.raises(ValueError):
        simsim(random_pair(4, 3, random.Random(0)), random_pair(4, 3, random.Random(1)))
    with pytest.raises(ValueError):
        simsim(random_pair(2, 5, random.Random(0)), random_pair(2, 5, random.Random(1)))


def test_center_order_bound():
    assert center_order_bound(HGroup(build_h_algebra(complete_graph(3), 3))) == 27
    assert center_order_bound(HGroup(build_h_algebra(Graph(3), 3))) == 3**6
    with pytest.raises(ValueError):
        center_order_bound(HGroup(build_h_algebra(complete_graph(2), 3)))


def test_pair_problem():
    prob = pair_problem(3)
    assert prob.arity == 2 and prob.shape == (3, 3)


def test_matrix_pair_io():
    x = MatrixPair(((1, 2), (0, 1)), ((2, 2), (1, 0)), 3)
    assert read_matrix_pair(write_matrix_pair(x)) == x
    for bad in ("", "2 2\n", "2 3\n1 0\n0 1\n", "2 3\n1 0 0\n0 1\n1 0\n0 1\n"):
        with pytest.raises(ParseError):
            read_matrix_pair(bad)
