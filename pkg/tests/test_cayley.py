from __future__ import annotations

import itertools
import random

import pytest

from nilgraph.cayley import (
    CayleyGroup,
    corpus,
    cyclic,
    dihedral,
    direct_product,
    group_iso_small,
    homomorphisms,
    quaternion,
    read_cayley,
    symmetric3,
    write_cayley,
)
from nilgraph.graphs.textio import ParseError

GROUPS = corpus()


def test_corpus_orders():
    assert {k: G.m for k, G in GROUPS.items()} == {
        "Z3": 3, "Z4": 4, "Z5": 5, "Z6": 6, "Z7": 7, "Z8": 8,
        "Z2xZ2": 4, "Z2xZ4": 8, "Z2^3": 8, "S3": 6, "D4": 8, "Q8": 8,
    }


def test_order_profiles_separate_order_eight():
    profiles = {k: tuple(sorted(GROUPS[k].order_profile())) for k in ("Z8", "Z2xZ4", "Z2^3", "D4", "Q8")}
    # D4 and Q8 differ in the number of involutions
    assert profiles["D4"].count(2) == 5 and profiles["Q8"].count(2) == 1
    assert len(set(profiles.values())) == 5


def test_invalid_tables():
    with pytest.raises(ValueError):
        CayleyGroup([[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        CayleyGroup([[0, 1, 2], [1, 2, 0], [2, 1, 0]])


def test_iso_small_on_corpus():
    names = list(GROUPS)
    for a, b in itertools.combinations_with_replacement(names, 2):
        w = group_iso_small(GROUPS[a], GROUPS[b])
        assert (w is not None) == (a == b)
        if w is not None:
            assert GROUPS[a].is_homomorphism(w.forward, GROUPS[b])


def test_iso_small_relabelled():
    rng = random.Random(0)
    for G in GROUPS.values():
        perm = list(range(G.m))
        rng.shuffle(perm)
        H = G.relabel(perm)
        w = group_iso_small(G, H)
        assert w is not None and G.is_homomorphism(w.forward, H)


def test_known_isomorphism_z6():
    assert group_iso_small(cyclic(6), direct_product(cyclic(2), cyclic(3))) is not None
    assert group_iso_small(cyclic(6), symmetric3()) is None


def test_hom_counts():
    assert len(list(homomorphisms(dihedral(4), GROUPS["Z2xZ2"]))) == 16
    assert len(list(homomorphisms(cyclic(4), cyclic(6)))) == 2
    assert len(list(homomorphisms(quaternion(), cyclic(3)))) == 1


def test_cayley_text_round_trip(golden):
    G = read_cayley(golden("z3.table"))
    assert G.table == cyclic(3).table
    assert read_cayley(write_cayley(GROUPS["Q8"])).table == GROUPS["Q8"].table
    for bad in ("", "2\n1 2\n", "2\n1 2\n2 3\n", "2\n1 1\n1 1\n"):
        with pytest.raises(ParseError):
            read_cayley(bad)
