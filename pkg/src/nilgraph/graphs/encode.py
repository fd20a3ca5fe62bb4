"""Encoding of a sorted directed multigraph as a simple undirected graph.

Each original vertex keeps its index and gets a pendant path whose length
depends on its sort (3 for ``element``, 4 for ``triple``).  Each unit of
multiplicity of an arc ``u -> v`` becomes a path ``u - x - y - v`` with a
leaf hung on ``x``, which marks the tail side.
"""

from __future__ import annotations

from .core import DiMultigraph, Graph

MAX_MULTIPLICITY = 3
PENDANT_LENGTH = {0: 3, 1: 4}


def encode_simple(m: DiMultigraph) -> Graph:
    bad = [(arc, k) for arc, k in m.arcs.items() if k > MAX_MULTIPLICITY]
    if bad:
        (u, v), k = bad[0]
        raise ValueError(f"arc {m.name(u)}->{m.name(v)} has multiplicity {k} > {MAX_MULTIPLICITY}")
    edges = []
    nxt = m.n

    for v in range(m.n):
        prev = v
        for _ in range(PENDANT_LENGTH[0 if v < m.n_elem else 1]):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1

    for (u, v), k in m.arcs.items():
        for _ in range(k):
            x, y, leaf = nxt, nxt + 1, nxt + 2
            nxt += 3
            edges += [(u, x), (x, y), (y, v), (x, leaf)]

    return Graph(nxt, frozenset(edges))


def encoded_size(m: DiMultigraph) -> int:
    """Vertex count of :func:`encode_simple` without building it."""
    pendants = 3 * m.n_elem + 4 * m.n_triple
    return m.n + pendants + 3 * sum(m.arcs.values())
