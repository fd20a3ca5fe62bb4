"""Graph containers: simple undirected graphs, sorted directed multigraphs
and vertex bijections.  Vertices are 0-based indices; text formats and
display names are 1-based."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

ELEMENT = "element"
TRIPLE = "triple"
SORTS = (ELEMENT, TRIPLE)


@dataclass(frozen=True)
class Graph:
    """Undirected loopless graph on vertices ``0..n-1``; edges are pairs ``(i, j)`` with ``i < j``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        normalized = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i + 1}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge {(i + 1, j + 1)} out of range for n={self.n}")
            normalized.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        edges = list(edges)
        seen = set()
        for i, j in edges:
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"duplicate edge {(i + 1, j + 1)}")
            seen.add(key)
        return cls(n, frozenset(edges))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in sorted(self.edges):
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def pairs(self) -> list[tuple[int, int]]:
        """All vertex pairs ``i < j`` in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)]

    def relabel(self, perm: Sequence[int]) -> Graph:
        return Graph(self.n, frozenset((perm[i], perm[j]) for i, j in self.edges))

    def __repr__(self) -> str:
        edges = ", ".join(f"{i + 1}-{j + 1}" for i, j in sorted(self.edges))
        return f"Graph(n={self.n}, edges=[{edges}])"


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, frozenset((min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def all_graphs(n: int) -> list[Graph]:
    """Every labeled graph on ``n`` vertices (2^(n choose 2) of them), in bitmask order."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return [
        Graph(n, frozenset(pr for b, pr in enumerate(pairs) if mask >> b & 1))
        for mask in range(1 << len(pairs))
    ]


@dataclass(frozen=True)
class DiMultigraph:
    """Directed multigraph with two vertex sorts.

    Vertices ``0..n_elem-1`` have sort ``element`` and the following
    ``n_triple`` vertices have sort ``triple``.  ``arcs`` maps an ordered
    pair ``(src, dst)`` to its multiplicity (always >= 1).
    """

    n_elem: int
    n_triple: int
    arcs: Mapping[tuple[int, int], int]

    def __post_init__(self):
        total = self.n_elem + self.n_triple
        clean = {}
        for (u, v), k in self.arcs.items():
            if not (0 <= u < total and 0 <= v < total):
                raise ValueError(f"arc {(u, v)} out of range")
            if k < 1:
                raise ValueError(f"multiplicity of arc {(u, v)} must be >= 1, got {k}")
            clean[(u, v)] = k
        object.__setattr__(self, "arcs", dict(sorted(clean.items())))

    @classmethod
    def from_arc_list(cls, n_elem: int, n_triple: int, arcs: Iterable[tuple[int, int, int]]) -> DiMultigraph:
        """Build from ``(src, dst, mult)`` triples; repeated ordered pairs sum their multiplicities."""
        merged: dict[tuple[int, int], int] = {}
        for u, v, k in arcs:
            merged[(u, v)] = merged.get((u, v), 0) + k
        return cls(n_elem, n_triple, merged)

    @property
    def n(self) -> int:
        return self.n_elem + self.n_triple

    def sort_of(self, v: int) -> str:
        return ELEMENT if v < self.n_elem else TRIPLE

    def name(self, v: int) -> str:
        if v < self.n_elem:
            return f"e{v + 1}"
        return f"t{v - self.n_elem + 1}"

    def multiplicity(self, u: int, v: int) -> int:
        return self.arcs.get((u, v), 0)

    def degree(self, v: int) -> int:
        """Total degree counted with multiplicity (in + out)."""
        return sum(k for (a, b), k in self.arcs.items() if a == v) + sum(
            k for (a, b), k in self.arcs.items() if b == v
        )

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for (a, b), k in self.arcs.items():
            deg[a] += k
            deg[b] += k
        return deg

    def with_multiplicity(self, u: int, v: int, k: int) -> DiMultigraph:
        arcs = dict(self.arcs)
        if k == 0:
            arcs.pop((u, v), None)
        else:
            arcs[(u, v)] = k
        return DiMultigraph(self.n_elem, self.n_triple, arcs)


@dataclass(frozen=True)
class VertexBijection:
    """A permutation of ``0..n-1``; ``forward[i]`` is the image of ``i``."""

    forward: tuple[int, ...]

    def __post_init__(self):
        forward = tuple(self.forward)
        if sorted(forward) != list(range(len(forward))):
            raise ValueError(f"not a bijection: {forward}")
        object.__setattr__(self, "forward", forward)

    @classmethod
    def identity(cls, n: int) -> VertexBijection:
        return cls(tuple(range(n)))

    def __call__(self, i: int) -> int:
        return self.forward[i]

    def __len__(self) -> int:
        return len(self.forward)

    def inverse(self) -> VertexBijection:
        inv = [0] * len(self.forward)
        for i, j in enumerate(self.forward):
            inv[j] = i
        return VertexBijection(tuple(inv))

    def then(self, other: VertexBijection) -> VertexBijection:
        """``other`` after ``self``."""
        return VertexBijection(tuple(other.forward[j] for j in self.forward))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.forward))


def maps_graph(b: VertexBijection, g1: Graph, g2: Graph) -> bool:
    """Witness check: ``b`` carries the edge set of ``g1`` exactly onto that of ``g2``."""
    if len(b) != g1.n or g1.n != g2.n:
        return False
    return frozenset((min(b(i), b(j)), max(b(i), b(j))) for i, j in g1.edges) == g2.edges


def maps_multigraph(b: VertexBijection, m1: DiMultigraph, m2: DiMultigraph) -> bool:
    """Witness check preserving sorts, arcs and exact multiplicities."""
    if len(b) != m1.n or m1.n != m2.n or m1.n_elem != m2.n_elem:
        return False
    if any(m1.sort_of(v) != m2.sort_of(b(v)) for v in range(m1.n)):
        return False
    if len(m1.arcs) != len(m2.arcs):
        return False
    return all(m2.arcs.get((b(u), b(v))) == k for (u, v), k in m1.arcs.items())
