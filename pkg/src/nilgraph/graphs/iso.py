"""Exact isomorphism oracles: colour refinement to a stable partition, then
individualisation/backtracking on the smallest non-singleton cell.

Both inputs are refined together as one disjoint union, so a colour means
the same thing on each side and an unbalanced cell prunes the branch.
Search order is fixed (smallest cell, lowest colour, lowest vertex index),
which makes every returned witness reproducible.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Callable, Optional, Sequence

from .core import DiMultigraph, Graph, VertexBijection, maps_graph, maps_multigraph

Adjacency = list[list[tuple[int, int]]]


def refine(colors: Sequence[int], out: Adjacency, inn: Adjacency) -> list[int]:
    """Iterate neighbourhood-signature refinement until the partition is stable.

    Colours are renumbered by sorted signature, so equal inputs always get
    equal outputs regardless of vertex numbering.
    """
    colors = list(colors)
    n_colors = len(set(colors))
    while True:
        sigs = [
            (
                colors[v],
                tuple(sorted((w, colors[u]) for u, w in out[v])),
                tuple(sorted((w, colors[u]) for u, w in inn[v])),
            )
            for v in range(len(colors))
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(palette) == n_colors:
            return new
        colors, n_colors = new, len(palette)


class _Union:
    """Search state over the disjoint union of the two inputs.

    A partition is ``(cell_of, cells, next_id)``; ``cells`` maps a cell id to
    its members.  Refinement is worklist-driven: a splitter cell splits every
    cell by the multiset of arc weights its members send into and receive
    from the splitter, and all but the largest fragment are queued (all of
    them when the split cell was itself still queued).  The result is the
    coarsest equitable refinement, the same partition that :func:`refine`
    reaches by whole-graph rounds.
    """

    def __init__(self, n: int, out: Adjacency, inn: Adjacency, check: Callable[[VertexBijection], bool]):
        self.n = n
        self.out = out
        self.inn = inn
        self.check = check

    def _balanced(self, members: list[int]) -> bool:
        left = sum(1 for x in members if x < self.n)
        return 2 * left == len(members)

    def refine(self, cell_of: list[int], cells: dict[int, list[int]], next_id: int, queue: list[int]):
        """Refine in place; return the next free cell id or ``None`` if some cell became unbalanced."""
        pending = deque(queue)
        queued = set(queue)
        while pending:
            sid = pending.popleft()
            queued.discard(sid)
            keys: dict[int, tuple[list[int], list[int]]] = {}
            for s in cells[sid]:
                for u, w in self.inn[s]:
                    keys.setdefault(u, ([], []))[0].append(w)
                for u, w in self.out[s]:
                    keys.setdefault(u, ([], []))[1].append(w)
            for cid in sorted({cell_of[u] for u in keys}):
                members = cells[cid]
                if len(members) == 1:
                    continue
                groups: dict = {}
                for x in members:
                    k = keys.get(x)
                    key = (tuple(sorted(k[0])), tuple(sorted(k[1]))) if k else ((), ())
                    groups.setdefault(key, []).append(x)
                if len(groups) == 1:
                    continue
                fragments = [groups[k] for k in sorted(groups)]
                if not all(self._balanced(f) for f in fragments):
                    return None
                cells[cid] = fragments[0]
                ids = [cid]
                for frag in fragments[1:]:
                    cells[next_id] = frag
                    for x in frag:
                        cell_of[x] = next_id
                    ids.append(next_id)
                    next_id += 1
                if cid in queued:
                    extra = ids[1:]
                else:
                    largest = max(range(len(ids)), key=lambda i: (len(fragments[i]), -i))
                    extra = [c for i, c in enumerate(ids) if i != largest]
                for c in extra:
                    pending.append(c)
                    queued.add(c)
        return next_id

    def expand(self, state, queue):
        """Refine ``state``; return ``None`` (dead end), ``("leaf", witness)`` or ``("branch", state, cell)``."""
        cell_of, cells, next_id = state
        next_id = self.refine(cell_of, cells, next_id, queue)
        if next_id is None:
            return None
        best = None
        best_size = 0
        for cid in sorted(cells):
            size = len(cells[cid])
            if size > 2 and (best is None or size < best_size):
                best, best_size = cid, size
        if best is None:
            forward = [0] * self.n
            for a, b in cells.values():
                forward[min(a, b)] = max(a, b) - self.n
            witness = VertexBijection(tuple(forward))
            return ("leaf", witness if self.check(witness) else None)
        return ("branch", (cell_of, cells, next_id), best)

    def search(self, init: Sequence[int]) -> Optional[VertexBijection]:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(init):
            cells.setdefault(c, []).append(v)
        cells = {i: cells[c] for i, c in enumerate(sorted(cells))}
        if not all(self._balanced(m) for m in cells.values()):
            return None
        cell_of = [0] * len(init)
        for cid, members in cells.items():
            for x in members:
                cell_of[x] = cid
        node = self.expand((cell_of, cells, len(cells)), list(cells))
        if node is None:
            return None
        if node[0] == "leaf":
            return node[1]
        stack = [self._frame(node)]
        while stack:
            frame = stack[-1]
            state, cid, v, candidates, idx = frame
            if idx >= len(candidates):
                stack.pop()
                continue
            frame[4] += 1
            w = candidates[idx]
            cell_of, cells, next_id = state
            cell_of = list(cell_of)
            cells = {k: list(m) for k, m in cells.items()}
            cells[cid] = [x for x in cells[cid] if x != v and x != w]
            cells[next_id] = [v, w]
            cell_of[v] = cell_of[w] = next_id
            node = self.expand((cell_of, cells, next_id + 1), [next_id])
            if node is None:
                continue
            if node[0] == "leaf":
                if node[1] is not None:
                    return node[1]
                continue
            stack.append(self._frame(node))
        return None

    def _frame(self, node):
        _, state, cid = node
        members = sorted(state[1][cid])
        left = [x for x in members if x < self.n]
        right = [x for x in members if x >= self.n]
        return [state, cid, left[0], right, 0]


def graph_iso(g1: Graph, g2: Graph) -> Optional[VertexBijection]:
    """Return an edge-preserving bijection ``g1 -> g2`` or ``None``."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    n = g1.n
    if n == 0:
        return VertexBijection(())
    out: Adjacency = [[] for _ in range(2 * n)]
    for offset, g in ((0, g1), (n, g2)):
        for i, j in g.edges:
            out[i + offset].append((j + offset, 1))
            out[j + offset].append((i + offset, 1))
    inn: Adjacency = [[] for _ in range(2 * n)]
    union = _Union(n, out, inn, lambda b: maps_graph(b, g1, g2))
    return union.search([0] * (2 * n))


def _arc_profile(m: DiMultigraph):
    return (m.n_elem, m.n_triple, Counter(m.arcs.values()))


def multigraph_iso(m1: DiMultigraph, m2: DiMultigraph) -> Optional[VertexBijection]:
    """Return a sort-, arc- and multiplicity-preserving bijection ``m1 -> m2`` or ``None``."""
    if _arc_profile(m1) != _arc_profile(m2):
        return None
    n = m1.n
    if n == 0:
        return VertexBijection(())
    out: Adjacency = [[] for _ in range(2 * n)]
    inn: Adjacency = [[] for _ in range(2 * n)]
    for offset, m in ((0, m1), (n, m2)):
        for (u, v), k in m.arcs.items():
            out[u + offset].append((v + offset, k))
            inn[v + offset].append((u + offset, k))
    init = [0 if v < m1.n_elem else 1 for v in range(n)] * 2
    union = _Union(n, out, inn, lambda b: maps_multigraph(b, m1, m2))
    return union.search(init)
