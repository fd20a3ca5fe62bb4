"""The directed multigraph of a finite group.

Vertices are the group elements followed by every ordered triple
``(u, v, w)`` (index ``m + u*m^2 + v*m + w``).  For each triple there are
arcs ``u -> t`` and ``v -> t``; when ``u*v = w`` the second carries
multiplicity 2 and there is an extra arc ``t -> w``.  Arcs between the
same ordered pair merge by summing multiplicities.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .cayley import CayleyGroup, group_iso_small
from .graphs import DiMultigraph, multigraph_iso

MIN_ORDER = 3
MAX_GAMMA_ORDER = 8


def triple_index(G: CayleyGroup, u: int, v: int, w: int) -> int:
    m = G.m
    return m + (u * m + v) * m + w


def build_gamma(G: CayleyGroup) -> DiMultigraph:
    m = G.m
    if m < MIN_ORDER:
        raise ValueError(f"the group multigraph needs |G| >= {MIN_ORDER}, got {m}")
    arcs: dict[tuple[int, int], int] = {}

    def add(a: int, b: int, k: int):
        arcs[(a, b)] = arcs.get((a, b), 0) + k

    for u in range(m):
        for v in range(m):
            uv = G.table[u][v]
            for w in range(m):
                t = triple_index(G, u, v, w)
                add(u, t, 1)
                if uv == w:
                    add(v, t, 2)
                    add(t, w, 1)
                else:
                    add(v, t, 1)
    return DiMultigraph(m, m**3, arcs)


def extend_homomorphism(h: Sequence[int], G: CayleyGroup, H: CayleyGroup) -> list[int]:
    """Vertex map ``u -> h(u)``, ``(u, v, w) -> (h(u), h(v), h(w))``."""
    if G.m < MIN_ORDER or H.m < MIN_ORDER:
        raise ValueError(f"both groups need order >= {MIN_ORDER} to have a multigraph")
    if not G.is_homomorphism(h, H):
        raise ValueError("map is not a group homomorphism")
    m = G.m
    out = list(h)
    for u in range(m):
        for v in range(m):
            for w in range(m):
                out.append(triple_index(H, h[u], h[v], h[w]))
    return out


def arc_violations(f: Sequence[int], gamma_g: DiMultigraph, gamma_h: DiMultigraph) -> list[tuple[int, int]]:
    """Arcs of ``gamma_g`` whose image is not an arc of ``gamma_h`` with at least the same multiplicity class.

    A multiplicity-1 arc may land on any arc; an arc of multiplicity >= 2
    must land on one of multiplicity >= 2.
    """
    bad = []
    for (a, b), k in gamma_g.arcs.items():
        img = gamma_h.multiplicity(f[a], f[b])
        if img == 0 or (k >= 2 and img < 2):
            bad.append((a, b))
    return bad


def gamma_iso_check(G: CayleyGroup, H: CayleyGroup, max_order: int = MAX_GAMMA_ORDER) -> bool:
    if max(G.m, H.m) > max_order:
        raise ValueError(f"gamma_iso_check handles groups of order <= {max_order}")
    return gamma_iso(G, H) is not None


def gamma_iso(G: CayleyGroup, H: CayleyGroup):
    return multigraph_iso(build_gamma(G), build_gamma(H))


def group_iso_from_gamma(G: CayleyGroup, H: CayleyGroup) -> Optional[list[int]]:
    """Restrict a multigraph isomorphism to the element vertices (a group isomorphism by the degree argument)."""
    b = gamma_iso(G, H)
    if b is None:
        return None
    return [b(u) for u in range(G.m)]


def agree_with_brute_force(G: CayleyGroup, H: CayleyGroup) -> bool:
    return gamma_iso_check(G, H) == (group_iso_small(G, H) is not None)
