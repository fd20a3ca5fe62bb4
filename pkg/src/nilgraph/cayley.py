"""Finite groups given by multiplication tables, a small corpus, and
brute-force isomorphism / homomorphism search by generator images."""

from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence

from .graphs import VertexBijection
from .graphs.textio import ParseError, _content_lines, _int

MAX_ISO_ORDER = 16


class CayleyGroup:
    """Group on ``0..m-1`` with ``table[u][v] = u * v``; axioms are checked on construction."""

    def __init__(self, table: Sequence[Sequence[int]], name: str = ""):
        table = tuple(tuple(row) for row in table)
        m = len(table)
        if m == 0:
            raise ValueError("a group needs at least one element")
        if any(len(row) != m for row in table):
            raise ValueError("multiplication table must be square")
        if any(not 0 <= x < m for row in table for x in row):
            raise ValueError("table entries out of range")
        ids = [e for e in range(m) if all(table[e][x] == x == table[x][e] for x in range(m))]
        if not ids:
            raise ValueError("no identity element")
        e = ids[0]
        inverse = []
        for x in range(m):
            inv = [y for y in range(m) if table[x][y] == e and table[y][x] == e]
            if not inv:
                raise ValueError(f"element {x + 1} has no inverse")
            inverse.append(inv[0])
        for a, b, c in itertools.product(range(m), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise ValueError(f"not associative at ({a + 1}, {b + 1}, {c + 1})")
        self.table = table
        self.m = m
        self.identity = e
        self.inverse = tuple(inverse)
        self.name = name or f"group of order {m}"

    def __repr__(self) -> str:
        return f"CayleyGroup({self.name})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k

    def order_profile(self) -> list[int]:
        return sorted(self.element_order(x) for x in range(self.m))

    def subgroup(self, gens: Sequence[int]) -> set[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def generating_set(self) -> list[int]:
        """Greedy generators: highest order first, lowest index on ties."""
        gens: list[int] = []
        span = {self.identity}
        for x in sorted(range(self.m), key=lambda x: (-self.element_order(x), x)):
            if x not in span:
                gens.append(x)
                span = self.subgroup(gens)
                if len(span) == self.m:
                    break
        return gens

    def relabel(self, perm: Sequence[int], name: str = "") -> CayleyGroup:
        """Copy with element ``x`` renamed ``perm[x]``."""
        inv = [0] * self.m
        for x, y in enumerate(perm):
            inv[y] = x
        table = [[perm[self.table[inv[a]][inv[b]]] for b in range(self.m)] for a in range(self.m)]
        return CayleyGroup(table, name or f"{self.name} (relabelled)")

    def is_homomorphism(self, h: Sequence[int], other: CayleyGroup) -> bool:
        if len(h) != self.m or any(not 0 <= y < other.m for y in h):
            return False
        return all(
            h[self.table[a][b]] == other.table[h[a]][h[b]] for a in range(self.m) for b in range(self.m)
        )


def cyclic(k: int) -> CayleyGroup:
    return CayleyGroup([[(a + b) % k for b in range(k)] for a in range(k)], f"Z/{k}")


def direct_product(G: CayleyGroup, H: CayleyGroup) -> CayleyGroup:
    pairs = list(itertools.product(range(G.m), range(H.m)))
    index = {pr: i for i, pr in enumerate(pairs)}
    table = [
        [index[(G.table[a][c], H.table[b][d])] for c, d in pairs] for a, b in pairs
    ]
    return CayleyGroup(table, f"{G.name} x {H.name}")


def from_permutations(gens: Sequence[Sequence[int]], name: str = "") -> CayleyGroup:
    """Closure of the given permutations; elements sorted so the identity is 0."""
    deg = len(gens[0])
    ident = tuple(range(deg))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(deg))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    elems = sorted(seen)
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[tuple(b[a[i]] for i in range(deg))] for b in elems] for a in elems]
    return CayleyGroup(table, name)


def symmetric3() -> CayleyGroup:
    return from_permutations([(1, 0, 2), (1, 2, 0)], "S3")


def dihedral(k: int) -> CayleyGroup:
    rotation = tuple((i + 1) % k for i in range(k))
    reflection = tuple(-i % k for i in range(k))
    return from_permutations([rotation, reflection], f"D{k}")


def quaternion() -> CayleyGroup:
    # units 1, i, j, k as 0..3; element index = 4 * sign_bit + unit
    unit_mul = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }
    table = []
    for a in range(8):
        row = []
        for b in range(8):
            sign, unit = unit_mul[(a % 4, b % 4)]
            sign ^= (a // 4) ^ (b // 4)
            row.append(4 * sign + unit)
        table.append(row)
    return CayleyGroup(table, "Q8")


def corpus() -> dict[str, CayleyGroup]:
    """The groups of order at most 8 used by the verification suites."""
    groups = {f"Z{k}": cyclic(k) for k in range(3, 9)}
    z2 = cyclic(2)
    groups["Z2xZ2"] = direct_product(z2, z2)
    groups["Z2xZ4"] = direct_product(z2, cyclic(4))
    groups["Z2^3"] = direct_product(groups["Z2xZ2"], z2)
    groups["S3"] = symmetric3()
    groups["D4"] = dihedral(4)
    groups["Q8"] = quaternion()
    for name, G in groups.items():
        G.name = name
    return groups


def _extend(G: CayleyGroup, H: CayleyGroup, gens, images, injective: bool) -> Optional[dict[int, int]]:
    """Extend generator images to the generated subgroup; ``None`` on a relation clash."""
    f = {G.identity: H.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g, h in zip(gens, images):
                y = G.table[x][g]
                fy = H.table[f[x]][h]
                if y in f:
                    if f[y] != fy:
                        return None
                else:
                    f[y] = fy
                    nxt.append(y)
        frontier = nxt
    if injective and len(set(f.values())) != len(f):
        return None
    return f


def _image_search(G: CayleyGroup, H: CayleyGroup, injective: bool) -> Iterator[tuple[int, ...]]:
    gens = G.generating_set()
    orders = [G.element_order(g) for g in gens]
    options = []
    for o in orders:
        if injective:
            options.append([y for y in range(H.m) if H.element_order(y) == o])
        else:
            options.append([y for y in range(H.m) if o % H.element_order(y) == 0])

    def walk(depth: int, images: list[int]):
        if depth == len(gens):
            f = _extend(G, H, gens, images, injective)
            if f is not None and len(f) == G.m:
                yield tuple(f[x] for x in range(G.m))
            return
        for y in options[depth]:
            images.append(y)
            if _extend(G, H, gens[: depth + 1], images, injective) is not None:
                yield from walk(depth + 1, images)
            images.pop()

    yield from walk(0, [])


def group_iso_small(G: CayleyGroup, H: CayleyGroup, max_order: int = MAX_ISO_ORDER) -> Optional[VertexBijection]:
    """Brute-force isomorphism ``G -> H`` by generator images, or ``None``."""
    if G.m > max_order or H.m > max_order:
        raise ValueError(f"group_iso_small handles groups of order <= {max_order}")
    if G.m != H.m or G.order_profile() != H.order_profile():
        return None
    for h in _image_search(G, H, injective=True):
        if len(set(h)) == G.m and G.is_homomorphism(h, H):
            return VertexBijection(h)
    return None


def homomorphisms(G: CayleyGroup, H: CayleyGroup) -> Iterator[tuple[int, ...]]:
    """Every homomorphism ``G -> H`` as an image tuple, in search order."""
    for h in _image_search(G, H, injective=False):
        if G.is_homomorphism(h, H):
            yield h


def read_cayley(text: str) -> CayleyGroup:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input: expected group order", 1)
    lineno, header = lines[0]
    m = _int(header, lineno)
    if m < 1:
        raise ParseError("group order must be positive", lineno)
    rows = lines[1:]
    if len(rows) != m:
        raise ParseError(f"expected {m} table rows, got {len(rows)}", rows[-1][0] if rows else lineno)
    table = []
    for lineno, line in rows:
        entries = [_int(t, lineno) for t in line.split()]
        if len(entries) != m:
            raise ParseError(f"expected {m} entries", lineno)
        if any(not 1 <= x <= m for x in entries):
            raise ParseError(f"entries must be in 1..{m}", lineno)
        table.append([x - 1 for x in entries])
    try:
        return CayleyGroup(table)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_cayley(G: CayleyGroup) -> str:
    lines = [str(G.m)] + [" ".join(str(x + 1) for x in row) for row in G.table]
    return "\n".join(lines) + "\n"
