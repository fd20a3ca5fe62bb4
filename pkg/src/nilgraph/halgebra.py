"""Graph algebras over Z/p^3Z.

``build_h_algebra`` gives the 2-step nilpotent Lie algebra of a graph (the
H-algebra) and ``build_graph_algebra`` the nilpotent part of the
commutative graph algebra.  Both are stored the same way: ``n`` vertex
generators of additive order p^3 and a central module given by a modulus
profile, with the product of each generator pair ``i < j`` stored as a
coordinate vector in the central module.  In a standard algebra central
coordinate ``k`` is the ``k``-th vertex pair in lexicographic order, with
modulus p for an edge and p^2 for a non-edge.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .graphs import Graph, VertexBijection
from .modarith import check_prime, det_mod, rank_mod_p, vector_order

LIE = "lie"
COMMUTATIVE = "commutative"


class AlgebraElement(NamedTuple):
    """Coordinates on the vertex generators (mod p^3) and on the central generators."""

    v: tuple[int, ...]
    c: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class HAlgebra:
    p: int
    n: int
    kind: str
    central_moduli: tuple[int, ...]
    table: dict  # (i, j), i < j -> central coordinates of v_i * v_j
    graph: Optional[Graph] = None

    def __post_init__(self):
        if self.kind not in (LIE, COMMUTATIVE):
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        q = self.p**3
        for m in self.central_moduli:
            if q % m:
                raise ValueError(f"central modulus {m} does not divide p^3")
        terms = []
        for (i, j), vec in sorted(self.table.items()):
            if not 0 <= i < j < self.n:
                raise ValueError(f"bad generator pair {(i, j)}")
            if len(vec) != len(self.central_moduli):
                raise ValueError(f"product of {(i, j)} has wrong length")
            for k, val in enumerate(vec):
                if val % self.central_moduli[k]:
                    terms.append((i, j, k, val % self.central_moduli[k]))
        object.__setattr__(self, "_terms", tuple(terms))

    @property
    def q(self) -> int:
        return self.p**3

    @property
    def is_standard(self) -> bool:
        return self.graph is not None

    @property
    def pairs(self) -> list[tuple[int, int]]:
        if self.graph is None:
            raise ValueError("only standard algebras have pair-indexed central generators")
        return self.graph.pairs()

    @property
    def dim(self) -> int:
        """Number of module generators (vertex plus central)."""
        return self.n + len(self.central_moduli)

    def order(self) -> int:
        size = self.q**self.n
        for m in self.central_moduli:
            size *= m
        return size

    def central_order(self) -> int:
        size = 1
        for m in self.central_moduli:
            size *= m
        return size

    def element(self, v: Sequence[int] = (), c: Sequence[int] = ()) -> AlgebraElement:
        v = tuple(v) or (0,) * self.n
        c = tuple(c) or (0,) * len(self.central_moduli)
        if len(v) != self.n or len(c) != len(self.central_moduli):
            raise ValueError("element does not match the algebra's profile")
        q = self.q
        return AlgebraElement(
            tuple(x % q for x in v), tuple(x % m for x, m in zip(c, self.central_moduli))
        )

    def zero(self) -> AlgebraElement:
        return AlgebraElement((0,) * self.n, (0,) * len(self.central_moduli))

    def v_gen(self, i: int) -> AlgebraElement:
        return AlgebraElement(tuple(int(k == i) for k in range(self.n)), (0,) * len(self.central_moduli))

    def c_gen(self, k: int) -> AlgebraElement:
        return AlgebraElement((0,) * self.n, tuple(int(t == k) for t in range(len(self.central_moduli))))

    def a(self, i: int, j: int) -> AlgebraElement:
        """Central generator of the pair ``{i, j}`` (standard algebras only)."""
        return self.c_gen(self.pair_index(i, j))

    def pair_index(self, i: int, j: int) -> int:
        i, j = min(i, j), max(i, j)
        if i == j or j >= self.n:
            raise ValueError(f"no pair {(i, j)}")
        return i * self.n - i * (i + 1) // 2 + (j - i - 1)

    def basis(self) -> list[AlgebraElement]:
        return [self.v_gen(i) for i in range(self.n)] + [
            self.c_gen(k) for k in range(len(self.central_moduli))
        ]

    def contains(self, x: AlgebraElement) -> bool:
        return (
            len(x.v) == self.n
            and len(x.c) == len(self.central_moduli)
            and all(0 <= a < self.q for a in x.v)
            and all(0 <= a < m for a, m in zip(x.c, self.central_moduli))
        )

    def add(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        q = self.q
        return AlgebraElement(
            tuple((a + b) % q for a, b in zip(x.v, y.v)),
            tuple((a + b) % m for a, b, m in zip(x.c, y.c, self.central_moduli)),
        )

    def scale(self, s: int, x: AlgebraElement) -> AlgebraElement:
        q = self.q
        return AlgebraElement(
            tuple(s * a % q for a in x.v), tuple(s * a % m for a, m in zip(x.c, self.central_moduli))
        )

    def neg(self, x: AlgebraElement) -> AlgebraElement:
        return self.scale(-1, x)

    def additive_order(self, x: AlgebraElement) -> int:
        return max(vector_order(x.v, (self.q,) * self.n), vector_order(x.c, self.central_moduli))

    def central_coords(self, i: int, j: int) -> tuple[int, ...]:
        """Central coordinates of the product ``v_i * v_j`` for any ordered pair."""
        zero = (0,) * len(self.central_moduli)
        if i == j:
            return zero
        if i < j:
            return tuple(self.table.get((i, j), zero))
        vec = self.table.get((j, i), zero)
        if self.kind == COMMUTATIVE:
            return tuple(vec)
        return tuple(-x % m for x, m in zip(vec, self.central_moduli))


def multiply(A: HAlgebra, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear product (the bracket for lie kind).  Products land in the central span."""
    if not (A.contains(x) and A.contains(y)):
        raise ValueError("operands do not belong to this algebra")
    out = [0] * len(A.central_moduli)
    sign = -1 if A.kind == LIE else 1
    xv, yv = x.v, y.v
    for i, j, k, val in A._terms:
        coef = xv[i] * yv[j] + sign * xv[j] * yv[i]
        if coef:
            out[k] += coef * val
    return AlgebraElement((0,) * A.n, tuple(a % m for a, m in zip(out, A.central_moduli)))


bracket = multiply


def _standard(g: Graph, p: int, kind: str) -> HAlgebra:
    check_prime(p)
    pairs = g.pairs()
    moduli = tuple(p if g.has_edge(i, j) else p * p for i, j in pairs)
    l = len(pairs)
    table = {pr: tuple(int(t == k) for t in range(l)) for k, pr in enumerate(pairs)}
    return HAlgebra(p, g.n, kind, moduli, table, graph=g)


def build_graph_algebra(g: Graph, p: int) -> HAlgebra:
    """Nilpotent part N of the commutative graph algebra R(g) (no unit summand)."""
    return _standard(g, p, COMMUTATIVE)


def build_h_algebra(g: Graph, p: int) -> HAlgebra:
    """The H-algebra of ``g``: ``[v_i, v_j] = a_ij = -a_ji`` with all ``a`` central."""
    return _standard(g, p, LIE)


@dataclass(frozen=True, eq=False)
class AlgebraIso:
    """A module map given by the images of the generators of ``source``.

    ``vertex_map`` is set when the map is induced by a vertex bijection
    between two standard algebras.
    """

    source: HAlgebra
    target: HAlgebra
    v_images: tuple[AlgebraElement, ...]
    c_images: tuple[AlgebraElement, ...]
    vertex_map: Optional[VertexBijection] = None

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        T = self.target
        acc_v = [0] * T.n
        acc_c = [0] * len(T.central_moduli)
        for coef, img in itertools.chain(zip(x.v, self.v_images), zip(x.c, self.c_images)):
            if coef:
                for t, a in enumerate(img.v):
                    acc_v[t] += coef * a
                for t, a in enumerate(img.c):
                    acc_c[t] += coef * a
        return T.element(acc_v, acc_c)


def _check_compatible(A1: HAlgebra, A2: HAlgebra):
    if A1.p != A2.p or A1.kind != A2.kind:
        raise ValueError("algebras differ in prime or kind")
    if A1.n != A2.n:
        raise ValueError(f"size mismatch: n={A1.n} vs n={A2.n}")


def vertex_map_iso(b: VertexBijection, A1: HAlgebra, A2: HAlgebra) -> AlgebraIso:
    """The module map ``v_i -> v_b(i)``, ``a_ij -> +-a_b(i)b(j)``, built without checking it is an iso."""
    _check_compatible(A1, A2)
    if not (A1.is_standard and A2.is_standard):
        raise ValueError("vertex maps act on standard algebras only")
    if len(b) != A1.n:
        raise ValueError(f"bijection on {len(b)} points for n={A1.n}")
    v_images = tuple(A2.v_gen(b(i)) for i in range(A1.n))
    c_images = []
    for i, j in A1.pairs:
        img = A2.a(b(i), b(j))
        if A1.kind == LIE and b(i) > b(j):
            img = A2.neg(img)
        c_images.append(img)
    return AlgebraIso(A1, A2, v_images, tuple(c_images), vertex_map=b)


def induced_iso(b: VertexBijection, A1: HAlgebra, A2: HAlgebra) -> Optional[AlgebraIso]:
    """The isomorphism induced by ``b`` if it maps edges to edges and non-edges to non-edges."""
    f = vertex_map_iso(b, A1, A2)
    g1, g2 = A1.graph, A2.graph
    for i, j in A1.pairs:
        if g1.has_edge(i, j) != g2.has_edge(b(i), b(j)):
            return None
    return f


def check_iso_witness(f: AlgebraIso, A1: HAlgebra, A2: HAlgebra) -> bool:
    """True iff ``f`` is a well-defined bijective module map ``A1 -> A2`` preserving products.

    Bijectivity uses Nakayama: a module map between finite p-groups of the
    same order is bijective iff the generator images span ``A2 / p A2``.
    """
    if A1.p != A2.p or A1.kind != A2.kind:
        return False
    if len(f.v_images) != A1.n or len(f.c_images) != len(A1.central_moduli):
        return False
    if not all(A2.contains(x) for x in itertools.chain(f.v_images, f.c_images)):
        return False
    if A1.order() != A2.order() or A1.dim != A2.dim:
        return False
    gens = [(A1.q, x) for x in f.v_images] + list(zip(A1.central_moduli, f.c_images))
    zero = A2.zero()
    if any(A2.scale(m, x) != zero for m, x in gens):
        return False
    if rank_mod_p([x.v + x.c for _, x in gens], A1.p) != A2.dim:
        return False
    basis = A1.basis()
    images = list(f.v_images) + list(f.c_images)
    for s, bs in enumerate(basis):
        for t, bt in enumerate(basis):
            if f(multiply(A1, bs, bt)) != multiply(A2, images[s], images[t]):
                return False
    return True


def identity_iso(A: HAlgebra) -> AlgebraIso:
    return AlgebraIso(A, A, tuple(A.v_gen(i) for i in range(A.n)), tuple(A.c_gen(k) for k in range(len(A.central_moduli))))


class CentralChange:
    """An automorphism of a direct sum of cyclic p-groups, acting on coordinates.

    Built from unit scalings and transvections ``x_k += c * x_e`` (with ``c``
    divisible enough to be well defined), followed by a permutation of the
    coordinate positions.
    """

    def __init__(self, moduli: Sequence[int], ops: Sequence[tuple] = (), perm: Optional[Sequence[int]] = None):
        self.moduli = tuple(moduli)
        self.ops = tuple(ops)
        self.perm = tuple(perm) if perm is not None else tuple(range(len(self.moduli)))
        self.new_moduli = [0] * len(self.moduli)
        for k, m in enumerate(self.moduli):
            self.new_moduli[self.perm[k]] = m
        self.new_moduli = tuple(self.new_moduli)

    @classmethod
    def random(cls, moduli: Sequence[int], p: int, rng: random.Random, steps: Optional[int] = None) -> CentralChange:
        moduli = tuple(moduli)
        l = len(moduli)
        ops = []
        for _ in range(steps if steps is not None else 4 * l):
            if l == 0:
                break
            k = rng.randrange(l)
            if l == 1 or rng.random() < 0.3:
                u = rng.randrange(1, moduli[k])
                while u % p == 0:
                    u = rng.randrange(1, moduli[k])
                ops.append(("scale", k, u))
            else:
                e = rng.choice([t for t in range(l) if t != k])
                step = moduli[k] // moduli[e] if moduli[e] < moduli[k] else 1
                ops.append(("add", k, e, step * rng.randrange(moduli[k])))
        perm = list(range(l))
        rng.shuffle(perm)
        return cls(moduli, ops, perm)

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        x = [a % m for a, m in zip(x, self.moduli)]
        for op in self.ops:
            if op[0] == "scale":
                _, k, u = op
                x[k] = x[k] * u % self.moduli[k]
            else:
                _, k, e, c = op
                x[k] = (x[k] + c * x[e]) % self.moduli[k]
        out = [0] * len(x)
        for k, a in enumerate(x):
            out[self.perm[k]] = a
        return tuple(out)

    def apply_inverse(self, y: Sequence[int]) -> tuple[int, ...]:
        x = [y[self.perm[k]] % m for k, m in enumerate(self.moduli)]
        for op in reversed(self.ops):
            if op[0] == "scale":
                _, k, u = op
                x[k] = x[k] * pow(u, -1, self.moduli[k]) % self.moduli[k]
            else:
                _, k, e, c = op
                x[k] = (x[k] - c * x[e]) % self.moduli[k]
        return tuple(x)


def rebase(
    A: HAlgebra,
    rows: Sequence[Sequence[int]],
    change: Optional[CentralChange] = None,
    offsets: Optional[Sequence[Sequence[int]]] = None,
) -> tuple[HAlgebra, AlgebraIso]:
    """Rewrite ``A`` in the basis ``u_i = sum_k rows[i][k] v_k + offsets[i]`` with central coordinates changed by ``change``.

    Returns the rewritten algebra and the isomorphism from it back to ``A``.
    """
    if A.kind != LIE:
        raise ValueError("basis scrambling is defined for lie-kind algebras")
    n = A.n
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("basis change must be n x n")
    if det_mod(rows, A.p) == 0:
        raise ValueError("basis change is not invertible")
    change = change or CentralChange(A.central_moduli)
    offsets = offsets or [(0,) * len(A.central_moduli)] * n
    old = [A.element(rows[i], offsets[i]) for i in range(n)]
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            table[(i, j)] = change.apply(multiply(A, old[i], old[j]).c)
    B = HAlgebra(A.p, n, LIE, change.new_moduli, table)
    c_images = []
    for k in range(len(B.central_moduli)):
        unit = tuple(int(t == k) for t in range(len(B.central_moduli)))
        c_images.append(A.element((), change.apply_inverse(unit)))
    return B, AlgebraIso(B, A, tuple(old), tuple(c_images))


def scramble_with_witness(A: HAlgebra, seed) -> tuple[HAlgebra, AlgebraIso]:
    """Random basis change of ``A`` (deterministic per seed) plus the isomorphism back to ``A``.

    ``seed`` may be an int, a string or a tuple of those.
    """
    rng = random.Random(seed if isinstance(seed, (int, str)) else repr(seed))
    n, q = A.n, A.q
    while True:
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(n)]
        if det_mod(rows, A.p):
            break
    offsets = [[rng.randrange(m) for m in A.central_moduli] for _ in range(n)]
    change = CentralChange.random(A.central_moduli, A.p, rng)
    return rebase(A, rows, change, offsets)


def scramble_basis(A: HAlgebra, seed) -> HAlgebra:
    return scramble_with_witness(A, seed)[0]


def recover_standard_form(A: HAlgebra, max_n: int = 3) -> Optional[tuple[Graph, AlgebraIso]]:
    """Search for a standardising basis of ``A``.

    Bases of ``A / Z`` are enumerated over GF(p) in lexicographic order and
    lifted by taking residues in ``[0, p)``.  This is exhaustive: perturbing
    a standardising basis by p times anything changes each pairwise bracket
    only by an element of pZ, which keeps its order and its image in Z/pZ.

    Returns the graph read off the bracket orders together with the
    isomorphism ``build_h_algebra(graph) -> A``.
    """
    if A.kind != LIE:
        raise ValueError("recovery is defined for lie-kind algebras")
    if A.n > max_n:
        raise ValueError(f"recover_graph is limited to n <= {max_n}, got n={A.n}")
    p, n = A.p, A.n
    l = n * (n - 1) // 2
    if len(A.central_moduli) != l or any(m not in (p, p * p) for m in A.central_moduli):
        return None
    allowed = (p, p * p)
    vectors = [v for v in itertools.product(range(p), repeat=n) if any(v)]
    chosen: list[tuple[int, ...]] = []
    elems: list[AlgebraElement] = []
    brackets: dict[tuple[int, int], AlgebraElement] = {}

    def extend(j: int):
        if j == n:
            return finish()
        for vec in vectors:
            if rank_mod_p(chosen + [vec], p) != j + 1:
                continue
            w = A.element(vec)
            ok = True
            for i in range(j):
                c = multiply(A, elems[i], w)
                if A.additive_order(c) not in allowed:
                    ok = False
                    break
                brackets[(i, j)] = c
            if not ok:
                continue
            chosen.append(vec)
            elems.append(w)
            found = extend(j + 1)
            if found is not None:
                return found
            chosen.pop()
            elems.pop()
        return None

    def finish():
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        cs = [brackets[pr] for pr in pairs]
        if l and rank_mod_p([c.c for c in cs], p) != l:
            return None
        orders = [A.additive_order(c) for c in cs]
        size = 1
        for o in orders:
            size *= o
        if size != A.central_order():
            return None
        g = Graph(n, frozenset(pr for pr, o in zip(pairs, orders) if o == p))
        std = build_h_algebra(g, p)
        return g, AlgebraIso(std, A, tuple(elems), tuple(cs))

    return extend(0)


def recover_graph(A: HAlgebra, max_n: int = 3) -> Optional[Graph]:
    found = recover_standard_form(A, max_n)
    return None if found is None else found[0]


def write_algebra(A: HAlgebra) -> str:
    """Text dump of a standard algebra: header, pair tags, nonzero structure constants."""
    if not A.is_standard:
        raise ValueError("only standard algebras have a text dump")
    lines = [f"{A.p} {A.n} {A.kind}"]
    pairs = A.pairs
    for i, j in pairs:
        tag = "edge" if A.graph.has_edge(i, j) else "nonedge"
        lines.append(f"{i + 1} {j + 1} {tag}")
    for i in range(A.n):
        for j in range(A.n):
            for k, val in enumerate(A.central_coords(i, j)):
                if val:
                    a, b = pairs[k]
                    lines.append(f"v_{i + 1} * v_{j + 1} = {val} * a_{a + 1}{b + 1}" if A.n < 10
                                 else f"v_{i + 1} * v_{j + 1} = {val} * a_{a + 1}_{b + 1}")
    return "\n".join(lines) + "\n"


def read_algebra(text: str) -> HAlgebra:
    """Parse a dump written by :func:`write_algebra` and check it against the rebuilt standard algebra."""
    from .graphs.textio import ParseError

    lines = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines:
        raise ParseError("empty algebra dump", 1)
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[2] not in (LIE, COMMUTATIVE):
        raise ParseError("header must be 'p n lie|commutative'", no)
    try:
        p, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("p and n must be integers", no) from None
    l = n * (n - 1) // 2
    edges = set()
    for no, ln in lines[1 : 1 + l]:
        tok = ln.split()
        if len(tok) != 3 or tok[2] not in ("edge", "nonedge"):
            raise ParseError(f"expected 'i j edge|nonedge', got {ln!r}", no)
        if tok[2] == "edge":
            edges.add((int(tok[0]) - 1, int(tok[1]) - 1))
    A = _standard(Graph(n, frozenset(edges)), p, parts[2])
    expected = write_algebra(A).splitlines()
    got = [ln for _, ln in lines]
    if got != expected:
        bad = next((i for i, (x, y) in enumerate(zip(got, expected)) if x != y), min(len(got), len(expected)))
        raise ParseError("structure constants disagree with the tagged pairs", lines[min(bad, len(lines) - 1)][0])
    return A
