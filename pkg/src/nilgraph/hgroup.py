"""The 2-nilpotent p-group (H-group) attached to a lie-kind H-algebra.

An element is a formal expression ``g_1^a_1 ... g_n^a_n * z``: an exponent
vector mod p^3 and a central part in the algebra's central coordinates.
Generator ``g_t`` stands for the basis vector ``b_t = v_{tau^-1(t)}``
where ``tau`` is the bijection ``chi`` (identity by default).  Products
collect with the correction ``sum_{i<j} a_j * b_i * [b_j, b_i]``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Sequence

from .graphs import VertexBijection
from .halgebra import LIE, AlgebraIso, HAlgebra, check_iso_witness


class HGroupElement(NamedTuple):
    alpha: tuple[int, ...]
    central: tuple[int, ...]


class HGroup:
    def __init__(self, base: HAlgebra, chi: Optional[VertexBijection] = None):
        if base.kind != LIE:
            raise ValueError("H-groups are built from lie-kind algebras")
        chi = chi or VertexBijection.identity(base.n)
        if len(chi) != base.n:
            raise ValueError(f"chi acts on {len(chi)} points, algebra has n={base.n}")
        self.base = base
        self.chi = chi
        self.p = base.p
        self.q = base.p**3
        self.n = base.n
        self.moduli = base.central_moduli
        self._basis = chi.inverse().forward  # generator t -> vertex index of b_t
        terms = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                vec = base.central_coords(self._basis[j], self._basis[i])
                terms += [(j, i, k, val) for k, val in enumerate(vec) if val]
        self._terms = tuple(terms)

    def __repr__(self) -> str:
        return f"HGroup(p={self.p}, n={self.n}, central={self.moduli})"

    def basis_vertex(self, t: int) -> int:
        """Index of the algebra generator that ``g_t`` stands for."""
        return self._basis[t]

    def identity(self) -> HGroupElement:
        return HGroupElement((0,) * self.n, (0,) * len(self.moduli))

    def gen(self, t: int) -> HGroupElement:
        return HGroupElement(tuple(int(s == t) for s in range(self.n)), (0,) * len(self.moduli))

    def central_gen(self, k: int) -> HGroupElement:
        return HGroupElement((0,) * self.n, tuple(int(s == k) for s in range(len(self.moduli))))

    def element(self, alpha: Sequence[int] = (), central: Sequence[int] = ()) -> HGroupElement:
        alpha = tuple(alpha) or (0,) * self.n
        central = tuple(central) or (0,) * len(self.moduli)
        if len(alpha) != self.n or len(central) != len(self.moduli):
            raise ValueError("element does not match the group's profile")
        return HGroupElement(
            tuple(a % self.q for a in alpha), tuple(c % m for c, m in zip(central, self.moduli))
        )

    def generators(self) -> list[HGroupElement]:
        return [self.gen(t) for t in range(self.n)] + [self.central_gen(k) for k in range(len(self.moduli))]

    def random_element(self, rng: random.Random) -> HGroupElement:
        return HGroupElement(
            tuple(rng.randrange(self.q) for _ in range(self.n)),
            tuple(rng.randrange(m) for m in self.moduli),
        )

    def elements(self):
        """Every element in normal form (only sensible for tiny groups)."""
        for alpha in itertools.product(range(self.q), repeat=self.n):
            for central in itertools.product(*(range(m) for m in self.moduli)):
                yield HGroupElement(alpha, central)

    def correction(self, alpha: Sequence[int], beta: Sequence[int]) -> list[int]:
        """Central correction of the product of ``g^alpha`` and ``g^beta``, unreduced."""
        out = [0] * len(self.moduli)
        for j, i, k, val in self._terms:
            out[k] += alpha[j] * beta[i] * val
        return out

    def _check(self, x: HGroupElement):
        if len(x.alpha) != self.n or len(x.central) != len(self.moduli):
            raise ValueError(f"{x} does not belong to {self}")


def group_mul(G: HGroup, x: HGroupElement, y: HGroupElement) -> HGroupElement:
    G._check(x)
    G._check(y)
    q = G.q
    xa, ya = x.alpha, y.alpha
    central = [a + b for a, b in zip(x.central, y.central)]
    for j, i, k, val in G._terms:
        central[k] += xa[j] * ya[i] * val
    return HGroupElement(
        tuple((a + b) % q for a, b in zip(xa, ya)),
        tuple(c % m for c, m in zip(central, G.moduli)),
    )


def group_inv(G: HGroup, x: HGroupElement) -> HGroupElement:
    """Closed form: ``(-alpha, -z + c(alpha, alpha))``."""
    G._check(x)
    corr = G.correction(x.alpha, x.alpha)
    return HGroupElement(
        tuple(-a % G.q for a in x.alpha),
        tuple((c - z) % m for z, c, m in zip(x.central, corr, G.moduli)),
    )


def group_pow(G: HGroup, x: HGroupElement, k: int) -> HGroupElement:
    """``x^k`` by square-and-multiply with :func:`group_mul`."""
    if k < 0:
        x, k = group_inv(G, x), -k
    result = G.identity()
    base = x
    while k:
        if k & 1:
            result = group_mul(G, result, base)
        base = group_mul(G, base, base)
        k >>= 1
    return result


def commutator(G: HGroup, x: HGroupElement, y: HGroupElement) -> HGroupElement:
    """``x^-1 y^-1 x y``."""
    xi, yi = group_inv(G, x), group_inv(G, y)
    return group_mul(G, group_mul(G, xi, yi), group_mul(G, x, y))


def element_order(G: HGroup, x: HGroupElement) -> int:
    e = G.identity()
    order = 1
    while group_pow(G, x, order) != e:
        order *= G.p
        if order > G.q:
            raise AssertionError(f"{x} has order exceeding p^3")
    return order


def group_order(G: HGroup) -> int:
    size = G.q**G.n
    for m in G.moduli:
        size *= m
    return size


# -- presentations -------------------------------------------------------


@dataclass(frozen=True)
class Relator:
    """A word ``[(generator name, exponent), ...]`` that must evaluate to the identity."""

    kind: str  # commutator | central | power
    word: tuple[tuple[str, int], ...]
    text: str


@dataclass
class Presentation:
    generators: list[str]
    central_names: list[str]
    relators: list[Relator] = field(default_factory=list)

    @property
    def names(self) -> list[str]:
        return self.generators + self.central_names

    def count(self, kind: str) -> int:
        return sum(1 for r in self.relators if r.kind == kind)

    def to_gap(self) -> str:
        names = self.names
        lines = ["F := FreeGroup(" + ", ".join(f'"{s}"' for s in names) + ");;"]
        if names:
            lines.append(" ".join(f"{s} := F.{i + 1};;" for i, s in enumerate(names)))
        body = ",\n  ".join(r.text for r in self.relators)
        lines.append(f"rels := [\n  {body}\n];;" if body else "rels := [ ];;")
        lines.append("G := F / rels;;")
        return "\n".join(lines) + "\n"


def _central_names(G: HGroup) -> list[str]:
    if G.base.is_standard:
        sep = "" if G.n < 10 else "_"
        return [f"a{i + 1}{sep}{j + 1}" for i, j in G.base.pairs]
    return [f"z{k + 1}" for k in range(len(G.moduli))]


def _power_text(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def export_presentation(G: HGroup) -> Presentation:
    """Generators ``g_t`` and central ``a_e`` with commutator, centrality and power relators."""
    gens = [f"g{t + 1}" for t in range(G.n)]
    cnames = _central_names(G)
    pres = Presentation(gens, cnames)
    rels = pres.relators
    for s in range(G.n):
        for t in range(s + 1, G.n):
            target = G.base.central_coords(G.basis_vertex(s), G.basis_vertex(t))
            word = [(gens[s], -1), (gens[t], -1), (gens[s], 1), (gens[t], 1)]
            tail = []
            for k, val in enumerate(target):
                if val:
                    m = G.moduli[k]
                    signed = val if 2 * val < m else val - m
                    word.append((cnames[k], -signed))
                    tail.append(_power_text(cnames[k], -signed))
            text = f"Comm({gens[s]},{gens[t]})" + "".join("*" + t for t in tail)
            rels.append(Relator("commutator", tuple(word), text))
    for a, b in itertools.combinations(range(len(cnames)), 2):
        x, y = cnames[a], cnames[b]
        rels.append(Relator("central", ((x, -1), (y, -1), (x, 1), (y, 1)), f"Comm({x},{y})"))
    for x in cnames:
        for y in gens:
            rels.append(Relator("central", ((x, -1), (y, -1), (x, 1), (y, 1)), f"Comm({x},{y})"))
    for y in gens:
        rels.append(Relator("power", ((y, G.q),), f"{y}^{G.q}"))
    for x, m in zip(cnames, G.moduli):
        rels.append(Relator("power", ((x, m),), f"{x}^{m}"))
    return pres


def evaluate_word(G: HGroup, pres: Presentation, word) -> HGroupElement:
    lookup = dict(zip(pres.names, G.generators()))
    out = G.identity()
    for name, e in word:
        out = group_mul(G, out, group_pow(G, lookup[name], e))
    return out


# -- isomorphism transport ------------------------------------------------


class GroupIsoWitness:
    """The map ``Phi: G1 -> G2`` induced by a vertex-bijection algebra isomorphism.

    Generator ``g_t`` goes to ``g'_{perm(t)}`` with ``perm = tau2 o pi o tau1^-1``
    and central parts go through the algebra isomorphism.
    """

    def __init__(self, f: AlgebraIso, G1: HGroup, G2: HGroup):
        self.f = f
        self.G1 = G1
        self.G2 = G2
        pi = f.vertex_map
        self.perm = G1.chi.inverse().then(pi).then(G2.chi)
        base1 = G1.base
        self._central = [f(base1.c_gen(k)).c for k in range(len(G1.moduli))]
        terms = []
        for t in range(G1.n):
            for s in range(t + 1, G1.n):
                hi, lo = self.perm(t), self.perm(s)
                if hi > lo:
                    vec = G2.base.central_coords(G2.basis_vertex(hi), G2.basis_vertex(lo))
                    terms += [(t, s, k, val) for k, val in enumerate(vec) if val]
        self._terms = tuple(terms)

    def central_image(self, z: Sequence[int]) -> list[int]:
        out = [0] * len(self.G2.moduli)
        for coef, img in zip(z, self._central):
            if coef:
                for k, val in enumerate(img):
                    out[k] += coef * val
        return out

    def __call__(self, x: HGroupElement) -> HGroupElement:
        G2 = self.G2
        alpha = [0] * G2.n
        for t, a in enumerate(x.alpha):
            alpha[self.perm(t)] = a
        central = self.central_image(x.central)
        for t, s, k, val in self._terms:
            central[k] += x.alpha[t] * x.alpha[s] * val
        return HGroupElement(tuple(alpha), tuple(c % m for c, m in zip(central, G2.moduli)))

    def by_collection(self, x: HGroupElement) -> HGroupElement:
        """Same map computed literally as the product ``g'_{perm(1)}^a_1 ... g'_{perm(n)}^a_n * z'``."""
        G2 = self.G2
        out = G2.identity()
        for t, a in enumerate(x.alpha):
            out = group_mul(G2, out, group_pow(G2, G2.gen(self.perm(t)), a))
        return group_mul(G2, out, G2.element((), self.central_image(x.central)))

    def check_on_generators(self) -> bool:
        gens = self.G1.generators()
        for x in gens:
            for y in gens:
                if self(group_mul(self.G1, x, y)) != group_mul(self.G2, self(x), self(y)):
                    return False
        return True


def transport_iso(f: AlgebraIso, G1: HGroup, G2: HGroup) -> GroupIsoWitness:
    if f.vertex_map is None:
        raise ValueError("transport needs an isomorphism induced by a vertex bijection")
    if not check_iso_witness(f, G1.base, G2.base):
        raise ValueError("not an algebra isomorphism between the base algebras")
    return GroupIsoWitness(f, G1, G2)


# -- reconstruction -------------------------------------------------------


def reconstruct_algebra(G: HGroup) -> HAlgebra:
    """The algebra ``L = U + Z`` with ``u_s x u_t`` the central part of the commutator ``[g_s, g_t]``."""
    table = {}
    for s in range(G.n):
        for t in range(s + 1, G.n):
            c = commutator(G, G.gen(s), G.gen(t))
            if any(c.alpha):
                raise AssertionError("commutator of generators is not central")
            table[(s, t)] = c.central
    return HAlgebra(G.p, G.n, LIE, G.moduli, table)


def renewal_map(G: HGroup, L: Optional[HAlgebra] = None) -> AlgebraIso:
    """The map ``v_k -> u_{tau(k)}``, ``z -> z`` from ``G.base`` to the reconstructed algebra."""
    L = L or reconstruct_algebra(G)
    base = G.base
    v_images = tuple(L.v_gen(G.chi(k)) for k in range(base.n))
    c_images = tuple(L.c_gen(k) for k in range(len(base.central_moduli)))
    return AlgebraIso(base, L, v_images, c_images)


def algebra_iso_from_group_iso(
    psi: Callable[[HGroupElement], HGroupElement], G1: HGroup, G2: HGroup
) -> AlgebraIso:
    """Pull a group isomorphism back to the base algebras through the reconstructed ones.

    A vertex generator goes to the coset of the image of its group generator;
    central generators go to the central part of their image.
    """
    base1, base2 = G1.base, G2.base
    v_images = []
    for k in range(base1.n):
        img = psi(G1.gen(G1.chi(k)))
        v = [0] * base2.n
        for t, a in enumerate(img.alpha):
            v[G2.basis_vertex(t)] = a
        v_images.append(base2.element(v))
    c_images = []
    for k in range(len(G1.moduli)):
        img = psi(G1.central_gen(k))
        if any(img.alpha):
            raise ValueError("group map does not send the centre into the centre")
        c_images.append(base2.element((), img.central))
    return AlgebraIso(base1, base2, tuple(v_images), tuple(c_images))
