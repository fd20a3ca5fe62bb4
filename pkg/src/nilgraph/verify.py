"""Verification suites: each check runs one property or invariant over an
exhaustive desk-scale corpus and reports pass/fail with a short detail."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .cayley import CayleyGroup, corpus, group_iso_small, homomorphisms
from .graphs import (
    DiMultigraph,
    Graph,
    VertexBijection,
    all_graphs,
    encode_simple,
    graph_iso,
    maps_graph,
    multigraph_iso,
)
from .group2graph import arc_violations, build_gamma, extend_homomorphism, gamma_iso_check
from .halgebra import (
    build_graph_algebra,
    build_h_algebra,
    check_iso_witness,
    induced_iso,
    multiply,
    recover_standard_form,
    scramble_with_witness,
)
from .hgroup import (
    HGroup,
    algebra_iso_from_group_iso,
    commutator,
    element_order,
    evaluate_word,
    export_presentation,
    group_inv,
    group_mul,
    group_pow,
    reconstruct_algebra,
    renewal_map,
    transport_iso,
)
from .matrixwild import (
    center_order_bound,
    is_similarity_witness,
    matinv,
    matmul,
    random_invertible,
    random_pair,
    simsim,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
    budget: Optional[float] = None

    @property
    def within_budget(self) -> bool:
        return self.budget is None or self.seconds <= self.budget

    @property
    def ok(self) -> bool:
        return self.passed and self.within_budget

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        budget = f" budget {self.budget:.0f}s" if self.budget is not None else ""
        late = "" if self.within_budget else " [over budget]"
        return f"{status} {self.name}: {self.detail} ({self.seconds:.2f}s{budget}){late}"


def timed(name: str, budget: Optional[float] = None):
    def wrap(fn: Callable[..., tuple[bool, str]]):
        def run(*args, **kwargs) -> CheckResult:
            start = time.perf_counter()
            passed, detail = fn(*args, **kwargs)
            return CheckResult(name, passed, detail, time.perf_counter() - start, budget)

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        run.check_name = name
        return run

    return wrap


def labeled_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    return [g for n in range(min_n, max_n + 1) for g in all_graphs(n)]


def graph_classes(max_n: int, min_n: int = 1) -> list[Graph]:
    """One representative per isomorphism class, first in bitmask order."""
    reps: list[Graph] = []
    for g in labeled_graphs(max_n, min_n):
        if not any(r.n == g.n and graph_iso(g, r) for r in reps):
            reps.append(g)
    return reps


def _random_chi(n: int, rng: random.Random) -> VertexBijection:
    perm = list(range(n))
    rng.shuffle(perm)
    return VertexBijection(tuple(perm))


# -- acceptance criteria ----------------------------------------------------


@timed("C1 algebra iso <=> graph iso (scramble, recover)", budget=60)
def check_algebra_recovery(p: int = 3, max_n: int = 3, seed: int = 0):
    graphs = labeled_graphs(min(max_n, 3))
    recovered = []
    for idx, g in enumerate(graphs):
        A = build_h_algebra(g, p)
        B, back = scramble_with_witness(A, (seed, idx))
        if not check_iso_witness(back, B, A):
            return False, f"scramble witness invalid for {g}"
        found = recover_standard_form(B)
        if found is None:
            return False, f"no standard form recovered for {g}"
        h, emb = found
        if not check_iso_witness(emb, build_h_algebra(h, p), B):
            return False, f"recovery witness invalid for {g}"
        recovered.append(h)
    mismatches = 0
    for (g1, r1), (g2, r2) in itertools.product(zip(graphs, recovered), repeat=2):
        expected = graph_iso(g1, g2) is not None
        got = graph_iso(r1, r2) is not None
        mismatches += expected != got
    pairs = len(graphs) ** 2
    return mismatches == 0, f"{pairs} graph pairs, {mismatches} mismatches"


@timed("C2 transport of algebra isos to group isos", budget=120)
def check_transport(primes: Sequence[int] = (3, 5), max_n: int = 4, samples: int = 1000, seed: int = 0):
    rng = random.Random(seed)
    pairs = failures = 0
    for p in primes:
        for n in range(1, max_n + 1):
            graphs = all_graphs(n)
            algebras = [build_h_algebra(g, p) for g in graphs]
            for (g1, A1), (g2, A2) in itertools.product(zip(graphs, algebras), repeat=2):
                b = graph_iso(g1, g2)
                if b is None:
                    continue
                pairs += 1
                G1 = HGroup(A1, _random_chi(n, rng))
                G2 = HGroup(A2, _random_chi(n, rng))
                phi = transport_iso(induced_iso(b, A1, A2), G1, G2)
                bad = any(phi(G1.gen(t)) != G2.gen(phi.perm(t)) for t in range(n))
                for _ in range(samples):
                    x, y = G1.random_element(rng), G1.random_element(rng)
                    if phi(group_mul(G1, x, y)) != group_mul(G2, phi(x), phi(y)):
                        bad = True
                        break
                failures += bad
    return failures == 0, f"{pairs} iso pairs x {samples} products, {failures} failures"


@timed("C3 renewal process rebuilds the algebra", budget=30)
def check_renewal(primes: Sequence[int] = (3, 5), max_n: int = 4, seed: int = 0):
    rng = random.Random(seed)
    total = failures = 0
    for p in primes:
        for g in labeled_graphs(max_n):
            A = build_h_algebra(g, p)
            for chi in (VertexBijection.identity(g.n), _random_chi(g.n, rng)):
                G = HGroup(A, chi)
                L = reconstruct_algebra(G)
                total += 1
                failures += not check_iso_witness(renewal_map(G, L), A, L)
    return failures == 0, f"{total} groups, {failures} failures"


def _relabelled_corpus(seed: int) -> list[CayleyGroup]:
    rng = random.Random(seed)
    groups = list(corpus().values())
    copies = []
    for G in groups:
        perm = list(range(G.m))
        rng.shuffle(perm)
        copies.append(G.relabel(perm, f"{G.name}'"))
    return groups + copies


@timed("C4 G ~ H  <=>  Gamma(G) ~ Gamma(H)", budget=600)
def check_gamma_iso(seed: int = 0):
    groups = _relabelled_corpus(seed)
    mismatches = []
    pairs = 0
    for G, H in itertools.combinations_with_replacement(groups, 2):
        pairs += 1
        if gamma_iso_check(G, H) != (group_iso_small(G, H) is not None):
            mismatches.append(f"{G.name}/{H.name}")
    detail = f"{pairs} group pairs, {len(mismatches)} disagreements"
    if mismatches:
        detail += ": " + ", ".join(mismatches[:5])
    return not mismatches, detail


HOM_PAIRS = [
    ("Z8", "Z4"),
    ("Z6", "Z3"),
    ("Z4", "Z4"),
    ("S3", "Z4"),
    ("D4", "Z2xZ2"),
    ("Q8", "Z2xZ2"),
    ("Z3", "S3"),
    ("Z4", "D4"),
    ("Z4", "Q8"),
    ("Z2xZ4", "Z4"),
]


def sample_homomorphisms() -> list[tuple[CayleyGroup, CayleyGroup, tuple[int, ...]]]:
    """For each pair in ``HOM_PAIRS`` the last homomorphism in search order (a non-constant one when any exists)."""
    groups = corpus()
    out = []
    for a, b in HOM_PAIRS:
        G, H = groups[a], groups[b]
        homs = list(homomorphisms(G, H))
        out.append((G, H, homs[-1]))
    return out


@timed("C5 homomorphisms extend to multigraph homomorphisms", budget=60)
def check_homomorphisms():
    violations = 0
    homs = sample_homomorphisms()
    for G, H, h in homs:
        f = extend_homomorphism(h, G, H)
        violations += len(arc_violations(f, build_gamma(G), build_gamma(H)))
    nontrivial = sum(1 for _, H, h in homs if len(set(h)) > 1)
    return violations == 0, f"{len(homs)} homomorphisms ({nontrivial} non-constant), {violations} arc violations"


@timed("C6 exponent p^3 and 2-nilpotency", budget=60)
def check_exponent(primes: Sequence[int] = (3, 5), max_n: int = 4, samples: int = 10_000, seed: int = 0):
    rng = random.Random(seed)
    groups = failures = 0
    for p in primes:
        q = p**3
        for g in graph_classes(max_n):
            G = HGroup(build_h_algebra(g, p), _random_chi(g.n, rng))
            groups += 1
            e = G.identity()
            bad = any(element_order(G, G.gen(t)) != q for t in range(G.n))
            for _ in range(samples):
                x, y, z = G.random_element(rng), G.random_element(rng), G.random_element(rng)
                if group_pow(G, x, q) != e or commutator(G, commutator(G, x, y), z) != e:
                    bad = True
                    break
            failures += bad
    return failures == 0, f"{groups} groups x {samples} samples, {failures} failures"


@dataclass
class SizeReport:
    input_kind: str
    input_size: int
    output_kind: str
    output_size: int
    formula: str
    expected: int
    growth: int = 1

    @property
    def constant(self) -> float:
        """Measured c in output_size <= c * growth, growth being m^3 or n^2."""
        return self.output_size / self.growth

    @property
    def satisfied(self) -> bool:
        return self.output_size == self.expected

    def line(self) -> str:
        mark = "ok" if self.satisfied else "MISMATCH"
        return (
            f"{self.input_kind} size {self.input_size} -> {self.output_kind} size {self.output_size}"
            f" [{self.formula} = {self.expected}, c = {self.constant:.3f}] {mark}"
        )


def size_reports(max_n: int = 8, p: int = 3) -> list[SizeReport]:
    reports = []
    for name, G in corpus().items():
        gamma = build_gamma(G)
        m = G.m
        reports.append(SizeReport(f"group {name}", m, "Gamma(G) vertices", gamma.n, "m + m^3", m + m**3, m**3))
    for n in range(1, max_n + 1):
        g = Graph(n)
        l = n * (n - 1) // 2
        for kind, A in (("H-algebra", build_h_algebra(g, p)), ("graph algebra N", build_graph_algebra(g, p))):
            reports.append(SizeReport(f"graph n={n}", n, f"{kind} basis", A.dim, "n + n(n-1)/2", n + l, n * n))
        pres = export_presentation(HGroup(build_h_algebra(g, p)))
        reports.append(SizeReport(f"graph n={n}", n, "H-group generators", len(pres.names), "n + n(n-1)/2", n + l, n * n))
    return reports


@timed("C7 reduction sizes m + m^3 and n + n(n-1)/2", budget=5)
def check_sizes(max_n: int = 8, p: int = 3):
    reports = size_reports(max_n, p)
    bad = [r for r in reports if not r.satisfied]
    return not bad, f"{len(reports)} size reports, {len(bad)} mismatches"


@timed("C8 presentation relators evaluate to the identity", budget=10)
def check_presentations(primes: Sequence[int] = (3, 5), max_n: int = 4):
    total = failures = 0
    for p in primes:
        for g in labeled_graphs(max_n):
            G = HGroup(build_h_algebra(g, p))
            pres = export_presentation(G)
            n, l = g.n, g.n * (g.n - 1) // 2
            counts_ok = (
                pres.count("commutator") == l
                and pres.count("central") == l * (l - 1) // 2 + l * n
                and pres.count("power") == n + l
            )
            e = G.identity()
            for rel in pres.relators:
                total += 1
                if evaluate_word(G, pres, rel.word) != e:
                    failures += 1
            failures += not counts_ok
    return failures == 0, f"{total} relators, {failures} failures"


@timed("C9 simultaneous similarity is an equivalence; centre order >= p^3", budget=60)
def check_wild(n: int = 2, p: int = 3, pairs: int = 50, max_n: int = 4, primes: Sequence[int] = (3, 5), seed: int = 0):
    rng = random.Random(seed)
    failures = []
    for k in range(pairs):
        x = random_pair(n, p, rng)
        S1, S2 = random_invertible(n, p, rng), random_invertible(n, p, rng)
        y = x.conjugate(S1)
        z = y.conjugate(S2)
        refl = simsim(x, x)
        xy, yx, yz, xz = simsim(x, y), simsim(y, x), simsim(y, z), simsim(x, z)
        checks = [
            refl is not None and is_similarity_witness(refl, x, x),
            xy is not None and is_similarity_witness(xy, x, y),
            yx is not None and is_similarity_witness(yx, y, x),
            xy is not None and is_similarity_witness(matinv(xy, p), y, x),
            yz is not None and xz is not None and is_similarity_witness(xz, x, z),
            yz is not None and xy is not None and is_similarity_witness(matmul(yz, xy, p), x, z),
        ]
        if not all(checks):
            failures.append(k)
    bound_fail = 0
    graphs = 0
    for q in primes:
        for g in labeled_graphs(max_n, min_n=3):
            graphs += 1
            l = g.n * (g.n - 1) // 2
            e = len(g.edges)
            order = center_order_bound(HGroup(build_h_algebra(g, q)))
            bound_fail += order != q**e * q ** (2 * (l - e)) or order < q**3
    ok = not failures and not bound_fail
    return ok, f"{pairs} matrix pairs, {len(failures)} failures; {graphs} centre bounds, {bound_fail} failures"


CRITERIA = [
    check_algebra_recovery,
    check_transport,
    check_renewal,
    check_gamma_iso,
    check_homomorphisms,
    check_exponent,
    check_sizes,
    check_presentations,
    check_wild,
]


# -- further module invariants ---------------------------------------------


@timed("additive orders p^3 / p / p^2 and edge count")
def check_additive_orders(primes: Sequence[int] = (3, 5), max_n: int = 5):
    bad = 0
    for p in primes:
        for g in graph_classes(max_n):
            A = build_h_algebra(g, p)
            orders = [A.additive_order(x) for x in A.basis()]
            expected = [p**3] * g.n + [p if g.has_edge(i, j) else p * p for i, j in g.pairs()]
            bad += orders != expected
            bad += sum(1 for o in orders[g.n :] if o == p) != len(g.edges)
    return bad == 0, f"{bad} failures"


@timed("lie axioms on random triples")
def check_lie_axioms(primes: Sequence[int] = (3, 5), max_n: int = 4, samples: int = 1000, seed: int = 0):
    rng = random.Random(seed)
    bad = 0
    for p in primes:
        for g in graph_classes(max_n):
            A = build_h_algebra(g, p)
            rand = lambda: A.element(
                [rng.randrange(A.q) for _ in range(A.n)], [rng.randrange(m) for m in A.central_moduli]
            )
            zero = A.zero()
            for _ in range(samples):
                x, y, z = rand(), rand(), rand()
                s = rng.randrange(A.q)
                br = lambda a, b: multiply(A, a, b)
                ok = (
                    br(x, x) == zero
                    and br(br(x, y), z) == zero
                    and br(A.add(x, y), z) == A.add(br(x, z), br(y, z))
                    and br(A.scale(s, x), y) == A.scale(s, br(x, y))
                    and A.add(A.add(br(x, br(y, z)), br(y, br(z, x))), br(z, br(x, y))) == zero
                )
                if not ok:
                    bad += 1
                    break
    return bad == 0, f"{bad} failures"


@timed("induced_iso exists iff the bijection is a graph isomorphism")
def check_induced_iso(p: int = 3, max_n: int = 4):
    bad = total = 0
    for n in range(1, min(max_n, 4) + 1):
        graphs = all_graphs(n)
        algebras = [build_h_algebra(g, p) for g in graphs]
        perms = [VertexBijection(pm) for pm in itertools.permutations(range(n))]
        for g1, A1 in zip(graphs, algebras):
            for g2, A2 in zip(graphs, algebras):
                if len(g1.edges) != len(g2.edges):
                    continue
                for b in perms:
                    total += 1
                    f = induced_iso(b, A1, A2)
                    bad += (f is not None) != maps_graph(b, g1, g2)
    return bad == 0, f"{total} bijections, {bad} disagreements"


@timed("group axioms, inverses and the quotient onto (Z/p^3)^n")
def check_group_axioms(primes: Sequence[int] = (3, 5), max_n: int = 4, samples: int = 10_000, seed: int = 0):
    rng = random.Random(seed)
    bad = 0
    for p in primes:
        for g in graph_classes(max_n):
            G = HGroup(build_h_algebra(g, p), _random_chi(g.n, rng))
            e = G.identity()
            for _ in range(samples):
                x, y, z = G.random_element(rng), G.random_element(rng), G.random_element(rng)
                xy = group_mul(G, x, y)
                ok = (
                    group_mul(G, xy, z) == group_mul(G, x, group_mul(G, y, z))
                    and group_mul(G, x, e) == x == group_mul(G, e, x)
                    and group_mul(G, x, group_inv(G, x)) == e
                    and xy.alpha == tuple((a + b) % G.q for a, b in zip(x.alpha, y.alpha))
                )
                if not ok:
                    bad += 1
                    break
    return bad == 0, f"{bad} failures"


@timed("group isos pull back to algebra isos; inverse transports compose to the identity")
def check_pullback(primes: Sequence[int] = (3,), max_n: int = 4, samples: int = 50, seed: int = 0):
    rng = random.Random(seed)
    bad = total = 0
    for p in primes:
        for g in graph_classes(max_n):
            perm = _random_chi(g.n, rng)
            h = g.relabel(perm.forward)
            A1, A2 = build_h_algebra(g, p), build_h_algebra(h, p)
            G1, G2 = HGroup(A1, _random_chi(g.n, rng)), HGroup(A2, _random_chi(g.n, rng))
            phi = transport_iso(induced_iso(perm, A1, A2), G1, G2)
            back = transport_iso(induced_iso(perm.inverse(), A2, A1), G2, G1)
            total += 1
            ok = check_iso_witness(algebra_iso_from_group_iso(phi, G1, G2), A1, A2)
            ok = ok and phi.check_on_generators()
            for _ in range(samples):
                x = G1.random_element(rng)
                ok = ok and back(phi(x)) == x and phi(x) == phi.by_collection(x)
            bad += not ok
    return bad == 0, f"{total} transports, {bad} failures"


@timed("Gamma(G) degrees: element vertices dominate, triples have degree 2 or 4")
def check_gamma_degrees():
    bad = 0
    for G in corpus().values():
        gamma = build_gamma(G)
        deg = gamma.degrees()
        m = G.m
        elem = deg[:m]
        trip = deg[m:]
        bad += min(elem) <= max(trip) or min(elem) < m * m
        for u, v, w in itertools.product(range(m), repeat=3):
            d = deg[m + (u * m + v) * m + w]
            bad += d != (4 if G.table[u][v] == w else 2)
    return bad == 0, f"{bad} failures"


@timed("multigraph iso agrees with graph iso of the simple encodings")
def check_encoding(max_order: int = 4, seed: int = 0):
    groups = [G for G in _relabelled_corpus(seed) if G.m <= max_order]
    gammas = [build_gamma(G) for G in groups]
    bad = total = 0
    for m1, m2 in itertools.combinations_with_replacement(gammas, 2):
        if m1.n != m2.n:
            continue
        total += 1
        bad += (multigraph_iso(m1, m2) is not None) != (graph_iso(encode_simple(m1), encode_simple(m2)) is not None)
    return bad == 0, f"{total} multigraph pairs, {bad} disagreements"


SUITES = {
    "algebra": lambda a: [
        check_algebra_recovery(a.p, min(a.max_n, 3), a.seed),
        check_additive_orders((a.p,), max(a.max_n, 1)),
        check_lie_axioms((a.p,), a.max_n, seed=a.seed),
        check_induced_iso(a.p, a.max_n),
    ],
    "group": lambda a: [
        check_transport((a.p,), a.max_n, seed=a.seed),
        check_renewal((a.p,), a.max_n, seed=a.seed),
        check_exponent((a.p,), a.max_n, seed=a.seed),
        check_presentations((a.p,), a.max_n),
        check_group_axioms((a.p,), a.max_n, seed=a.seed),
        check_pullback((a.p,), a.max_n, seed=a.seed),
    ],
    "gamma": lambda a: [
        check_gamma_iso(a.seed),
        check_homomorphisms(),
        check_gamma_degrees(),
        check_encoding(seed=a.seed),
    ],
    "sizes": lambda a: [check_sizes(max(a.max_n, 1), a.p)],
    "wild": lambda a: [check_wild(p=3, max_n=max(a.max_n, 3), primes=(a.p,), seed=a.seed)],
}
SUITE_ORDER = ["algebra", "group", "gamma", "sizes", "wild"]


def run_suite(name: str, args) -> list[CheckResult]:
    names = SUITE_ORDER if name == "all" else [name]
    results = []
    for s in names:
        results.extend(SUITES[s](args))
    return results
