"""Matrix problems at desk scale.

``simsim`` decides simultaneous similarity of two matrix pairs over Z/pZ
by scanning GL(n, p) in lexicographic order of entries.  Containment of
matrix problems is only represented as data; no general checker exists.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .graphs.textio import ParseError, _content_lines, _int
from .hgroup import HGroup
from .modarith import check_prime, det_mod

Matrix = tuple[tuple[int, ...], ...]

MAX_N = 3
MAX_P = 3


def as_matrix(rows: Sequence[Sequence[int]], p: int) -> Matrix:
    return tuple(tuple(x % p for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


def matmul(A: Matrix, B: Matrix, p: int) -> Matrix:
    n, k = len(A), len(B[0]) if B else 0
    return tuple(
        tuple(sum(A[i][t] * B[t][j] for t in range(len(B))) % p for j in range(k)) for i in range(n)
    )


def matinv(A: Matrix, p: int) -> Matrix:
    """Inverse over GF(p) by Gauss-Jordan."""
    n = len(A)
    aug = [list(A[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] % p), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def general_linear(n: int, p: int) -> Iterator[Matrix]:
    """Invertible n x n matrices over GF(p), lexicographic in row-major entries."""
    for entries in itertools.product(range(p), repeat=n * n):
        M = tuple(tuple(entries[i * n : (i + 1) * n]) for i in range(n))
        if det_mod(M, p):
            yield M


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_det(M: list[list[list[int]]], p: int) -> list[int]:
    """Determinant of a matrix of polynomials (low degree first) by cofactor expansion."""
    n = len(M)
    if n == 1:
        return M[0][0]
    total = [0]
    for c in range(n):
        minor = [row[:c] + row[c + 1 :] for row in M[1:]]
        term = _poly_mul(M[0][c], _poly_det(minor, p), p)
        sign = -1 if c % 2 else 1
        width = max(len(total), len(term))
        total = [
            (total[i] if i < len(total) else 0) + sign * (term[i] if i < len(term) else 0)
            for i in range(width)
        ]
        total = [x % p for x in total]
    return total


def charpoly(A: Matrix, p: int) -> tuple[int, ...]:
    """Coefficients of det(xI - A) over GF(p), leading coefficient first."""
    n = len(A)
    M = [[[(-A[i][j]) % p, 1] if i == j else [(-A[i][j]) % p] for j in range(n)] for i in range(n)]
    coeffs = _poly_det(M, p) + [0] * (n + 1)
    return tuple(reversed(coeffs[: n + 1]))


@dataclass(frozen=True)
class MatrixPair:
    A: Matrix
    B: Matrix
    p: int

    def __post_init__(self):
        check_prime(self.p)
        n = len(self.A)
        for M in (self.A, self.B):
            if len(M) != n or any(len(row) != n for row in M):
                raise ValueError("pair must consist of two square matrices of equal size")
        object.__setattr__(self, "A", as_matrix(self.A, self.p))
        object.__setattr__(self, "B", as_matrix(self.B, self.p))

    @property
    def n(self) -> int:
        return len(self.A)

    def conjugate(self, S: Matrix) -> MatrixPair:
        Si = matinv(S, self.p)
        return MatrixPair(matmul(matmul(S, self.A, self.p), Si, self.p), matmul(matmul(S, self.B, self.p), Si, self.p), self.p)


def is_similarity_witness(S: Matrix, x: MatrixPair, y: MatrixPair) -> bool:
    p = x.p
    if det_mod(S, p) == 0:
        return False
    return matmul(S, x.A, p) == matmul(y.A, S, p) and matmul(S, x.B, p) == matmul(y.B, S, p)


def simsim(x: MatrixPair, y: MatrixPair) -> Optional[Matrix]:
    """Invertible ``S`` with ``S A1 S^-1 = A2`` and ``S B1 S^-1 = B2``, or ``None``."""
    if x.p != y.p or x.n != y.n:
        raise ValueError("pairs must share size and prime")
    if x.n > MAX_N or x.p > MAX_P:
        raise ValueError(f"simsim is limited to n <= {MAX_N}, p <= {MAX_P}")
    for S in general_linear(x.n, x.p):
        if is_similarity_witness(S, x, y):
            return S
    return None


def random_pair(n: int, p: int, rng: random.Random) -> MatrixPair:
    rand = lambda: tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
    return MatrixPair(rand(), rand(), p)


def random_invertible(n: int, p: int, rng: random.Random) -> Matrix:
    while True:
        S = tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
        if det_mod(S, p):
            return S


@dataclass
class MatrixProblem:
    """A set of a-tuples of matrices with a description of the admissible transformations."""

    arity: int
    shape: tuple[int, int]
    transformations: str
    instances: list = field(default_factory=list)


@dataclass
class Containment:
    """Claim that ``inner`` is contained in ``outer`` via a tuple of matrices whose
    entries are noncommutative polynomials (kept as opaque strings)."""

    inner: MatrixProblem
    outer: MatrixProblem
    polynomial_tuple: list[list[list[str]]]


def pair_problem(n: int) -> MatrixProblem:
    return MatrixProblem(2, (n, n), "simultaneous similarity (A, B) -> (S A S^-1, S B S^-1)")


def center_order_bound(G: HGroup) -> int:
    """Order of the central span of an H-group on at least 3 vertices; at least p^3."""
    if G.n < 3:
        raise ValueError("the bound needs a graph with at least 3 vertices")
    order = 1
    for m in G.moduli:
        order *= m
    if order < G.p**3:
        raise AssertionError(f"central span has order {order} < p^3")
    return order


def read_matrix_pair(text: str) -> MatrixPair:
    """``n p`` header, then n rows of A followed by n rows of B."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input: expected 'n p'", 1)
    lineno, header = lines[0]
    tok = header.split()
    if len(tok) != 2:
        raise ParseError("header must be 'n p'", lineno)
    n, p = (_int(t, lineno) for t in tok)
    try:
        check_prime(p)
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None
    rows = lines[1:]
    if len(rows) != 2 * n:
        raise ParseError(f"expected {2 * n} matrix rows, got {len(rows)}", rows[-1][0] if rows else lineno)
    mats = []
    for lineno, line in rows:
        entries = [_int(t, lineno) for t in line.split()]
        if len(entries) != n:
            raise ParseError(f"expected {n} entries", lineno)
        mats.append(tuple(entries))
    return MatrixPair(tuple(mats[:n]), tuple(mats[n:]), p)


def write_matrix_pair(x: MatrixPair) -> str:
    lines = [f"{x.n} {x.p}"] + [" ".join(map(str, row)) for row in x.A + x.B]
    return "\n".join(lines) + "\n"
