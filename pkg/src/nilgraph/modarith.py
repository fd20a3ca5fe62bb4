"""Arithmetic in Z/p^kZ (k = 1, 2, 3) and vectors with mixed prime-power moduli."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


class ModulusError(ValueError):
    """Operands live in different residue rings."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    """Return ``p`` if it is an odd prime, raise ``ValueError`` otherwise."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"prime must be an integer, got {p!r}")
    if p == 2:
        raise ValueError("p = 2 is not supported (the constructions need an odd prime)")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


@dataclass(frozen=True)
class Residue:
    """An element of Z/p^kZ stored as its least nonnegative representative."""

    value: int
    p: int
    k: int = 3

    def __post_init__(self):
        if self.k not in (1, 2, 3):
            raise ValueError(f"exponent k must be 1, 2 or 3, got {self.k}")
        object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def _same_ring(self, other: Residue):
        if not isinstance(other, Residue):
            return NotImplemented
        if (self.p, self.k) != (other.p, other.k):
            raise ModulusError(f"mod {self.modulus} vs mod {other.modulus}")
        return True

    def __add__(self, other: Residue) -> Residue:
        if self._same_ring(other) is NotImplemented:
            return NotImplemented
        return Residue(self.value + other.value, self.p, self.k)

    def __sub__(self, other: Residue) -> Residue:
        if self._same_ring(other) is NotImplemented:
            return NotImplemented
        return Residue(self.value - other.value, self.p, self.k)

    def __mul__(self, other: Residue) -> Residue:
        if self._same_ring(other) is NotImplemented:
            return NotImplemented
        return Residue(self.value * other.value, self.p, self.k)

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.p, self.k)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} mod {self.modulus}"


def res_add(a: Residue, b: Residue) -> Residue:
    return a + b


def res_mul(a: Residue, b: Residue) -> Residue:
    return a * b


class MixedVector:
    """A fixed-length vector whose i-th entry lives in Z/moduli[i]Z.

    The modulus profile is a plain tuple that is validated once and then
    shared; vectors built by the library itself go through :meth:`trusted`
    and skip reduction.
    """

    __slots__ = ("values", "moduli")

    def __init__(self, values: Iterable[int], moduli: Sequence[int]):
        moduli = tuple(moduli)
        values = tuple(values)
        if len(values) != len(moduli):
            raise ValueError(f"{len(values)} values for {len(moduli)} moduli")
        if any(m < 2 for m in moduli):
            raise ValueError(f"invalid modulus profile {moduli}")
        self.values = tuple(v % m for v, m in zip(values, moduli))
        self.moduli = moduli

    @classmethod
    def trusted(cls, values: tuple[int, ...], moduli: tuple[int, ...]) -> MixedVector:
        vec = cls.__new__(cls)
        vec.values = values
        vec.moduli = moduli
        return vec

    @classmethod
    def zero(cls, moduli: Sequence[int]) -> MixedVector:
        moduli = tuple(moduli)
        return cls.trusted((0,) * len(moduli), moduli)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MixedVector):
            return NotImplemented
        return self.moduli == other.moduli and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.values, self.moduli))

    def __add__(self, other: MixedVector) -> MixedVector:
        return vec_add(self, other)

    def __neg__(self) -> MixedVector:
        return MixedVector.trusted(tuple(-v % m for v, m in zip(self.values, self.moduli)), self.moduli)

    def __sub__(self, other: MixedVector) -> MixedVector:
        return vec_add(self, -other)

    def is_zero(self) -> bool:
        return not any(self.values)

    def __repr__(self) -> str:
        body = ", ".join(f"{v} mod {m}" for v, m in zip(self.values, self.moduli))
        return f"[{body}]"


def vec_add(u: MixedVector, v: MixedVector) -> MixedVector:
    if u.moduli != v.moduli:
        raise ModulusError(f"profile mismatch: {u.moduli} vs {v.moduli}")
    return MixedVector.trusted(
        tuple((a + b) % m for a, b, m in zip(u.values, v.values, u.moduli)), u.moduli
    )


def scalar_mul(c: Residue | int, v: MixedVector) -> MixedVector:
    """Multiply by a scalar of Z/p^3Z.

    Every entry modulus divides p^3, so reducing ``c`` modulo each entry's
    modulus gives a well-defined module action.
    """
    c = int(c)
    return MixedVector.trusted(tuple(c * a % m for a, m in zip(v.values, v.moduli)), v.moduli)


def additive_order(value: int, modulus: int) -> int:
    """Additive order of ``value`` in Z/modulus Z."""
    return modulus // gcd(value % modulus, modulus)


def vector_order(values: Sequence[int], moduli: Sequence[int]) -> int:
    """Additive order of a mixed vector; all moduli are powers of one prime."""
    order = 1
    for v, m in zip(values, moduli):
        order = max(order, additive_order(v, m))
    return order


def inverse_mod(a: int, m: int) -> int:
    return pow(a, -1, m)


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) of an integer matrix given by rows."""
    mat = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [x * inv % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def det_mod(mat: Sequence[Sequence[int]], m: int) -> int:
    """Determinant modulo ``m`` by cofactor expansion (small matrices only)."""
    n = len(mat)
    if n == 0:
        return 1 % m
    if n == 1:
        return mat[0][0] % m
    total = 0
    for c in range(n):
        minor = [row[:c] + row[c + 1 :] for row in mat[1:]]
        total += (-1) ** c * mat[0][c] * det_mod(minor, m)
    return total % m
