"""Reductions between graph isomorphism, 2-nilpotent Lie algebras over Z/p^3Z
and 2-nilpotent finite p-groups, with brute-force oracles for small cases."""

__version__ = "0.1.0"
