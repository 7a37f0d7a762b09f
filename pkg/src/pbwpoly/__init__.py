"""Exact combinatorics of chain and order polytopes for Demazure modules of sl(n+1).

Modules: :mod:`poset` (the posets P_ell), :mod:`polytope` (polytopes, lattice
points, Ehrhart data, faces), :mod:`weyl` (Grassmannian permutations),
:mod:`gt` (Gelfand-Tsetlin patterns and Kogan faces), :mod:`crystal`
(tableau crystals and Demazure characters) and :mod:`pbw` (a linear-algebra
oracle for PBW-graded Demazure modules).
"""
from .lattice import BACKEND
from .poset import LSequence, PosetP, all_sequences, build_poset
from .polytope import (
    CHAIN,
    ORDER,
    EhrhartData,
    HPolytope,
    TooLargeError,
    chain_polytope,
    ehrhart,
    lattice_points,
    order_polytope,
)
from .weyl import Permutation, ell_of, from_word, perm_of_ell, word_of_ell

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CHAIN",
    "ORDER",
    "EhrhartData",
    "HPolytope",
    "LSequence",
    "Permutation",
    "PosetP",
    "TooLargeError",
    "all_sequences",
    "build_poset",
    "chain_polytope",
    "ehrhart",
    "ell_of",
    "from_word",
    "lattice_points",
    "order_polytope",
    "perm_of_ell",
    "word_of_ell",
]
