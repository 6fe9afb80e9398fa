"""Exact computations with Brauer diagrams, the orbit-sum basis X_{lambda,t},
and the symplectic tensor-space action."""

from .combinatorics import Partition, Tableau, mn_character, partitions_of, standard_tableaux, two_partitions
from .diagrams import BrauerDiagram, BrauerElement, IntPolynomial, LinearCombination, enumerate_all, star
from .symgroup import GroupAlgebraElement, Permutation

__version__ = "0.1.0"

__all__ = [
    "BrauerDiagram",
    "BrauerElement",
    "GroupAlgebraElement",
    "IntPolynomial",
    "LinearCombination",
    "Partition",
    "Permutation",
    "Tableau",
    "enumerate_all",
    "mn_character",
    "partitions_of",
    "standard_tableaux",
    "star",
    "two_partitions",
]
