"""Canonical bases of the level-one q-deformed Fock space.

Submodules:

laurent      exact Laurent polynomials in v
combinat     partitions, residues, affine permutations, multisegments
heckewedge   affine Hecke action on tensor space, straightening, psi
hallalg      Hall algebras of the cyclic and linear quivers by point counting
gamma        transfer from the cyclic to the linear Hall algebra
klpoly       Kazhdan-Lusztig and parabolic KL polynomials
canonfock    canonical bases of Fock space and decomposition matrices
checks       verification suites
cli          command line entry point
"""
from .laurent import LaurentPolynomial, parse_laurent, vpow
from .heckewedge import straighten, psi_semiinfinite, f_alpha_fock
from .canonfock import BasisTable, decomposition_matrix, hall_basis, lt_basis

__all__ = [
    "BasisTable",
    "LaurentPolynomial",
    "decomposition_matrix",
    "f_alpha_fock",
    "hall_basis",
    "lt_basis",
    "parse_laurent",
    "psi_semiinfinite",
    "straighten",
    "vpow",
]
