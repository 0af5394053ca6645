"""Finite combinatorics of trees, Gamma-sets and generalized Reedy categories.

Submodules
----------
trees        trees, their morphisms, faces and degeneracies
finsets      finite sets, partial maps and the leaf functor
reedy        finite categories, presheaves, latching/matching, lifting
categories   truncations of Omega, Gamma and the injections, and mutants
presheaves   boundaries, horns, the Segal condition, the leaf adjunction
operads      operads, nerves, algebras and covariance checks
slices       corolla attachments and slices
bpq          groupoids of sets over A and the Gamma-set constructions
suites       named verification suites and reports
fixtures     the fixture registry
"""
from . import bpq, categories, finsets, fixtures, groupoids, operads, presheaves, reedy, slices, suites, trees
from .suites import run_suite

__version__ = "0.1.0"
