"""
Nerves of operads and algebras over them
========================================

Dendroidal nerves of the associative and commutative operads, the strict
Segal condition and where it breaks, and an algebra seen as a presheaf
over the nerve.
"""
from dendron import categories as cats
from dendron import trees as tr
from dendron.operads import (
    AssociativeOperad,
    CommutativeOperad,
    check_g_identity,
    check_strict_covariant_fibration,
    dendroidal_nerve,
    free_algebra,
    nerve_elements,
    underline_g,
)
from dendron.presheaves import boundary_horn_core, check_strict_segal, disjoint_union
from dendron.reedy import PresheafMap

omega = cats.omega_category(3, 5)

# one dendrex per choice of operation at each vertex
for enc in ["(|,|)", "((|,|),|)", "((|),|,|)"]:
    T = tr.from_encoding(enc)
    print(enc, "Ass:", len(nerve_elements(AssociativeOperad(4), T)), "Com:", len(nerve_elements(CommutativeOperad(4), T)))

NAss = dendroidal_nerve(AssociativeOperad(4), omega)
print("NAss strictly Segal:", check_strict_segal(NAss).passed)

# an inner horn is missing the composite, so gluing is no longer unique
T = tr.from_encoding("((|))")
horn = boundary_horn_core(omega, T, "horn", T.inner_edges[0])
verdict = check_strict_segal(horn)
print("inner horn of ((|)) strictly Segal:", verdict.passed, verdict.witness)

# a free algebra as a presheaf over the nerve
omega2 = cats.omega_category(2, 4)
NP = dendroidal_nerve(AssociativeOperad(3), omega2)
A = free_algebra(NP.P, {"x": "c"}, 3, overflow=True)
print("\n", A.name, "carrier:", [repr(t) for t in A.carrier("c")])
print("pullback identity:", check_g_identity(A, NP).passed)
G = underline_g(A, NP)
print("covariant at corollas:", check_strict_covariant_fibration(G.projection()).detail)

# folding two copies of the nerve onto one is not covariant
fold = PresheafMap(disjoint_union([NP, NP]), NP, lambda o, t: t[1])
print("fold covariant:", check_strict_covariant_fibration(fold).witness)
