"""
Corolla attachments, slices and the leaf adjunction
===================================================

Grafting corollas onto leaves, the slice of a nerve under a choice of
edge labels, and the adjunction between dendroidal sets and Gamma-sets
induced by sending a tree to its set of leaves.
"""
from dendron import categories as cats
from dendron import trees as tr
from dendron.groupoids import check_groupoid
from dendron.operads import AssociativeOperad, check_strict_covariant_fibration, dendroidal_nerve
from dendron.presheaves import check_adjunction, check_strict_segal, constant_gamma, partial_maps_from
from dendron.reedy import representable
from dendron.slices import ETA, attachment_groupoid, attachments, check_projection_bijective_at_leafless, slice_construction

T = tr.from_encoding("((|),|)")
for b in range(3):
    print(f"bound {b}: {len(attachments(T, b))} attachments on {T.encoding} (leaves: {len(T.leaves)})")
G = attachment_groupoid(T, 2)
print("attachment groupoid:", check_groupoid(G).passed, "| classes:", len(G.iso_classes()))

# the slice of the associative nerve under one label
omega = cats.omega_category(2, 4)
N = dendroidal_nerve(AssociativeOperad(4), omega)
S = slice_construction(N, {"u": N.value(ETA)[0]}, 2)
print("slice at the edge:", [dict(x.arities) for x in S.value(ETA)])
seg = check_strict_segal(N)
print("projection covariant:", check_strict_covariant_fibration(S.projection(), seg).passed)
print("bijective at leafless trees:", check_projection_bijective_at_leafless(S).detail)

# the leaf adjunction on representables
gamma = cats.gamma_category(3)
for enc in ["|", "(|,|)"]:
    X = representable(omega, tr.canonical_form(tr.from_encoding(enc))[0])
    for Y in (partial_maps_from(gamma, [1]), constant_gamma(gamma, ["p", "q"])):
        r = check_adjunction(X, Y)
        print(f"{X.name} vs {Y.name}: {r.left_count} = {r.right_count}, passed {r.passed}")
