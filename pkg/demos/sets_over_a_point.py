"""
Groupoids of finite sets over A
===============================

Sets over A up to bijection: which components there are, why the
construction splits over disjoint unions, why permutations of A act
freely, and how a two-point mapping object is glued from wedges.
"""
from dendron.bpq import (
    TruncatedNerve,
    check_bsigma_cofibrant,
    check_special,
    check_unit_map,
    check_wedge_identity,
    component_census,
    sigma_groupoid,
    two_point_pushout,
)
from dendron.finsets import skeleton

# components are fibre-size tuples
for na in range(4):
    G = sigma_groupoid(skeleton(na), skeleton(1), 3)
    print(f"|A|={na}: {len(G.objects)} objects, {len(G.iso_classes())} classes;", component_census(skeleton(na)).passed)

# a set over A+B is the same as a set over A and a set over B
print("special over 2+1:", check_special(skeleton(2), skeleton(1), 4).detail)

# simplices of the nerve
N = TruncatedNerve(sigma_groupoid(skeleton(1), skeleton(1), 2), 3)
print("simplices over a point:", [len(list(N.simplices(n))) for n in range(4)])

# permutations of A never fix a simplex whose vertices cover A
print("free action:", [check_bsigma_cofibrant(skeleton(n)).passed for n in range(4)])
print("unit map:", check_unit_map().detail)

# wedge identity and the pushout for maps out of two points
print("wedges:", [check_wedge_identity(skeleton(n)).passed for n in range(4)])
for na, nl in [(1, 1), (2, 2), (3, 2)]:
    r = two_point_pushout(skeleton(na), skeleton(nl))
    print(f"A={na} L={nl}: pushout has {r.total} points, expected {r.expected}, bijective {r.bijective}")
