"""
Trees, their morphisms and the leaf functor
===========================================

A walk through the four-vertex example tree: its points, its elementary
faces, how an arbitrary morphism breaks into elementary pieces, and what
the leaf functor does to each kind of generator.
"""
from dendron import trees as tr
from dendron.finsets import leaf_class, leaf_functor

T = tr.figure_tree()
print("tree:", T.encoding)
print("leaves:", sorted(T.leaves), " inner edges:", list(T.inner_edges), " capped:", sorted(T.capped))

# maps out of the single edge pick out edges
points = tr.enumerate_homs(tr.eta(), T)
print("points of T:", len(points), "edges of T:", len(T.edges))

# corollas: automorphisms permute the leaves freely
for n in range(5):
    print(f"|Aut(C_{n})| =", len(tr.automorphisms(tr.corolla(n))))

# elementary faces and the classes their leaf maps fall into
for kind, face in tr.labelled_faces(T):
    lam = leaf_functor(face)
    print(f"{kind:<11} {face.source.encoding:<16} leaf map: {leaf_class(lam)}")
for v in tr.unary_vertices(T):
    print("degeneracy  at", v, "leaf map:", leaf_class(leaf_functor(tr.degeneracy(T, v))))

# any morphism is a composite of degeneracies, an iso and faces
S = tr.from_encoding("((|),|)")
f = tr.enumerate_homs(S, T)[-1]
print("\nmorphism", f)
for kind, g in tr.decompose(f):
    print(f"  {kind:<11} {g.source.encoding} -> {g.target.encoding}")
