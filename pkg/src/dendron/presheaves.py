"""Dendroidal sets and Gamma-sets.

Dendroidal sets are presheaves on a truncation of Omega; Gamma-sets are
covariant functors on finite sets and partial maps, viewed as presheaves
on Gamma.  This module builds representables and their boundary, horn and
Segal-core subobjects, tests the strict Segal condition, and implements
the adjunction between restriction along the leaf functor and its left
Kan extension.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping

from . import trees as tr
from .finsets import PartialMap, all_partial_maps, compose_partial, identity_map, leaf_functor, skeleton
from .order import ordered
from .reedy import (
    Check,
    FiniteCategory,
    Presheaf,
    PresheafMap,
    SubPresheaf,
    TabulatedPresheaf,
    UnionFind,
    natural_transformations,
    representable,
)
from .trees import OmegaMorphism, Tree


# subobjects of representables ------------------------------------------------------

def factors_through(x: OmegaMorphism, sub: Tree) -> bool:
    """Does x: S -> T factor through the inclusion of a subtree of T?"""
    if not x.image() <= sub.edges:
        return False
    return tr.is_morphism(x.source, sub, x.edge_map)


def corolla_at(T: Tree, v: str) -> Tree:
    """The one-vertex subtree of T at vertex v."""
    ins = T.inputs(v)
    return tr.Tree(frozenset((v,) + ins), v, {a: v for a in ins}, frozenset([v]) if not ins else frozenset())


def segal_core_pieces(T: Tree) -> list[Tree]:
    if not T.vertices:
        return [T]
    return [corolla_at(T, v) for v in T.vertices]


def face_pieces(T: Tree, exclude: OmegaMorphism | None = None) -> list[Tree]:
    return [f.source for f in tr.elementary_faces(T) if f != exclude]


def boundary_horn_core(cat: FiniteCategory, T: Tree, which: str, edge: str | None = None) -> SubPresheaf:
    """The boundary, an inner horn or the Segal core of the representable
    at T, as the sieve of maps factoring through the relevant subtrees."""
    rep = representable(cat, T)
    if which == "boundary":
        pieces = face_pieces(T)
    elif which == "horn":
        if edge not in T.inner_edges:
            raise ValueError(f"{edge!r} is not an inner edge of {T!r}")
        pieces = face_pieces(T, exclude=tr.inner_face(T, edge))
    elif which == "segal_core":
        pieces = segal_core_pieces(T)
    else:
        raise ValueError(f"unknown subobject {which!r}")
    label = which if edge is None else f"{which}[{edge}]"
    return SubPresheaf(rep, lambda S, x: any(factors_through(x, P) for P in pieces), f"{label}[{T.encoding}]")


# strict Segal condition --------------------------------------------------------------

def _inclusion_from_canonical(P: Tree, T: Tree) -> OmegaMorphism:
    """A morphism canonical(P) -> T identifying the canonical tree with the subtree P."""
    canon, relabel = tr.canonical_form(P)
    back = {v: k for k, v in relabel.items()}
    return OmegaMorphism(canon, T, tuple((e, back[e]) for e in canon.edges))


@dataclass
class SegalReport:
    tree: Tree
    elements: int
    families: int
    injective: bool
    surjective: bool

    @property
    def passed(self) -> bool:
        return self.injective and self.surjective


def corolla_families(X: Presheaf, T: Tree) -> tuple[list, Callable]:
    """Compatible families of corolla elements of X over T.

    Returns the list of families (tuples indexed by the vertices of T) and
    the restriction map X(T) -> families.
    """
    if not T.vertices:
        return [(x,) for x in X.value(T)], lambda x: (x,)
    incs = [_inclusion_from_canonical(corolla_at(T, v), T) for v in T.vertices]
    eta = tr.eta("e0")
    # restriction of a corolla element to each of its edges, named in T
    edge_maps = []
    for inc in incs:
        per_edge = {}
        for c_edge, t_edge in inc.mapping:
            per_edge[t_edge] = OmegaMorphism(eta, inc.source, (("e0", c_edge),))
        edge_maps.append(per_edge)
    shared = {}
    for i, per_edge in enumerate(edge_maps):
        for e in per_edge:
            shared.setdefault(e, []).append(i)
    constraints = [(e, idx) for e, idx in shared.items() if len(idx) > 1]
    pools = [X.value(inc.source) for inc in incs]
    families = []
    for combo in itertools.product(*pools):
        ok = True
        for e, idx in constraints:
            vals = {X.act(edge_maps[i][e], combo[i]) for i in idx}
            if len(vals) > 1:
                ok = False
                break
        if ok:
            families.append(combo)
    return families, lambda x: tuple(X.act(inc, x) for inc in incs)


def check_strict_segal(X: Presheaf, trees: Iterable[Tree] | None = None) -> Check:
    """X(T) maps bijectively onto compatible corolla families, for every
    tree in the truncation.  This is the strict (discrete) Segal condition."""
    trees = list(trees) if trees is not None else list(X.category.objects)
    reports = []
    for T in trees:
        families, restrict = corolla_families(X, T)
        images = [restrict(x) for x in X.value(T)]
        injective = len(set(images)) == len(images)
        surjective = set(families) <= set(images)
        rep = SegalReport(T, len(images), len(families), injective, surjective)
        reports.append(rep)
        if not rep.passed:
            return Check("strict_segal", False,
                         {"tree": T.encoding, "elements": rep.elements, "families": rep.families,
                          "injective": injective, "surjective": surjective},
                         {"trees_checked": len(reports)})
    return Check("strict_segal", True, detail={"trees_checked": len(reports)})


def segal_core_restriction_counts(X: Presheaf, T: Tree) -> tuple[int, int]:
    """(|X(T)|, |Hom(Sc[T], X)|) computed through natural transformations."""
    core = boundary_horn_core(X.category, T, "segal_core")
    maps = sum(1 for _ in natural_transformations(core, X))
    return len(X.value(T)), maps


# Gamma-sets ------------------------------------------------------------------------------

class GammaSet(Presheaf):
    """A covariant functor on finite sets and partial maps.

    ``value(A)`` and ``push(phi, x)`` work for any finite set A; viewed as
    a presheaf on a Gamma truncation, ``act`` is ``push`` applied to the
    partial map a Gamma-morphism is dual to.
    """

    def __init__(self, category: FiniteCategory, value: Callable, push: Callable, name: str = "Y"):
        self.category = category
        self.name = name
        self._value = value
        self._push = push
        self._cache: dict = {}

    def value(self, A) -> tuple:
        A = frozenset(A)
        if A not in self._cache:
            self._cache[A] = tuple(self._value(A))
        return self._cache[A]

    def push(self, phi: PartialMap, x):
        return self._push(phi, x)

    def act(self, f, x):
        return self._push(f, x)


def partial_maps_from(category: FiniteCategory, L: Iterable) -> GammaSet:
    """The Gamma-set A -> F(L, A), represented by L."""
    L = frozenset(L)
    return GammaSet(category, lambda A: sorted(all_partial_maps(L, A)), lambda phi, x: compose_partial(phi, x),
                    f"F({len(L)},-)")


def sum_gamma(category: FiniteCategory, parts: list[GammaSet]) -> GammaSet:
    """Disjoint union of Gamma-sets, elements tagged by the summand index."""
    return GammaSet(
        category,
        lambda A: [(i, x) for i, P in enumerate(parts) for x in P.value(A)],
        lambda phi, t: (t[0], parts[t[0]].push(phi, t[1])),
        " + ".join(P.name for P in parts),
    )


def constant_gamma(category: FiniteCategory, elements: Iterable, name: str = "const") -> GammaSet:
    elements = tuple(elements)
    return GammaSet(category, lambda A: elements, lambda phi, x: x, name)


# the leaf adjunction ------------------------------------------------------------------------

def leaf_numbering(T: Tree) -> PartialMap:
    """The bijection from the leaves of T, in sorted order, to {1..n}."""
    leaves = sorted(T.leaves)
    return PartialMap(frozenset(leaves), skeleton(len(leaves)), tuple((l, i + 1) for i, l in enumerate(leaves)))


def skeletal_leaf_map(alpha: OmegaMorphism) -> PartialMap:
    """The leaf map of alpha transported to the standard sets {1..n}."""
    nT = leaf_numbering(alpha.target)
    nS = leaf_numbering(alpha.source)
    return compose_partial(nS, compose_partial(leaf_functor(alpha), nT.inverse()))


class LambdaStar(Presheaf):
    """Restriction of a Gamma-set along the leaf functor: T -> Y(leaves of T)."""

    def __init__(self, Y: GammaSet, omega: FiniteCategory):
        self.Y = Y
        self.category = omega
        self.name = f"lambda*({Y.name})"

    def value(self, T: Tree) -> tuple:
        return self.Y.value(skeleton(len(T.leaves)))

    def act(self, alpha: OmegaMorphism, y):
        return self.Y.push(skeletal_leaf_map(alpha), y)


def lambda_star(Y: GammaSet, omega: FiniteCategory) -> LambdaStar:
    return LambdaStar(Y, omega)


class LambdaShriek(GammaSet):
    """Left Kan extension of a dendroidal set along the leaf functor.

    The value at A is the coend of X(T) x F(leaves(T), A) over the trees of
    the truncation: triples (T, x, psi) modulo
    (S, alpha* x, psi) ~ (T, x, psi . lambda(alpha)).  Classes are stored
    as their smallest triple.
    """

    def __init__(self, X: Presheaf, gamma: FiniteCategory):
        self.X = X
        self.omega = X.category
        self._class_of: dict = {}
        self._values: dict = {}
        super().__init__(gamma, self._compute, self._push_class, f"lambda!({X.name})")

    def _triples(self, A):
        for T in self.omega.objects:
            maps = list(all_partial_maps(skeleton(len(T.leaves)), A))
            for x in self.X.value(T):
                for psi in maps:
                    yield (T, x, psi)

    def _compute(self, A):
        A = frozenset(A)
        cat, X = self.omega, self.X
        uf = UnionFind()
        order = {}
        for t in self._triples(A):
            order[t] = len(order)
            uf.find(t)
        for T in cat.objects:
            for alpha in cat.into(T):
                S = alpha.source
                lam = skeletal_leaf_map(alpha)
                for x in X.value(T):
                    ax = X.act(alpha, x)
                    for psi in all_partial_maps(skeleton(len(S.leaves)), A):
                        uf.union((S, ax, psi), (T, x, compose_partial(psi, lam)))
        reps = {}
        for t in order:
            r = uf.find(t)
            if r not in reps or order[t] < order[reps[r]]:
                reps[r] = t
        table = {t: reps[uf.find(t)] for t in order}
        self._class_of[A] = table
        return sorted(set(table.values()), key=lambda t: order[t])

    def canonical(self, A, triple):
        A = frozenset(A)
        self.value(A)
        return self._class_of[A][triple]

    def _push_class(self, phi: PartialMap, cls):
        T, x, psi = cls
        return self.canonical(phi.target, (T, x, compose_partial(phi, psi)))

    def act(self, f, x):
        return self._push_class(f, x)


def lambda_shriek(X: Presheaf, gamma: FiniteCategory) -> LambdaShriek:
    return LambdaShriek(X, gamma)


def unit_element(LX: LambdaShriek, T: Tree, x) -> Any:
    """The unit X -> lambda* lambda_! X at (T, x)."""
    n = skeleton(len(T.leaves))
    return LX.canonical(n, (T, x, identity_map(n)))


def counit_element(Y: GammaSet, cls) -> Any:
    """The counit lambda_! lambda* Y -> Y on a class [T, y, psi]."""
    T, y, psi = cls
    return Y.push(psi, y)


@dataclass
class AdjunctionReport:
    left_count: int
    right_count: int
    bijective: bool
    unit_natural: bool
    counit_natural: bool
    triangle_left: bool
    triangle_right: bool

    @property
    def passed(self) -> bool:
        return (self.bijective and self.unit_natural and self.counit_natural
                and self.triangle_left and self.triangle_right)

    def to_json(self) -> dict:
        return dict(self.__dict__, passed=self.passed)


def check_adjunction(X: Presheaf, Y: GammaSet) -> AdjunctionReport:
    """Compare maps lambda_! X -> Y with maps X -> lambda* Y.

    Both hom-sets are enumerated independently; the transpose sends
    phi to x -> phi([T, x, id]).  Also checks naturality of unit and counit
    and both triangle identities.
    """
    gamma, omega = Y.category, X.category
    LX = LambdaShriek(X, gamma)
    LsY = LambdaStar(Y, omega)
    left = list(natural_transformations(LX, Y))
    right = list(natural_transformations(X, LsY))
    transposes = []
    for phi in left:
        transposes.append(tuple(sorted(
            (((T, x), phi[(skeleton(len(T.leaves)), unit_element(LX, T, x))])
             for T in omega.objects for x in X.value(T)),
            key=repr)))
    right_keys = {tuple(sorted(psi.items(), key=repr)) for psi in right}
    bijective = len(set(transposes)) == len(transposes) == len(right) and set(transposes) == right_keys

    # unit X -> lambda* lambda_! X
    LLX = LambdaStar(LX, omega)
    unit = PresheafMap(X, LLX, lambda T, x: unit_element(LX, T, x))
    # counit lambda_! lambda* Y -> Y
    LLsY = LambdaShriek(LsY, gamma)
    counit = PresheafMap(LLsY, Y, lambda A, c: counit_element(Y, c))

    tri_left = all(
        counit_element(LX, (T, unit_element(LX, T, x), psi)) == cls
        for A in gamma.objects for cls in LX.value(A) for (T, x, psi) in [cls]
    )
    tri_right = all(
        counit_element(Y, unit_element(LLsY, T, y)) == y
        for T in omega.objects for y in LsY.value(T)
    )
    return AdjunctionReport(len(left), len(right), bijective, unit.is_natural().passed,
                            counit.is_natural().passed, tri_left, tri_right)


def disjoint_union(parts: list[Presheaf], name: str | None = None) -> TabulatedPresheaf:
    cat = parts[0].category
    return TabulatedPresheaf(
        cat,
        {o: [(i, x) for i, P in enumerate(parts) for x in P.value(o)] for o in cat.objects},
        lambda f, t: (t[0], parts[t[0]].act(f, t[1])),
        name or " + ".join(P.name for P in parts),
    )
