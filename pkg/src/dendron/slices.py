"""Corolla attachments to the leaves of a tree and the slice presheaf
built from a map of labels into the edge values of a dendroidal set.

The dendroidal sets used here must be evaluable on every tree, not only
on the objects of a truncation, because the grafted trees leave any fixed
vertex bound.  Nerves of operads qualify, and ``tree_representable``
provides representables of that kind.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Mapping

from . import trees as tr
from .groupoids import Groupoid
from .reedy import Check, FiniteCategory, Presheaf, PresheafMap
from .trees import OmegaMorphism, Tree

DEFAULT_ARITY_BOUND = 3
ETA = tr.eta("e0")


def new_leaf(leaf: str, k: int) -> str:
    return f"{leaf}.{k}"


@dataclass(frozen=True)
class CorollaAttachment:
    """A corolla with ``n`` leaves grafted onto each leaf of ``base``."""

    base: Tree
    arities: tuple  # ((leaf, n), ...) sorted by leaf

    def __post_init__(self):
        arities = tuple(sorted(dict(self.arities).items()))
        if {l for l, _ in arities} != set(self.base.leaves):
            raise ValueError("an attachment assigns an arity to every leaf and nothing else")
        if any(n < 0 for _, n in arities):
            raise ValueError("arities are non-negative")
        object.__setattr__(self, "arities", arities)

    def arity(self, leaf: str) -> int:
        return dict(self.arities)[leaf]

    def new_leaves(self, leaf: str) -> list[str]:
        return [new_leaf(leaf, k) for k in range(1, self.arity(leaf) + 1)]

    @cached_property
    def sharp(self) -> Tree:
        parent = dict(self.base.parent)
        capped = set(self.base.capped)
        for l, n in self.arities:
            for x in self.new_leaves(l):
                if x in self.base.edges:
                    raise ValueError(f"edge name {x!r} already used in the base tree")
                parent[x] = l
            if n == 0:
                capped.add(l)
        return tr.Tree(frozenset(parent) | {self.base.root}, self.base.root, parent, frozenset(capped))

    @cached_property
    def embedding(self) -> OmegaMorphism:
        """The inclusion of the base into the grafted tree."""
        return OmegaMorphism(self.base, self.sharp, tuple((e, e) for e in self.base.edges))

    def automorphisms(self) -> list[OmegaMorphism]:
        """Isomorphisms of the grafted tree restricting to the identity on
        the base: independent permutations of each group of new leaves."""
        groups = [self.new_leaves(l) for l, _ in self.arities]
        out = []
        for perms in itertools.product(*[itertools.permutations(g) for g in groups]):
            mapping = {e: e for e in self.base.edges}
            for g, p in zip(groups, perms):
                mapping.update(zip(g, p))
            out.append(OmegaMorphism(self.sharp, self.sharp, tuple(mapping.items())))
        return out

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "arities": dict(self.arities)}


def attachments(T: Tree, bound: int = DEFAULT_ARITY_BOUND, mode: str = "per-leaf") -> list[CorollaAttachment]:
    """Attachments with every arity <= bound ("per-leaf") or with at most
    ``bound`` grafted leaves in total ("total")."""
    if mode not in ("per-leaf", "total"):
        raise ValueError(f"unknown bound mode {mode!r}")
    leaves = sorted(T.leaves)
    out = []
    for ns in itertools.product(range(bound + 1), repeat=len(leaves)):
        if mode == "per-leaf" or sum(ns) <= bound:
            out.append(CorollaAttachment(T, tuple(zip(leaves, ns))))
    return out


def attachment_groupoid(T: Tree, bound: int = DEFAULT_ARITY_BOUND) -> Groupoid:
    """Objects are arity functions on the leaves with values <= bound;
    morphisms are isomorphisms of grafted trees under T.  Distinct arity
    functions are never isomorphic under T."""
    objs = tuple(attachments(T, bound))
    homs = {(a, a): tuple(a.automorphisms()) for a in objs}
    return Groupoid(
        name=f"C({T.encoding})<={bound}",
        objects=objs,
        homs=homs,
        compose_fn=tr.compose,
        identity_fn=lambda a: tr.identity(a.sharp),
        inverse_fn=lambda f: f.inverse(),
        src=lambda f: _attachment_of(objs, f.source),
        tgt=lambda f: _attachment_of(objs, f.target),
    )


def _attachment_of(objs, sharp: Tree):
    return next(a for a in objs if a.sharp == sharp)


def attachment_restrict(alpha: OmegaMorphism, att: CorollaAttachment) -> CorollaAttachment:
    """Pull an attachment on T back along alpha: S -> T.  A leaf e of S gets
    the number of leaves of the grafted tree lying above alpha(e)."""
    S, T = alpha.source, alpha.target
    if att.base != T:
        raise ValueError("attachment is not on the target of the morphism")
    arities = []
    for e in S.leaves:
        top = alpha(e)
        arities.append((e, sum(n for l, n in att.arities if top in T.path_to_root(l))))
    return CorollaAttachment(S, tuple(arities))


def sharp_morphism(alpha: OmegaMorphism, att: CorollaAttachment) -> OmegaMorphism:
    """The extension of alpha to grafted trees, sending the new leaves over
    a leaf e of S in order onto the new leaves above alpha(e)."""
    S, T = alpha.source, alpha.target
    pulled = attachment_restrict(alpha, att)
    Ts = att.sharp
    mapping = dict(alpha.edge_map)
    for e in S.leaves:
        above = sorted(x for x in Ts.leaves if alpha(e) in Ts.path_to_root(x))
        mapping.update(zip(pulled.new_leaves(e), above))
    return tr.validate_morphism(pulled.sharp, Ts, mapping)


def check_attachment_functoriality(trees: Iterable[Tree], bound: int = 1, max_edges: int = tr.DEFAULT_MAX_EDGES) -> Check:
    """Identities and composites are respected, and the grafting square
    commutes, for all composable pairs among the given trees."""
    trees = list(trees)
    homs = {(S, T): tr.enumerate_homs(S, T, max_edges) for S in trees for T in trees}
    checks = 0
    for T in trees:
        for att in attachments(T, bound):
            if attachment_restrict(tr.identity(T), att) != att:
                return Check("attachment_functoriality", False, {"identity": att.to_json()})
            for S in trees:
                for beta in homs[(S, T)]:
                    pulled = attachment_restrict(beta, att)
                    sq = sharp_morphism(beta, att)
                    left = tr.compose(sq, pulled.embedding)
                    right = tr.compose(att.embedding, beta)
                    if left.edge_map != right.edge_map:
                        return Check("attachment_functoriality", False, {"square": repr(beta), "attachment": att.to_json()})
                    leaf_images = [sq(x) for x in pulled.sharp.leaves]
                    if not set(leaf_images) <= att.sharp.leaves or len(set(leaf_images)) != len(leaf_images):
                        return Check("attachment_functoriality", False, {"leaf_injection": repr(beta)})
                    for R in trees:
                        for alpha in homs[(R, S)]:
                            if attachment_restrict(tr.compose(beta, alpha), att) != attachment_restrict(alpha, pulled):
                                return Check("attachment_functoriality", False,
                                             {"pair": [repr(alpha), repr(beta)], "attachment": att.to_json()})
                            checks += 1
    return Check("attachment_functoriality", True, detail={"checks": checks, "bound": bound})


# tree-general representables ------------------------------------------------------------

class TreeRepresentable(Presheaf):
    """Omega[T] evaluated on arbitrary trees."""

    def __init__(self, T: Tree, category: FiniteCategory):
        self.tree = T
        self.category = category
        self.name = f"Omega[{T.encoding}]"
        self._values: dict = {}

    def value(self, S):
        if S not in self._values:
            self._values[S] = tuple(tr.enumerate_homs(S, self.tree))
        return self._values[S]

    def act(self, f, x):
        return tr.compose(x, f)


def tree_representable(T: Tree, category: FiniteCategory) -> TreeRepresentable:
    return TreeRepresentable(T, category)


# the slice ----------------------------------------------------------------------------------

@dataclass(frozen=True)
class SliceElement:
    """Class representative of a triple: arities of the attachment, a dendrex
    on the grafted tree, and labels of its leaves."""

    arities: tuple
    dendrex: Any
    labels: tuple  # ((leaf of the grafted tree, label), ...)

    def to_json(self):
        return {"arities": dict(self.arities), "dendrex": repr(self.dendrex), "labels": dict(self.labels)}


class SlicePresheaf(Presheaf):
    """Classes of triples (attachment, dendrex on the grafted tree, leaf
    labels compatible with sigma) modulo isomorphisms under the base.

    With ``mode="total"`` the truncation keeps attachments with at most
    ``bound`` grafted leaves; restriction never increases that number, so
    the truncated values form a presheaf.  With ``mode="per-leaf"`` each
    arity is bounded separately; restriction to leaves preserves this, which
    is what the corolla checks need, but root faces can leave the bound.
    """

    def __init__(self, X: Presheaf, sigma: Mapping[Any, Any], bound: int = DEFAULT_ARITY_BOUND,
                 mode: str = "per-leaf"):
        self.X = X
        self.sigma = dict(sigma)
        self.labels = sorted(self.sigma, key=repr)
        self.bound = bound
        self.mode = mode
        self.category = X.category
        self.name = f"sigma/{X.name}"
        self._values: dict = {}
        self._canon: dict = {}

    def _leg(self, T: Tree, leaf: str) -> OmegaMorphism:
        return OmegaMorphism(ETA, T, (("e0", leaf),))

    def triples(self, T: Tree) -> list[tuple[CorollaAttachment, Any, tuple]]:
        """All compatible triples over T, before taking classes."""
        out = []
        for att in attachments(T, self.bound, self.mode):
            Ts = att.sharp
            leaves = sorted(Ts.leaves)
            for a in self.X.value(Ts):
                pools = []
                for l in leaves:
                    target = self.X.act(self._leg(Ts, l), a)
                    pools.append([u for u in self.labels if self.sigma[u] == target])
                for us in itertools.product(*pools):
                    out.append((att, a, tuple(zip(leaves, us))))
        return out

    def orbit(self, att: CorollaAttachment, a, labels: tuple) -> list[tuple]:
        lab = dict(labels)
        out = []
        for phi in att.automorphisms():
            out.append((self.X.act(phi, a), tuple((l, lab[phi(l)]) for l in sorted(lab))))
        return out

    def related(self, att: CorollaAttachment, t1: tuple, t2: tuple) -> bool:
        """t1 ~ t2: some isomorphism under the base carries one to the other."""
        return t2 in self.orbit(att, *t1)

    def canonical(self, att: CorollaAttachment, a, labels: tuple) -> SliceElement:
        key = (att, a, labels)
        if key not in self._canon:
            best = min(self.orbit(att, a, labels), key=repr)
            self._canon[key] = SliceElement(att.arities, best[0], best[1])
        return self._canon[key]

    def value(self, T):
        if T not in self._values:
            classes = {self.canonical(att, a, lab) for att, a, lab in self.triples(T)}
            self._values[T] = tuple(sorted(classes, key=repr))
        return self._values[T]

    def act(self, alpha: OmegaMorphism, x: SliceElement) -> SliceElement:
        att = CorollaAttachment(alpha.target, x.arities)
        pulled = attachment_restrict(alpha, att)
        up = sharp_morphism(alpha, att)
        lab = dict(x.labels)
        a = self.X.act(up, x.dendrex)
        labels = tuple((l, lab[up(l)]) for l in sorted(pulled.sharp.leaves))
        return self.canonical(pulled, a, labels)

    def projection(self) -> PresheafMap:
        def pi(T, x):
            return self.X.act(CorollaAttachment(T, x.arities).embedding, x.dendrex)
        return PresheafMap(self, self.X, pi)

    def canonical_lift(self, u) -> SliceElement:
        """The class of (eta into the unary corolla, degenerate dendrex on
        sigma(u), label u)."""
        att = CorollaAttachment(ETA, (("e0", 1),))
        degenerate = OmegaMorphism(att.sharp, ETA, (("e0", "e0"), (new_leaf("e0", 1), "e0")))
        a = self.X.act(degenerate, self.sigma[u])
        return self.canonical(att, a, ((new_leaf("e0", 1), u),))


def slice_construction(X: Presheaf, sigma: Mapping, bound: int = DEFAULT_ARITY_BOUND,
                       mode: str = "per-leaf") -> SlicePresheaf:
    eta_values = set(X.value(ETA))
    for u, x in sigma.items():
        if x not in eta_values:
            raise ValueError(f"sigma({u!r}) is not an element of X(eta)")
    return SlicePresheaf(X, sigma, bound, mode)


def check_projection_bijective_at_leafless(S: SlicePresheaf, trees: Iterable[Tree] | None = None) -> Check:
    pi = S.projection()
    trees = [T for T in (trees or S.category.objects) if not T.leaves]
    for T in trees:
        images = [pi(T, x) for x in S.value(T)]
        if len(set(images)) != len(images) or set(images) != set(S.X.value(T)):
            return Check("projection_leafless", False, {"tree": T.encoding, "slice": len(images), "X": len(S.X.value(T))})
    return Check("projection_leafless", True, detail={"trees": len(trees)})
