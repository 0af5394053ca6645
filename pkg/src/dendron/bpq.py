"""Groupoids of finite sets over a finite set, their nerves and the
Gamma-set constructions around them.

An object of the groupoid over A (with labels L) is a carrier {1..k}
together with a function to A x L, stored as the tuple of its values.
Morphisms are bijections of carriers commuting with the structure maps.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from .finsets import PartialMap, all_injections, all_partial_maps, compose_partial, identity_map, skeleton
from .groupoids import Groupoid
from .order import ordered
from .presheaves import GammaSet
from .reedy import Check, FiniteCategory, Presheaf, UnionFind

ONE = skeleton(1)


@dataclass(frozen=True, order=True)
class LabelledSet:
    """A carrier {1..k} with a map to A x L; ``labels[i-1]`` is the image of i."""

    labels: tuple

    @property
    def size(self) -> int:
        return len(self.labels)

    def fibre_sizes(self, A: Iterable, L: Iterable = ONE) -> tuple:
        counts = Counter(self.labels)
        return tuple(counts[(a, l)] for a in ordered(A) for l in ordered(L))

    def over(self) -> tuple:
        """The underlying map to A."""
        return tuple(a for a, _ in self.labels)

    def image(self) -> frozenset:
        return frozenset(self.over())

    def to_json(self):
        return {"labels": [list(x) for x in self.labels]}


@dataclass(frozen=True, order=True)
class Bijection:
    """A morphism of labelled sets; ``perm[i-1]`` is the image of i."""

    source: LabelledSet
    target: LabelledSet
    perm: tuple


def plain(f: Sequence) -> LabelledSet:
    """A set over A with trivial labels, from the tuple of values."""
    return LabelledSet(tuple((a, 1) for a in f))


def labelled_sets(A: Iterable, L: Iterable = ONE, bound: int = 3) -> list[LabelledSet]:
    cells = [(a, l) for a in ordered(A) for l in ordered(L)]
    return [LabelledSet(t) for k in range(bound + 1) for t in itertools.product(cells, repeat=k)]


def sorted_representatives(A: Iterable, L: Iterable = ONE, bound: int = 3) -> list[LabelledSet]:
    """Objects whose labels are non-decreasing; one in each iso class."""
    cells = [(a, l) for a in ordered(A) for l in ordered(L)]
    return [LabelledSet(t) for k in range(bound + 1) for t in itertools.combinations_with_replacement(cells, k)]


def bijections_over(x: LabelledSet, y: LabelledSet) -> list[Bijection]:
    """All bijections x -> y over A x L, by brute force over permutations."""
    if x.size != y.size:
        return []
    out = []
    for p in itertools.permutations(range(1, y.size + 1)):
        if all(y.labels[p[i] - 1] == x.labels[i] for i in range(x.size)):
            out.append(Bijection(x, y, p))
    return out


def compose_bijections(g: Bijection, f: Bijection) -> Bijection:
    if f.target != g.source:
        raise ValueError("bijections are not composable")
    return Bijection(f.source, g.target, tuple(g.perm[i - 1] for i in f.perm))


def identity_bijection(x: LabelledSet) -> Bijection:
    return Bijection(x, x, tuple(range(1, x.size + 1)))


def inverse_bijection(f: Bijection) -> Bijection:
    inv = [0] * len(f.perm)
    for i, j in enumerate(f.perm, start=1):
        inv[j - 1] = i
    return Bijection(f.target, f.source, tuple(inv))


def sigma_groupoid(A: Iterable, L: Iterable = ONE, bound: int = 3) -> Groupoid:
    """Sets over A x L with carriers of size <= bound, and bijections over A x L."""
    objs = tuple(labelled_sets(A, L, bound))
    by_size: dict = {}
    for x in objs:
        by_size.setdefault(x.size, []).append(x)
    homs = {}
    for group in by_size.values():
        for x in group:
            for y in group:
                fs = bijections_over(x, y)
                if fs:
                    homs[(x, y)] = tuple(fs)
    return Groupoid(
        name=f"Sigma^{len(frozenset(L))}({len(frozenset(A))})<={bound}",
        objects=objs,
        homs=homs,
        compose_fn=compose_bijections,
        identity_fn=identity_bijection,
        inverse_fn=inverse_bijection,
        src=lambda f: f.source,
        tgt=lambda f: f.target,
    )


def fibre_tuples(A: Iterable, L: Iterable = ONE, bound: int = 3) -> list[tuple]:
    """All tuples of naturals indexed by A x L with sum <= bound."""
    m = len(frozenset(A)) * len(frozenset(L))
    return [t for t in itertools.product(range(bound + 1), repeat=m) if sum(t) <= bound]


def component_census(A: Iterable, L: Iterable = ONE, bound: int = 3) -> Check:
    """Iso classes of the groupoid, found from its morphisms, correspond
    exactly to fibre-size tuples; automorphism groups have the expected
    orders."""
    import math

    G = sigma_groupoid(A, L, bound)
    classes = G.iso_classes()
    tuples = []
    for cls in classes:
        ts = {x.fibre_sizes(A, L) for x in cls}
        if len(ts) != 1:
            return Check("component_census", False, {"mixed_class": [x.to_json() for x in cls[:2]]})
        t = ts.pop()
        tuples.append(t)
        rep = cls[0]
        expected = math.prod(math.factorial(n) for n in t)
        if len(G.automorphisms(rep)) != expected:
            return Check("component_census", False, {"aut": rep.to_json(), "found": len(G.automorphisms(rep)), "expected": expected})
    formula = fibre_tuples(A, L, bound)
    ok = sorted(tuples) == sorted(formula) and len(set(tuples)) == len(tuples)
    return Check("component_census", ok, None if ok else {"classes": len(tuples), "formula": len(formula)},
                 {"classes": len(tuples), "bound": bound})


# Gamma-structure -----------------------------------------------------------------------

def _kept(phi: PartialMap, x: LabelledSet) -> list[int]:
    return [i for i, (a, _) in enumerate(x.labels, start=1) if phi.is_defined(a)]


def gamma_action(phi: PartialMap, x: LabelledSet) -> LabelledSet:
    """Compose the structure map with phi where it is defined, keeping the
    surviving carrier elements in their order."""
    return LabelledSet(tuple((phi(x.labels[i - 1][0]), x.labels[i - 1][1]) for i in _kept(phi, x)))


def gamma_action_morphism(phi: PartialMap, f: Bijection) -> Bijection:
    keep_s = _kept(phi, f.source)
    keep_t = _kept(phi, f.target)
    where = {j: n for n, j in enumerate(keep_t, start=1)}
    return Bijection(gamma_action(phi, f.source), gamma_action(phi, f.target), tuple(where[f.perm[i - 1]] for i in keep_s))


def check_gamma_functoriality(max_set: int = 2, L: Iterable = ONE, bound: int = 2) -> Check:
    """phi_* respects identities and composition of partial maps, on
    objects and on morphisms."""
    sets = [skeleton(n) for n in range(max_set + 1)]
    checks = 0
    for A in sets:
        objs = labelled_sets(A, L, bound)
        morphs = [f for x in objs for f in bijections_over(x, x)] + \
                 [f for x in objs for y in objs if x < y for f in bijections_over(x, y)][:200]
        for x in objs:
            if gamma_action(identity_map(A), x) != x:
                return Check("gamma_functoriality", False, {"identity": x.to_json()})
        for B in sets:
            for phi in all_partial_maps(A, B):
                images = {x: gamma_action(phi, x) for x in objs}
                for C in sets:
                    for psi in all_partial_maps(B, C):
                        comp = compose_partial(psi, phi)
                        for x in objs:
                            if gamma_action(comp, x) != gamma_action(psi, images[x]):
                                return Check("gamma_functoriality", False, {"phi": repr(phi), "psi": repr(psi), "x": x.to_json()})
                            checks += 1
                        for f in morphs:
                            if gamma_action_morphism(comp, f) != gamma_action_morphism(psi, gamma_action_morphism(phi, f)):
                                return Check("gamma_functoriality", False, {"phi": repr(phi), "psi": repr(psi), "morphism": repr(f)})
                            checks += 1
    return Check("gamma_functoriality", True, detail={"checks": checks, "max_set": max_set, "bound": bound})


def tagged_union(A: Iterable, B: Iterable) -> frozenset:
    return frozenset((0, a) for a in A) | frozenset((1, b) for b in B)


def inert_projections(A: Iterable, B: Iterable) -> tuple[PartialMap, PartialMap]:
    """The inert surjections A + B -> A and A + B -> B."""
    A, B = frozenset(A), frozenset(B)
    AB = tagged_union(A, B)
    return (PartialMap(AB, A, tuple(((0, a), a) for a in A)), PartialMap(AB, B, tuple(((1, b), b) for b in B)))


def check_special(A: Iterable, B: Iterable, bound: int = 3,
                  morphism_action: Callable[[PartialMap, Bijection], Bijection] | None = None) -> Check:
    """The comparison functor from sets over A + B to pairs (set over A,
    set over B) is an equivalence within the carrier bound.

    Essential surjectivity: every pair of class representatives with total
    size <= bound is hit, up to an explicit isomorphism.  Full faithfulness:
    on every pair of class representatives the map of Hom-sets is a
    bijection.  ``morphism_action`` replaces the action on morphisms, for
    mutation tests.
    """
    A, B = frozenset(A), frozenset(B)
    act = morphism_action or gamma_action_morphism
    pA, pB = inert_projections(A, B)
    AB = tagged_union(A, B)
    hits = 0
    for y in sorted_representatives(A, ONE, bound):
        for z in sorted_representatives(B, ONE, bound - y.size):
            x = LabelledSet(tuple(((0, a), l) for a, l in y.labels) + tuple(((1, b), l) for b, l in z.labels))
            if not bijections_over(gamma_action(pA, x), y) or not bijections_over(gamma_action(pB, x), z):
                return Check("special", False, {"not_hit": [y.to_json(), z.to_json()]})
            hits += 1
    reps = sorted_representatives(AB, ONE, bound)
    pairs = 0
    for x in reps:
        for y in reps:
            if x.size != y.size:
                continue
            homs = bijections_over(x, y)
            images = {(act(pA, f), act(pB, f)) for f in homs}
            target = len(bijections_over(gamma_action(pA, x), gamma_action(pA, y))) * \
                len(bijections_over(gamma_action(pB, x), gamma_action(pB, y)))
            if len(images) != len(homs) or len(homs) != target:
                return Check("special", False, {"hom_mismatch": [x.to_json(), y.to_json()], "source": len(homs),
                                                "image": len(images), "target": target})
            pairs += 1
    return Check("special", True, detail={"A": len(A), "B": len(B), "bound": bound, "classes_hit": hits, "pairs": pairs})


def forgetful_morphism_action(phi: PartialMap, f: Bijection) -> Bijection:
    """A deliberately wrong action sending every bijection to an identity."""
    return identity_bijection(gamma_action(phi, f.source))


# nerves --------------------------------------------------------------------------------

class TruncatedNerve:
    """Simplices of the nerve of a finite groupoid up to a degree.

    A 0-simplex is an object; an n-simplex for n >= 1 is a tuple of n
    composable morphisms.
    """

    def __init__(self, G: Groupoid, degree: int = 3):
        self.G = G
        self.degree = degree
        self._out = {a: [f for (s, _), fs in G.homs.items() if s == a for f in fs] for a in G.objects}

    def simplices(self, n: int) -> Iterator:
        if n > self.degree:
            raise ValueError(f"degree {n} is above the truncation {self.degree}")
        if n == 0:
            yield from self.G.objects
            return

        def extend(chain):
            if len(chain) == n:
                yield tuple(chain)
                return
            for f in self._out[self.G.tgt(chain[-1])]:
                yield from extend(chain + [f])

        for a in self.G.objects:
            for f in self._out[a]:
                yield from extend([f])

    def vertex(self, s, i: int, n: int):
        if n == 0:
            return s
        return self.G.src(s[0]) if i == 0 else self.G.tgt(s[i - 1])

    def face(self, n: int, i: int, s):
        if n == 1:
            return self.G.tgt(s[0]) if i == 0 else self.G.src(s[0])
        if i == 0:
            return s[1:]
        if i == n:
            return s[:-1]
        return s[:i - 1] + (self.G.compose(s[i], s[i - 1]),) + s[i + 1:]

    def degeneracy(self, n: int, i: int, s):
        if n == 0:
            return (self.G.identity(s),)
        return s[:i] + (self.G.identity(self.vertex(s, i, n)),) + s[i:]


def nerve_truncate(G: Groupoid, n: int) -> TruncatedNerve:
    return TruncatedNerve(G, n)


def check_simplicial_identities(N: TruncatedNerve) -> Check:
    checks = 0
    for n in range(N.degree + 1):
        for s in N.simplices(n):
            if n >= 2:
                for j in range(n + 1):
                    for i in range(j):
                        if N.face(n - 1, i, N.face(n, j, s)) != N.face(n - 1, j - 1, N.face(n, i, s)):
                            return Check("simplicial_identities", False, {"dd": [n, i, j], "simplex": repr(s)})
                        checks += 1
            if n + 1 <= N.degree:
                for j in range(n + 1):
                    t = N.degeneracy(n, j, s)
                    for i in range(n + 2):
                        d = N.face(n + 1, i, t)
                        if i < j:
                            expected = N.degeneracy(n - 1, j - 1, N.face(n, i, s))
                        elif i in (j, j + 1):
                            expected = s
                        else:
                            expected = N.degeneracy(n - 1, j, N.face(n, i - 1, s))
                        if d != expected:
                            return Check("simplicial_identities", False, {"ds": [n, i, j], "simplex": repr(s)})
                        checks += 1
                    if n + 2 <= N.degree:
                        for i in range(j + 1):
                            if N.degeneracy(n + 1, i, t) != N.degeneracy(n + 1, j + 1, N.degeneracy(n, i, s)):
                                return Check("simplicial_identities", False, {"ss": [n, i, j], "simplex": repr(s)})
                            checks += 1
    return Check("simplicial_identities", True, detail={"checks": checks, "degree": N.degree})


def push_simplex(phi: PartialMap, s, n: int):
    if n == 0:
        return gamma_action(phi, s)
    return tuple(gamma_action_morphism(phi, f) for f in s)


def check_nerve_gamma_action(A: Iterable, B: Iterable, L: Iterable = ONE, bound: int = 2, degree: int = 2) -> Check:
    """Pushing simplices along phi: A -> B is simplicial and lands in the
    nerve over B; on vertices it is the object action."""
    NA = TruncatedNerve(sigma_groupoid(A, L, bound), degree)
    NB = TruncatedNerve(sigma_groupoid(B, L, bound), degree)
    checks = 0
    for phi in all_partial_maps(A, B):
        for n in range(degree + 1):
            members = set(NB.simplices(n))
            for s in NA.simplices(n):
                t = push_simplex(phi, s, n)
                if t not in members:
                    return Check("nerve_gamma_action", False, {"phi": repr(phi), "simplex": repr(s)})
                for i in range(n + 1 if n else 0):
                    if push_simplex(phi, NA.face(n, i, s), n - 1) != NB.face(n, i, t):
                        return Check("nerve_gamma_action", False, {"phi": repr(phi), "face": i, "simplex": repr(s)})
                checks += 1
    return Check("nerve_gamma_action", True, detail={"checks": checks})


# cofibrancy ------------------------------------------------------------------------------

def permutation_maps(A: Iterable) -> list[PartialMap]:
    A = frozenset(A)
    return list(all_injections(A, A))


def symmetric_collapse_action(tau: PartialMap, x: LabelledSet) -> LabelledSet:
    """A deliberately wrong action that fixes objects all of whose fibres
    have the same size."""
    sizes = Counter(x.over()).values()
    return x if len(set(sizes)) == 1 else gamma_action(tau, x)


def check_bsigma_cofibrant(A: Iterable, bound: int = 3, degree: int = 3,
                           object_action: Callable[[PartialMap, LabelledSet], LabelledSet] | None = None) -> Check:
    """Automorphisms of A act freely on simplices whose structure map is
    onto A (those not coming from a proper subset of A)."""
    A = frozenset(A)
    act = object_action or gamma_action
    N = TruncatedNerve(sigma_groupoid(A, ONE, bound), degree)
    taus = [t for t in permutation_maps(A) if t != identity_map(A)]
    counted = 0
    for n in range(degree + 1):
        for s in N.simplices(n):
            objects = [N.vertex(s, i, n) for i in range(n + 1)]
            if objects[0].image() != A:
                continue
            counted += 1
            for tau in taus:
                moved = [act(tau, x) for x in objects]
                if n == 0:
                    same = moved[0] == s
                else:
                    same = moved == objects and all(
                        Bijection(act(tau, f.source), act(tau, f.target), f.perm) == f for f in s)
                if same:
                    return Check("bsigma_cofibrant", False, {"degree": n, "simplex": repr(s), "fixed_by": repr(tau)})
    return Check("bsigma_cofibrant", True, detail={"A": len(A), "bound": bound, "degree": degree, "simplices": counted})


# the unit map ----------------------------------------------------------------------------

def unit_map_u(L: Iterable, A: Iterable) -> Callable[[PartialMap], LabelledSet]:
    """Send a partial map L -> A to the set dom(phi) over A x L, x -> (phi(x), x)."""
    L = frozenset(L)

    def u(phi: PartialMap) -> LabelledSet:
        return LabelledSet(tuple((phi(l), l) for l in ordered(L) if phi.is_defined(l)))

    return u


def check_unit_map(max_L: int = 3, max_A: int = 3) -> Check:
    """u is injective and natural: u(psi . phi) = psi_*(u(phi))."""
    checks = 0
    for nl in range(max_L + 1):
        L = skeleton(nl)
        for na in range(max_A + 1):
            A = skeleton(na)
            u = unit_map_u(L, A)
            maps = list(all_partial_maps(L, A))
            images = [u(phi) for phi in maps]
            if len(set(images)) != len(images):
                return Check("unit_map", False, {"not_injective": [nl, na]})
            if u(PartialMap(L, A, ())) != LabelledSet(()):
                return Check("unit_map", False, {"undefined": [nl, na]})
            for nb in range(max_A + 1):
                B = skeleton(nb)
                for psi in all_partial_maps(A, B):
                    ub = unit_map_u(L, B)
                    for phi, x in zip(maps, images):
                        if ub(compose_partial(psi, phi)) != gamma_action(psi, x):
                            return Check("unit_map", False, {"phi": repr(phi), "psi": repr(psi)})
                        checks += 1
    return Check("unit_map", True, detail={"checks": checks})


# Gamma-set constructions -------------------------------------------------------------------

def product_map(phi: PartialMap, L: Iterable) -> PartialMap:
    """phi x L : A x L -> B x L."""
    L = frozenset(L)
    src = frozenset((a, l) for a in phi.source for l in L)
    tgt = frozenset((b, l) for b in phi.target for l in L)
    return PartialMap(src, tgt, tuple(((a, l), (b, l)) for a, b in phi.items for l in L))


def times(A: Iterable, L: Iterable) -> frozenset:
    return frozenset((a, l) for a in A for l in L)


def l_star(X: GammaSet, L: Iterable) -> GammaSet:
    """A -> X(A x L)."""
    L = frozenset(L)
    return GammaSet(X.category, lambda A: X.value(times(A, L)), lambda phi, x: X.push(product_map(phi, L), x),
                    f"{len(L)}*{X.name}")


def partial_maps_gamma(L: Iterable, category: FiniteCategory | None = None) -> GammaSet:
    L = frozenset(L)
    return GammaSet(category, lambda A: sorted(all_partial_maps(L, A)), lambda phi, x: compose_partial(phi, x),
                    f"F({len(L)},-)")


BASE = "*"


def wedge_of_points(A: Iterable, L: Iterable) -> list:
    """The wedge over L of copies of A with a base point added."""
    return [BASE] + [(l, a) for l in ordered(L) for a in ordered(A)]


def check_wedge_identity(L: Iterable, max_A: int = 3) -> Check:
    """F(1, A x L) and the wedge over L of F(1, A) correspond bijectively,
    naturally in A."""
    L = frozenset(L)
    X = l_star(partial_maps_gamma(ONE), L)

    def to_wedge(x: PartialMap):
        if not x.defined:
            return BASE
        a, l = x(1)
        return (l, a)

    def push_wedge(phi: PartialMap, w):
        if w == BASE or not phi.is_defined(w[1]):
            return BASE
        return (w[0], phi(w[1]))

    checks = 0
    for na in range(max_A + 1):
        A = skeleton(na)
        images = [to_wedge(x) for x in X.value(A)]
        if sorted(map(repr, images)) != sorted(map(repr, wedge_of_points(A, L))) or len(set(images)) != len(images):
            return Check("wedge_identity", False, {"A": na})
        for nb in range(max_A + 1):
            B = skeleton(nb)
            for phi in all_partial_maps(A, B):
                for x in X.value(A):
                    if to_wedge(X.push(phi, x)) != push_wedge(phi, to_wedge(x)):
                        return Check("wedge_identity", False, {"phi": repr(phi), "x": repr(x)})
                    checks += 1
    return Check("wedge_identity", True, detail={"L": len(L), "checks": checks})


@dataclass
class PushoutReport:
    A: int
    L: int
    total: int
    expected: int
    corner_sizes: dict
    bijective: bool

    @property
    def passed(self) -> bool:
        return self.bijective and self.total == self.expected

    def to_json(self):
        return {"A": self.A, "L": self.L, "total": self.total, "expected": self.expected,
                "corners": self.corner_sizes, "bijective": self.bijective}


def two_point_pushout(A: Iterable, L: Iterable) -> PushoutReport:
    """The square with corners: the wedge over L x L of F(2, A); the wedge
    over L x L of the non-total maps 2 -> A; two wedges over L of F(1, A);
    and F(2, A x L).  Its pushout is computed by union-find and compared
    with F(2, A x L)."""
    A, L = frozenset(A), frozenset(L)
    two = skeleton(2)
    AL = times(A, L)
    pairs = [(l1, l2) for l1 in ordered(L) for l2 in ordered(L)]
    maps2 = list(all_partial_maps(two, A))
    top_left = [BASE] + [(p, f) for p in pairs for f in maps2 if f.defined]
    bottom_left = [BASE] + [(p, f) for p in pairs for f in maps2 if f.defined and not f.is_total()]
    bottom_right = [BASE] + [(side, l, a) for side in (1, 2) for l in ordered(L) for a in ordered(A)]

    def left(w):  # bottom_left -> top_left
        return w

    def down(w):  # bottom_left -> bottom_right
        if w == BASE:
            return BASE
        (l1, l2), f = w
        side = 1 if f.is_defined(1) else 2
        return (side, (l1, l2)[side - 1], f(side))

    def to_total(w):  # top_left -> F(2, A x L)
        if w == BASE:
            return PartialMap(two, AL, ())
        (l1, l2), f = w
        ls = {1: l1, 2: l2}
        return PartialMap(two, AL, tuple((i, (f(i), ls[i])) for i in f.defined))

    def from_right(w):  # bottom_right -> F(2, A x L)
        if w == BASE:
            return PartialMap(two, AL, ())
        side, l, a = w
        return PartialMap(two, AL, ((side, (a, l)),))

    uf = UnionFind()
    for w in top_left:
        uf.find(("TL", w))
    for w in bottom_right:
        uf.find(("BR", w))
    for w in bottom_left:
        uf.union(("TL", left(w)), ("BR", down(w)))
    classes = uf.classes()
    images = []
    for cls in classes:
        vals = {to_total(w) if tag == "TL" else from_right(w) for tag, w in cls}
        if len(vals) != 1:
            return PushoutReport(len(A), len(L), len(classes), (len(A) * len(L) + 1) ** 2, {}, False)
        images.append(vals.pop())
    everything = set(all_partial_maps(two, AL))
    bij = len(set(images)) == len(images) and set(images) == everything
    return PushoutReport(len(A), len(L), len(classes), (len(A) * len(L) + 1) ** 2,
                         {"top_left": len(top_left), "bottom_left": len(bottom_left), "bottom_right": len(bottom_right),
                          "F(2,AxL)": len(everything)}, bij)


# inv, pow and rho ---------------------------------------------------------------------------

def inv_star(X: GammaSet, M: FiniteCategory) -> Presheaf:
    """Restriction of a Gamma-set to injections through inverting them."""
    from .finsets import inv_functor
    from .reedy import TabulatedPresheaf

    return TabulatedPresheaf(M, {A: X.value(A) for A in M.objects}, lambda m, x: X.push(inv_functor(m), x),
                             f"inv*{X.name}")


def _collapse(A) -> PartialMap:
    return PartialMap(frozenset(A), frozenset(), ())


def _point(A, a) -> PartialMap:
    return PartialMap(frozenset(A), ONE, ((a, 1),))


def pow_presheaf(X: GammaSet, M: FiniteCategory) -> Presheaf:
    """A -> X(1)^A, the fibre product of copies of X(1) over X(empty)."""
    from .reedy import TabulatedPresheaf

    down = _collapse(ONE)
    ones = X.value(ONE)

    def value(A):
        out = []
        for base in X.value(frozenset()):
            pool = [x for x in ones if X.push(down, x) == base]
            for xs in itertools.product(pool, repeat=len(A)):
                out.append((base, xs))
        return out

    def act(m: PartialMap, t):
        base, xs = t
        A = ordered(m.target)
        pos = {a: i for i, a in enumerate(A)}
        return (base, tuple(xs[pos[m(b)]] for b in ordered(m.source)))

    return TabulatedPresheaf(M, {A: value(A) for A in M.objects}, act, f"pow{X.name}")


def rho(X: GammaSet, A) -> Callable:
    A = frozenset(A)
    pts = [_point(A, a) for a in ordered(A)]
    collapse = _collapse(A)
    return lambda x: (X.push(collapse, x), tuple(X.push(p, x) for p in pts))


@dataclass
class RhoReport:
    sizes: dict
    natural: bool
    injective: dict
    surjective: dict

    def to_json(self):
        return {"sizes": self.sizes, "natural": self.natural, "injective": self.injective, "surjective": self.surjective}


def inv_pow_rho(X: GammaSet, M: FiniteCategory) -> tuple[Presheaf, Presheaf, RhoReport]:
    I = inv_star(X, M)
    P = pow_presheaf(X, M)
    natural = True
    sizes, inj, sur = {}, {}, {}
    for A in M.objects:
        r = rho(X, A)
        imgs = [r(x) for x in I.value(A)]
        sizes[len(A)] = [len(I.value(A)), len(P.value(A))]
        inj[len(A)] = len(set(imgs)) == len(imgs)
        sur[len(A)] = set(imgs) == set(P.value(A))
        for B in M.objects:
            for m in M.hom(B, A):
                rb = rho(X, B)
                for x in I.value(A):
                    if rb(I.act(m, x)) != P.act(m, r(x)):
                        natural = False
    return I, P, RhoReport(sizes, natural, inj, sur)


def monoid_gamma(elements: Sequence, add: Callable, zero, category: FiniteCategory | None = None,
                 name: str = "M") -> GammaSet:
    """A -> M^A for a finite commutative monoid M, pushing forward by
    summing over fibres.  Its value at A is exactly the A-fold power of its
    value at a point."""
    elements = tuple(elements)

    def value(A):
        return [tuple(zip(ordered(A), t)) for t in itertools.product(elements, repeat=len(A))]

    def push(phi: PartialMap, x):
        d = dict(x)
        out = {b: zero for b in phi.target}
        for a, b in phi.items:
            out[b] = add(out[b], d[a])
        return tuple(sorted(out.items(), key=lambda kv: repr(kv[0])))

    return GammaSet(category, lambda A: [tuple(sorted(v, key=lambda kv: repr(kv[0]))) for v in value(A)], push, name)


def check_special_restriction_surjective(X: GammaSet, A: Iterable) -> Check:
    """X(A) maps onto the compatible families over the proper subsets of A."""
    A = frozenset(A)
    subsets = [frozenset(c) for k in range(len(A)) for c in itertools.combinations(ordered(A), k)]

    def restrict(S, T):  # inert map S -> T for T inside S
        return PartialMap(S, T, tuple((t, t) for t in T))

    families = []
    for xs in itertools.product(*[X.value(B) for B in subsets]):
        fam = dict(zip(subsets, xs))
        if all(X.push(restrict(S, T), fam[S]) == fam[T] for S in subsets for T in subsets if T < S):
            families.append(tuple(xs))
    image = {tuple(X.push(restrict(A, B), x) for B in subsets) for x in X.value(A)}
    ok = image == set(families)
    return Check("special_restriction", ok, None if ok else {"families": len(families), "hit": len(image)},
                 {"A": len(A), "families": len(families)})


# reduced collapse ---------------------------------------------------------------------------

COLLAPSED = "*"


def reduce_pointed(X: GammaSet, basepoint) -> GammaSet:
    """Collapse the image of X(empty) in every X(A) to a single point."""
    empty = frozenset()
    if basepoint is None or basepoint not in X.value(empty):
        raise ValueError("a base point in the value at the empty set is required")

    def image(A):
        inc = PartialMap(empty, frozenset(A), ())
        return {X.push(inc, x) for x in X.value(empty)}

    def value(A):
        img = image(A)
        return [COLLAPSED] + [x for x in X.value(A) if x not in img]

    def push(phi, x):
        if x == COLLAPSED:
            return COLLAPSED
        y = X.push(phi, x)
        return COLLAPSED if y in image(phi.target) else y

    return GammaSet(X.category, value, push, f"red({X.name})")


def check_gamma_set_functoriality(X: GammaSet, max_set: int = 3) -> Check:
    sets = [skeleton(n) for n in range(max_set + 1)]
    checks = 0
    for A in sets:
        vals = X.value(A)
        members = set(vals)
        for x in vals:
            if X.push(identity_map(A), x) != x:
                return Check("gamma_set_functoriality", False, {"identity": repr(x)})
        for B in sets:
            vb = set(X.value(B))
            for phi in all_partial_maps(A, B):
                for x in vals:
                    if X.push(phi, x) not in vb:
                        return Check("gamma_set_functoriality", False, {"outside": repr(phi)})
                for C in sets:
                    for psi in all_partial_maps(B, C):
                        comp = compose_partial(psi, phi)
                        for x in vals:
                            if X.push(comp, x) != X.push(psi, X.push(phi, x)):
                                return Check("gamma_set_functoriality", False, {"pair": [repr(phi), repr(psi)]})
                            checks += 1
    return Check("gamma_set_functoriality", True, detail={"checks": checks})


# decorated sets over A ---------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Decorated:
    """A set over A together with an element of F at its carrier."""

    base: LabelledSet
    element: Any


def _order_inclusion(k: int, keep: Sequence[int]) -> PartialMap:
    return PartialMap(skeleton(len(keep)), skeleton(k), tuple((n, i) for n, i in enumerate(keep, start=1)))


def _perm_injection(f: Bijection) -> PartialMap:
    k = f.source.size
    return PartialMap(skeleton(k), skeleton(k), tuple((i, f.perm[i - 1]) for i in range(1, k + 1)))


def sigma_F(F: Presheaf, A: Iterable, bound: int = 2) -> Groupoid:
    """Pairs (f: U -> A, x in F(U)); a morphism is a bijection s over A with
    s^* y = x.  F is a presheaf on finite sets and injections."""
    A = frozenset(A)
    objs = tuple(Decorated(x, e) for x in labelled_sets(A, ONE, bound) for e in F.value(skeleton(x.size)))
    homs: dict = {}
    for d in objs:
        for d2 in objs:
            if d.base.size != d2.base.size:
                continue
            fs = tuple((d, d2, f) for f in bijections_over(d.base, d2.base)
                       if F.act(_perm_injection(f), d2.element) == d.element)
            if fs:
                homs[(d, d2)] = fs
    return Groupoid(
        name=f"Sigma_{F.name}({len(A)})<={bound}",
        objects=objs,
        homs=homs,
        compose_fn=lambda g, f: (f[0], g[1], compose_bijections(g[2], f[2])),
        identity_fn=lambda d: (d, d, identity_bijection(d.base)),
        inverse_fn=lambda f: (f[1], f[0], inverse_bijection(f[2])),
        src=lambda f: f[0],
        tgt=lambda f: f[1],
    )


def sigma_F_action(F: Presheaf, phi: PartialMap, d: Decorated) -> Decorated:
    keep = _kept(phi, d.base)
    return Decorated(gamma_action(phi, d.base), F.act(_order_inclusion(d.base.size, keep), d.element))


def check_sigma_F(F: Presheaf, max_set: int = 2, bound: int = 2) -> Check:
    """Discrete fibres over the undecorated groupoid, functoriality of the
    Gamma-action on objects, and naturality of the projection."""
    checks = 0
    sets = [skeleton(n) for n in range(max_set + 1)]
    for A in sets:
        G = sigma_F(F, A, bound)
        members = set(G.objects)
        for x in labelled_sets(A, ONE, bound):
            for y in labelled_sets(A, ONE, bound):
                for f in bijections_over(x, y):
                    for e2 in F.value(skeleton(y.size)):
                        lifts = [m for (d, d2), ms in G.homs.items() if d2 == Decorated(y, e2) and d.base == x
                                 for m in ms if m[2] == f]
                        if len(lifts) != 1:
                            return Check("sigma_F", False, {"fibre": [x.to_json(), y.to_json()], "lifts": len(lifts)})
                        checks += 1
        for B in sets:
            for phi in all_partial_maps(A, B):
                for d in G.objects:
                    pushed = sigma_F_action(F, phi, d)
                    if pushed.base != gamma_action(phi, d.base):
                        return Check("sigma_F", False, {"projection": repr(phi)})
                    for C in sets:
                        for psi in all_partial_maps(B, C):
                            if sigma_F_action(F, compose_partial(psi, phi), d) != sigma_F_action(F, psi, pushed):
                                return Check("sigma_F", False, {"functoriality": [repr(phi), repr(psi)]})
                            checks += 1
        del members
    return Check("sigma_F", True, detail={"checks": checks})
