"""Finite categories with a generalized Reedy structure, set-valued
presheaves on them, and the constructions used to describe Reedy
cofibrations: latching and matching objects, normal monomorphisms,
absolute pushouts of negative spans and lifting problems.

Everything is exact set-level computation on finite tables.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .order import ordered, sort_key


class CategoryError(ValueError):
    pass


class HypothesisError(ValueError):
    """The index category does not satisfy a required hypothesis."""


@dataclass
class Check:
    """Outcome of one verification, with a witness when it fails."""

    name: str
    passed: bool
    witness: Any = None
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = {k: _plain(v) for k, v in sorted(self.detail.items())}
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        return out


def _plain(x):
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, Mapping):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, (frozenset, set)):
        return [_plain(y) for y in ordered(x)]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return repr(x)


# categories -------------------------------------------------------------------

@dataclass(eq=False)
class FiniteCategory:
    """A finite category given by hom-sets and a composition function.

    ``compose(g, f)`` is g after f.  Optional Reedy data: ``degree`` on
    objects and the predicates ``plus`` and ``minus`` on morphisms.
    """

    name: str
    objects: tuple
    homs: Mapping[tuple, tuple]
    src: Callable[[Any], Hashable]
    tgt: Callable[[Any], Hashable]
    compose_fn: Callable[[Any, Any], Any]
    identity_fn: Callable[[Hashable], Any]
    degree: Callable[[Hashable], int] | None = None
    plus: Callable[[Any], bool] | None = None
    minus: Callable[[Any], bool] | None = None
    iso_fn: Callable[[Any], bool] | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def hom(self, a, b) -> tuple:
        return self.homs.get((a, b), ())

    def compose(self, g, f):
        return self.compose_fn(g, f)

    def identity(self, a):
        return self.identity_fn(a)

    def morphisms(self) -> Iterator:
        for a in self.objects:
            for b in self.objects:
                yield from self.hom(a, b)

    def into(self, b) -> list:
        key = ("into", b)
        if key not in self._cache:
            self._cache[key] = [f for a in self.objects for f in self.hom(a, b)]
        return self._cache[key]

    def out_of(self, a) -> list:
        key = ("out", a)
        if key not in self._cache:
            self._cache[key] = [f for b in self.objects for f in self.hom(a, b)]
        return self._cache[key]

    def is_iso(self, f) -> bool:
        if self.iso_fn is not None:
            return self.iso_fn(f)
        a, b = self.src(f), self.tgt(f)
        ida, idb = self.identity(a), self.identity(b)
        return any(self.compose(g, f) == ida and self.compose(f, g) == idb for g in self.hom(b, a))

    def automorphisms(self, a) -> list:
        return [f for f in self.hom(a, a) if self.is_iso(f)]

    def contains(self, obj) -> bool:
        return obj in self._object_set

    @property
    def _object_set(self) -> frozenset:
        if "objset" not in self._cache:
            self._cache["objset"] = frozenset(self.objects)
        return self._cache["objset"]

    def with_classes(self, name: str, plus=None, minus=None) -> "FiniteCategory":
        """Copy with replaced Reedy classes (used to build corrupted variants)."""
        return FiniteCategory(
            name, self.objects, self.homs, self.src, self.tgt, self.compose_fn, self.identity_fn,
            self.degree, plus or self.plus, minus or self.minus, self.iso_fn,
        )

    def properly_negative_out(self, r) -> list:
        return [f for f in self.out_of(r) if self.minus(f) and not self.is_iso(f)]

    def properly_positive_into(self, r) -> list:
        return [f for f in self.into(r) if self.plus(f) and not self.is_iso(f)]


def check_composition(cat: FiniteCategory, max_pairs: int | None = None) -> Check:
    """Identities are neutral and composites land in the right hom-set."""
    for a in cat.objects:
        ida = cat.identity(a)
        if ida not in cat.hom(a, a):
            return Check("composition", False, {"missing_identity": a})
        for f in cat.out_of(a):
            if cat.compose(f, ida) != f or cat.compose(cat.identity(cat.tgt(f)), f) != f:
                return Check("composition", False, {"identity_not_neutral": f})
    count = 0
    hom_sets = {k: frozenset(v) for k, v in cat.homs.items()}
    for b in cat.objects:
        for f in cat.into(b):
            for g in cat.out_of(b):
                h = cat.compose(g, f)
                if h not in hom_sets.get((cat.src(f), cat.tgt(g)), frozenset()):
                    return Check("composition", False, {"composite_outside_table": [f, g]})
                count += 1
                if max_pairs is not None and count >= max_pairs:
                    return Check("composition", True, detail={"pairs_checked": count, "exhaustive": False})
    return Check("composition", True, detail={"pairs_checked": count, "exhaustive": True})


def check_associativity(cat: FiniteCategory) -> Check:
    count = 0
    for b in cat.objects:
        for f in cat.into(b):
            for g in cat.out_of(b):
                gf = cat.compose(g, f)
                for h in cat.out_of(cat.tgt(g)):
                    if cat.compose(h, gf) != cat.compose(cat.compose(h, g), f):
                        return Check("associativity", False, [f, g, h])
                    count += 1
    return Check("associativity", True, detail={"triples": count})


# Reedy axioms -------------------------------------------------------------------

def check_reedy_axioms(cat: FiniteCategory) -> list[Check]:
    """Verify the four generalized Reedy axioms by exhaustive search.

    1. positive maps raise degree, negative maps lower it;
    2. every map factors as positive after negative, uniquely up to a
       unique-ish isomorphism of the middle object;
    3. positive and negative together means iso, and degree-preserving
       positive or negative maps are isos;
    4. an automorphism fixed by precomposition with a positive map or by
       postcomposition with a negative map is the identity.
    """
    if cat.degree is None or cat.plus is None or cat.minus is None:
        raise CategoryError("category has no Reedy structure")
    deg, plus, minus = cat.degree, cat.plus, cat.minus
    morphisms = list(cat.morphisms())
    isos = {f for f in morphisms if cat.is_iso(f)}
    results = []

    # (1)
    witness = None
    for f in morphisms:
        a, b = cat.src(f), cat.tgt(f)
        if plus(f) and deg(a) > deg(b):
            witness = {"morphism": f, "class": "positive", "degrees": [deg(a), deg(b)]}
            break
        if minus(f) and deg(a) < deg(b):
            witness = {"morphism": f, "class": "negative", "degrees": [deg(a), deg(b)]}
            break
    results.append(Check("axiom1_degree", witness is None, witness, {"morphisms": len(morphisms)}))

    # closure of both classes under composition, and identities in both
    witness = None
    for a in cat.objects:
        ida = cat.identity(a)
        if not (plus(ida) and minus(ida)):
            witness = {"identity_not_in_both_classes": a}
            break
    if witness is None:
        for b in cat.objects:
            ins = cat.into(b)
            outs = cat.out_of(b)
            for cls, pred in (("positive", plus), ("negative", minus)):
                for f in (f for f in ins if pred(f)):
                    for g in (g for g in outs if pred(g)):
                        if not pred(cat.compose(g, f)):
                            witness = {"class": cls, "pair": [f, g]}
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break
    results.append(Check("classes_closed", witness is None, witness))

    # (2)
    witness = None
    n_factorizations = 0
    for S in cat.objects:
        if witness:
            break
        for T in cat.objects:
            found: dict[Any, list] = {}
            for M in cat.objects:
                negs = [e for e in cat.hom(S, M) if minus(e)]
                if not negs:
                    continue
                poss = [m for m in cat.hom(M, T) if plus(m)]
                for e in negs:
                    for m in poss:
                        found.setdefault(cat.compose(m, e), []).append((M, e, m))
                        n_factorizations += 1
            for f in cat.hom(S, T):
                facts = found.get(f)
                if not facts:
                    witness = {"morphism": f, "problem": "no factorization"}
                    break
                M0, e0, m0 = facts[0]
                for M1, e1, m1 in facts[1:]:
                    if not any(
                        cat.compose(th, e0) == e1 and cat.compose(m1, th) == m0
                        for th in cat.hom(M0, M1) if th in isos
                    ):
                        witness = {"morphism": f, "problem": "factorizations not isomorphic",
                                   "factorizations": [[M0, e0, m0], [M1, e1, m1]]}
                        break
                if witness:
                    break
            if witness:
                break
    results.append(Check("axiom2_factorization", witness is None, witness, {"factorizations": n_factorizations}))

    # (3)
    witness = None
    for f in morphisms:
        p, m, iso = plus(f), minus(f), f in isos
        if (p and m) != iso:
            witness = {"morphism": f, "positive": p, "negative": m, "iso": iso}
            break
        if (p or m) and deg(cat.src(f)) == deg(cat.tgt(f)) and not iso:
            witness = {"morphism": f, "problem": "degree-preserving but not iso"}
            break
    results.append(Check("axiom3_isos", witness is None, witness, {"isos": len(isos)}))

    # (4)
    witness = None
    for a in cat.objects:
        ida = cat.identity(a)
        for th in cat.hom(a, a):
            if th not in isos or th == ida:
                continue
            for f in cat.out_of(a):
                if plus(f) and cat.compose(f, th) == f:
                    witness = {"automorphism": th, "positive": f}
                    break
            if witness:
                break
            for g in cat.into(a):
                if minus(g) and cat.compose(th, g) == g:
                    witness = {"automorphism": th, "negative": g}
                    break
            if witness:
                break
        if witness:
            break
    results.append(Check("axiom4_rigidity", witness is None, witness))
    return results


def negative_sections(cat: FiniteCategory) -> Check:
    """Every negative morphism has a section."""
    for f in cat.morphisms():
        if not cat.minus(f):
            continue
        a, b = cat.src(f), cat.tgt(f)
        idb = cat.identity(b)
        if not any(cat.compose(f, s) == idb for s in cat.hom(b, a)):
            return Check("negative_sections", False, {"morphism": f})
    return Check("negative_sections", True)


@dataclass
class PushoutWitness:
    """Data exhibiting an absolute pushout of a span e1: r -> s, e2: r -> t.

    p1: s -> q and p2: t -> q form the square, d1, d2 are sections of e1,
    e2, q_sec is a section of p2, and k: t -> r satisfies
    e1 k = e1 d2 and e2 k = q_sec p2, while q_sec p1 = e2 d1.  All these
    equations are preserved by any functor.
    """

    p1: Any
    p2: Any
    d1: Any
    d2: Any
    q_sec: Any
    k: Any

    def to_json(self):
        return {k: _plain(getattr(self, k)) for k in ("p1", "p2", "d1", "d2", "q_sec", "k")}


def verify_pushout_witness(cat: FiniteCategory, e1, e2, w: PushoutWitness) -> bool:
    c = cat.compose
    s, t = cat.tgt(e1), cat.tgt(e2)
    q = cat.tgt(w.p1)
    return (
        c(w.p1, e1) == c(w.p2, e2)
        and c(e1, w.d1) == cat.identity(s)
        and c(e2, w.d2) == cat.identity(t)
        and c(w.p2, w.q_sec) == cat.identity(q)
        and c(w.q_sec, w.p1) == c(e2, w.d1)
        and c(e1, w.k) == c(e1, w.d2)
        and c(e2, w.k) == c(w.q_sec, w.p2)
    )


def has_absolute_pushout(cat: FiniteCategory, e1, e2) -> tuple[bool, PushoutWitness | None]:
    """Search for a witness that the span (e1, e2) has an absolute pushout.

    The criterion is sufficient; a False answer means no witness of this
    particular shape exists in the category.  The leg p2 is looked for
    among negative maps only, which is where such squares live in Reedy
    categories and keeps the search small.
    """
    if cat.src(e1) != cat.src(e2):
        raise CategoryError("span legs must share a source")
    if cat.minus is not None and not (cat.minus(e1) and cat.minus(e2)):
        raise CategoryError("span legs must be negative")
    c = cat.compose
    r, s, t = cat.src(e1), cat.tgt(e1), cat.tgt(e2)
    d1s = [d for d in cat.hom(s, r) if c(e1, d) == cat.identity(s)]
    d2s = [d for d in cat.hom(t, r) if c(e2, d) == cat.identity(t)]
    if not d1s or not d2s:
        return False, None
    ks = {}
    for k in cat.hom(t, r):
        ks.setdefault((c(e1, k), c(e2, k)), k)
    # p2 q_sec = 1 and q_sec p1 = e2 d1 force p1 = p2 e2 d1
    for q in cat.objects:
        idq = cat.identity(q)
        for p2 in cat.hom(t, q):
            if cat.minus is not None and not cat.minus(p2):
                continue
            p2e2 = c(p2, e2)
            for q_sec in cat.hom(q, t):
                if c(p2, q_sec) != idq:
                    continue
                qp2 = c(q_sec, p2)
                for d1 in d1s:
                    p1 = c(p2e2, d1)
                    if c(p1, e1) != p2e2 or c(q_sec, p1) != c(e2, d1):
                        continue
                    for d2 in d2s:
                        k = ks.get((c(e1, d2), qp2))
                        if k is not None:
                            return True, PushoutWitness(p1, p2, d1, d2, q_sec, k)
    return False, None


def check_negative_span_pushouts(cat: FiniteCategory) -> Check:
    """Every span of negative morphisms has an absolute-pushout witness."""
    key = "span_pushouts"
    if key in cat._cache:
        return cat._cache[key]
    n = 0
    result = None
    for r in cat.objects:
        negs = [f for f in cat.out_of(r) if cat.minus(f)]
        for e1, e2 in itertools.combinations_with_replacement(negs, 2):
            ok, _ = has_absolute_pushout(cat, e1, e2)
            n += 1
            if not ok:
                result = Check("negative_span_pushouts", False, {"span": [e1, e2]})
                break
        if result:
            break
    if result is None:
        result = Check("negative_span_pushouts", True, detail={"spans": n})
    cat._cache[key] = result
    return result


# presheaves ---------------------------------------------------------------------

class Presheaf:
    """A contravariant set-valued functor on ``category``.

    Subclasses provide ``value(obj)`` (an ordered tuple of elements) and
    ``act(f, x)`` for f: a -> b and x in value(b).
    """

    category: FiniteCategory
    name: str = "X"

    def value(self, obj) -> tuple:
        raise NotImplementedError

    def act(self, f, x):
        raise NotImplementedError

    def size(self, obj) -> int:
        return len(self.value(obj))

    def elements(self) -> Iterator[tuple]:
        for obj in self.category.objects:
            for x in self.value(obj):
                yield obj, x

    def total_size(self) -> int:
        return sum(self.size(o) for o in self.category.objects)


class TabulatedPresheaf(Presheaf):
    """A presheaf with explicit value sets and a memoized action."""

    def __init__(self, category: FiniteCategory, values: Mapping, action: Callable, name: str = "X",
                 check: bool = False):
        self.category = category
        self.name = name
        self._values = {obj: tuple(values[obj]) for obj in category.objects}
        self._index = {obj: {x: i for i, x in enumerate(v)} for obj, v in self._values.items()}
        self._action = action
        self._memo: dict = {}
        if check:
            verdict = check_functoriality(self)
            if not verdict.passed:
                raise CategoryError(f"{name} is not functorial: {verdict.witness}")

    def value(self, obj) -> tuple:
        return self._values[obj]

    def contains(self, obj, x) -> bool:
        return x in self._index[obj]

    def act(self, f, x):
        key = (f, x)
        out = self._memo.get(key)
        if out is None:
            out = self._action(f, x)
            self._memo[key] = out
        return out


def _object_key(obj) -> str:
    enc = getattr(obj, "encoding", None)
    return enc if isinstance(enc, str) else repr(obj)


def presheaf_to_json(X: Presheaf) -> dict:
    """Values as lists of element strings per object, and the action of
    every morphism f: a -> b as the list of indices into X(a) of the images
    of X(b), keyed by the morphism's repr."""
    cat = X.category
    index = {o: {x: i for i, x in enumerate(X.value(o))} for o in cat.objects}
    values = {}
    for o in cat.objects:
        names = [x if isinstance(x, str) else repr(x) for x in X.value(o)]
        if len(set(names)) != len(names):
            raise ValueError(f"elements of {X.name} at {_object_key(o)} do not have distinct encodings")
        values[_object_key(o)] = names
    actions = {}
    for f in cat.morphisms():
        a, b = cat.src(f), cat.tgt(f)
        actions[repr(f)] = {"source": _object_key(a), "target": _object_key(b),
                            "map": [index[a][X.act(f, x)] for x in X.value(b)]}
    return {"name": X.name, "category": cat.name, "values": values, "actions": actions}


def presheaf_from_json(data: Mapping, category: FiniteCategory) -> TabulatedPresheaf:
    """Inverse of ``presheaf_to_json`` over the same category; elements
    become their encodings."""
    try:
        values = {o: tuple(data["values"][_object_key(o)]) for o in category.objects}
        table = {f: data["actions"][repr(f)]["map"] for f in category.morphisms()}
    except KeyError as exc:
        raise ValueError(f"presheaf JSON does not cover {exc.args[0]} of {category.name}") from None
    index = {o: {x: i for i, x in enumerate(v)} for o, v in values.items()}

    def act(f, x):
        return values[category.src(f)][table[f][index[category.tgt(f)][x]]]

    return TabulatedPresheaf(category, values, act, data.get("name", "X"))


def tabulate(X: Presheaf, category: FiniteCategory | None = None, name: str | None = None,
             check: bool = False) -> TabulatedPresheaf:
    cat = category or X.category
    return TabulatedPresheaf(cat, {o: X.value(o) for o in cat.objects}, X.act, name or X.name, check)


def check_functoriality(X: Presheaf, max_pairs: int | None = None) -> Check:
    cat = X.category
    count = 0
    for b in cat.objects:
        values_b = X.value(b)
        members_b = set(values_b)
        idb = cat.identity(b)
        for x in values_b:
            if X.act(idb, x) != x:
                return Check("functoriality", False, {"identity": b, "element": x})
        for f in cat.into(b):
            members_a = set(X.value(cat.src(f)))
            for x in values_b:
                if X.act(f, x) not in members_a:
                    return Check("functoriality", False, {"morphism": f, "element": x, "problem": "lands outside"})
        for g in cat.out_of(b):
            for x in X.value(cat.tgt(g)):
                gx = X.act(g, x)
                if gx not in members_b:
                    return Check("functoriality", False, {"morphism": g, "element": x, "problem": "lands outside"})
                for f in cat.into(b):
                    if X.act(cat.compose(g, f), x) != X.act(f, gx):
                        return Check("functoriality", False, {"pair": [f, g], "element": x})
                    count += 1
                    if max_pairs is not None and count >= max_pairs:
                        return Check("functoriality", True, detail={"checks": count, "exhaustive": False})
    return Check("functoriality", True, detail={"checks": count, "exhaustive": True})


class SubPresheaf(Presheaf):
    """Elements of an ambient presheaf selected by a predicate or by sets."""

    def __init__(self, ambient: Presheaf, selected: Mapping | Callable, name: str = "sub"):
        self.ambient = ambient
        self.category = ambient.category
        self.name = name
        if callable(selected):
            self._values = {o: tuple(x for x in ambient.value(o) if selected(o, x)) for o in self.category.objects}
        else:
            self._values = {o: tuple(x for x in ambient.value(o) if x in selected.get(o, ())) for o in self.category.objects}

    def value(self, obj) -> tuple:
        return self._values[obj]

    def act(self, f, x):
        return self.ambient.act(f, x)

    def is_closed(self) -> Check:
        """The selection is closed under the action (a sieve of elements)."""
        cat = self.category
        for b in cat.objects:
            for f in cat.into(b):
                a = cat.src(f)
                sel = set(self._values[a])
                for x in self._values[b]:
                    if self.ambient.act(f, x) not in sel:
                        return Check("sieve_closed", False, {"morphism": f, "element": x})
        return Check("sieve_closed", True)


@dataclass
class PresheafMap:
    """A natural transformation given by its components."""

    source: Presheaf
    target: Presheaf
    component: Callable[[Any, Any], Any]

    def __call__(self, obj, x):
        return self.component(obj, x)

    def is_natural(self) -> Check:
        cat = self.source.category
        for b in cat.objects:
            for f in cat.into(b):
                a = cat.src(f)
                for x in self.source.value(b):
                    if self.component(a, self.source.act(f, x)) != self.target.act(f, self.component(b, x)):
                        return Check("naturality", False, {"morphism": f, "element": x})
        return Check("naturality", True)

    def is_injective(self) -> Check:
        for o in self.source.category.objects:
            imgs = [self.component(o, x) for x in self.source.value(o)]
            if len(set(imgs)) != len(imgs):
                return Check("objectwise_injective", False, {"object": o})
        return Check("objectwise_injective", True)


def inclusion(sub: SubPresheaf) -> PresheafMap:
    return PresheafMap(sub, sub.ambient, lambda o, x: x)


def empty_presheaf(cat: FiniteCategory) -> TabulatedPresheaf:
    return TabulatedPresheaf(cat, {o: () for o in cat.objects}, lambda f, x: x, "empty")


def terminal_presheaf(cat: FiniteCategory) -> TabulatedPresheaf:
    return TabulatedPresheaf(cat, {o: ("*",) for o in cat.objects}, lambda f, x: "*", "terminal")


def representable(cat: FiniteCategory, r) -> TabulatedPresheaf:
    if not cat.contains(r):
        raise CategoryError(f"object {r!r} is outside the category")
    return TabulatedPresheaf(
        cat, {s: cat.hom(s, r) for s in cat.objects}, lambda f, x: cat.compose(x, f), f"R[{r!r}]"
    )


class QuotientPresheaf(Presheaf):
    """Orbits of a representable under postcomposition with a group of
    automorphisms of the representing object."""

    def __init__(self, cat: FiniteCategory, r, group: Sequence, name: str = "quotient"):
        self.category = cat
        self.name = name
        self.group = tuple(group)
        self._values = {}
        for s in cat.objects:
            orbits = {self._orbit(x) for x in cat.hom(s, r)}
            self._values[s] = tuple(sorted(orbits, key=lambda o: [sort_key(repr(y)) for y in o]))

    def _orbit(self, x) -> frozenset:
        return frozenset(self.category.compose(g, x) for g in self.group)

    def value(self, obj):
        return self._values[obj]

    def act(self, f, orbit):
        x = min(orbit, key=repr)
        return self._orbit(self.category.compose(x, f))


# latching and matching ------------------------------------------------------------

class UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if sort_key(repr(rx)) < sort_key(repr(ry)):
                self.parent[ry] = rx
            else:
                self.parent[rx] = ry

    def classes(self) -> list[list]:
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


@dataclass
class LatchingObject:
    """The colimit of X over properly negative maps out of r.

    ``classes`` lists equivalence classes of pairs (g, x) with g: r -> s
    properly negative and x in X(s); ``to_value`` maps each class to the
    element g*(x) of X(r).
    """

    obj: Any
    classes: list
    to_value: list

    def __len__(self):
        return len(self.classes)

    def image(self) -> set:
        return set(self.to_value)

    def is_injective(self) -> bool:
        return len(set(self.to_value)) == len(self.to_value)


def latching_object(X: Presheaf, r) -> LatchingObject:
    cat = X.category
    legs = cat.properly_negative_out(r)
    uf = UnionFind()
    for g in legs:
        for x in X.value(cat.tgt(g)):
            uf.find((g, x))
    # a morphism h: s -> s' under r with h g = g' identifies (g', y) with (g, h* y)
    leg_set = {}
    for g in legs:
        leg_set.setdefault(cat.tgt(g), []).append(g)
    for g in legs:
        s = cat.tgt(g)
        for h in cat.out_of(s):
            gp = cat.compose(h, g)
            if gp not in leg_set.get(cat.tgt(h), ()):
                continue
            for y in X.value(cat.tgt(h)):
                uf.union((gp, y), (g, X.act(h, y)))
    classes = [sorted(c, key=lambda p: (repr(p[0]), repr(p[1]))) for c in uf.classes()]
    classes.sort(key=lambda c: (repr(c[0][0]), repr(c[0][1])))
    to_value = [X.act(c[0][0], c[0][1]) for c in classes]
    for c, v in zip(classes, to_value):
        for g, x in c:
            if X.act(g, x) != v:
                raise CategoryError("latching map is not well defined")
    return LatchingObject(r, classes, to_value)


def degenerate_part(X: Presheaf, r) -> set:
    """Elements of X(r) coming from a properly negative map out of r."""
    return latching_object(X, r).image()


def boundary_sieve(cat: FiniteCategory, r) -> SubPresheaf:
    """Maps into r factoring through a properly positive map."""
    rep = representable(cat, r)
    positives = cat.properly_positive_into(r)
    selected = {}
    for s in cat.objects:
        sel = set()
        for x in cat.hom(s, r):
            for m in positives:
                if any(cat.compose(m, y) == x for y in cat.hom(s, cat.src(m))):
                    sel.add(x)
                    break
        selected[s] = sel
    return SubPresheaf(rep, selected, f"boundary[{r!r}]")


def natural_transformations(source: Presheaf, target: Presheaf, fixed: Mapping | None = None,
                            allowed: Callable[[Any, Any, Any], bool] | None = None,
                            limit: int | None = None) -> Iterator[dict]:
    """Enumerate natural transformations source -> target by backtracking.

    Each solution is a dict {(obj, x): y}.  ``fixed`` pins some values and
    ``allowed(obj, x, y)`` filters candidate values.  Elements are chosen in
    decreasing degree (when the category has one), and each choice forces
    the values of all its restrictions.
    """
    cat = source.category
    deg = cat.degree or (lambda o: 0)
    order = sorted(((o, x) for o in cat.objects for x in source.value(o)),
                   key=lambda p: (-deg(p[0]), cat.objects.index(p[0])))
    into = {o: cat.into(o) for o in cat.objects}

    def assign(state: dict, o, x, y, trail: list) -> bool:
        stack = [(o, x, y)]
        while stack:
            o, x, y = stack.pop()
            cur = state.get((o, x))
            if cur is not None or (o, x) in state:
                if cur != y:
                    return False
                continue
            if allowed is not None and not allowed(o, x, y):
                return False
            state[(o, x)] = y
            trail.append((o, x))
            for f in into[o]:
                stack.append((cat.src(f), source.act(f, x), target.act(f, y)))
        return True

    state: dict = {}
    base_trail: list = []
    for (o, x), y in (fixed or {}).items():
        if not assign(state, o, x, y, base_trail):
            return
    count = 0

    def search(i: int):
        nonlocal count
        while i < len(order) and order[i] in state:
            i += 1
        if i == len(order):
            count += 1
            yield dict(state)
            return
        o, x = order[i]
        for y in target.value(o):
            trail: list = []
            if assign(state, o, x, y, trail):
                yield from search(i + 1)
                if limit is not None and count >= limit:
                    for key in trail:
                        del state[key]
                    return
            for key in trail:
                del state[key]

    yield from search(0)


def matching_object(X: Presheaf, r, V: SubPresheaf | None = None) -> list[dict]:
    """Compatible families of X over the boundary of r (or over a sieve V
    of maps into r).  Each family is a dict {(s, m): x} keyed by the
    morphisms m: s -> r of the sieve."""
    cat = X.category
    if V is None:
        V = boundary_sieve(cat, r)
    else:
        closed = V.is_closed()
        if not closed.passed:
            raise CategoryError(f"V is not a sieve: {closed.witness}")
    return list(natural_transformations(V, X))


def matching_by_limit(X: Presheaf, r, maps: Sequence | None = None) -> list[dict]:
    """Brute-force limit over the category of properly positive maps into r.

    Enumerates the product of X(s) over the given maps m: s -> r and keeps
    tuples compatible along every triangle m' = m h.
    """
    cat = X.category
    if maps is None:
        maps = cat.properly_positive_into(r)
    maps = list(maps)
    index = {m: i for i, m in enumerate(maps)}
    relations = []
    for i, m in enumerate(maps):
        s = cat.src(m)
        for h in cat.into(s):
            mh = cat.compose(m, h)
            j = index.get(mh)
            if j is not None:
                relations.append((i, h, j))
    out = []
    pools = [X.value(cat.src(m)) for m in maps]
    for combo in itertools.product(*pools):
        if all(X.act(h, combo[i]) == combo[j] for i, h, j in relations):
            out.append({(cat.src(m), m): combo[k] for k, m in enumerate(maps)})
    return out


# normal monomorphisms ----------------------------------------------------------------

def check_lemma_hypotheses(cat: FiniteCategory) -> Check:
    sections = negative_sections(cat)
    if not sections.passed:
        return sections
    return check_negative_span_pushouts(cat)


def is_normal_mono(f: PresheafMap, verify_hypotheses: bool = True) -> Check:
    """Objectwise injective, with automorphisms of each object acting
    freely on the part of Y(r) outside the image of X(r) and of the
    degenerate elements."""
    cat = f.target.category
    if verify_hypotheses:
        hyp = check_lemma_hypotheses(cat)
        if not hyp.passed:
            raise HypothesisError(f"index category fails the cofibration hypotheses: {hyp.witness}")
    inj = f.is_injective()
    if not inj.passed:
        return Check("normal_mono", False, inj.witness)
    X, Y = f.source, f.target
    for r in cat.objects:
        covered = {f(r, x) for x in X.value(r)} | degenerate_part(Y, r)
        rest = [y for y in Y.value(r) if y not in covered]
        ident = cat.identity(r)
        for th in cat.automorphisms(r):
            if th == ident:
                continue
            for y in rest:
                if Y.act(th, y) == y:
                    return Check("normal_mono", False, {"object": r, "automorphism": th, "element": y})
    return Check("normal_mono", True)


def is_normal(X: Presheaf) -> Check:
    return is_normal_mono(PresheafMap(empty_presheaf(X.category), X, lambda o, x: x))


# lifting -------------------------------------------------------------------------

@dataclass
class LiftingProblem:
    """A square  A --f--> X,  B --g--> Y  with i: A -> B and p: X -> Y."""

    i: PresheafMap
    p: PresheafMap
    f: PresheafMap
    g: PresheafMap


@dataclass
class LiftingResult:
    found: bool
    diagonal: dict | None
    explored: int


def solve_lifting(problem: LiftingProblem) -> LiftingResult:
    i, p, f, g = problem.i, problem.p, problem.f, problem.g
    A, B, X = i.source, i.target, f.target
    cat = B.category
    for o in cat.objects:
        for a in A.value(o):
            if p(o, f(o, a)) != g(o, i(o, a)):
                raise CategoryError(f"square does not commute at {o!r}, {a!r}")
    fixed = {}
    for o in cat.objects:
        for a in A.value(o):
            key = (o, i(o, a))
            val = f(o, a)
            if key in fixed and fixed[key] != val:
                return LiftingResult(False, None, 0)
            fixed[key] = val
    explored = 0
    for sol in natural_transformations(B, X, fixed=fixed, allowed=lambda o, b, x: p(o, x) == g(o, b), limit=1):
        explored += 1
        return LiftingResult(True, sol, explored)
    return LiftingResult(False, None, explored)
