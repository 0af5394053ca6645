"""Finite sets with partial maps, finite sets with injections, the leaf
functor out of Omega and the inert-map functor.

A Gamma-object is a covariant functor on partial maps; the Reedy structure
of Gamma is described through its dual, so ``reedy_factorize_gamma`` works
with partial maps directly.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Hashable, Iterable, Iterator, Mapping

from .order import ordered, sort_key
from .trees import OmegaMorphism


def skeleton(n: int) -> frozenset:
    """The standard n-element set {1, ..., n}."""
    return frozenset(range(1, n + 1))


def as_finset(xs: Iterable[Hashable]) -> frozenset:
    xs = list(xs)
    s = frozenset(xs)
    if len(s) != len(xs):
        raise ValueError("finite set has duplicate elements")
    return s


@dataclass(frozen=True, eq=False)
class PartialMap:
    """A partial map source -> target, defined on the keys of ``mapping``.

    ``mapping`` is stored as a frozenset of (element, image) pairs.
    """

    source: frozenset
    target: frozenset
    mapping: frozenset

    def __post_init__(self):
        source = self.source if type(self.source) is frozenset else frozenset(self.source)
        target = self.target if type(self.target) is frozenset else frozenset(self.target)
        pairs = tuple(self.mapping.items()) if isinstance(self.mapping, Mapping) else tuple(self.mapping)
        m = dict(pairs)
        if len(m) != len(pairs):
            raise ValueError("an element has two images")
        if not m.keys() <= source:
            raise ValueError(f"defined on elements outside the source: {ordered(set(m) - source)}")
        if not set(m.values()) <= target:
            raise ValueError(f"values outside the target: {ordered(set(m.values()) - target)}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "mapping", frozenset(m.items()))

    @classmethod
    def _trusted(cls, source: frozenset, target: frozenset, pairs: Iterable) -> "PartialMap":
        """Build without validation; callers guarantee well-formed data."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "source", source)
        object.__setattr__(obj, "target", target)
        object.__setattr__(obj, "mapping", frozenset(pairs))
        return obj

    def __eq__(self, other):
        return (isinstance(other, PartialMap) and self.mapping == other.mapping
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash((self.source, self.target, self.mapping))

    @cached_property
    def _key(self) -> tuple:
        return (tuple(sort_key(x) for x in ordered(self.source)), tuple(sort_key(x) for x in ordered(self.target)),
                tuple((sort_key(a), sort_key(self.as_dict[a])) for a in ordered(self.as_dict)))

    def sort_key(self):
        return self._key

    def __lt__(self, other):
        return self._key < other._key

    @property
    def items(self) -> list:
        return [(a, self.as_dict[a]) for a in ordered(self.as_dict)]

    def __repr__(self):
        body = ", ".join(f"{a}->{b}" for a, b in self.items)
        return f"PartialMap({ordered(self.source)} -> {ordered(self.target)}: {{{body}}})"

    @cached_property
    def as_dict(self) -> dict:
        return dict(self.mapping)

    @property
    def defined(self) -> frozenset:
        return frozenset(self.as_dict)

    def __call__(self, x):
        return self.as_dict.get(x)

    def is_defined(self, x) -> bool:
        return x in self.as_dict

    def image(self) -> frozenset:
        return frozenset(self.as_dict.values())

    def preimage(self, y) -> frozenset:
        return frozenset(a for a, b in self.mapping if b == y)

    def is_total(self) -> bool:
        return len(self.as_dict) == len(self.source)

    def is_injective(self) -> bool:
        return len(self.image()) == len(self.as_dict)

    def is_surjective(self) -> bool:
        return self.image() == self.target

    def is_bijection(self) -> bool:
        return self.is_total() and self.is_injective() and self.is_surjective()

    def is_inert(self) -> bool:
        """Every point of the target has exactly one preimage."""
        return self.is_surjective() and self.is_injective()

    def inverse(self) -> "PartialMap":
        if not self.is_bijection():
            raise ValueError("not a bijection")
        return PartialMap(self.target, self.source, tuple((b, a) for a, b in self.mapping))

    def to_json(self) -> dict:
        return {
            "source": ordered(self.source),
            "target": ordered(self.target),
            "map": {str(a): b for a, b in self.items} if _str_keys(self.source) else [[a, b] for a, b in self.items],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PartialMap":
        source = _from_json_set(data["source"])
        target = _from_json_set(data["target"])
        raw = data.get("map", {})
        if isinstance(raw, Mapping):
            lookup = {str(x): x for x in source}
            unknown = [k for k in raw if k not in lookup]
            if unknown:
                raise ValueError(f"unknown source elements {unknown}")
            items = [(lookup[k], _from_json_elem(v)) for k, v in raw.items()]
        else:
            items = [(_from_json_elem(a), _from_json_elem(b)) for a, b in raw]
        return cls(source, target, tuple(items))


def _str_keys(xs) -> bool:
    return all(isinstance(x, (str, int)) and not isinstance(x, bool) for x in xs) and len({str(x) for x in xs}) == len(xs)


def _from_json_elem(x):
    return tuple(_from_json_elem(y) for y in x) if isinstance(x, list) else x


def _from_json_set(xs) -> frozenset:
    return as_finset(_from_json_elem(x) for x in xs)


def partial_map(source: Iterable, target: Iterable, mapping: Mapping) -> PartialMap:
    return PartialMap(frozenset(source), frozenset(target), tuple(dict(mapping).items()))


def identity_map(A: Iterable) -> PartialMap:
    A = frozenset(A)
    return PartialMap(A, A, tuple((a, a) for a in A))


def undefined_map(A: Iterable, B: Iterable) -> PartialMap:
    return PartialMap(frozenset(A), frozenset(B), ())


def compose_partial(g: PartialMap, f: PartialMap) -> PartialMap:
    """g after f, defined where f is defined and lands in the domain of g."""
    if f.target != g.source:
        raise ValueError("partial maps are not composable")
    gd = g.as_dict
    return PartialMap._trusted(f.source, g.target, [(a, gd[b]) for a, b in f.mapping if b in gd])


def all_partial_maps(A: Iterable, B: Iterable) -> Iterator[PartialMap]:
    """All partial maps A -> B, in a fixed order."""
    A, B = frozenset(A), frozenset(B)
    a_list = ordered(A)
    choices = [None] + ordered(B)
    for values in itertools.product(choices, repeat=len(a_list)):
        yield PartialMap._trusted(A, B, [(a, b) for a, b in zip(a_list, values) if b is not None])


def all_injections(B: Iterable, A: Iterable) -> Iterator[PartialMap]:
    B, A = frozenset(B), frozenset(A)
    b_list = ordered(B)
    for values in itertools.permutations(ordered(A), len(b_list)):
        yield PartialMap._trusted(B, A, zip(b_list, values))


def all_bijections(A: Iterable, B: Iterable) -> Iterator[PartialMap]:
    A, B = frozenset(A), frozenset(B)
    if len(A) != len(B):
        return iter(())
    return all_injections(A, B)


def reedy_factorize_gamma(f: PartialMap) -> tuple[PartialMap, PartialMap]:
    """Factor f as a partial surjection onto its image followed by the total
    injection of the image into the target.

    Returned as ``(positive, negative)``: the surjection is dual to a
    positive morphism of Gamma and the injection dual to a negative one.
    """
    image = f.image()
    surjection = PartialMap(f.source, image, f.mapping)
    injection = PartialMap(image, f.target, tuple((b, b) for b in image))
    return surjection, injection


def gamma_class(f: PartialMap) -> str:
    """Reedy class of the Gamma-morphism dual to f."""
    if f.is_bijection():
        return "iso"
    if f.is_surjective():
        return "positive"
    if f.is_total() and f.is_injective():
        return "negative"
    return "mixed"


def inv_functor(m: PartialMap) -> PartialMap:
    """Send a total injection B -> A to its inverse, an inert map A -> B."""
    if not (m.is_total() and m.is_injective()):
        raise ValueError("inv is only defined on total injections")
    return PartialMap(m.target, m.source, tuple((b, a) for a, b in m.mapping))


# leaves -----------------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def leaf_functor(alpha: OmegaMorphism) -> PartialMap:
    """The partial map of leaf sets induced by a tree morphism S -> T.

    A leaf of T goes to the leaf d of S whose image lies on its path to
    the root, when there is one.
    """
    S, T = alpha.source, alpha.target
    where = {}
    for d in S.leaves:
        where.setdefault(alpha(d), []).append(d)
    mapping = []
    for e in T.leaves:
        hits = [d for x in T.path_to_root(e) for d in where.get(x, ())]
        if len(hits) > 1:
            raise ValueError(f"leaf {e!r} lies above several source leaves {hits}")
        if hits:
            mapping.append((e, hits[0]))
    return PartialMap(T.leaves, S.leaves, tuple(mapping))


def leaf_class(f: PartialMap) -> str:
    """Coarse shape of a leaf map: ``bijection``, ``total`` or ``partial``."""
    if f.is_bijection():
        return "bijection"
    return "total" if f.is_total() else "partial"
