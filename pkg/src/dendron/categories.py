"""Concrete finite categories: truncations of Omega, Gamma and the category
of finite sets and injections, plus deliberately corrupted variants used
to check that the Reedy verifier catches mistakes."""
from __future__ import annotations

from . import trees as tr
from .finsets import (
    PartialMap,
    all_injections,
    all_partial_maps,
    compose_partial,
    identity_map,
    skeleton,
)
from .reedy import FiniteCategory

DEFAULT_TREE_VERTICES = 3
DEFAULT_TREE_EDGES = 5


def omega_category(max_vertices: int = DEFAULT_TREE_VERTICES, max_edges: int = DEFAULT_TREE_EDGES) -> FiniteCategory:
    """Full subcategory of Omega on canonical trees within the bounds.

    Both bounds are preserved by faces, degeneracies and factorization, so
    latching and matching objects computed inside stay exact.
    """
    objects = tuple(tr.all_trees(max_vertices, max_edges))
    homs = {(S, T): tuple(tr.enumerate_homs(S, T)) for S in objects for T in objects}
    homs = {k: v for k, v in homs.items() if v}
    return FiniteCategory(
        name=f"Omega[v<={max_vertices},e<={max_edges}]",
        objects=objects,
        homs=homs,
        src=lambda f: f.source,
        tgt=lambda f: f.target,
        compose_fn=tr.compose,
        identity_fn=tr.identity,
        degree=lambda T: T.degree,
        plus=lambda f: f.is_positive(),
        minus=lambda f: f.is_negative(),
        iso_fn=lambda f: f.is_iso(),
    )


def _gamma_positive(phi: PartialMap) -> bool:
    return phi.is_surjective()


def _gamma_negative(phi: PartialMap) -> bool:
    return phi.is_total() and phi.is_injective()


def gamma_category(max_size: int = 4) -> FiniteCategory:
    """Gamma on the sets {1..n}, n <= max_size.

    A morphism A -> B of Gamma is stored as the partial map B -> A it is
    dual to.  Positive maps are duals of partial surjections, negative maps
    duals of total injections, and the degree of n is n.
    """
    objects = tuple(skeleton(n) for n in range(max_size + 1))
    homs = {(A, B): tuple(all_partial_maps(B, A)) for A in objects for B in objects}
    return FiniteCategory(
        name=f"Gamma[n<={max_size}]",
        objects=objects,
        homs=homs,
        src=lambda phi: phi.target,
        tgt=lambda phi: phi.source,
        compose_fn=lambda g, f: compose_partial(f, g),
        identity_fn=identity_map,
        degree=len,
        plus=_gamma_positive,
        minus=_gamma_negative,
        iso_fn=lambda phi: phi.is_bijection(),
    )


def injection_category(max_size: int = 4) -> FiniteCategory:
    """Finite sets {1..n} and injections; every map is positive and only
    isomorphisms are negative."""
    objects = tuple(skeleton(n) for n in range(max_size + 1))
    homs = {(A, B): tuple(all_injections(A, B)) for A in objects for B in objects if len(A) <= len(B)}
    return FiniteCategory(
        name=f"M[n<={max_size}]",
        objects=objects,
        homs=homs,
        src=lambda m: m.source,
        tgt=lambda m: m.target,
        compose_fn=compose_partial,
        identity_fn=identity_map,
        degree=len,
        plus=lambda m: True,
        minus=lambda m: m.is_bijection(),
        iso_fn=lambda m: m.is_bijection(),
    )


# corrupted variants -----------------------------------------------------------------

def _first(cat: FiniteCategory, pred):
    return next(f for f in cat.morphisms() if pred(f))


def omega_face_as_negative(cat: FiniteCategory) -> FiniteCategory:
    """Reclassify one face (the first non-iso positive map) as negative only."""
    bad = _first(cat, lambda f: f.is_positive() and not f.is_iso())
    return cat.with_classes(
        cat.name + "+face-as-negative",
        plus=lambda f: f.is_positive() and f != bad,
        minus=lambda f: f.is_negative() or f == bad,
    )


def gamma_injection_as_positive(cat: FiniteCategory) -> FiniteCategory:
    """Let one proper total injection count as positive as well."""
    bad = _first(cat, lambda phi: _gamma_negative(phi) and not phi.is_bijection())
    return cat.with_classes(cat.name + "+injection-as-positive", plus=lambda phi: _gamma_positive(phi) or phi == bad)


def injections_all_negative(cat: FiniteCategory) -> FiniteCategory:
    """Declare every injection negative, which breaks degree monotonicity."""
    return cat.with_classes(cat.name + "+all-negative", minus=lambda m: True)


def omega_without_degeneracies(cat: FiniteCategory) -> FiniteCategory:
    """Drop the degeneracies from the negative class, so factorizations vanish."""
    return cat.with_classes(cat.name + "+no-degeneracies", minus=lambda f: f.is_iso())


def nonsplit_span_category() -> tuple[FiniteCategory, str, str]:
    """Objects r, s, t with maps r -> s and r -> t and nothing else besides
    identities.  The span has no sections, hence no absolute pushout."""
    objects = ("r", "s", "t")
    homs = {(o, o): (f"id_{o}",) for o in objects}
    homs[("r", "s")] = ("e1",)
    homs[("r", "t")] = ("e2",)
    ends = {"e1": ("r", "s"), "e2": ("r", "t"), **{f"id_{o}": (o, o) for o in objects}}

    def compose(g, f):
        if g.startswith("id_"):
            return f
        if f.startswith("id_"):
            return g
        raise ValueError(f"{g} and {f} are not composable")

    cat = FiniteCategory(
        name="span",
        objects=objects,
        homs=homs,
        src=lambda f: ends[f][0],
        tgt=lambda f: ends[f][1],
        compose_fn=compose,
        identity_fn=lambda o: f"id_{o}",
        degree=lambda o: 1 if o == "r" else 0,
        plus=lambda f: f.startswith("id_"),
        minus=lambda f: True,
        iso_fn=lambda f: f.startswith("id_"),
    )
    return cat, "e1", "e2"


def category_from_json(data) -> FiniteCategory:
    """Build a finite Reedy category from a presentation.

    ``{"name": ..., "objects": [...], "degrees": {obj: n},
    "morphisms": {m: {"source": a, "target": b, "class": c}},
    "identities": {obj: m}, "compose": [[g, f, gf], ...]}`` where the class
    is one of "plus", "minus", "iso" or "none".  Composites with an identity
    may be omitted.
    """
    import json

    if isinstance(data, str):
        data = json.loads(data)
    objects = tuple(data["objects"])
    morphisms = dict(data["morphisms"])
    identities = dict(data["identities"])
    for o, m in identities.items():
        morphisms.setdefault(m, {"source": o, "target": o, "class": "iso"})
    table = {(g, f): gf for g, f, gf in data.get("compose", [])}
    ids = set(identities.values())
    homs: dict = {}
    for m, entry in sorted(morphisms.items()):
        homs.setdefault((entry["source"], entry["target"]), []).append(m)

    def compose(g, f):
        if g in ids:
            return f
        if f in ids:
            return g
        if (g, f) not in table:
            raise ValueError(f"composite of {g} after {f} is not in the table")
        return table[(g, f)]

    def cls(m):
        return morphisms[m].get("class", "none")

    return FiniteCategory(
        name=data.get("name", "C"),
        objects=objects,
        homs={k: tuple(v) for k, v in homs.items()},
        src=lambda m: morphisms[m]["source"],
        tgt=lambda m: morphisms[m]["target"],
        compose_fn=compose,
        identity_fn=lambda o: identities[o],
        degree=lambda o: int(data["degrees"][o]),
        plus=lambda m: cls(m) in ("plus", "iso"),
        minus=lambda m: cls(m) in ("minus", "iso"),
        iso_fn=lambda m: cls(m) == "iso",
    )
