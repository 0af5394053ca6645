"""Named fixtures: trees, operads, algebras, presheaves and corrupted categories.

Extra trees and operads can be loaded from a JSON file named by the
``DENDRON_FIXTURES`` environment variable.  The file holds an object with
optional ``"trees"`` and ``"operads"`` maps from names to the usual JSON
encodings; entries there replace bundled fixtures of the same name.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable

from . import categories as cats
from . import trees as tr
from .operads import AssociativeOperad, CommutativeOperad, TableOperad, TrivialOperad, free_algebra
from .reedy import representable

ENV_VAR = "DENDRON_FIXTURES"


class FixtureError(KeyError):
    def __str__(self):
        return self.args[0]


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    description: str
    build: Callable[[], Any]

    def load(self) -> Any:
        return self.build()


class Registry:
    """Name -> Fixture, with lazy construction."""

    def __init__(self, entries: list[Fixture]):
        self._entries = {f.name: f for f in entries}

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def __iter__(self):
        return iter(sorted(self._entries))

    def names(self, kind: str | None = None) -> list[str]:
        return sorted(n for n, f in self._entries.items() if kind is None or f.kind == kind)

    def entry(self, name: str) -> Fixture:
        try:
            return self._entries[name]
        except KeyError:
            raise FixtureError(f"unknown fixture {name!r}; known: {', '.join(sorted(self._entries))}") from None

    def get(self, name: str) -> Any:
        return self.entry(name).load()

    def describe(self) -> list[dict]:
        return [{"name": n, "kind": f.kind, "description": f.description} for n, f in sorted(self._entries.items())]


@lru_cache(maxsize=None)
def _omega(max_vertices: int, max_edges: int):
    return cats.omega_category(max_vertices, max_edges)


@lru_cache(maxsize=None)
def _gamma(n: int):
    return cats.gamma_category(n)


@lru_cache(maxsize=None)
def _injections(n: int):
    return cats.injection_category(n)


def _bundled() -> list[Fixture]:
    F = Fixture
    out = [
        F("fig-tree-4v", "tree", "four-vertex tree with a unary vertex and a stump", tr.figure_tree),
        F("eta", "tree", "the tree with one edge and no vertices", tr.eta),
        F("stump", "tree", "the tree with one vertex and no leaves", lambda: tr.corolla(0)),
        F("corolla-2", "tree", "one vertex with two leaves", lambda: tr.corolla(2)),
        F("corolla-3", "tree", "one vertex with three leaves", lambda: tr.corolla(3)),
        F("linear-2", "tree", "two unary vertices stacked", lambda: tr.linear_tree(2)),
        F("ass-operad", "operad", "non-unital associative operad, free symmetric action", AssociativeOperad),
        F("com-operad", "operad", "non-unital commutative operad, trivial symmetric action", CommutativeOperad),
        F("trivial-operad", "operad", "identities only", TrivialOperad),
        F("free-ass-x", "algebra", "free Ass-algebra on one generator, words of length <= 3",
          lambda: free_algebra(AssociativeOperad(), {"x": "c"}, 3)),
        F("free-ass-xy", "algebra", "free Ass-algebra on two generators, words of length <= 3",
          lambda: free_algebra(AssociativeOperad(), {"x": "c", "y": "c"}, 3)),
        F("free-ass-x-overflow", "algebra", "free Ass-algebra on one generator with an absorbing overflow element",
          lambda: free_algebra(AssociativeOperad(), {"x": "c"}, 3, overflow=True)),
        F("omega-3", "category", "trees with at most 3 vertices and 5 edges", lambda: _omega(3, 5)),
        F("gamma-4", "category", "finite sets of size <= 4 and partial maps", lambda: _gamma(4)),
        F("injections-4", "category", "finite sets of size <= 4 and injections", lambda: _injections(4)),
        F("mutant-omega-face-negative", "mutation", "a face declared negative",
          lambda: cats.omega_face_as_negative(_omega(3, 5))),
        F("mutant-omega-no-degeneracies", "mutation", "degeneracies removed from the negative class",
          lambda: cats.omega_without_degeneracies(_omega(3, 5))),
        F("mutant-gamma-injection-positive", "mutation", "a proper injection declared positive",
          lambda: cats.gamma_injection_as_positive(_gamma(4))),
        F("mutant-injections-all-negative", "mutation", "every injection declared negative",
          lambda: cats.injections_all_negative(_injections(4))),
        F("nonsplit-span", "mutation", "a span without sections, hence without absolute pushout",
          cats.nonsplit_span_category),
    ]
    for name in ("eta", "corolla-2", "linear-2"):
        out.append(F(f"rep-{name}", "presheaf", f"representable presheaf at {name} on omega-3",
                     _rep_builder(name)))
    return out


def _rep_builder(tree_name: str) -> Callable:
    def build():
        T, _ = tr.canonical_form(fixtures().get(tree_name))
        return representable(_omega(3, 5), T)
    return build


def _external(path: str) -> list[Fixture]:
    data = json.loads(Path(path).read_text())
    out = []
    for name, enc in sorted(data.get("trees", {}).items()):
        out.append(Fixture(name, "tree", f"tree loaded from {Path(path).name}",
                           lambda enc=enc: tr.Tree.from_json(enc)))
    for name, enc in sorted(data.get("operads", {}).items()):
        out.append(Fixture(name, "operad", f"operad loaded from {Path(path).name}",
                           lambda enc=enc: TableOperad.from_json(enc)))
    return out


def fixtures(path: str | None = None) -> Registry:
    """The fixture registry, extended by ``path`` or ``$DENDRON_FIXTURES``."""
    entries = _bundled()
    path = path or os.environ.get(ENV_VAR)
    if path:
        entries += _external(path)
    return Registry(entries)
