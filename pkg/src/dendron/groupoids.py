"""Finite groupoids given by explicit objects and morphisms."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .reedy import Check, UnionFind


@dataclass
class Groupoid:
    """A finite groupoid: ``homs[(a, b)]`` lists the morphisms a -> b."""

    name: str
    objects: tuple
    homs: dict
    compose_fn: Callable  # compose_fn(g, f) = g after f
    identity_fn: Callable
    inverse_fn: Callable
    src: Callable
    tgt: Callable

    def hom(self, a, b) -> tuple:
        return self.homs.get((a, b), ())

    def compose(self, g, f):
        return self.compose_fn(g, f)

    def identity(self, a):
        return self.identity_fn(a)

    def inverse(self, f):
        return self.inverse_fn(f)

    def automorphisms(self, a) -> tuple:
        return self.hom(a, a)

    def morphisms(self):
        for k in sorted(self.homs, key=repr):
            yield from self.homs[k]

    def iso_classes(self) -> list[list]:
        uf = UnionFind()
        for a in self.objects:
            uf.find(a)
        for (a, b), fs in self.homs.items():
            if fs:
                uf.union(a, b)
        index = {a: i for i, a in enumerate(self.objects)}
        classes = uf.classes()
        return sorted((sorted(c, key=index.get) for c in classes), key=lambda c: index[c[0]])

    def to_dot(self) -> str:
        ids = {a: f"o{i}" for i, a in enumerate(self.objects)}
        lines = [f'digraph "{self.name}" {{']
        for a in self.objects:
            lines.append(f'  {ids[a]} [label="{a}\\n|Aut|={len(self.automorphisms(a))}"];')
        for (a, b), fs in sorted(self.homs.items(), key=repr):
            if a != b and fs:
                lines.append(f'  {ids[a]} -> {ids[b]} [label="{len(fs)}"];')
        lines.append("}")
        return "\n".join(lines)


def check_groupoid(G: Groupoid) -> Check:
    """Identities, closure of composition, invertibility and associativity."""
    members = {k: set(v) for k, v in G.homs.items()}
    for a in G.objects:
        if G.identity(a) not in members.get((a, a), set()):
            return Check("groupoid", False, {"missing_identity": repr(a)})
    checks = 0
    for (a, b), fs in G.homs.items():
        for f in fs:
            if G.src(f) != a or G.tgt(f) != b:
                return Check("groupoid", False, {"endpoints": repr(f)})
            inv = G.inverse(f)
            if G.compose(inv, f) != G.identity(a) or G.compose(f, inv) != G.identity(b):
                return Check("groupoid", False, {"not_invertible": repr(f)})
            for c in G.objects:
                for g in G.hom(b, c):
                    gf = G.compose(g, f)
                    if gf not in members.get((a, c), set()):
                        return Check("groupoid", False, {"composite_missing": [repr(f), repr(g)]})
                    checks += 1
    return Check("groupoid", True, detail={"checks": checks})
