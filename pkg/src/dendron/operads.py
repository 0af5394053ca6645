"""Coloured symmetric operads in sets, their dendroidal nerves, algebras
and free algebras, and the dendroidal set G(A) attached to an algebra.

Operations are hashable values.  An operad provides, for an input colour
tuple and an output colour, the tuple of operations of that profile, plus
partial composition, units and the right action of permutations.

Conventions:

* ``compose_at(f, i, g)`` plugs g into the i-th input of f (0-based); the
  inputs of the result are those of f with the i-th replaced by those of g.
* ``permute(f, perm)`` is the operation g with inputs
  ``(c[perm[0]], ..., c[perm[n-1]])`` and g(y_0, ..., y_{n-1}) = f(x) where
  x[perm[j]] = y_j.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from . import trees as tr
from .order import ordered, sort_key
from .reedy import Check, FiniteCategory, Presheaf, PresheafMap
from .trees import OmegaMorphism, Tree

DEFAULT_ARITY = 4


class TruncationError(ValueError):
    """A product would leave the truncated carrier of a free algebra."""


class BoundError(ValueError):
    pass


def invert(perm: Sequence[int]) -> tuple:
    inv = [0] * len(perm)
    for j, p in enumerate(perm):
        inv[p] = j
    return tuple(inv)


class Operad:
    """Base class for coloured operads with tabulated operation sets."""

    name: str = "P"
    colours: tuple = ()
    max_arity: int = DEFAULT_ARITY
    # True when every operation of the operad has arity <= max_arity
    complete: bool = False

    def operations(self, inputs: tuple, output) -> tuple:
        raise NotImplementedError

    def compose_at(self, f, i: int, g):
        raise NotImplementedError

    def unit(self, c):
        raise NotImplementedError

    def permute(self, f, perm: Sequence[int]):
        raise NotImplementedError

    def profile(self, f) -> tuple[tuple, Any]:
        """(inputs, output) of an operation."""
        raise NotImplementedError

    def arity(self, f) -> int:
        return len(self.profile(f)[0])

    def compose_all(self, f, gs: Sequence):
        """Full composition f(g_1, ..., g_n), substituting from the right."""
        out = f
        for i in range(len(gs) - 1, -1, -1):
            out = self.compose_at(out, i, gs[i])
        return out

    def profiles(self, arity: int) -> Iterator[tuple[tuple, Any]]:
        for ins in itertools.product(self.colours, repeat=arity):
            for d in self.colours:
                if self.operations(ins, d):
                    yield ins, d

    def ops_with_output(self, n: int, d) -> list[tuple[tuple, Any]]:
        """All (inputs, operation) pairs of arity n and output colour d."""
        cache = self.__dict__.setdefault("_by_output", {})
        if (n, d) not in cache:
            cache[(n, d)] = [(ins, f) for ins, dd in self.profiles(n) if dd == d for f in self.operations(ins, d)]
        return cache[(n, d)]

    def all_operations(self, max_arity: int | None = None) -> Iterator:
        bound = self.max_arity if max_arity is None else max_arity
        for n in range(bound + 1):
            for ins, d in self.profiles(n):
                yield from self.operations(ins, d)


# one-coloured operads ----------------------------------------------------------------------

class AssociativeOperad(Operad):
    """Non-unital associative operad: P(n) = permutations of n letters for
    n >= 1 and no nullary operation.  The operation w acts as
    x_0 ... x_{n-1} -> x_{w[0]} x_{w[1]} ... x_{w[n-1]}."""

    def __init__(self, max_arity: int = DEFAULT_ARITY, colour: str = "c"):
        self.name = "Ass"
        self.colours = (colour,)
        self.max_arity = max_arity

    def operations(self, inputs, output):
        n = len(inputs)
        if output != self.colours[0] or any(c != output for c in inputs) or n == 0 or n > self.max_arity:
            return ()
        return tuple(itertools.permutations(range(n)))

    def profile(self, f):
        return (self.colours[0],) * len(f), self.colours[0]

    def compose_at(self, f, i, g):
        m = len(g)
        out = []
        for k in f:
            if k < i:
                out.append(k)
            elif k == i:
                out.extend(i + u for u in g)
            else:
                out.append(k + m - 1)
        return tuple(out)

    def unit(self, c):
        return (0,)

    def permute(self, f, perm):
        inv = invert(perm)
        return tuple(inv[k] for k in f)


class CommutativeOperad(Operad):
    """Non-unital commutative operad: one operation of each arity n >= 1."""

    def __init__(self, max_arity: int = DEFAULT_ARITY, colour: str = "c"):
        self.name = "Com"
        self.colours = (colour,)
        self.max_arity = max_arity

    def operations(self, inputs, output):
        n = len(inputs)
        if output != self.colours[0] or any(c != output for c in inputs) or n == 0 or n > self.max_arity:
            return ()
        return (n,)

    def profile(self, f):
        return (self.colours[0],) * f, self.colours[0]

    def compose_at(self, f, i, g):
        return f + g - 1

    def unit(self, c):
        return 1

    def permute(self, f, perm):
        return f


class TrivialOperad(Operad):
    """Only identities, one per colour."""

    def __init__(self, colours: Iterable = ("c",)):
        self.name = "Triv"
        self.colours = tuple(colours)
        self.max_arity = 1
        self.complete = True

    def operations(self, inputs, output):
        return (("id", output),) if inputs == (output,) else ()

    def profile(self, f):
        return (f[1],), f[1]

    def compose_at(self, f, i, g):
        return f

    def unit(self, c):
        return ("id", c)

    def permute(self, f, perm):
        return f


class TreeOperad(Operad):
    """The operad freely generated by the vertices of a tree.

    Colours are edges; an operation is a subtree, recorded as
    (root edge, ordered tuple of leaf edges).
    """

    def __init__(self, T: Tree):
        self.tree = T
        self.name = f"Omega({T.encoding})"
        self.colours = tuple(sorted(T.edges))
        self.max_arity = max([len(T.edges)] + [1])
        self.complete = True

    def operations(self, inputs, output):
        if len(set(inputs)) != len(inputs):
            return ()
        if output not in self.tree.edges or not set(inputs) <= self.tree.edges:
            return ()
        return ((output, tuple(inputs)),) if self.tree.has_operation(output, inputs) else ()

    def profile(self, f):
        return f[1], f[0]

    def ops_with_output(self, n, d):
        out = []
        for L in self.tree.operation_leafsets(d, n):
            for ins in itertools.permutations(sorted(L)):
                out.append((ins, (d, ins)))
        return out

    def compose_at(self, f, i, g):
        d, ins = f
        if ins[i] != g[0]:
            raise ValueError("colour mismatch in composition")
        return (d, ins[:i] + g[1] + ins[i + 1:])

    def unit(self, c):
        return (c, (c,))

    def permute(self, f, perm):
        d, ins = f
        return (d, tuple(ins[p] for p in perm))


def tree_operad(T: Tree) -> TreeOperad:
    return TreeOperad(T)


class TableOperad(Operad):
    """An operad given by explicit tables, as read from JSON.

    ``ops`` maps (inputs, output) to a tuple of operation names,
    ``comp`` maps (f, i, g) to f o_i g, ``perm`` maps (f, perm) to the
    permuted operation, and ``units`` maps colours to unit names.
    """

    def __init__(self, name, colours, ops, comp, perm, units, max_arity):
        self.name = name
        self.colours = tuple(colours)
        self._ops = {k: tuple(v) for k, v in ops.items()}
        self._comp = dict(comp)
        self._perm = dict(perm)
        self._units = dict(units)
        self.max_arity = max_arity
        self._profile = {f: prof for prof, fs in self._ops.items() for f in fs}

    def operations(self, inputs, output):
        return self._ops.get((tuple(inputs), output), ())

    def profile(self, f):
        return self._profile[f]

    def compose_at(self, f, i, g):
        key = (f, i, g)
        if key not in self._comp:
            raise BoundError(f"composite {f} o_{i} {g} is not tabulated")
        return self._comp[key]

    def unit(self, c):
        return self._units[c]

    def permute(self, f, perm):
        perm = tuple(perm)
        if perm == tuple(range(len(perm))):
            return f
        return self._perm[(f, perm)]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "colours": list(self.colours),
            "max_arity": self.max_arity,
            "operations": [{"inputs": list(k[0]), "output": k[1], "names": list(v)} for k, v in sorted(self._ops.items(), key=lambda kv: repr(kv[0]))],
            "units": dict(sorted(self._units.items())),
            "compositions": [[f, i, g, h] for (f, i, g), h in sorted(self._comp.items(), key=repr)],
            "permutations": [[f, list(p), g] for (f, p), g in sorted(self._perm.items(), key=repr)],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> "TableOperad":
        if isinstance(data, str):
            data = json.loads(data)
        ops = {(tuple(o["inputs"]), o["output"]): tuple(o["names"]) for o in data["operations"]}
        comp = {(f, int(i), g): h for f, i, g, h in data.get("compositions", [])}
        perm = {(f, tuple(p)): g for f, p, g in data.get("permutations", [])}
        return cls(data.get("name", "P"), data["colours"], ops, comp, perm, data["units"], int(data.get("max_arity", DEFAULT_ARITY)))


def tabulate_operad(P: Operad, max_arity: int | None = None) -> TableOperad:
    """Freeze an operad into tables up to an arity bound, naming operations
    by their repr."""
    bound = P.max_arity if max_arity is None else max_arity
    ops, names = {}, {}
    for n in range(bound + 1):
        for ins, d in P.profiles(n):
            fs = P.operations(ins, d)
            ops[(ins, d)] = tuple(repr(f) for f in fs)
            for f in fs:
                names[repr(f)] = f
    comp, perm = {}, {}
    for fn, f in names.items():
        fins, _ = P.profile(f)
        for i, c in enumerate(fins):
            for gn, g in names.items():
                gins, gout = P.profile(g)
                if gout == c and len(fins) + len(gins) - 1 <= bound:
                    comp[(fn, i, gn)] = repr(P.compose_at(f, i, g))
        for p in itertools.permutations(range(len(fins))):
            if p != tuple(range(len(fins))):
                perm[(fn, p)] = repr(P.permute(f, p))
    units = {c: repr(P.unit(c)) for c in P.colours}
    return TableOperad(P.name, P.colours, ops, comp, perm, units, bound)


def check_operad_axioms(P: Operad, max_arity: int = 3) -> Check:
    """Units, associativity of partial composition and equivariance, on all
    in-bound composites."""
    ops = list(P.all_operations(max_arity))
    for f in ops:
        ins, d = P.profile(f)
        if P.compose_at(P.unit(d), 0, f) != f:
            return Check("operad_axioms", False, {"left_unit": repr(f)})
        for i, c in enumerate(ins):
            if P.compose_at(f, i, P.unit(c)) != f:
                return Check("operad_axioms", False, {"right_unit": repr(f), "slot": i})
    n_checks = 0
    for f in ops:
        fins, _ = P.profile(f)
        for i, c in enumerate(fins):
            for g in ops:
                gins, gout = P.profile(g)
                if gout != c or len(fins) + len(gins) - 1 > max_arity:
                    continue
                fg = P.compose_at(f, i, g)
                for j, b in enumerate(gins):
                    for h in ops:
                        hins, hout = P.profile(h)
                        if hout != b or len(fins) + len(gins) + len(hins) - 2 > max_arity:
                            continue
                        if P.compose_at(fg, i + j, h) != P.compose_at(f, i, P.compose_at(g, j, h)):
                            return Check("operad_axioms", False, {"sequential": [repr(f), i, repr(g), j, repr(h)]})
                        n_checks += 1
    for f in ops:
        fins, _ = P.profile(f)
        n = len(fins)
        for p in itertools.permutations(range(n)):
            for q in itertools.permutations(range(n)):
                # acting by p then q equals acting by the composite p[q[j]]
                pq = tuple(p[q[j]] for j in range(n))
                if P.permute(P.permute(f, p), q) != P.permute(f, pq):
                    return Check("operad_axioms", False, {"action": [repr(f), p, q]})
                n_checks += 1
    return Check("operad_axioms", True, detail={"checks": n_checks})


def is_sigma_free(P: Operad, max_arity: int | None = None) -> Check:
    """Permutations act freely on operations of each arity."""
    bound = P.max_arity if max_arity is None else max_arity
    for f in P.all_operations(bound):
        n = P.arity(f)
        for p in itertools.permutations(range(n)):
            if p != tuple(range(n)) and P.permute(f, p) == f:
                return Check("sigma_free", False, {"operation": repr(f), "permutation": list(p)})
    return Check("sigma_free", True)


# dendroidal nerve ----------------------------------------------------------------------

@dataclass(frozen=True)
class NerveElement:
    """An operad map from the tree operad: edge colours and vertex labels.

    The inputs of each vertex are taken in sorted edge-name order.
    """

    colours: tuple  # ((edge, colour), ...)
    ops: tuple  # ((vertex, operation), ...)

    def colour(self, e):
        return dict(self.colours)[e]

    def op(self, v):
        return dict(self.ops)[v]

    def to_json(self):
        return {"colours": {e: c for e, c in self.colours}, "ops": {v: repr(o) for v, o in self.ops}}


def nerve_elements(P: Operad, T: Tree) -> list[NerveElement]:
    """All operad maps from the tree operad of T to P, colouring the tree
    from the root upwards one vertex at a time."""
    edges = sorted(T.edges)
    order = sorted(T.vertices, key=lambda v: (len(T.path_to_root(v)), v))
    out = []
    colour: dict = {}
    label: dict = {}

    def search(k):
        if k == len(order):
            out.append(NerveElement(tuple((e, colour[e]) for e in edges), tuple((v, label[v]) for v in T.vertices)))
            return
        v = order[k]
        ins_edges = T.inputs(v)
        for ins, f in P.ops_with_output(len(ins_edges), colour[v]):
            for a, c in zip(ins_edges, ins):
                colour[a] = c
            label[v] = f
            search(k + 1)
        for a in ins_edges:
            colour.pop(a, None)

    for c in P.colours:
        colour[T.root] = c
        search(0)
    return out


def evaluate_subtree(P: Operad, T: Tree, xi: NerveElement, root: str, leaves: frozenset) -> tuple[Any, list]:
    """The composite operation of the subtree of T at ``root`` with the
    given leaves, and the order of its inputs."""
    if root in leaves:
        return P.unit(xi.colour(root)), [root]
    op = xi.op(root)
    kids = T.children[root]
    order_parts = []
    subs = []
    for c in kids:
        g, order = evaluate_subtree(P, T, xi, c, leaves)
        subs.append(g)
        order_parts.append(order)
    return P.compose_all(op, subs), [e for part in order_parts for e in part]


def restrict_nerve(P: Operad, alpha: OmegaMorphism, xi: NerveElement) -> NerveElement:
    """alpha^* on the nerve: precompose the operad map with Omega(alpha)."""
    S, T = alpha.source, alpha.target
    cols = dict(xi.colours)
    colours = tuple((e, cols[alpha(e)]) for e in sorted(S.edges))
    ops = []
    for v in S.vertices:
        ins = S.inputs(v)
        images = [alpha(a) for a in ins]
        g, order = evaluate_subtree(P, T, xi, alpha(v), frozenset(images))
        perm = [order.index(b) for b in images]
        ops.append((v, P.permute(g, perm)))
    return NerveElement(colours, tuple(ops))


class DendroidalNerve(Presheaf):
    def __init__(self, P: Operad, omega: FiniteCategory):
        self.P = P
        self.category = omega
        self.name = f"N{P.name}"
        self._values: dict = {}
        self._acts: dict = {}

    def value(self, T):
        if T not in self._values:
            self._values[T] = tuple(nerve_elements(self.P, T))
        return self._values[T]

    def act(self, alpha, xi):
        key = (alpha, xi)
        hit = self._acts.get(key)
        if hit is None:
            hit = self._acts[key] = restrict_nerve(self.P, alpha, xi)
        return hit


def dendroidal_nerve(P: Operad, omega: FiniteCategory) -> DendroidalNerve:
    need = max((len(T.inputs(v)) for T in omega.objects for v in T.vertices), default=0)
    if need > P.max_arity and not P.complete:
        raise BoundError(f"trees need arity {need} but {P.name} is tabulated to arity {P.max_arity}")
    return DendroidalNerve(P, omega)


def nerve_to_edge_map(xi: NerveElement, source: Tree, target: Tree) -> OmegaMorphism:
    """Read an element of the nerve of a tree operad as a tree morphism."""
    return OmegaMorphism(source, target, xi.colours)


def check_nerve_yoneda(omega: FiniteCategory, targets: Iterable[Tree] | None = None) -> Check:
    """The nerve of the operad of a tree S agrees with the representable at S.

    At every T, dendrices of N(Omega(S)) read as edge maps must be exactly
    the tree morphisms T -> S found by direct enumeration, and restriction
    along every alpha: R -> T must match precomposition.
    """
    targets = list(targets) if targets is not None else list(omega.objects)
    compared = 0
    for S in targets:
        P = TreeOperad(S)
        for T in omega.objects:
            by_nerve = {}
            for xi in nerve_elements(P, T):
                by_nerve[nerve_to_edge_map(xi, T, S)] = xi
            direct = set(tr.enumerate_homs(T, S))
            if len(by_nerve) != len(nerve_elements(P, T)) or set(by_nerve) != direct:
                return Check("nerve_yoneda", False,
                             {"representing": S.encoding, "tree": T.encoding,
                              "nerve": len(by_nerve), "homs": len(direct)})
            for alpha in omega.into(T):
                R = alpha.source
                for f, xi in by_nerve.items():
                    if nerve_to_edge_map(restrict_nerve(P, alpha, xi), R, S) != tr.compose(f, alpha):
                        return Check("nerve_yoneda", False,
                                     {"representing": S.encoding, "restriction": repr(alpha), "map": repr(f)})
            compared += 1
    return Check("nerve_yoneda", True, detail={"pairs": compared})


# algebras ------------------------------------------------------------------------------

class OperadAlgebra:
    """A P-algebra: carriers per colour and a multiplication."""

    def __init__(self, P: Operad, carrier: Mapping[Any, Sequence], multiply: Callable, name: str = "A"):
        self.P = P
        self._carrier = {c: tuple(v) for c, v in carrier.items()}
        self._multiply = multiply
        self.name = name

    def carrier(self, c) -> tuple:
        return self._carrier.get(c, ())

    def multiply(self, f, args: Sequence):
        return self._multiply(f, tuple(args))

    def elements(self) -> list:
        return [(c, x) for c in self.P.colours for x in self.carrier(c)]


def terminal_algebra(P: Operad) -> OperadAlgebra:
    return OperadAlgebra(P, {c: ("*",) for c in P.colours}, lambda f, args: "*", "terminal")


@dataclass(frozen=True)
class Term:
    """An element of a free algebra: an operation applied to generators,
    stored as the smallest representative of its symmetric-group orbit."""

    op: Any
    generators: tuple

    def __repr__(self):
        return f"{self.op!r}{list(self.generators)}"

    def to_json(self):
        return {"op": repr(self.op), "generators": list(self.generators)}


OVERFLOW = "overflow"


class FreeAlgebra(OperadAlgebra):
    """The free P-algebra on coloured generators, truncated to terms with at
    most ``max_size`` generators.

    With ``overflow=False`` a product that would exceed the bound raises
    TruncationError.  With ``overflow=True`` each colour gets one extra
    absorbing element standing for all larger terms; this is the quotient
    of the free algebra by the ideal of large terms, so it is a genuine
    algebra.
    """

    def __init__(self, P: Operad, generators: Mapping[Any, Any], max_size: int, overflow: bool = False):
        self.P = P
        self.generators = dict(generators)
        self.max_size = max_size
        self.overflow = overflow
        self.name = f"Free_{P.name}({','.join(map(str, ordered(self.generators)))})"
        gens = ordered(self.generators)
        carrier: dict = {c: [] for c in P.colours}
        seen = set()
        # operations above the tabulated arity do not exist in the table
        for n in range(min(max_size, P.max_arity) + 1):
            for us in itertools.product(gens, repeat=n):
                ins = tuple(self.generators[u] for u in us)
                for d in P.colours:
                    for f in P.operations(ins, d):
                        t = self.normalize(f, us)
                        if t not in seen:
                            seen.add(t)
                            carrier[d].append(t)
        for d in P.colours:
            carrier[d].sort(key=lambda t: (len(t.generators), repr(t)))
            if overflow:
                carrier[d].append((OVERFLOW, d))
        self._carrier = {c: tuple(v) for c, v in carrier.items()}

    def normalize(self, f, us: Sequence) -> Term:
        """Orbit representative of (f, us) under (f, u) ~ (f.p, u.p)."""
        n = len(us)
        best = None
        for p in itertools.permutations(range(n)):
            cand = Term(self.P.permute(f, p), tuple(us[k] for k in p))
            key = (repr(cand.generators), repr(cand.op))
            if best is None or key < best[0]:
                best = (key, cand)
        return best[1] if best else Term(f, ())

    def generator(self, u) -> Term:
        return Term(self.P.unit(self.generators[u]), (u,))

    def _multiply(self, f, args):
        if any(isinstance(a, tuple) and len(a) == 2 and a[0] == OVERFLOW for a in args):
            return (OVERFLOW, self.P.profile(f)[1])
        size = sum(len(a.generators) for a in args)
        if size > self.max_size:
            if self.overflow:
                return (OVERFLOW, self.P.profile(f)[1])
            raise TruncationError(f"product has {size} generators, bound is {self.max_size}")
        op = self.P.compose_all(f, [a.op for a in args])
        return self.normalize(op, [u for a in args for u in a.generators])


def free_algebra(P: Operad, generators: Mapping[Any, Any], max_size: int, overflow: bool = False) -> FreeAlgebra:
    return FreeAlgebra(P, generators, max_size, overflow)


def check_algebra_axioms(A: OperadAlgebra, max_arity: int = 3) -> Check:
    """Unit, associativity and equivariance of the multiplication on all
    in-bound operations and elements."""
    P = A.P
    ops = list(P.all_operations(max_arity))
    for c in P.colours:
        for x in A.carrier(c):
            if A.multiply(P.unit(c), [x]) != x:
                return Check("algebra_axioms", False, {"unit": [c, repr(x)]})
    checks = 0
    for f in ops:
        fins, d = P.profile(f)
        for i, c in enumerate(fins):
            for g in ops:
                gins, gout = P.profile(g)
                if gout != c or len(fins) + len(gins) - 1 > max_arity:
                    continue
                fg = P.compose_at(f, i, g)
                pools = [A.carrier(b) for b in fins[:i]] + [A.carrier(b) for b in gins] + [A.carrier(b) for b in fins[i + 1:]]
                for xs in itertools.product(*pools):
                    inner = A.multiply(g, xs[i:i + len(gins)])
                    lhs = A.multiply(fg, xs)
                    rhs = A.multiply(f, list(xs[:i]) + [inner] + list(xs[i + len(gins):]))
                    if lhs != rhs:
                        return Check("algebra_axioms", False, {"associativity": [repr(f), i, repr(g), repr(xs)]})
                    checks += 1
        for p in itertools.permutations(range(len(fins))):
            for xs in itertools.product(*[A.carrier(b) for b in fins]):
                ys = [xs[p[j]] for j in range(len(fins))]
                if A.multiply(P.permute(f, p), ys) != A.multiply(f, xs):
                    return Check("algebra_axioms", False, {"equivariance": [repr(f), list(p)]})
                checks += 1
    return Check("algebra_axioms", True, detail={"checks": checks})


# G(A) --------------------------------------------------------------------------------------

@dataclass(frozen=True)
class LabelledDendrex:
    """An element of G(A): a nerve element with an algebra element on each edge."""

    xi: NerveElement
    labels: tuple  # ((edge, element), ...)

    def to_json(self):
        return {"xi": self.xi.to_json(), "labels": {e: repr(x) for e, x in self.labels}}


def edge_labels_from_leaves(A: OperadAlgebra, T: Tree, xi: NerveElement, leaf_labels: Mapping) -> dict:
    """Propagate leaf labels down the tree through the vertex operations."""
    labels = dict(leaf_labels)

    def value(e):
        if e not in labels:
            labels[e] = A.multiply(xi.op(e), [value(a) for a in T.inputs(e)])
        return labels[e]

    for e in T.edges:
        value(e)
    return labels


def g_values_by_w_nerve(A: OperadAlgebra, T: Tree, base: Sequence[NerveElement]) -> list[LabelledDendrex]:
    """Elements of the nerve of the operad W at T, by brute force over all
    edge labellings: every vertex must satisfy y = m(z, x_1, ..., x_n)."""
    edges = sorted(T.edges)
    out = []
    for xi in base:
        pools = [A.carrier(xi.colour(e)) for e in edges]
        for labels in itertools.product(*pools):
            lab = dict(zip(edges, labels))
            if all(lab[v] == A.multiply(xi.op(v), [lab[a] for a in T.inputs(v)]) for v in T.vertices):
                out.append(LabelledDendrex(xi, tuple(zip(edges, labels))))
    return out


def g_values_by_pullback(A: OperadAlgebra, T: Tree, base: Sequence[NerveElement]) -> list[tuple]:
    """Pairs (xi, leaf labelling) with leaf labels of the leaf colours."""
    leaves = sorted(T.leaves)
    out = []
    for xi in base:
        pools = [A.carrier(xi.colour(l)) for l in leaves]
        for labels in itertools.product(*pools):
            out.append((xi, tuple(zip(leaves, labels))))
    return out


def check_g_identity(A: OperadAlgebra, NP: DendroidalNerve, trees: Iterable[Tree] | None = None) -> Check:
    """The brute-force W-nerve and the pullback description agree: the
    restriction to leaves is a bijection between them at every tree."""
    trees = list(trees) if trees is not None else list(NP.category.objects)
    sizes = []
    for T in trees:
        base = NP.value(T)
        w = g_values_by_w_nerve(A, T, base)
        pb = g_values_by_pullback(A, T, base)
        leaves = sorted(T.leaves)
        restricted = [(d.xi, tuple((l, dict(d.labels)[l]) for l in leaves)) for d in w]
        if len(set(restricted)) != len(restricted) or set(restricted) != set(pb):
            return Check("g_identity", False, {"tree": T.encoding, "w_nerve": len(w), "pullback": len(pb)})
        # and the inverse direction rebuilds the W-labels
        w_set = set(w)
        for xi, lab in pb:
            full = edge_labels_from_leaves(A, T, xi, dict(lab))
            if LabelledDendrex(xi, tuple((e, full[e]) for e in sorted(T.edges))) not in w_set:
                return Check("g_identity", False, {"tree": T.encoding, "unmatched": repr(lab)})
        sizes.append(len(w))
    return Check("g_identity", True, detail={"trees": len(trees), "elements": sum(sizes)})


class GAlgebraPresheaf(Presheaf):
    """The dendroidal set G(A) over the nerve of P, by the W-nerve route."""

    def __init__(self, A: OperadAlgebra, NP: DendroidalNerve):
        self.A = A
        self.NP = NP
        self.category = NP.category
        self.name = f"G({A.name})"
        self._values: dict = {}

    def value(self, T):
        if T not in self._values:
            self._values[T] = tuple(g_values_by_w_nerve(self.A, T, self.NP.value(T)))
        return self._values[T]

    def act(self, alpha, d: LabelledDendrex):
        lab = dict(d.labels)
        xi = self.NP.act(alpha, d.xi)
        return LabelledDendrex(xi, tuple((e, lab[alpha(e)]) for e in sorted(alpha.source.edges)))

    def projection(self) -> PresheafMap:
        return PresheafMap(self, self.NP, lambda T, d: d.xi)


def underline_g(A: OperadAlgebra, NP: DendroidalNerve) -> GAlgebraPresheaf:
    return GAlgebraPresheaf(A, NP)


# covariant fibrations --------------------------------------------------------------------

def corolla_objects(omega: FiniteCategory) -> list[Tree]:
    return [T for T in omega.objects if T.degree == 1]


def leaf_maps(T: Tree) -> list[OmegaMorphism]:
    """The maps eta -> T selecting the leaves, in sorted leaf order."""
    eta = tr.eta("e0")
    return [OmegaMorphism(eta, T, (("e0", l),)) for l in sorted(T.leaves)]


def check_strict_covariant_fibration(f: PresheafMap, base_segal: Check | None = None,
                                     trees: Iterable[Tree] | None = None) -> Check:
    """At each corolla C, X(C) -> B(C) x_{B(eta)^leaves} X(eta)^leaves is a
    bijection.  The base must satisfy the strict Segal condition."""
    from .presheaves import check_strict_segal

    X, B = f.source, f.target
    omega = X.category
    if base_segal is None:
        base_segal = check_strict_segal(B)
    if not base_segal.passed:
        raise ValueError(f"base is not strictly Segal: {base_segal.witness}")
    eta = next(T for T in omega.objects if T.degree == 0 and len(T.edges) == 1 and not T.capped)
    trees = list(trees) if trees is not None else corolla_objects(omega)
    counts = {}
    for T in trees:
        legs = [OmegaMorphism(eta, T, (("e0", l),)) for l in sorted(T.leaves)]
        Xeta = X.value(eta)
        pullback = set()
        for b in B.value(T):
            targets = [B.act(leg, b) for leg in legs]
            pools = [[x for x in Xeta if f(eta, x) == t] for t in targets]
            for xs in itertools.product(*pools):
                pullback.add((b, xs))
        images = [(f(T, x), tuple(X.act(leg, x) for leg in legs)) for x in X.value(T)]
        counts[T.encoding] = [len(images), len(pullback)]
        if len(set(images)) != len(images) or set(images) != pullback:
            return Check("covariant_corollas", False,
                         {"corolla": T.encoding, "source": len(images), "pullback": len(pullback)},
                         {"counts": counts})
    return Check("covariant_corollas", True, detail={"counts": counts})


def leaf_generators(T: Tree, xi: NerveElement) -> dict:
    """Generators of the free algebra attached to a dendrex xi: one per leaf,
    coloured by the colour xi gives that leaf."""
    return {l: xi.colour(l) for l in sorted(T.leaves)}


def unit_dendrex(NP: DendroidalNerve, T: Tree, xi: NerveElement, F: FreeAlgebra | None = None) -> LabelledDendrex:
    """The image of the identity dendrex of T under the unit map into
    G(Free(leaves of T)): each edge is labelled by the evaluation of the
    maximal subtree above it, with the leaves as generators."""
    if F is None:
        F = free_algebra(NP.P, leaf_generators(T, xi), len(T.leaves), overflow=True)
    labels = edge_labels_from_leaves(F, T, xi, {l: F.generator(l) for l in T.leaves})
    return LabelledDendrex(xi, tuple((e, labels[e]) for e in sorted(T.edges)))


def check_unit_over_nerve(NP: DendroidalNerve, T: Tree) -> Check:
    """For every xi in NP(T), the unit dendrex lies in G(Free) at T and
    projects back to xi."""
    for xi in NP.value(T):
        F = free_algebra(NP.P, leaf_generators(T, xi), len(T.leaves), overflow=True)
        d = unit_dendrex(NP, T, xi, F)
        lab = dict(d.labels)
        in_carriers = all(lab[e] in F.carrier(xi.colour(e)) for e in T.edges)
        equations = all(lab[v] == F.multiply(xi.op(v), [lab[a] for a in T.inputs(v)]) for v in T.vertices)
        if d.xi != xi or not (in_carriers and equations):
            return Check("unit_over_nerve", False, {"tree": T.encoding, "xi": xi.to_json()})
    return Check("unit_over_nerve", True, detail={"tree": T.encoding, "dendrices": len(NP.value(T))})


def leaf_inclusion_problem(G: GAlgebraPresheaf, T: Tree, xi: NerveElement, leaf_labels: Mapping):
    """The lifting square for the inclusion of the leaves of T into Omega[T]
    against G(A) -> NP, with bottom map xi and top map given by leaf labels."""
    from .reedy import LiftingProblem, SubPresheaf, representable

    omega = G.category
    rep = representable(omega, T)
    leaves = frozenset(T.leaves)
    sub = SubPresheaf(rep, lambda o, a: o.degree == 0 and len(o.edges) == 1 and not o.capped and a("e0") in leaves,
                      f"leaves[{T.encoding}]")
    i = PresheafMap(sub, rep, lambda o, a: a)
    p = G.projection()
    lab = dict(leaf_labels)
    NP = G.NP

    def top(o, a):
        x = NP.act(a, xi)
        return LabelledDendrex(x, (("e0", lab[a("e0")]),))

    f = PresheafMap(sub, G, top)
    g = PresheafMap(rep, NP, lambda o, a: NP.act(a, xi))
    return LiftingProblem(i, p, f, g)
