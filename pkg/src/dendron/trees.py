"""The category Omega of finite rooted trees.

A tree is stored as a set of named edges, a root and a parent map.  A
vertex is identified with its output edge; nullary vertices (stumps) are
edges flagged as *capped*, which is what distinguishes them from leaves.

Morphisms are edge maps.  An edge map S -> T is a morphism of Omega when,
for every vertex of S with output b and inputs a_1..a_n, the tree T has a
subtree with root f(b) whose leaves are exactly the n distinct edges
f(a_1)..f(a_n).  Such a subtree is an operation of the free coloured
operad generated by T, so valid edge maps are precisely operad maps.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

DEFAULT_MAX_EDGES = 12


class TreeError(ValueError):
    pass


class InvalidMorphism(ValueError):
    """Raised when an edge map is not a morphism of Omega.

    ``vertex`` names the first source vertex whose image subtree is
    missing, or is None when the edge map itself is malformed.
    """

    def __init__(self, message: str, vertex: str | None = None):
        super().__init__(message)
        self.vertex = vertex


class BoundExceeded(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Tree:
    edges: frozenset
    root: str
    parent: Mapping[str, str]
    capped: frozenset = frozenset()
    _key: tuple = field(init=False, repr=False)

    def __post_init__(self):
        edges = frozenset(self.edges)
        parent = dict(self.parent)
        capped = frozenset(self.capped)
        if not edges:
            raise TreeError("a tree has at least one edge")
        if self.root not in edges:
            raise TreeError(f"root {self.root!r} is not an edge")
        if set(parent) != edges - {self.root}:
            raise TreeError("parent must be defined exactly on the non-root edges")
        for e, p in parent.items():
            if p not in edges:
                raise TreeError(f"unknown parent {p!r} of {e!r}")
        for e in edges:
            seen = {e}
            while e != self.root:
                e = parent[e]
                if e in seen:
                    raise TreeError("parent relation has a cycle")
                seen.add(e)
        if not capped <= edges:
            raise TreeError("capped edges must be edges")
        for e in capped:
            if any(p == e for p in parent.values()):
                raise TreeError(f"capped edge {e!r} has children")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "capped", capped)
        key = (tuple(sorted(edges)), self.root, tuple(sorted(parent.items())), tuple(sorted(capped)))
        object.__setattr__(self, "_key", key)

    def __eq__(self, other):
        return isinstance(other, Tree) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return self._key < other._key

    def __repr__(self):
        return f"Tree({self.encoding})"

    @cached_property
    def children(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {e: [] for e in self.edges}
        for e, p in self.parent.items():
            out[p].append(e)
        return {e: tuple(sorted(cs)) for e, cs in out.items()}

    @cached_property
    def leaves(self) -> frozenset:
        return frozenset(e for e in self.edges if not self.children[e] and e not in self.capped)

    @cached_property
    def vertices(self) -> tuple[str, ...]:
        """Output edges of the vertices, sorted."""
        return tuple(sorted(e for e in self.edges if self.children[e] or e in self.capped))

    def is_vertex(self, e: str) -> bool:
        return bool(self.children[e]) or e in self.capped

    def inputs(self, v: str) -> tuple[str, ...]:
        return self.children[v]

    @property
    def degree(self) -> int:
        return len(self.vertices)

    @cached_property
    def inner_edges(self) -> tuple[str, ...]:
        return tuple(e for e in sorted(self.edges) if e != self.root and self.is_vertex(e))

    def path_to_root(self, e: str) -> list[str]:
        path = [e]
        while e != self.root:
            e = self.parent[e]
            path.append(e)
        return path

    def above(self, e: str) -> frozenset:
        """Edges in the subtree rooted at ``e``, including ``e``."""
        out, stack = set(), [e]
        while stack:
            x = stack.pop()
            out.add(x)
            stack.extend(self.children[x])
        return frozenset(out)

    def is_linear(self) -> bool:
        return all(len(self.children[v]) == 1 for v in self.vertices)

    # operations of the free operad on T -------------------------------------

    def has_operation(self, r: str, leaves: Iterable[str]) -> bool:
        """True when T has a subtree with root edge ``r`` and leaf set ``leaves``."""
        L = frozenset(leaves)
        if r in L:
            return L == {r}
        reached, stack = set(), [r]
        while stack:
            e = stack.pop()
            if e in L:
                reached.add(e)
                continue
            if e in self.leaves:
                return False
            stack.extend(self.children[e])
        return reached == L

    @cached_property
    def _cuts(self) -> dict[str, tuple[frozenset, ...]]:
        cuts: dict[str, tuple[frozenset, ...]] = {}
        # children before parents
        for e in sorted(self.edges, key=lambda x: -len(self.path_to_root(x))):
            if not self.is_vertex(e):
                continue
            options = []
            for c in self.children[e]:
                opts = [frozenset([c])]
                if self.is_vertex(c):
                    opts.extend(cuts[c])
                options.append(opts)
            combos = {frozenset().union(*choice) for choice in itertools.product(*options)}
            cuts[e] = tuple(sorted(combos, key=lambda s: (len(s), sorted(s))))
        return cuts

    def operation_leafsets(self, r: str, arity: int | None = None) -> tuple[frozenset, ...]:
        """All leaf sets of subtrees rooted at ``r`` (the unit subtree included)."""
        out = [frozenset([r])] + list(self._cuts.get(r, ()))
        if arity is not None:
            out = [L for L in out if len(L) == arity]
        seen, res = set(), []
        for L in out:
            if L not in seen:
                seen.add(L)
                res.append(L)
        return tuple(res)

    # canonical form -------------------------------------------------------

    @cached_property
    def _encodings(self) -> dict[str, str]:
        enc: dict[str, str] = {}
        for e in sorted(self.edges, key=lambda x: -len(self.path_to_root(x))):
            if e in self.capped:
                enc[e] = "*"
            elif not self.children[e]:
                enc[e] = "|"
            else:
                enc[e] = "(" + ",".join(sorted(enc[c] for c in self.children[e])) + ")"
        return enc

    @property
    def encoding(self) -> str:
        """Isomorphism invariant: equal iff the trees are isomorphic."""
        return self._encodings[self.root]

    def subtree_encoding(self, e: str) -> str:
        return self._encodings[e]

    # serialisation --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "edges": sorted(self.edges),
            "root": self.root,
            "parent": dict(sorted(self.parent.items())),
            "capped": sorted(self.capped),
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> "Tree":
        if isinstance(data, str):
            data = json.loads(data)
        edges = frozenset(data.get("edges") or ({data["root"]} | set(data["parent"]) | set(data["parent"].values())))
        return cls(edges, data["root"], dict(data.get("parent", {})), frozenset(data.get("capped", ())))

    def to_dot(self, name: str = "T") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for v in self.vertices:
            lines.append(f'  "v_{v}" [shape=point];')
        lines.append('  "root" [shape=none, label=""];')
        for e in sorted(self.edges):
            upper = f'"v_{e}"' if self.is_vertex(e) else f'"leaf_{e}"'
            if not self.is_vertex(e):
                lines.append(f'  "leaf_{e}" [shape=none, label=""];')
            lower = '"root"' if e == self.root else f'"v_{self.parent[e]}"'
            lines.append(f'  {upper} -> {lower} [label="{e}", dir=none];')
        lines.append("}")
        return "\n".join(lines)


# constructors ---------------------------------------------------------------

def make_tree(parent: Mapping[str, str], root: str, capped: Iterable[str] = ()) -> Tree:
    edges = frozenset(parent) | frozenset(parent.values()) | {root} | frozenset(capped)
    return Tree(edges, root, dict(parent), frozenset(capped))


def eta(name: str = "e0") -> Tree:
    return Tree(frozenset([name]), name, {})


def corolla(n: int, root: str = "r", leaf_prefix: str = "l") -> Tree:
    leaves = [f"{leaf_prefix}{i}" for i in range(1, n + 1)]
    return make_tree({l: root for l in leaves}, root, capped=[root] if n == 0 else [])


def linear_tree(n: int) -> Tree:
    """The linear tree with n vertices, i.e. the image of [n] in Omega."""
    names = [f"e{i}" for i in range(n + 1)]
    return make_tree({names[i + 1]: names[i] for i in range(n)}, names[0])


def from_encoding(enc: str, prefix: str = "e") -> Tree:
    """Build the canonical tree with a given encoding.

    Edges are labelled ``prefix0, prefix1, ...`` in preorder, children
    visited in increasing encoding order.
    """
    pos = 0

    def parse() -> tuple[str, list]:
        nonlocal pos
        c = enc[pos]
        if c in "|*":
            pos += 1
            return c, []
        assert c == "("
        pos += 1
        kids = []
        while True:
            kids.append(parse())
            if enc[pos] == ",":
                pos += 1
                continue
            assert enc[pos] == ")"
            pos += 1
            return "v", kids

    shape = parse()
    parent: dict[str, str] = {}
    capped: list[str] = []
    counter = itertools.count()

    def build(node, par):
        name = f"{prefix}{next(counter)}"
        if par is not None:
            parent[name] = par
        kind, kids = node
        if kind == "*":
            capped.append(name)
        for k in kids:
            build(k, name)
        return name

    root = build(shape, None)
    return make_tree(parent, root, capped)


def canonical_form(T: Tree) -> tuple[Tree, dict[str, str]]:
    """Canonical representative of the isomorphism class of T, and an
    isomorphism T -> canonical given as an edge relabelling."""
    canon = from_encoding(T.encoding)
    relabel: dict[str, str] = {}
    counter = itertools.count()

    def walk(e):
        relabel[e] = f"e{next(counter)}"
        for c in sorted(T.children[e], key=lambda x: (T.subtree_encoding(x), x)):
            walk(c)

    walk(T.root)
    return canon, relabel


def _shapes(n_edges: int) -> set[str]:
    return _SHAPES(n_edges)


def _shape_table():
    memo: dict[int, frozenset] = {}

    def shapes(n: int) -> frozenset:
        if n in memo:
            return memo[n]
        if n == 1:
            out = {"|", "*"}
        else:
            out = set()
            for parts in _partitions(n - 1):
                pools = [sorted(shapes(p)) for p in parts]
                for combo in itertools.product(*pools):
                    # only keep sorted child lists to avoid duplicates
                    out.add("(" + ",".join(sorted(combo)) + ")")
        memo[n] = frozenset(out)
        return memo[n]

    return shapes


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


_SHAPES = _shape_table()


def count_vertices(enc: str) -> int:
    return enc.count("(") + enc.count("*")


def all_trees(max_vertices: int, max_edges: int) -> list[Tree]:
    """Canonical representatives of all trees within the bounds, sorted by
    (vertices, edges, encoding)."""
    out = []
    for n in range(1, max_edges + 1):
        for enc in _shapes(n):
            if count_vertices(enc) <= max_vertices:
                out.append(from_encoding(enc))
    out.sort(key=lambda t: (t.degree, len(t.edges), t.encoding))
    return out


# morphisms --------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OmegaMorphism:
    source: Tree
    target: Tree
    mapping: tuple  # sorted ((edge, image), ...)
    _key: tuple = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(sorted(dict(self.mapping).items())))
        object.__setattr__(self, "_key", (self.source._key, self.target._key, self.mapping))

    def __eq__(self, other):
        return isinstance(other, OmegaMorphism) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return self._key < other._key

    def __repr__(self):
        body = ", ".join(f"{a}->{b}" for a, b in self.mapping)
        return f"<{self.source.encoding} -> {self.target.encoding}: {body}>"

    @cached_property
    def edge_map(self) -> dict[str, str]:
        return dict(self.mapping)

    def __call__(self, e: str) -> str:
        return self.edge_map[e]

    def image(self) -> frozenset:
        return frozenset(self.edge_map.values())

    def is_injective(self) -> bool:
        return len(self.image()) == len(self.source.edges)

    def is_surjective(self) -> bool:
        return self.image() == self.target.edges

    def is_iso(self) -> bool:
        # a bijective edge map can still cap a leaf, which raises degree
        return self.is_injective() and self.is_surjective() and self.source.degree == self.target.degree

    # faces are edge-injective; degeneracies are edge-surjective and hit
    # every stump of the target with a stump of the source
    def is_positive(self) -> bool:
        return self.is_injective()

    def is_negative(self) -> bool:
        if not self.is_surjective():
            return False
        hit = {self.edge_map[e] for e in self.source.capped}
        return self.target.capped <= hit

    def then(self, other: "OmegaMorphism") -> "OmegaMorphism":
        return compose(other, self)

    def inverse(self) -> "OmegaMorphism":
        if not self.is_iso():
            raise ValueError("not an isomorphism")
        return OmegaMorphism(self.target, self.source, tuple((b, a) for a, b in self.mapping))

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": self.target.to_json(), "map": dict(self.mapping)}

    @classmethod
    def from_json(cls, data: Mapping) -> "OmegaMorphism":
        return validate_morphism(Tree.from_json(data["source"]), Tree.from_json(data["target"]), data["map"])


def identity(T: Tree) -> OmegaMorphism:
    return OmegaMorphism(T, T, tuple((e, e) for e in T.edges))


def compose(g: OmegaMorphism, f: OmegaMorphism) -> OmegaMorphism:
    """g after f."""
    if f.target != g.source:
        raise ValueError("morphisms are not composable")
    gm = g.edge_map
    return OmegaMorphism(f.source, g.target, tuple((a, gm[b]) for a, b in f.mapping))


def morphism_failure(source: Tree, target: Tree, edge_map: Mapping[str, str]) -> str | None:
    """Return the first source vertex whose image is not a subtree of the
    target, or None when the edge map is a morphism."""
    for v in source.vertices:
        ins = source.inputs(v)
        imgs = [edge_map[a] for a in ins]
        if len(set(imgs)) != len(imgs):
            return v
        if not target.has_operation(edge_map[v], imgs):
            return v
    return None


def validate_morphism(source: Tree, target: Tree, edge_map: Mapping[str, str]) -> OmegaMorphism:
    edge_map = dict(edge_map)
    missing = source.edges - set(edge_map)
    if missing:
        raise InvalidMorphism(f"edge map is not total: missing {sorted(missing)}")
    unknown = set(edge_map) - source.edges
    if unknown:
        raise InvalidMorphism(f"unknown source edges {sorted(unknown)}")
    bad = {b for b in edge_map.values() if b not in target.edges}
    if bad:
        raise InvalidMorphism(f"unknown target edges {sorted(bad)}")
    v = morphism_failure(source, target, edge_map)
    if v is not None:
        ins = source.inputs(v)
        raise InvalidMorphism(
            f"vertex {v!r} with inputs {list(ins)} has no image subtree rooted at "
            f"{edge_map[v]!r} with leaves {[edge_map[a] for a in ins]}",
            vertex=v,
        )
    return OmegaMorphism(source, target, tuple(edge_map.items()))


def is_morphism(source: Tree, target: Tree, edge_map: Mapping[str, str]) -> bool:
    return morphism_failure(source, target, edge_map) is None


def enumerate_homs(S: Tree, T: Tree, max_edges: int = DEFAULT_MAX_EDGES) -> list[OmegaMorphism]:
    """All morphisms S -> T, sorted by their edge maps."""
    if len(S.edges) > max_edges or len(T.edges) > max_edges:
        raise BoundExceeded(f"trees exceed the {max_edges}-edge enumeration bound")
    out: list[OmegaMorphism] = []
    s_vertices = set(S.vertices)

    def extend(queue: list[str], emap: dict[str, str]):
        if not queue:
            out.append(OmegaMorphism(S, T, tuple(emap.items())))
            return
        b, rest = queue[0], queue[1:]
        ins = S.inputs(b)
        for L in T.operation_leafsets(emap[b], len(ins)):
            for perm in itertools.permutations(sorted(L)):
                new = dict(emap)
                new.update(zip(ins, perm))
                extend(rest + [a for a in ins if a in s_vertices], new)

    for r in sorted(T.edges):
        extend([S.root] if S.root in s_vertices else [], {S.root: r})
    out.sort()
    return out


def automorphisms(T: Tree) -> list[OmegaMorphism]:
    return [f for f in enumerate_homs(T, T) if f.is_iso()]


# elementary morphisms ---------------------------------------------------------

def _subtree(T: Tree, keep: frozenset, root: str, capped: Iterable[str] = (), uncap: Iterable[str] = ()) -> Tree:
    parent = {e: p for e, p in T.parent.items() if e in keep and e != root}
    cap = (set(T.capped) | set(capped)) - set(uncap)
    return Tree(keep, root, parent, frozenset(cap & keep))


def inner_face(T: Tree, e: str) -> OmegaMorphism:
    """Contract the inner edge e."""
    if e not in T.inner_edges:
        raise TreeError(f"{e!r} is not an inner edge")
    p = T.parent[e]
    parent = {x: (p if y == e else y) for x, y in T.parent.items() if x != e}
    capped = set(T.capped) - {e}
    if not any(y == p for y in parent.values()):
        capped.add(p)
    F = Tree(T.edges - {e}, T.root, parent, frozenset(capped))
    return OmegaMorphism(F, T, tuple((x, x) for x in F.edges))


def top_vertices(T: Tree) -> tuple[str, ...]:
    return tuple(v for v in T.vertices if all(c in T.leaves for c in T.children[v]))


def top_face(T: Tree, v: str) -> OmegaMorphism:
    """Remove the top vertex v; its output becomes a leaf."""
    if v not in top_vertices(T):
        raise TreeError(f"{v!r} is not a top vertex")
    keep = T.edges - set(T.children[v])
    F = _subtree(T, keep, T.root, uncap=[v])
    return OmegaMorphism(F, T, tuple((x, x) for x in F.edges))


def root_faces(T: Tree) -> list[OmegaMorphism]:
    """Faces removing the root vertex and keeping the subtree above one input."""
    if not T.is_vertex(T.root):
        return []
    kids = T.children[T.root]
    non_leaves = [c for c in kids if c not in T.leaves]
    if len(non_leaves) > 1:
        return []
    keeps = non_leaves if non_leaves else list(kids)
    out = []
    for c in keeps:
        F = _subtree(T, T.above(c), c)
        out.append(OmegaMorphism(F, T, tuple((x, x) for x in F.edges)))
    return out


def elementary_faces(T: Tree) -> list[OmegaMorphism]:
    faces = [inner_face(T, e) for e in T.inner_edges]
    faces += [top_face(T, v) for v in top_vertices(T)]
    for f in root_faces(T):
        if f not in faces:
            faces.append(f)
    return faces


def unary_vertices(T: Tree) -> tuple[str, ...]:
    return tuple(v for v in T.vertices if len(T.children[v]) == 1)


def degeneracy(T: Tree, v: str) -> OmegaMorphism:
    """Collapse the unary vertex v: its input edge is identified with v."""
    if v not in unary_vertices(T):
        raise TreeError(f"{v!r} is not a unary vertex")
    (a,) = T.children[v]
    parent = {x: (v if y == a else y) for x, y in T.parent.items() if x != a}
    capped = set(T.capped)
    if a in capped:
        capped.discard(a)
        capped.add(v)
    D = Tree(T.edges - {a}, T.root, parent, frozenset(capped))
    return OmegaMorphism(T, D, tuple((x, v if x == a else x) for x in T.edges))


def classify(f: OmegaMorphism) -> str:
    """Name the kind of an elementary-looking morphism.

    Returns one of ``iso``, ``degeneracy``, ``inner_face``, ``top_face``,
    ``root_face``, ``negative``, ``positive`` or ``mixed``; the last three
    are composites that are not elementary.
    """
    S, T = f.source, f.target
    if f.is_iso():
        return "iso"
    if f.is_negative():
        return "degeneracy" if len(S.edges) == len(T.edges) + 1 else "negative"
    if not f.is_injective():
        return "mixed"
    if len(T.edges) - len(S.edges) == 1 and T.degree - S.degree == 1:
        (missing,) = T.edges - f.image()
        if missing in T.inner_edges and f(S.root) == T.root:
            return "inner_face"
    if T.degree - S.degree == 1:
        return "top_face" if f(S.root) == T.root else "root_face"
    return "positive"


def reedy_factorize(f: OmegaMorphism) -> tuple[OmegaMorphism, OmegaMorphism]:
    """Factor f as (negative, positive) with f = positive . negative.

    The middle object is the image of f, with edges named as in the
    target; isomorphisms end up entirely in the negative part.
    """
    S, T = f.source, f.target
    fm = f.edge_map
    image = frozenset(fm.values())
    parent: dict[str, str] = {}
    capped: set[str] = set()
    for v in S.vertices:
        ins = S.inputs(v)
        if len(ins) == 1 and fm[ins[0]] == fm[v]:
            continue
        if not ins:
            capped.add(fm[v])
        for a in ins:
            parent[fm[a]] = fm[v]
    mid = Tree(image, fm[S.root], parent, frozenset(capped))
    negative = OmegaMorphism(S, mid, f.mapping)
    positive = OmegaMorphism(mid, T, tuple((e, e) for e in image))
    return negative, positive


def decompose(f: OmegaMorphism) -> list[tuple[str, OmegaMorphism]]:
    """Write f as a composite of elementary morphisms.

    Returns ``[(kind, g1), (kind, g2), ...]`` with f = gk . ... . g1 and
    kind one of ``degeneracy``, ``iso``, ``inner_face``, ``top_face``,
    ``root_face``.
    """
    negative, positive = reedy_factorize(f)
    steps: list[tuple[str, OmegaMorphism]] = []

    # degeneracies until the remaining map is bijective
    cur_tree, cur = negative.source, dict(negative.edge_map)
    while len(set(cur.values())) < len(cur_tree.edges):
        for v in unary_vertices(cur_tree):
            (a,) = cur_tree.children[v]
            if cur[a] == cur[v]:
                s = degeneracy(cur_tree, v)
                steps.append(("degeneracy", s))
                cur_tree = s.target
                cur = {e: cur[e] for e in cur_tree.edges}
                break
        else:
            raise AssertionError("surjective map without a collapsible vertex")
    iso = OmegaMorphism(cur_tree, negative.target, tuple(cur.items()))
    if not iso.is_iso():
        raise AssertionError("residual map is not an isomorphism")
    if iso != identity(cur_tree):
        steps.append(("iso", iso))

    # faces from the image up to the target
    mid = positive.source
    chain: list[tuple[str, OmegaMorphism]] = []
    ambient = positive.target
    while ambient != mid:
        for kind, face in labelled_faces(ambient):
            F = face.source
            if mid.edges <= F.edges and is_morphism(mid, F, {e: e for e in mid.edges}):
                chain.append((kind, face))
                ambient = F
                break
        else:
            raise AssertionError("no elementary face contains the image")
    if ambient != mid:
        raise AssertionError("face chain does not end at the image")
    steps.extend(reversed(chain))
    return steps


def labelled_faces(T: Tree) -> list[tuple[str, OmegaMorphism]]:
    """Every elementary face of T, tagged inner_face, top_face or root_face."""
    out = [("inner_face", inner_face(T, e)) for e in T.inner_edges]
    out += [("top_face", top_face(T, v)) for v in top_vertices(T)]
    out += [("root_face", g) for g in root_faces(T)]
    return out


def compose_all(steps: list[OmegaMorphism]) -> OmegaMorphism:
    out = steps[0]
    for g in steps[1:]:
        out = compose(g, out)
    return out


def figure_tree() -> Tree:
    """A four-vertex tree exhibiting every kind of elementary map.

    The root edge r has inputs a (a leaf) and e.  Above e sit the leaf b,
    the edge c whose unary vertex carries the leaf f, and the stump d."""
    return make_tree(
        {"a": "r", "e": "r", "b": "e", "c": "e", "d": "e", "f": "c"},
        "r",
        capped=["d"],
    )
