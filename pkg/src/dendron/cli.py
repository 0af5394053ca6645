"""Command-line interface.

Exit status: 0 when every verdict passes, 1 when some check fails, 2 on
usage errors (bad arguments, unknown suite or fixture, malformed input).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bpq
from . import categories as cats
from . import trees as tr
from .finsets import PartialMap, compose_partial, gamma_class, leaf_class, leaf_functor, reedy_factorize_gamma, skeleton
from .fixtures import FixtureError, fixtures
from .operads import (
    BoundError,
    Operad,
    TableOperad,
    check_g_identity,
    check_strict_covariant_fibration,
    dendroidal_nerve,
    free_algebra,
    is_sigma_free,
    leaf_inclusion_problem,
    nerve_elements,
    underline_g,
)
from .order import jsonable
from .presheaves import boundary_horn_core, check_strict_segal, lambda_shriek
from .reedy import (Check, check_reedy_axioms, latching_object, matching_object, presheaf_from_json, presheaf_to_json,
                    representable, solve_lifting)
from .slices import attachment_groupoid, attachments, check_projection_bijective_at_leafless, slice_construction
from .suites import SUITES, Bounds, BoundsError, UnknownSuite, combined_json, parse_bounds, run_suite


class UsageError(Exception):
    pass


# input parsing --------------------------------------------------------------------------------

def _read_json_arg(arg: str):
    if arg.lstrip().startswith(("{", "[")):
        return json.loads(arg)
    path = Path(arg)
    if path.suffix == ".json" or path.is_file():
        return json.loads(path.read_text())
    return None


def load_tree(arg: str) -> tr.Tree:
    """A tree from a fixture name, a JSON object or file, or an encoding like ``((|),|)``."""
    reg = fixtures()
    if arg in reg and reg.entry(arg).kind == "tree":
        return reg.get(arg)
    try:
        data = _read_json_arg(arg)
        if data is not None:
            return tr.Tree.from_json(data)
        return tr.from_encoding(arg)
    except Exception as exc:  # malformed input of any shape is a usage error
        raise UsageError(f"cannot read a tree from {arg!r}: {type(exc).__name__} {exc}") from None


def load_partial_map(arg: str) -> PartialMap:
    try:
        data = _read_json_arg(arg)
        if data is None:
            raise ValueError("expected JSON")
        return PartialMap.from_json(data)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"cannot read a partial map from {arg!r}: {exc}") from None


def load_operad(arg: str) -> Operad:
    reg = fixtures()
    if arg in reg and reg.entry(arg).kind == "operad":
        return reg.get(arg)
    try:
        data = _read_json_arg(arg)
        if data is None:
            raise ValueError("not a fixture name or JSON")
        return TableOperad.from_json(data)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"cannot read an operad from {arg!r}: {exc}") from None


def load_category(arg: str):
    reg = fixtures()
    if arg in reg and reg.entry(arg).kind in ("category", "mutation"):
        cat = reg.get(arg)
        return cat[0] if isinstance(cat, tuple) else cat
    try:
        data = _read_json_arg(arg)
        if data is None:
            raise ValueError("not a fixture name or JSON")
        return cats.category_from_json(data)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"cannot read a category from {arg!r}: {exc}") from None


def _omega(b: Bounds, vertices: int = 3, edges: int = 5):
    return cats.omega_category(b.tree_vertices if b.tree_vertices is not None else vertices,
                               b.tree_edges if b.tree_edges is not None else edges)


def _in_omega(T: tr.Tree, omega) -> tr.Tree:
    canon = tr.canonical_form(T)[0]
    if canon not in omega.objects:
        raise UsageError(f"tree {T.encoding} is outside the bounds of {omega.name}")
    return canon


def _morphism(args, S: tr.Tree, T: tr.Tree) -> list[tr.OmegaMorphism]:
    homs = tr.enumerate_homs(S, T)
    if args.index is None:
        return homs
    if not 0 <= args.index < len(homs):
        raise UsageError(f"index {args.index} out of range; there are {len(homs)} morphisms")
    return [homs[args.index]]


# output ---------------------------------------------------------------------------------------

def emit(args, data, text: str, dot: str | None = None, passed: bool = True) -> int:
    if args.dot and dot is not None:
        print(dot)
    elif args.json:
        print(json.dumps(jsonable(data), indent=2, sort_keys=True))
    else:
        print(text)
    return 0 if passed else 1


def _check_lines(checks: list[Check]) -> str:
    out = []
    for c in checks:
        line = f"{'PASS' if c.passed else 'FAIL'}  {c.name}"
        if not c.passed and c.witness is not None:
            line += f"  witness: {json.dumps(c.to_json()['witness'], sort_keys=True)}"
        out.append(line)
    return "\n".join(out)


def emit_checks(args, checks: list[Check], extra: dict | None = None) -> int:
    data = {"passed": all(c.passed for c in checks), "checks": [c.to_json() for c in checks]}
    if extra:
        data.update(extra)
    return emit(args, data, _check_lines(checks), passed=data["passed"])


# tree -----------------------------------------------------------------------------------------

def cmd_tree_canon(args) -> int:
    T = load_tree(args.tree)
    canon, relabel = tr.canonical_form(T)
    data = {"encoding": T.encoding, "canonical": canon.to_json(), "relabel": relabel}
    text = f"encoding {T.encoding}\n" + "\n".join(f"  {a} -> {b}" for a, b in sorted(relabel.items()))
    return emit(args, data, text, canon.to_dot())


def cmd_tree_homs(args) -> int:
    S, T = load_tree(args.source), load_tree(args.target)
    homs = tr.enumerate_homs(S, T)
    data = {"count": len(homs), "morphisms": [{"map": f.edge_map, "kind": tr.classify(f)} for f in homs]}
    text = f"{len(homs)} morphisms {S.encoding} -> {T.encoding}\n" + "\n".join(
        f"  [{i}] {tr.classify(f):<11} {f.edge_map}" for i, f in enumerate(homs))
    dot = "\n".join([f"digraph homs {{", f'  S [label="{S.encoding}"];', f'  T [label="{T.encoding}"];']
                    + [f'  S -> T [label="{i}"];' for i in range(len(homs))] + ["}"])
    return emit(args, data, text, dot)


def cmd_tree_aut(args) -> int:
    T = load_tree(args.tree)
    auts = tr.automorphisms(T)
    data = {"order": len(auts), "automorphisms": [f.edge_map for f in auts]}
    return emit(args, data, f"|Aut({T.encoding})| = {len(auts)}", T.to_dot())


def cmd_tree_factorize(args) -> int:
    S, T = load_tree(args.source), load_tree(args.target)
    out, lines = [], []
    for f in _morphism(args, S, T):
        steps = tr.decompose(f)
        ok = tr.compose_all([g for _, g in steps]) == f if steps else f == tr.identity(S)
        out.append({"map": f.edge_map, "steps": [{"kind": k, "map": g.edge_map} for k, g in steps], "recomposes": ok})
        lines.append(f"{f.edge_map}\n" + "\n".join(f"    {k}: {g.source.encoding} -> {g.target.encoding}" for k, g in steps))
    return emit(args, {"morphisms": out}, "\n".join(lines) or "no morphisms", passed=all(m["recomposes"] for m in out))


# fset -----------------------------------------------------------------------------------------

def cmd_fset_compose(args) -> int:
    f, g = load_partial_map(args.first), load_partial_map(args.second)
    if f.target != g.source:
        raise UsageError("maps are not composable: target of the first differs from source of the second")
    h = compose_partial(g, f)
    return emit(args, h.to_json(), repr(h))


def cmd_fset_lambda(args) -> int:
    S, T = load_tree(args.source), load_tree(args.target)
    out = []
    for f in _morphism(args, S, T):
        lam = leaf_functor(f)
        out.append({"map": f.edge_map, "kind": tr.classify(f), "leaf_map": lam.to_json(), "leaf_class": leaf_class(lam)})
    text = "\n".join(f"{m['kind']:<11} {m['map']} -> {m['leaf_class']} {m['leaf_map']['map']}" for m in out)
    return emit(args, {"morphisms": out}, text or "no morphisms")


def cmd_fset_factorize(args) -> int:
    f = load_partial_map(args.map)
    pos, neg = reedy_factorize_gamma(f)
    ok = compose_partial(neg, pos) == f
    data = {"class": gamma_class(f), "positive": pos.to_json(), "negative": neg.to_json(), "recomposes": ok}
    text = f"class {gamma_class(f)}\n  surjection {pos!r}\n  injection  {neg!r}"
    return emit(args, data, text, passed=ok)


# reedy ----------------------------------------------------------------------------------------

def cmd_reedy_check(args) -> int:
    cat = load_category(args.category)
    return emit_checks(args, check_reedy_axioms(cat), {"category": cat.name})


def _presheaf_for(args, omega, T):
    if args.presheaf is None:
        return representable(omega, T)
    reg = fixtures()
    if args.presheaf in reg and reg.entry(args.presheaf).kind == "operad":
        return dendroidal_nerve(reg.get(args.presheaf), omega)
    rep_tree = _in_omega(load_tree(args.presheaf), omega)
    return representable(omega, rep_tree)


def cmd_reedy_latch(args) -> int:
    omega = _omega(args.bounds_obj)
    T = _in_omega(load_tree(args.tree), omega)
    X = _presheaf_for(args, omega, T)
    L = latching_object(X, T)
    data = {"tree": T.encoding, "classes": len(L), "injective": L.is_injective(), "value_size": len(X.value(T))}
    text = f"latching object at {T.encoding}: {len(L)} classes, injective={L.is_injective()}, |X(T)|={len(X.value(T))}"
    return emit(args, data, text)


def cmd_reedy_match(args) -> int:
    omega = _omega(args.bounds_obj)
    T = _in_omega(load_tree(args.tree), omega)
    X = _presheaf_for(args, omega, T)
    fams = matching_object(X, T)
    data = {"tree": T.encoding, "families": len(fams), "value_size": len(X.value(T))}
    return emit(args, data, f"matching object at {T.encoding}: {len(fams)} families, |X(T)|={len(X.value(T))}")


def cmd_reedy_lift(args) -> int:
    omega = _omega(args.bounds_obj, 2, 4)
    T = _in_omega(load_tree(args.tree), omega)
    P = load_operad(args.operad)
    NP = _nerve(P, omega)
    A = free_algebra(P, {"x": P.colours[0]}, 3, overflow=True)
    G = underline_g(A, NP)
    xis = NP.value(T)
    if not xis:
        raise UsageError(f"the nerve of {P.name} is empty at {T.encoding}")
    res = solve_lifting(leaf_inclusion_problem(G, T, xis[0], {l: A.generator("x") for l in T.leaves}))
    data = {"tree": T.encoding, "found": res.found, "explored": res.explored}
    return emit(args, data, f"leaf inclusion at {T.encoding}: {'diagonal found' if res.found else 'no diagonal'} "
                            f"after {res.explored} steps", passed=res.found)


# psh ------------------------------------------------------------------------------------------

def _nerve(P, omega):
    try:
        return dendroidal_nerve(P, omega)
    except BoundError as exc:
        raise UsageError(str(exc)) from None


def _load_presheaf(arg: str, omega):
    reg = fixtures()
    if arg in reg and reg.entry(arg).kind == "operad":
        return _nerve(reg.get(arg), omega)
    if arg in reg and reg.entry(arg).kind == "presheaf":
        tree_name = arg[len("rep-"):]
        return representable(omega, _in_omega(reg.get(tree_name), omega))
    data = _json_or_none(arg)
    if isinstance(data, dict) and "values" in data:
        try:
            return presheaf_from_json(data, omega)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return representable(omega, _in_omega(load_tree(arg), omega))


def _json_or_none(arg: str):
    try:
        return _read_json_arg(arg)
    except (OSError, ValueError):
        return None


def cmd_psh_dump(args) -> int:
    omega = _omega(args.bounds_obj, 2, 4)
    X = _load_presheaf(args.presheaf, omega)
    data = presheaf_to_json(X)
    text = f"{X.name} on {omega.name}\n" + "\n".join(f"  {k}: {len(v)}" for k, v in data["values"].items())
    return emit(args, data, text)


def cmd_psh_segal(args) -> int:
    omega = _omega(args.bounds_obj)
    X = _load_presheaf(args.presheaf, omega)
    return emit_checks(args, [check_strict_segal(X)], {"presheaf": X.name, "strict": True})


def cmd_psh_boundary(args) -> int:
    omega = _omega(args.bounds_obj)
    T = _in_omega(load_tree(args.tree), omega)
    try:
        sub = boundary_horn_core(omega, T, args.which, args.edge)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sizes = {S.encoding: len(sub.value(S)) for S in omega.objects if sub.value(S)}
    text = f"{sub.name}\n" + "\n".join(f"  {k}: {v}" for k, v in sizes.items())
    return emit(args, {"name": sub.name, "sizes": sizes}, text)


def cmd_psh_lambda(args) -> int:
    omega = _omega(args.bounds_obj, 2, 4)
    n = args.bounds_obj.set_size if args.bounds_obj.set_size is not None else 3
    gamma = cats.gamma_category(n)
    X = _load_presheaf(args.presheaf, omega)
    LX = lambda_shriek(X, gamma)
    sizes = {str(len(A)): len(LX.value(A)) for A in gamma.objects}
    text = f"{LX.name}\n" + "\n".join(f"  |A|={k}: {v}" for k, v in sizes.items())
    return emit(args, {"name": LX.name, "sizes": sizes}, text)


# op -------------------------------------------------------------------------------------------

def cmd_op_nerve(args) -> int:
    P = load_operad(args.operad)
    T = load_tree(args.tree)
    xs = nerve_elements(P, T)
    return emit(args, {"tree": T.encoding, "count": len(xs), "dendrices": [x.to_json() for x in xs]},
                f"|N{P.name}({T.encoding})| = {len(xs)}", passed=True)


def cmd_op_free(args) -> int:
    P = load_operad(args.operad)
    gens = {g: P.colours[0] for g in args.generators.split(",") if g}
    A = free_algebra(P, gens, args.size)
    carrier = {c: [t.to_json() for t in A.carrier(c)] for c in P.colours}
    text = "\n".join(f"{c}: {len(v)} elements" for c, v in carrier.items())
    return emit(args, {"name": A.name, "carrier": carrier}, text)


def cmd_op_galg(args) -> int:
    omega = _omega(args.bounds_obj, 2, 4)
    P = load_operad(args.operad)
    NP = _nerve(P, omega)
    A = free_algebra(P, {"x": P.colours[0]}, 3, overflow=True)
    checks = [check_g_identity(A, NP)]
    sizes = {T.encoding: len(underline_g(A, NP).value(T)) for T in omega.objects}
    return emit_checks(args, checks, {"sizes": sizes})


def cmd_op_covcheck(args) -> int:
    omega = _omega(args.bounds_obj, 2, 4)
    P = load_operad(args.operad)
    NP = _nerve(P, omega)
    base = check_strict_segal(NP)
    checks = [Check("sigma_free", True, detail={"value": is_sigma_free(P).passed}), base]
    if base.passed:
        A = free_algebra(P, {"x": P.colours[0]}, 3, overflow=True)
        checks.append(check_strict_covariant_fibration(underline_g(A, NP).projection(), base))
    return emit_checks(args, checks, {"segal_verified_base": base.passed})


# slice ----------------------------------------------------------------------------------------

def _arity(args, default: int = 2) -> int:
    return args.bounds_obj.arity if args.bounds_obj.arity is not None else default


def cmd_slice_build(args) -> int:
    T = load_tree(args.tree)
    b = _arity(args)
    atts = attachments(T, b)
    G = attachment_groupoid(T, b)
    classes = G.iso_classes()
    data = {"tree": T.encoding, "bound": b, "attachments": [a.to_json() for a in atts],
            "count": len(atts), "expected": (b + 1) ** len(T.leaves), "iso_classes": len(classes)}
    text = f"{len(atts)} attachments at {T.encoding} with arity <= {b} ({len(classes)} iso classes)"
    return emit(args, data, text, G.to_dot())


def cmd_slice_check_cov(args) -> int:
    omega = _omega(args.bounds_obj, 2, 4)
    P = load_operad(args.operad)
    b = _arity(args)
    need = max((len(T.inputs(v)) for T in omega.objects for v in T.vertices), default=1) + b
    if hasattr(P, "max_arity") and not getattr(P, "complete", False) and P.max_arity < need:
        P = type(P)(need)
    NP = _nerve(P, omega)
    eta = tr.eta()
    sigma = {"u": NP.value(eta)[0]} if NP.value(eta) else {}
    S = slice_construction(NP, sigma, b)
    base = check_strict_segal(NP)
    checks = [base]
    if base.passed:
        checks.append(check_strict_covariant_fibration(S.projection(), base))
    checks.append(check_projection_bijective_at_leafless(S))
    return emit_checks(args, checks, {"segal_verified_base": base.passed})


# bpq ------------------------------------------------------------------------------------------

def _carrier(args, default: int = 3) -> int:
    return args.bounds_obj.carrier if args.bounds_obj.carrier is not None else default


def cmd_bpq_sigma(args) -> int:
    A, L = skeleton(args.A), skeleton(args.L)
    bound = _carrier(args)
    G = bpq.sigma_groupoid(A, L, bound)
    census = bpq.component_census(A, L, bound)
    data = {"objects": len(G.objects), "components": len(G.iso_classes()), "census": census.to_json()}
    text = f"groupoid over |A|={args.A}, |L|={args.L}, carriers <= {bound}: {len(G.objects)} objects, " \
           f"{len(G.iso_classes())} components"
    return emit(args, data, text, G.to_dot(), passed=census.passed)


def cmd_bpq_special(args) -> int:
    return emit_checks(args, [bpq.check_special(skeleton(args.A), skeleton(args.B), _carrier(args, 4))])


def cmd_bpq_cofib(args) -> int:
    degree = args.bounds_obj.nerve_degree if args.bounds_obj.nerve_degree is not None else 3
    return emit_checks(args, [bpq.check_bsigma_cofibrant(skeleton(args.A), _carrier(args), degree)])


def cmd_bpq_lstar(args) -> int:
    A, L = skeleton(args.A), skeleton(args.L)
    r = bpq.two_point_pushout(A, L)
    checks = [bpq.check_wedge_identity(L, args.A),
              Check("two_point_pushout", r.passed, None if r.passed else r.to_json(), r.to_json())]
    return emit_checks(args, checks)


def cmd_bpq_reduce(args) -> int:
    gamma = cats.gamma_category(max(args.A, 1))
    X = bpq.partial_maps_gamma(bpq.ONE, gamma)
    empty = frozenset()
    R = bpq.reduce_pointed(X, X.value(empty)[0])
    sizes = {str(n): len(R.value(skeleton(n))) for n in range(args.A + 1)}
    checks = [bpq.check_gamma_set_functoriality(R, args.A)]
    return emit_checks(args, checks, {"sizes": sizes})


# suites and fixtures ---------------------------------------------------------------------------

def cmd_run(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(n, args.bounds_obj) for n in names]
    text = combined_json(reports) if len(reports) > 1 else reports[0].dumps()
    if args.output:
        Path(args.output).write_text(text)
    if args.json:
        sys.stdout.write(text)
    else:
        print("\n".join(r.render_text() for r in reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_fixtures(args) -> int:
    reg = fixtures()
    rows = reg.describe()
    return emit(args, rows, "\n".join(f"{r['name']:<32} {r['kind']:<9} {r['description']}" for r in rows))


# parser ---------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bounds", default=argparse.SUPPRESS,
                        help="tree-vertices=K,tree-edges=E,set-size=N,nerve-degree=M,carrier=C,arity=B")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print JSON")
    common.add_argument("--dot", action="store_true", default=argparse.SUPPRESS, help="print Graphviz DOT where available")

    parser = argparse.ArgumentParser(prog="dendron", parents=[common],
                                     description="Finite trees, presheaves, operads and Gamma-sets.")
    groups = parser.add_subparsers(dest="group", required=True)

    def group(name, help_text):
        g = groups.add_parser(name, help=help_text, parents=[common])
        return g.add_subparsers(dest="command", required=True)

    def command(sub, name, fn, help_text, *arguments):
        p = sub.add_parser(name, help=help_text, parents=[common])
        for args, kwargs in arguments:
            p.add_argument(*args, **kwargs)
        p.set_defaults(fn=fn)
        return p

    tree_arg = (("tree",), {"help": "fixture name, JSON object or file, or encoding"})
    st_args = ((("source",), {}), (("target",), {}), (("--index",), {"type": int, "default": None}))

    t = group("tree", "trees and their morphisms")
    command(t, "canon", cmd_tree_canon, "canonical form", tree_arg)
    command(t, "homs", cmd_tree_homs, "enumerate morphisms", *st_args)
    command(t, "aut", cmd_tree_aut, "automorphism group", tree_arg)
    command(t, "factorize", cmd_tree_factorize, "decompose into elementary maps", *st_args)

    f = group("fset", "finite sets and partial maps")
    command(f, "compose", cmd_fset_compose, "second after first", (("first",), {}), (("second",), {}))
    command(f, "lambda", cmd_fset_lambda, "leaf maps of tree morphisms", *st_args)
    command(f, "factorize", cmd_fset_factorize, "surjection then injection", (("map",), {}))

    r = group("reedy", "generalized Reedy categories")
    command(r, "check", cmd_reedy_check, "verify the axioms", (("category",), {}))
    pre = (("--presheaf",), {"default": None, "help": "operad fixture (nerve) or tree (representable)"})
    command(r, "latch", cmd_reedy_latch, "latching object", tree_arg, pre)
    command(r, "match", cmd_reedy_match, "matching object", tree_arg, pre)
    command(r, "lift", cmd_reedy_lift, "leaf-inclusion lifting problem", tree_arg,
            (("--operad",), {"default": "ass-operad"}))

    p = group("psh", "dendroidal sets and Gamma-sets")
    command(p, "segal", cmd_psh_segal, "strict Segal condition", (("presheaf",), {}))
    command(p, "boundary", cmd_psh_boundary, "boundary, horn or Segal core", tree_arg,
            (("--which",), {"choices": ["boundary", "horn", "segal_core"], "default": "boundary"}),
            (("--edge",), {"default": None}))
    command(p, "dump", cmd_psh_dump, "presheaf as JSON (values and actions)", (("presheaf",), {}))
    command(p, "lambda", cmd_psh_lambda, "left Kan extension along the leaf functor", (("presheaf",), {}))

    o = group("op", "operads, nerves and algebras")
    command(o, "nerve", cmd_op_nerve, "dendrices of the nerve at a tree", (("operad",), {}), tree_arg)
    command(o, "free", cmd_op_free, "free algebra", (("operad",), {}),
            (("--generators",), {"default": "x"}), (("--size",), {"type": int, "default": 3}))
    command(o, "galg", cmd_op_galg, "algebra as a presheaf over the nerve", (("operad",), {}))
    command(o, "covcheck", cmd_op_covcheck, "covariance over the nerve", (("operad",), {}))

    s = group("slice", "corolla attachments and slices")
    command(s, "build", cmd_slice_build, "attachments at a tree", tree_arg)
    command(s, "check-cov", cmd_slice_check_cov, "covariance of the slice projection",
            (("operad",), {"nargs": "?", "default": "ass-operad"}))

    b = group("bpq", "groupoids of finite sets over A")
    command(b, "sigma", cmd_bpq_sigma, "groupoid and census", (("A",), {"type": int}), (("L",), {"type": int, "nargs": "?", "default": 1}))
    command(b, "special", cmd_bpq_special, "specialness", (("A",), {"type": int}), (("B",), {"type": int}))
    command(b, "cofib", cmd_bpq_cofib, "free symmetric action", (("A",), {"type": int}))
    command(b, "lstar", cmd_bpq_lstar, "wedge identity and pushout", (("A",), {"type": int}), (("L",), {"type": int}))
    command(b, "reduce", cmd_bpq_reduce, "reduced F(1,-)", (("A",), {"type": int}))

    run = groups.add_parser("run", help="run a verification suite", parents=[common])
    run.add_argument("suite", help=f"one of: {', '.join(SUITES)}, or all")
    run.add_argument("--output", default=None, help="write the JSON report here")
    run.set_defaults(fn=cmd_run)

    fx = groups.add_parser("fixtures", help="list bundled fixtures", parents=[common])
    fx.set_defaults(fn=cmd_fixtures)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    args.dot = getattr(args, "dot", False)
    try:
        args.bounds_obj = parse_bounds(getattr(args, "bounds", None))
        return args.fn(args)
    except (UsageError, BoundsError, FixtureError, UnknownSuite) as exc:
        print(f"dendron: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
