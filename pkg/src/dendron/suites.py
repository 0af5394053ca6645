"""Named verification suites and their reports.

A suite is a function from bounds to a list of checks.  Reports are
deterministic: checks appear in a fixed order, witnesses are rendered from
ordered data, and timing is kept out of the JSON form so that two runs
with the same bounds give byte-identical output.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Callable

from . import bpq
from . import categories as cats
from . import trees as tr
from .finsets import skeleton
from .operads import (
    AssociativeOperad,
    CommutativeOperad,
    check_g_identity,
    check_nerve_yoneda,
    check_strict_covariant_fibration,
    check_unit_over_nerve,
    dendroidal_nerve,
    free_algebra,
    leaf_inclusion_problem,
    underline_g,
)
from .presheaves import (
    boundary_horn_core,
    check_adjunction,
    check_strict_segal,
    constant_gamma,
    partial_maps_from,
)
from .reedy import Check, check_functoriality, check_reedy_axioms, has_absolute_pushout, representable, solve_lifting
from .slices import (
    ETA,
    attachment_groupoid,
    attachments,
    check_attachment_functoriality,
    check_projection_bijective_at_leafless,
    slice_construction,
)
from .groupoids import check_groupoid

SCHEMA = "dendron.report/1"


class BoundsError(ValueError):
    pass


class UnknownSuite(KeyError):
    def __str__(self):
        return self.args[0]


@dataclass(frozen=True)
class Bounds:
    """Truncation bounds.  ``None`` means "use the suite default"."""

    tree_vertices: int | None = None
    tree_edges: int | None = None
    set_size: int | None = None
    nerve_degree: int | None = None
    carrier: int | None = None
    arity: int | None = None

    def merged(self, defaults: "Bounds") -> "Bounds":
        return replace(defaults, **{f.name: getattr(self, f.name) for f in fields(self)
                                     if getattr(self, f.name) is not None})

    def encode(self) -> str:
        parts = [f"{f.name.replace('_', '-')}={getattr(self, f.name)}" for f in fields(self)
                 if getattr(self, f.name) is not None]
        return ",".join(parts)

    def to_json(self) -> dict:
        return {f.name.replace("_", "-"): getattr(self, f.name) for f in fields(self)
                if getattr(self, f.name) is not None}


BOUND_KEYS = tuple(f.name.replace("_", "-") for f in fields(Bounds))


def parse_bounds(text: str | None) -> Bounds:
    """Parse ``key=value,key=value`` with keys from BOUND_KEYS."""
    if not text:
        return Bounds()
    values = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        key, sep, raw = part.partition("=")
        key = key.strip()
        if not sep or key not in BOUND_KEYS:
            raise BoundsError(f"bad bound {part!r}; expected key=value with key in {', '.join(BOUND_KEYS)}")
        try:
            n = int(raw)
        except ValueError:
            raise BoundsError(f"bound {key} needs an integer, got {raw!r}") from None
        if n < 0:
            raise BoundsError(f"bound {key} must be non-negative")
        values[key.replace("-", "_")] = n
    return Bounds(**values)


@dataclass
class VerificationReport:
    suite: str
    bounds: Bounds
    checks: list[Check]
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def replay_command(self) -> str:
        return f"dendron run {self.suite} --bounds {self.bounds.encode()}"

    def to_json(self) -> dict:
        checks = []
        for c in self.checks:
            entry = c.to_json()
            if not c.passed:
                entry["replay"] = self.replay_command()
            checks.append(entry)
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "bounds": self.bounds.to_json(),
            "passed": self.passed,
            "counts": {"checks": len(self.checks), "failed": len(self.failures)},
            "checks": checks,
            "notes": list(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def render_text(self) -> str:
        lines = [f"suite {self.suite} [{self.bounds.encode()}]"]
        for c in self.checks:
            lines.append(f"  {'PASS' if c.passed else 'FAIL'}  {c.name}")
            if not c.passed and c.witness is not None:
                lines.append(f"        witness: {json.dumps(c.to_json().get('witness'), sort_keys=True)}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        verdict = "all passed" if self.passed else f"{len(self.failures)} failed; replay: {self.replay_command()}"
        lines.append(f"  {len(self.checks)} checks, {verdict} ({self.wall_time:.2f}s)")
        return "\n".join(lines)


# helpers ------------------------------------------------------------------------------------

def _named(check: Check, name: str) -> Check:
    return Check(name, check.passed, check.witness, check.detail)


def _expect_failure(name: str, checks: list[Check]) -> Check:
    """A mutation must be rejected; the first failing check is the witness."""
    failed = [c for c in checks if not c.passed]
    if not failed:
        return Check(name, False, {"problem": "corrupted fixture accepted"})
    first = failed[0]
    return Check(name, True, detail={"rejected_by": first.name, "witness": first.to_json().get("witness")})


def _canonical(T):
    return tr.canonical_form(T)[0]


# suites -------------------------------------------------------------------------------------

def _reedy_axioms(b: Bounds) -> tuple[list[Check], list[str]]:
    omega = cats.omega_category(b.tree_vertices, b.tree_edges)
    gamma = cats.gamma_category(b.set_size)
    inj = cats.injection_category(b.set_size)
    checks = []
    for cat in (omega, gamma, inj):
        for c in check_reedy_axioms(cat):
            checks.append(_named(c, f"{cat.name}:{c.name}"))
    mutants = [
        cats.omega_face_as_negative(omega),
        cats.omega_without_degeneracies(omega),
        cats.gamma_injection_as_positive(gamma),
        cats.injections_all_negative(inj),
    ]
    for cat in mutants:
        checks.append(_expect_failure(f"rejects:{cat.name}", check_reedy_axioms(cat)))
    span, e1, e2 = cats.nonsplit_span_category()
    ok, _ = has_absolute_pushout(span, e1, e2)
    checks.append(Check("nonsplit_span_has_no_absolute_pushout", not ok, None if not ok else {"span": [e1, e2]}))
    return checks, []


def _segal(b: Bounds) -> tuple[list[Check], list[str]]:
    omega = cats.omega_category(b.tree_vertices, b.tree_edges)
    arity = max((len(T.inputs(v)) for T in omega.objects for v in T.vertices), default=1)
    checks = [check_nerve_yoneda(omega)]
    for P in (AssociativeOperad(max(arity, 1)), CommutativeOperad(max(arity, 1))):
        N = dendroidal_nerve(P, omega)
        checks.append(_named(check_functoriality(N), f"N{P.name}:functoriality"))
        checks.append(_named(check_strict_segal(N), f"N{P.name}:strict_segal"))
    reps, horns = [], []
    for T in omega.objects:
        if T.inner_edges:
            rep = representable(omega, T)
            reps.append((T.encoding, check_strict_segal(rep).passed))
            for e in sorted(T.inner_edges):
                horn = boundary_horn_core(omega, T, "horn", e)
                horns.append((f"{T.encoding}:{e}", check_strict_segal(horn, [T]).passed))
    bad = [t for t, ok in reps if not ok]
    checks.append(Check("representables_with_inner_edges:strict_segal", not bad, {"not_segal": bad} if bad else None,
                        {"trees": len(reps)}))
    bad = [h for h, ok in horns if ok]
    checks.append(Check("inner_horns:not_strict_segal", not bad, {"segal_horns": bad} if bad else None,
                        {"horns": len(horns)}))
    notes = ["Segal checks are strict: corolla families must correspond bijectively, with no homotopy."]
    return checks, notes


def _covariant(b: Bounds) -> tuple[list[Check], list[str]]:
    omega = cats.omega_category(b.tree_vertices, b.tree_edges)
    gens = {f"x{i}": "c" for i in range(b.set_size)}
    arity = max((len(T.inputs(v)) for T in omega.objects for v in T.vertices), default=1)
    checks = []
    notes = []
    for P in (AssociativeOperad(max(arity, 1)), CommutativeOperad(max(arity, 1))):
        NP = dendroidal_nerve(P, omega)
        base = check_strict_segal(NP)
        checks.append(_named(base, f"N{P.name}:strict_segal"))
        A = free_algebra(P, gens, b.carrier, overflow=True)
        G = underline_g(A, NP)
        checks.append(_named(check_g_identity(A, NP), f"G({A.name}):w_nerve_equals_pullback"))
        checks.append(_named(check_functoriality(G), f"G({A.name}):functoriality"))
        if base.passed:
            checks.append(_named(check_strict_covariant_fibration(G.projection(), base),
                                 f"G({A.name})->N{P.name}:covariant_corollas"))
        found = 0
        for T in omega.objects:
            if T.vertices and T.leaves and gens and NP.value(T):
                xi = NP.value(T)[0]
                g = sorted(A.generators)[0]
                labels = {l: A.generator(g) for l in T.leaves}
                if any(xi.colour(l) != A.generators[g] for l in T.leaves):
                    continue
                res = solve_lifting(leaf_inclusion_problem(G, T, xi, labels))
                if not res.found:
                    checks.append(Check(f"G({A.name}):leaf_lifting", False, {"tree": T.encoding}))
                    break
                found += 1
        else:
            checks.append(Check(f"G({A.name}):leaf_lifting", True, detail={"squares": found}))
        for T in omega.objects:
            c = check_unit_over_nerve(NP, T)
            if not c.passed:
                checks.append(_named(c, f"N{P.name}:unit_over_nerve"))
                break
        else:
            checks.append(Check(f"N{P.name}:unit_over_nerve", True, detail={"trees": len(omega.objects)}))
    notes.append("Segal-verified base: covariance is only checked over bases passing the strict Segal check.")
    return checks, notes


def _slice(b: Bounds) -> tuple[list[Check], list[str]]:
    omega = cats.omega_category(b.tree_vertices, b.tree_edges)
    checks = []
    counts = {}
    ok = True
    for T in omega.objects:
        for bound in range(b.arity + 1):
            n = len(attachments(T, bound))
            expected = (bound + 1) ** len(T.leaves)
            counts[f"{T.encoding}@{bound}"] = [n, expected]
            ok = ok and n == expected
    checks.append(Check("attachment_count", ok, None if ok else {"counts": counts}, {"cases": len(counts)}))
    for T in omega.objects:
        if len(T.leaves) <= 2:
            checks.append(_named(check_groupoid(attachment_groupoid(T, b.arity)), f"attachments[{T.encoding}]:groupoid"))
    checks.append(check_attachment_functoriality(omega.objects, bound=1, max_edges=b.tree_edges))
    arity = max((len(T.inputs(v)) for T in omega.objects for v in T.vertices), default=1)
    N = dendroidal_nerve(AssociativeOperad(max(arity + b.arity, 1)), omega)
    sigma = {"u": N.value(ETA)[0]}
    seg = check_strict_segal(N)
    checks.append(_named(seg, "NAss:strict_segal"))
    per_leaf = slice_construction(N, sigma, b.arity)
    if seg.passed:
        checks.append(_named(check_strict_covariant_fibration(per_leaf.projection(), seg), "projection:covariant_corollas"))
    checks.append(check_projection_bijective_at_leafless(per_leaf))
    total = slice_construction(N, sigma, b.arity, mode="total")
    checks.append(_named(check_functoriality(total), "slice_total:functoriality"))
    notes = ["Segal-verified base: the slice projection is checked for covariance only over a strictly Segal base.",
             "Functoriality uses the truncation bounding the total number of grafted leaves."]
    return checks, notes


def _bpq_special(b: Bounds) -> tuple[list[Check], list[str]]:
    checks = []
    for na in range(b.set_size + 1):
        for nl in (1, 2):
            if na * nl <= 4:
                checks.append(_named(bpq.component_census(skeleton(na), skeleton(nl), b.carrier),
                                     f"census[A={na},L={nl}]"))
    for na in range(b.set_size + 1):
        for nb in range(b.set_size + 1):
            c = bpq.check_special(skeleton(na), skeleton(nb), b.carrier)
            checks.append(_named(c, f"special[A={na},B={nb}]"))
    n = min(b.set_size, 2) or 1
    mutant = bpq.check_special(skeleton(n), skeleton(n), b.carrier, bpq.forgetful_morphism_action)
    checks.append(_expect_failure("rejects:forgetful_morphism_action", [mutant]))
    notes = [f"Essential surjectivity is relative to the carrier bound {b.carrier}."]
    return checks, notes


def _bpq_cofibrant(b: Bounds) -> tuple[list[Check], list[str]]:
    checks = []
    for na in range(b.set_size + 1):
        c = bpq.check_bsigma_cofibrant(skeleton(na), b.carrier, b.nerve_degree)
        checks.append(_named(c, f"cofibrant[A={na}]"))
    if b.set_size >= 2:
        mutant = bpq.check_bsigma_cofibrant(skeleton(2), b.carrier, b.nerve_degree, bpq.symmetric_collapse_action)
        checks.append(_expect_failure("rejects:symmetric_collapse_action", [mutant]))
    N = bpq.TruncatedNerve(bpq.sigma_groupoid(skeleton(1), bpq.ONE, b.carrier), b.nerve_degree)
    checks.append(bpq.check_simplicial_identities(N))
    checks.append(bpq.check_unit_map(b.set_size, b.set_size))
    return checks, []


def _lambda_adjunction(b: Bounds) -> tuple[list[Check], list[str]]:
    omega = cats.omega_category(b.tree_vertices, b.tree_edges)
    gamma = cats.gamma_category(b.set_size)
    left = {"rep-eta": tr.eta(), "rep-stump": tr.corolla(0), "rep-corolla-2": tr.corolla(2)}
    right = {"F(1,-)": partial_maps_from(gamma, [1]), "F(2,-)": partial_maps_from(gamma, [1, 2]),
             "const-2": constant_gamma(gamma, ["p", "q"])}
    checks = []
    for xn, T in left.items():
        T = _canonical(T)
        if T not in omega.objects:
            continue
        X = representable(omega, T)
        for yn, Y in right.items():
            r = check_adjunction(X, Y)
            checks.append(Check(f"adjunction[{xn},{yn}]", r.passed, None if r.passed else r.to_json(),
                                {"hom_left": r.left_count, "hom_right": r.right_count}))
    return checks, []


def _lstar_pushout(b: Bounds) -> tuple[list[Check], list[str]]:
    checks = []
    for nl in range(b.set_size + 1):
        checks.append(_named(bpq.check_wedge_identity(skeleton(nl), b.set_size), f"wedge[L={nl}]"))
    for na in range(b.set_size + 1):
        for nl in range(b.set_size + 1):
            r = bpq.two_point_pushout(skeleton(na), skeleton(nl))
            checks.append(Check(f"pushout[A={na},L={nl}]", r.passed, None if r.passed else r.to_json(),
                                {"size": r.total, "expected": r.expected}))
    return checks, []


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    run: Callable[[Bounds], tuple[list[Check], list[str]]]
    defaults: Bounds


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("reedy-axioms", "Reedy axioms on Omega, Gamma and injections, plus corrupted variants",
          _reedy_axioms, Bounds(tree_vertices=3, tree_edges=5, set_size=4)),
    Suite("segal", "nerve-Yoneda, strict Segal condition for operad nerves, representables and horns",
          _segal, Bounds(tree_vertices=3, tree_edges=5)),
    Suite("covariant", "algebras as presheaves over operad nerves: pullback identity, covariance, lifting",
          _covariant, Bounds(tree_vertices=2, tree_edges=4, set_size=1, carrier=3)),
    Suite("bpq-special", "groupoids of sets over A: component census and specialness",
          _bpq_special, Bounds(set_size=3, carrier=4)),
    Suite("bpq-cofibrant", "free symmetric action on nondegenerate simplices, nerve identities, unit map",
          _bpq_cofibrant, Bounds(set_size=3, nerve_degree=3, carrier=3)),
    Suite("lambda-adjunction", "Hom bijection and triangle identities for the leaf adjunction",
          _lambda_adjunction, Bounds(tree_vertices=2, tree_edges=4, set_size=3)),
    Suite("slice", "corolla attachments and the slice over a dendroidal set",
          _slice, Bounds(tree_vertices=2, tree_edges=4, arity=2)),
    Suite("lstar-pushout", "wedge identity and the two-point pushout square",
          _lstar_pushout, Bounds(set_size=3)),
]}


def suite_names() -> list[str]:
    return list(SUITES)


def run_suite(name: str, bounds: Bounds | str | None = None, output: str | Path | None = None) -> VerificationReport:
    """Run a registered suite; optionally write its JSON report to ``output``."""
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; available suites: {', '.join(SUITES)}")
    if isinstance(bounds, str) or bounds is None:
        bounds = parse_bounds(bounds)
    suite = SUITES[name]
    effective = bounds.merged(suite.defaults)
    start = time.perf_counter()
    checks, notes = suite.run(effective)
    report = VerificationReport(name, effective, checks, notes, time.perf_counter() - start)
    if output is not None:
        Path(output).write_text(report.dumps())
    return report


def run_all(bounds: Bounds | str | None = None) -> list[VerificationReport]:
    return [run_suite(name, bounds) for name in SUITES]


def combined_json(reports: list[VerificationReport]) -> str:
    data = {"schema": SCHEMA, "passed": all(r.passed for r in reports),
            "suites": [r.to_json() for r in reports]}
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
