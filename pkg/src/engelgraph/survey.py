"""Per-group reports, order-bounded catalog surveys, and theorem checks.

The survey walks a catalog of constructible groups (symmetric, alternating,
dihedral, dicyclic, and their direct products with cyclic groups), builds
the Engel graph of every non-nilpotent member, and records exact metrics
plus per-group checks.  The catalog is NOT all groups of bounded order -- a
small-groups database is out of scope -- so every result carries the exact
plan list that was checked.

A disconnected Engel graph would answer an open question, so it is flagged
prominently in the summary instead of being treated as a tool failure.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .engel import (
    fitting_subgroup,
    is_randomly_engel_conjugates,
    left_engel_set,
)
from .errors import BaerViolation
from .graphs import (
    GraphMetrics,
    SimpleGraph,
    build_engel_graph,
    compute_metrics,
    connected_components,
    diameter,
    find_isomorphism,
    induced_subgraph,
)
from .groups import (
    Group,
    centralizer,
    conjugacy_class,
    derived_subgroup,
    is_abelian,
    subgroup_generated,
)
from .io import (
    FamilySpec,
    GroupSpec,
    ProductSpec,
    build_group,
    parse_group_spec,
    render_group_spec,
)

RANDOMLY_ENGEL_CHECK_MAX_ORDER = 60


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    detail: str = ""  # counterexample description when failed


@dataclass
class GroupReport:
    name: str
    order: int
    is_engel: bool
    fitting_order: int
    metrics: GraphMetrics | None  # present exactly when the group is non-Engel
    checks: dict[str, CheckResult]


@dataclass
class GroupEvaluation:
    """A report together with the objects it was computed from (the report
    alone is what surveys keep and serialize)."""

    spec: GroupSpec
    group: Group
    engel_set: tuple[int, ...]
    graph: SimpleGraph | None
    report: GroupReport


@dataclass
class TheoremVerdict:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SurveyResult:
    max_order: int
    reports: list[GroupReport]
    plans_checked: list[str]  # exact coverage: every catalog plan evaluated
    diameter_histogram: dict[str, int]
    planar_groups: list[str]
    disconnected_groups: list[str]  # would answer an open question; flagged
    failed_checks: list[tuple[str, str, str]] = field(default_factory=list)


def _describe(G: Group, x: int) -> str:
    return f"element {x} = {G.perm(x)}"


def evaluate_group(spec: GroupSpec | str, *, base_dir: str = ".") -> GroupEvaluation:
    """Build the group, classify its Engel elements, build the graph when
    non-Engel, and run every per-group check."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    G = build_group(spec, base_dir=base_dir)
    L = left_engel_set(G)
    is_engel = len(L) == G.order
    checks: dict[str, CheckResult] = {}

    try:
        fitting_subgroup(G)
        checks["engel_set_is_fitting_subgroup"] = CheckResult(True)
    except BaerViolation as err:
        checks["engel_set_is_fitting_subgroup"] = CheckResult(False, str(err))

    graph = None
    metrics = None
    if not is_engel:
        graph = build_engel_graph(G)
        metrics = compute_metrics(graph)
        checks["clique_number_at_least_3"] = CheckResult(
            metrics.clique_number >= 3,
            "" if metrics.clique_number >= 3 else f"clique number is {metrics.clique_number}",
        )
        isolated = [v for v in range(graph.vertex_count) if not graph.neighbors(v)]
        checks["no_isolated_vertices"] = CheckResult(
            not isolated,
            ""
            if not isolated
            else "isolated: " + ", ".join(_describe(G, graph.labels[v]) for v in isolated),
        )

    if G.order <= RANDOMLY_ENGEL_CHECK_MAX_ORDER:
        members = set(L)
        bad = next(
            (
                x
                for x in range(G.order)
                if (x in members) != is_randomly_engel_conjugates(G, x)
            ),
            None,
        )
        checks["fitting_matches_randomly_engel"] = CheckResult(
            bad is None, "" if bad is None else _describe(G, bad)
        )

    report = GroupReport(
        name=G.name,
        order=G.order,
        is_engel=is_engel,
        fitting_order=len(L),
        metrics=metrics,
        checks=checks,
    )
    return GroupEvaluation(spec, G, L, graph, report)


def report(spec: GroupSpec | str, *, base_dir: str = ".") -> GroupReport:
    return evaluate_group(spec, base_dir=base_dir).report


def catalog_plans(
    max_order: int, families: Iterable[str] | None = None
) -> list[GroupSpec]:
    """Candidate plans of order <= max_order, sorted by (order, name).

    Families: "symmetric" (n >= 3), "alternating" (n >= 4), "dihedral"
    (orders 12, 14, ...; D6..D10 are omitted because D6 duplicates S3 and
    the catalog's own floor starts there), "dicyclic" (orders 8, 12, ...),
    and "products" (each of the above times a cyclic group).  Nilpotent
    members are weeded out at evaluation time, matching a survey over
    non-nilpotent groups only.
    """
    known = {"symmetric", "alternating", "dihedral", "dicyclic", "products"}
    wanted = set(families) if families is not None else known
    if not wanted <= known:
        raise ValueError(f"unknown families: {sorted(wanted - known)}")
    bases: list[FamilySpec] = []
    if "symmetric" in wanted:
        n = 3
        while math.factorial(n) <= max_order:
            bases.append(FamilySpec("symmetric", n))
            n += 1
    if "alternating" in wanted:
        n = 4
        while math.factorial(n) // 2 <= max_order:
            bases.append(FamilySpec("alternating", n))
            n += 1
    if "dihedral" in wanted:
        for order in range(12, max_order + 1, 2):
            bases.append(FamilySpec("dihedral", order))
    if "dicyclic" in wanted:
        for order in range(8, max_order + 1, 4):
            bases.append(FamilySpec("dicyclic", order // 4))
    plans: list[GroupSpec] = list(bases)
    if "products" in wanted:
        for base in bases:
            k = 2
            while base.order() * k <= max_order:
                plans.append(ProductSpec((base, FamilySpec("cyclic", k))))
                k += 1
    unique = sorted(set(plans), key=lambda p: (p.order(), render_group_spec(p)))
    return unique


def _survey_one(spec: GroupSpec) -> GroupReport | None:
    evaluation = evaluate_group(spec)
    # only non-nilpotent groups enter the survey; for finite groups
    # nilpotent and Engel coincide
    if evaluation.report.is_engel:
        return None
    return evaluation.report


def survey(
    max_order: int,
    families: Iterable[str] | None = None,
    jobs: int = 1,
) -> SurveyResult:
    """Reports for every non-nilpotent catalog group of order <= max_order.

    Evaluation may run in parallel (one group per task, no shared state);
    the result is merged by sorting and is byte-identical for any ``jobs``.
    """
    if max_order < 6:
        raise ValueError(f"max_order must be at least 6, got {max_order}")
    plans = catalog_plans(max_order, families)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            maybe_reports = list(pool.map(_survey_one, plans))
    else:
        maybe_reports = [_survey_one(p) for p in plans]
    reports = sorted(
        (r for r in maybe_reports if r is not None), key=lambda r: (r.order, r.name)
    )

    histogram: dict[str, int] = {}
    planar_groups = []
    disconnected = []
    failed = []
    for r in reports:
        m = r.metrics
        key = "inf" if math.isinf(m.diameter) else str(int(m.diameter))
        histogram[key] = histogram.get(key, 0) + 1
        if m.planar:
            planar_groups.append(r.name)
        if m.component_count != 1:
            disconnected.append(r.name)
        for check_name in sorted(r.checks):
            result = r.checks[check_name]
            if not result.passed:
                failed.append((r.name, check_name, result.detail))
    return SurveyResult(
        max_order=max_order,
        reports=reports,
        plans_checked=[render_group_spec(p) for p in plans],
        diameter_histogram=dict(sorted(histogram.items())),
        planar_groups=planar_groups,
        disconnected_groups=disconnected,
        failed_checks=failed,
    )


def summary_json(result: SurveyResult) -> str:
    """Deterministic JSON for a survey summary (reports serialize one by one
    through ``write_report``)."""
    payload = {
        "maxOrder": result.max_order,
        "groupsReported": [r.name for r in result.reports],
        "plansChecked": result.plans_checked,
        "coverageNote": (
            "catalog families only; not all isomorphism classes of order "
            f"<= {result.max_order}"
        ),
        "diameterHistogram": result.diameter_histogram,
        "planarGroups": result.planar_groups,
        "disconnectedGroups": result.disconnected_groups,
        "failedChecks": [
            {"group": g, "check": c, "detail": d} for g, c, d in result.failed_checks
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


# -- theorem verification -------------------------------------------------

def _involution_count(G: Group) -> int:
    return sum(1 for x in range(G.order) if x != G.identity and G.mul(x, x) == G.identity)


def _is_s3_like(G: Group) -> bool:
    # the only non-abelian group of order 6
    return G.order == 6 and not is_abelian(G)


def _is_d12_like(G: Group) -> bool:
    # among the five groups of order 12, only the dihedral one has 7
    # elements of order 2
    return G.order == 12 and _involution_count(G) == 7


def _is_dic3_like(G: Group) -> bool:
    # order 12 with a unique involution: dicyclic, or the cyclic group
    # (which is abelian)
    return G.order == 12 and _involution_count(G) == 1 and not is_abelian(G)


def _diameter_one_violation(G: Group, graph: SimpleGraph) -> str | None:
    """Structure forced on a group whose Engel graph is complete: the Engel
    set is a normal abelian subgroup of odd order and index 2, and every
    vertex is an involution inverting it."""
    L = left_engel_set(G)
    members = set(L)
    if not is_abelian(G, L):
        return "Engel set is not abelian"
    if len(L) % 2 == 0:
        return "Engel set has even order"
    if any(G.order_of(a) == 2 for a in L):
        return "Engel set contains an involution"
    if G.order != 2 * len(L):
        return f"Engel set has index {G.order // len(L)}, not 2"
    for v in range(graph.vertex_count):
        x = graph.labels[v]
        if G.mul(x, x) != G.identity:
            return f"vertex {_describe(G, x)} is not an involution"
        cyclic_x = subgroup_generated(G, [x])
        if members & set(cyclic_x) != {G.identity}:
            return f"<x> meets the Engel set beyond the identity for {_describe(G, x)}"
        if set(G.mul(a, x) for a in L) | members != set(range(G.order)):
            return f"G != L<x> for {_describe(G, x)}"
        for a in L:
            if G.conjugate(a, x) != G.inv(a):
                return (
                    f"{_describe(G, x)} does not invert {_describe(G, a)}"
                )
    return None


def _universal_vertex_violation(G: Group, graph: SimpleGraph) -> str | None:
    """Any vertex adjacent to all others must be an involution that is its
    own centralizer."""
    n = graph.vertex_count
    if n < 2:
        return None
    for v in range(n):
        if len(graph.neighbors(v)) != n - 1:
            continue
        x = graph.labels[v]
        if G.mul(x, x) != G.identity:
            return f"universal vertex {_describe(G, x)} has x^2 != 1"
        if set(centralizer(G, x)) != set(subgroup_generated(G, [x])):
            return f"centralizer of universal vertex {_describe(G, x)} exceeds <x>"
    return None


def _metabelian_violation(G: Group, graph: SimpleGraph) -> str | None:
    """For metabelian groups: the induced subgraph on each vertex conjugacy
    class is connected with diameter <= 2, and the whole graph has diameter
    <= 6."""
    whole = diameter(graph)
    if whole > 6:
        return f"graph diameter is {whole}"
    position = {x: v for v, x in enumerate(graph.labels)}
    done: set[int] = set()
    for x in graph.labels:
        if x in done:
            continue
        cls = conjugacy_class(G, x)
        done.update(cls)
        sub = induced_subgraph(graph, [position[y] for y in cls])
        if len(connected_components(sub)) != 1:
            return f"class of {_describe(G, x)} induces a disconnected subgraph"
        d = diameter(sub)
        if d > 2:
            return f"class of {_describe(G, x)} induces diameter {d}"
    return None


def verify_theorems(max_order: int) -> list[TheoremVerdict]:
    """Run the survey-wide theorem checks over the catalog and report one
    named verdict per check, each failure carrying a counterexample."""
    if max_order < 12:
        raise ValueError(f"max_order must be at least 12, got {max_order}")
    evaluations = [
        e
        for e in (evaluate_group(p) for p in catalog_plans(max_order))
        if not e.report.is_engel
    ]
    verdicts: list[TheoremVerdict] = []

    expected_planar = {
        e.report.name
        for e in evaluations
        if _is_s3_like(e.group) or _is_d12_like(e.group) or _is_dic3_like(e.group)
    }
    actual_planar = {e.report.name for e in evaluations if e.report.metrics.planar}
    verdicts.append(
        TheoremVerdict(
            "planar_classification",
            expected_planar == actual_planar,
            f"planar={sorted(actual_planar)}"
            + (
                ""
                if expected_planar == actual_planar
                else f" but groups of the three planar types are {sorted(expected_planar)}"
            ),
        )
    )

    d12 = build_group("D12")
    dic3 = build_group("Dic3")
    graph_d12 = build_engel_graph(d12)
    graph_dic3 = build_engel_graph(dic3)
    iso = find_isomorphism(graph_d12, graph_dic3) is not None
    l_d12 = len(left_engel_set(d12))
    l_dic3 = len(left_engel_set(dic3))
    complement = d12.order - l_d12
    divisible = complement % l_dic3 == 0
    same_complement = complement == dic3.order - l_dic3
    verdicts.append(
        TheoremVerdict(
            "isomorphic_pair_divisibility",
            iso and divisible and same_complement,
            f"E_D12 ~ E_Dic3: {iso}; |L(Dic3)|={l_dic3} divides "
            f"|D12|-|L(D12)|={complement}: {divisible}; complements equal: {same_complement}",
        )
    )

    failures = []
    diameter_one = []
    for e in evaluations:
        if e.report.metrics.diameter == 1:
            diameter_one.append(e.report.name)
            violation = _diameter_one_violation(e.group, e.graph)
            if violation:
                failures.append(f"{e.report.name}: {violation}")
    verdicts.append(
        TheoremVerdict(
            "diameter_one_structure",
            not failures,
            "; ".join(failures) if failures else f"diameter-1 groups: {diameter_one}",
        )
    )

    failures = []
    for e in evaluations:
        violation = _universal_vertex_violation(e.group, e.graph)
        if violation:
            failures.append(f"{e.report.name}: {violation}")
    verdicts.append(
        TheoremVerdict("universal_vertex_structure", not failures, "; ".join(failures))
    )

    failures = [
        f"{e.report.name}: {e.report.checks['no_isolated_vertices'].detail}"
        for e in evaluations
        if not e.report.checks["no_isolated_vertices"].passed
    ]
    verdicts.append(
        TheoremVerdict("no_isolated_vertices", not failures, "; ".join(failures))
    )

    failures = []
    metabelian = []
    for e in evaluations:
        if is_abelian(e.group, derived_subgroup(e.group)):
            metabelian.append(e.report.name)
            violation = _metabelian_violation(e.group, e.graph)
            if violation:
                failures.append(f"{e.report.name}: {violation}")
    verdicts.append(
        TheoremVerdict(
            "metabelian_class_subgraphs",
            not failures,
            "; ".join(failures) if failures else f"metabelian groups checked: {len(metabelian)}",
        )
    )
    return verdicts
