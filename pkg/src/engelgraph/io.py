"""Group-spec and cycle-notation parsing, DOT and JSON serialization.

Group specs
-----------
``S<n>`` symmetric, ``A<n>`` alternating, ``C<n>`` cyclic, ``D<n>`` dihedral
of ORDER n (even, >= 6), ``Dic<n>`` dicyclic of order 4n, ``T`` an alias for
``Dic3``, ``<spec>x<spec>`` direct products of family terms, and ``@<path>``
a generator file.  A ``@`` spec consumes the rest of the text (file groups
cannot appear inside products; list extra generators in the file instead).

Generator files hold one permutation per line in disjoint-cycle notation;
``#`` starts a comment and blank lines are ignored.
"""

from __future__ import annotations

import json
import math
import os
import re
from dataclasses import dataclass
from functools import reduce
from pathlib import Path
from typing import TYPE_CHECKING, Union

from .errors import ParseError
from .families import (
    alternating_group,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    direct_product,
    symmetric_group,
)
from .groups import DEFAULT_CLOSURE_CAP, DEFAULT_TABLE_THRESHOLD, Group, closure
from .permutations import Permutation

if TYPE_CHECKING:  # pragma: no cover
    from .graphs import SimpleGraph
    from .survey import GroupReport

CLOSURE_CAP_ENV = "ENGEL_CLOSURE_CAP"

_FAMILY_CODES = {
    "S": "symmetric",
    "A": "alternating",
    "C": "cyclic",
    "D": "dihedral",
    "Dic": "dicyclic",
}
_CODE_OF = {kind: code for code, kind in _FAMILY_CODES.items()}
_TERM_RE = re.compile(r"(Dic|S|A|C|D)(\d+)$")


@dataclass(frozen=True)
class FamilySpec:
    """One family constructor; ``param`` is the number in the code (so the
    order for dihedral, a quarter of the order for dicyclic)."""

    kind: str
    param: int

    def order(self) -> int:
        if self.kind == "symmetric":
            return math.factorial(self.param)
        if self.kind == "alternating":
            return math.factorial(self.param) // 2
        if self.kind == "cyclic":
            return self.param
        if self.kind == "dihedral":
            return self.param
        return 4 * self.param  # dicyclic


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple["GroupSpec", ...]

    def order(self) -> int:
        return math.prod(f.order() for f in self.factors)


@dataclass(frozen=True)
class FileSpec:
    path: str


GroupSpec = Union[FamilySpec, ProductSpec, FileSpec]


def _parse_term(term: str, position: int) -> FamilySpec:
    if term == "T":
        return FamilySpec("dicyclic", 3)
    m = _TERM_RE.match(term)
    if m is None:
        raise ParseError(
            f"expected a family code like S4, D12, Dic3, or T, got {term!r}", position
        )
    code, number = m.group(1), int(m.group(2))
    kind = _FAMILY_CODES[code]
    if kind in ("symmetric", "cyclic") and number < 1:
        raise ParseError(f"{code}<n> needs n >= 1, got {term!r}", position)
    if kind == "alternating" and number < 2:
        raise ParseError(f"A<n> needs n >= 2, got {term!r}", position)
    if kind == "dihedral" and (number < 6 or number % 2):
        raise ParseError(
            f"D<n> is the dihedral group of ORDER n, so n must be even and >= 6, got {term!r}",
            position,
        )
    if kind == "dicyclic" and number < 2:
        raise ParseError(
            f"Dic<n> has order 4n, so n must be >= 2, got {term!r}", position
        )
    return FamilySpec(kind, number)


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a group spec; raises ParseError with the offending position."""
    s = text.strip()
    if not s:
        raise ParseError("empty group spec", 0)
    offset = text.index(s[0])
    if s.startswith("@"):
        path = s[1:].strip()
        if not path:
            raise ParseError("expected a file path after '@'", offset + 1)
        return FileSpec(path)
    factors = []
    position = offset
    for term in s.split("x"):
        if not term:
            raise ParseError("expected a family code before/after 'x'", position)
        factors.append(_parse_term(term, position))
        position += len(term) + 1
    if len(factors) == 1:
        return factors[0]
    return ProductSpec(tuple(factors))


def render_group_spec(spec: GroupSpec) -> str:
    """Canonical text for a spec; parsing it back yields an equal plan."""
    if isinstance(spec, FamilySpec):
        return f"{_CODE_OF[spec.kind]}{spec.param}"
    if isinstance(spec, ProductSpec):
        return "x".join(render_group_spec(f) for f in spec.factors)
    return f"@{spec.path}"


def parse_cycles(line: str) -> Permutation:
    """Permutation from disjoint-cycle notation such as "(1,2,3)(4,5)".

    "()" is the identity; spaces are allowed around points and cycles.
    Raises ParseError for malformed text, repeated points, or points < 1.
    """
    s = line
    i = 0
    n = len(s)
    seen: dict[int, int] = {}  # point -> position it first appeared at
    cycles: list[list[int]] = []
    saw_any = False

    def skip_ws(j: int) -> int:
        while j < n and s[j].isspace():
            j += 1
        return j

    i = skip_ws(i)
    while i < n:
        if s[i] != "(":
            raise ParseError(f"expected '(' , got {s[i]!r}", i)
        saw_any = True
        i = skip_ws(i + 1)
        points: list[int] = []
        if i < n and s[i] == ")":
            i = skip_ws(i + 1)
            continue  # "()" is the identity cycle
        while True:
            start = i
            while i < n and s[i].isdigit():
                i += 1
            if i == start:
                raise ParseError("expected a point number", i)
            point = int(s[start:i])
            if point < 1:
                raise ParseError(f"points are 1-based, got {point}", start)
            if point in seen:
                raise ParseError(f"point {point} repeated (first at position {seen[point]})", start)
            seen[point] = start
            points.append(point)
            i = skip_ws(i)
            if i < n and s[i] == ",":
                i = skip_ws(i + 1)
                continue
            if i < n and s[i] == ")":
                i = skip_ws(i + 1)
                break
            raise ParseError("expected ',' or ')'", i)
        cycles.append(points)
    if not saw_any:
        raise ParseError("expected a permutation in cycle notation", 0)
    return Permutation.from_cycles(cycles)


def read_generator_file(path: str | os.PathLike) -> list[Permutation]:
    """Generators from a file, one permutation per line in cycle notation."""
    perms = []
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            perms.append(parse_cycles(line))
        except ParseError as err:
            raise ParseError(f"{path}:{lineno}: {err}") from err
    if not perms:
        raise ParseError(f"no generators found in {path}")
    return perms


def _closure_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CLOSURE_CAP_ENV)
    return int(env) if env else DEFAULT_CLOSURE_CAP


def build_group(
    spec: GroupSpec | str,
    *,
    base_dir: str | os.PathLike = ".",
    cap: int | None = None,
    table_threshold: int = DEFAULT_TABLE_THRESHOLD,
) -> Group:
    """Realize a spec (or spec text) as a Group named by its canonical
    rendering.  ``cap`` bounds closure enumeration for ``@`` specs and
    defaults to the ENGEL_CLOSURE_CAP environment variable when set."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    name = render_group_spec(spec)
    if isinstance(spec, FileSpec):
        gens = read_generator_file(Path(base_dir) / spec.path)
        return closure(gens, name, cap=_closure_cap(cap), table_threshold=table_threshold)
    if isinstance(spec, ProductSpec):
        groups = [build_group(f, base_dir=base_dir, cap=cap, table_threshold=table_threshold)
                  for f in spec.factors]
        product = reduce(lambda a, b: direct_product(a, b, table_threshold=table_threshold), groups)
        product.name = name
        return product
    maker = {
        "symmetric": symmetric_group,
        "alternating": alternating_group,
        "cyclic": cyclic_group,
        "dihedral": dihedral_group,
    }.get(spec.kind)
    if maker is not None:
        return maker(spec.param, table_threshold=table_threshold)
    return dicyclic_group(4 * spec.param, table_threshold=table_threshold)


def _dot_escape(label: str) -> str:
    return label.replace("\\", "\\\\").replace('"', '\\"')


def write_dot(g: "SimpleGraph", labels: list[str] | tuple[str, ...]) -> str:
    """Deterministic DOT text: vertices in canonical order, each edge once."""
    from .errors import LabelMismatch

    if len(labels) != g.vertex_count:
        raise LabelMismatch(
            f"{len(labels)} labels for {g.vertex_count} vertices"
        )
    lines = ["graph {"]
    for i, label in enumerate(labels):
        lines.append(f'  v{i} [label="{_dot_escape(str(label))}"];')
    for u, v in g.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_report(report: "GroupReport") -> str:
    """Deterministic JSON for a group report, with this fixed key order:
    name, order, isEngel, fittingOrder, vertexCount, edgeCount,
    componentCount, diameter, cliqueNumber, planar, isolatedCount, checks.

    A disconnected diameter serializes as the string "inf" (JSON has no
    infinity literal); for an Engel group the graph fields are zeros and
    planar is true (the empty graph is planar).
    """
    m = report.metrics
    if m is None:
        graph_fields = {
            "vertexCount": 0,
            "edgeCount": 0,
            "componentCount": 0,
            "diameter": 0,
            "cliqueNumber": 0,
            "planar": True,
            "isolatedCount": 0,
        }
    else:
        graph_fields = {
            "vertexCount": m.vertex_count,
            "edgeCount": m.edge_count,
            "componentCount": m.component_count,
            "diameter": "inf" if math.isinf(m.diameter) else int(m.diameter),
            "cliqueNumber": m.clique_number,
            "planar": m.planar,
            "isolatedCount": m.isolated_count,
        }
    payload = {
        "name": report.name,
        "order": report.order,
        "isEngel": report.is_engel,
        "fittingOrder": report.fitting_order,
        **graph_fields,
        "checks": {name: report.checks[name].passed for name in sorted(report.checks)},
    }
    return json.dumps(payload, indent=2) + "\n"
