"""Enhanced level graphs and pointed dual graphs.

An enhanced level graph is the dual graph of a pointed stable curve
together with a weak total order on the vertices (recorded by integer
levels, top normalized to 0) and a nonnegative integer enhancement
``kappa`` on every edge.  An edge is *horizontal* when its two ends lie
on the same level, and then ``kappa = 0``; a *vertical* edge joins a
higher level to a strictly lower one and carries ``kappa >= 1``.

The graph carries a differential side.  On the quadratic side a leg of
order ``m`` houses a marked point of order ``m`` and the differential
has order ``kappa - 2`` at the upper end of a vertical edge,
``-kappa - 2`` at the lower end, and ``-2`` at either end of a
horizontal edge; the orders at a vertex of genus ``g`` sum to
``4g - 4``.  On the abelian side (used for double covers) the edge
orders are ``kappa - 1`` / ``-kappa - 1`` / ``-1`` and the vertex sum is
``2g - 2``.

Legs are unlabeled: a graph stores a multiset of leg orders per vertex.
All values are immutable after construction and every operation here is
a pure function.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class StructuralError(ValueError):
    """Malformed graph data: dangling references, duplicate ids, bad types.

    Distinct from an invariant failure, which is reported by
    :func:`validate` instead of raised.
    """


@dataclass(frozen=True)
class Vertex:
    id: str
    genus: int
    level: int


@dataclass(frozen=True)
class Edge:
    """Edge of an enhanced level graph.

    ``top``/``bottom`` name the endpoint on the higher/lower level; for
    a horizontal edge (``kappa = 0``, equal levels) the two fields are
    interchangeable.
    """

    id: str
    top: str
    bottom: str
    kappa: int


@dataclass(frozen=True)
class Leg:
    vertex: str
    order: int


@dataclass(frozen=True)
class EnhancedLevelGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    legs: tuple[Leg, ...]

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def build(vertices: Iterable[tuple[str, int, int]],
              edges: Iterable[tuple[str, str, str, int]],
              legs: Iterable[tuple[str, int]]) -> "EnhancedLevelGraph":
        return EnhancedLevelGraph(
            tuple(Vertex(*v) for v in vertices),
            tuple(Edge(*e) for e in edges),
            tuple(Leg(*l) for l in legs),
        )

    def check_references(self) -> None:
        """Raise :class:`StructuralError` on malformed data."""
        seen_v: set[str] = set()
        for v in self.vertices:
            if not isinstance(v.genus, int) or not isinstance(v.level, int):
                raise StructuralError(f"vertex {v.id}: genus/level must be integers")
            if v.genus < 0:
                raise StructuralError(f"vertex {v.id}: negative genus")
            if v.id in seen_v:
                raise StructuralError(f"duplicate vertex id {v.id!r}")
            seen_v.add(v.id)
        seen_e: set[str] = set()
        for e in self.edges:
            if e.id in seen_e:
                raise StructuralError(f"duplicate edge id {e.id!r}")
            seen_e.add(e.id)
            if e.top not in seen_v or e.bottom not in seen_v:
                raise StructuralError(f"edge {e.id}: endpoint not a vertex")
            if not isinstance(e.kappa, int) or e.kappa < 0:
                raise StructuralError(f"edge {e.id}: enhancement must be a nonnegative integer")
        for l in self.legs:
            if l.vertex not in seen_v:
                raise StructuralError(f"leg at {l.vertex!r}: not a vertex")
            if not isinstance(l.order, int):
                raise StructuralError(f"leg at {l.vertex}: order must be an integer")

    # -- basic lookups -------------------------------------------------------

    def vertex(self, vid: str) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def vertex_ids(self) -> list[str]:
        return [v.id for v in self.vertices]

    def level_of(self, vid: str) -> int:
        return self.vertex(vid).level

    def levels(self) -> list[int]:
        return sorted({v.level for v in self.vertices}, reverse=True)

    def is_horizontal(self, e: Edge) -> bool:
        return self.level_of(e.top) == self.level_of(e.bottom)

    def half_edges_at(self, vid: str) -> list[tuple[Edge, str]]:
        """All half-edges at a vertex as ``(edge, end)`` with end 'top'/'bottom'.

        A self-loop contributes two half-edges.
        """
        out = []
        for e in self.edges:
            if e.top == vid:
                out.append((e, "top"))
            if e.bottom == vid:
                out.append((e, "bottom"))
        return out

    def valence(self, vid: str) -> int:
        return len(self.half_edges_at(vid))

    def legs_at(self, vid: str) -> list[int]:
        return [l.order for l in self.legs if l.vertex == vid]

    def n_legs(self) -> int:
        return len(self.legs)

    # -- differential orders -------------------------------------------------

    def qord(self, e: Edge, end: str) -> int:
        """Quadratic order at an edge end: kappa-2 / -kappa-2, or -2 horizontally."""
        if self.is_horizontal(e):
            return -2
        return e.kappa - 2 if end == "top" else -e.kappa - 2

    def abelian_ord(self, e: Edge, end: str) -> int:
        """Abelian order at an edge end: kappa-1 / -kappa-1, or -1 horizontally."""
        if self.is_horizontal(e):
            return -1
        return e.kappa - 1 if end == "top" else -e.kappa - 1

    def order_sum_at(self, vid: str, kind: str = "quadratic") -> int:
        ords = self.qord if kind == "quadratic" else self.abelian_ord
        return sum(self.legs_at(vid)) + sum(ords(e, end) for e, end in self.half_edges_at(vid))

    # -- topology ------------------------------------------------------------

    def components(self) -> list[set[str]]:
        adj: dict[str, set[str]] = {v.id: set() for v in self.vertices}
        for e in self.edges:
            adj[e.top].add(e.bottom)
            adj[e.bottom].add(e.top)
        comps, seen = [], set()
        for v in self.vertices:
            if v.id in seen:
                continue
            stack, comp = [v.id], set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(adj[x] - comp)
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def h1(self) -> int:
        return len(self.edges) - len(self.vertices) + len(self.components())

    def genus(self) -> int:
        """Arithmetic genus sum(g_v) + h1; meaningful for connected graphs."""
        return sum(v.genus for v in self.vertices) + len(self.edges) - len(self.vertices) + 1


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

class Violation(NamedTuple):
    code: str
    where: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"{v.code} @ {v.where}: {v.message}" for v in self.violations)


def validate(graph: EnhancedLevelGraph, kind: str = "quadratic") -> ValidationReport:
    """Check all enhanced-level-graph invariants.

    ``kind`` selects the differential side for the order sums:
    ``"quadratic"`` requires ``4g_v - 4`` per vertex, ``"abelian"``
    requires ``2g_v - 2``.  Malformed references raise
    :class:`StructuralError`; invariant failures are collected in the
    report.
    """
    if kind not in ("quadratic", "abelian"):
        raise ValueError(f"unknown kind {kind!r}")
    graph.check_references()
    bad: list[Violation] = []
    if not graph.vertices:
        raise StructuralError("graph has no vertices")
    if not graph.is_connected():
        bad.append(Violation("connected", "-", "graph is not connected"))
    for v in graph.vertices:
        if v.level > 0:
            bad.append(Violation("level-range", v.id, f"level {v.level} > 0"))
    for e in graph.edges:
        lt, lb = graph.level_of(e.top), graph.level_of(e.bottom)
        if lt == lb and e.kappa != 0:
            bad.append(Violation("edge-level", e.id,
                                 f"horizontal edge must have kappa 0, got {e.kappa}"))
        if lt != lb and e.kappa == 0:
            bad.append(Violation("edge-level", e.id, "vertical edge must have kappa >= 1"))
        if lt < lb:
            bad.append(Violation("edge-level", e.id,
                                 f"'top' endpoint at level {lt} below 'bottom' at {lb}"))
    target = {"quadratic": lambda g: 4 * g - 4, "abelian": lambda g: 2 * g - 2}[kind]
    for v in graph.vertices:
        s = graph.order_sum_at(v.id, kind)
        want = target(v.genus)
        if s != want:
            bad.append(Violation("order-sum", v.id, f"order sum {s} != {want}"))
        special = len(graph.legs_at(v.id)) + graph.valence(v.id)
        if 2 * v.genus - 2 + special <= 0:
            bad.append(Violation("stability", v.id,
                                 f"2g-2+special = {2 * v.genus - 2 + special} <= 0"))
    return ValidationReport(not bad, tuple(bad))


def arithmetic_genus(graph: EnhancedLevelGraph) -> int:
    """sum(g_v) + (#edges - #vertices + 1); raises on a disconnected graph."""
    graph.check_references()
    if not graph.is_connected():
        raise ValueError("arithmetic genus of a disconnected graph")
    return graph.genus()


# ---------------------------------------------------------------------------
# subcurves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subcurve:
    """A nonempty proper subset of the vertices."""

    vertex_ids: frozenset[str]

    @staticmethod
    def of(ids: Iterable[str]) -> "Subcurve":
        return Subcurve(frozenset(ids))

    def check(self, graph: EnhancedLevelGraph) -> None:
        all_ids = set(graph.vertex_ids())
        if not self.vertex_ids:
            raise ValueError("empty subcurve")
        if not self.vertex_ids <= all_ids:
            raise StructuralError(f"unknown vertices {sorted(self.vertex_ids - all_ids)}")
        if self.vertex_ids == all_ids:
            raise ValueError("subcurve must be proper")

    def __str__(self) -> str:
        return "{" + ",".join(sorted(self.vertex_ids)) + "}"


class SubcurveStats(NamedTuple):
    boundary: int
    deg_omega_z: int
    genus: int


def boundary_edges(graph: EnhancedLevelGraph, Y: Subcurve) -> list[Edge]:
    ids = Y.vertex_ids
    return [e for e in graph.edges if (e.top in ids) != (e.bottom in ids)]


def interior_edges(graph: EnhancedLevelGraph, Y: Subcurve) -> list[Edge]:
    ids = Y.vertex_ids
    return [e for e in graph.edges if e.top in ids and e.bottom in ids]


def subcurve_stats(graph: EnhancedLevelGraph, Y: Subcurve, n_total: int) -> SubcurveStats:
    """Boundary size, deg of the pointed dualizing sheaf, and genus of Y.

    ``deg_omega_z = sum_{v in Y} (2 g_v - 2 + val_v + n_v)`` is the degree
    of omega_X(z) restricted to the subcurve; it is additive between Y
    and its complement with total ``2g - 2 + n``.  ``n_total`` must match
    the number of legs of the graph.
    """
    Y.check(graph)
    if n_total != graph.n_legs():
        raise ValueError(f"n_total = {n_total} but the graph carries {graph.n_legs()} legs")
    ids = Y.vertex_ids
    boundary = len(boundary_edges(graph, Y))
    deg = sum(2 * graph.vertex(v).genus - 2 + graph.valence(v) + len(graph.legs_at(v))
              for v in sorted(ids))
    inner = interior_edges(graph, Y)
    # arithmetic genus of the induced subcurve (1 - chi(O) also for disconnected Y)
    genus_y = sum(graph.vertex(v).genus for v in ids) + len(inner) - len(ids) + 1
    return SubcurveStats(boundary, deg, genus_y)


def proper_subcurves(graph: EnhancedLevelGraph) -> list[Subcurve]:
    """All nonempty proper vertex subsets, in a deterministic order."""
    ids = sorted(graph.vertex_ids())
    out = []
    for mask in range(1, (1 << len(ids)) - 1):
        out.append(Subcurve(frozenset(ids[i] for i in range(len(ids)) if mask >> i & 1)))
    return out


# ---------------------------------------------------------------------------
# JSON round trip
# ---------------------------------------------------------------------------

def graph_to_dict(graph: EnhancedLevelGraph) -> dict:
    return {
        "vertices": [{"id": v.id, "genus": v.genus, "level": v.level} for v in graph.vertices],
        "edges": [{"id": e.id, "top": e.top, "bottom": e.bottom, "kappa": e.kappa}
                  for e in graph.edges],
        "legs": [{"vertex": l.vertex, "order": l.order} for l in graph.legs],
    }


def graph_from_dict(data: dict) -> EnhancedLevelGraph:
    try:
        g = EnhancedLevelGraph(
            tuple(Vertex(v["id"], v["genus"], v["level"]) for v in data["vertices"]),
            tuple(Edge(e["id"], e["top"], e["bottom"], e["kappa"]) for e in data["edges"]),
            tuple(Leg(l["vertex"], l["order"]) for l in data.get("legs", [])),
        )
    except (KeyError, TypeError) as exc:
        raise StructuralError(f"malformed graph JSON: {exc}") from exc
    g.check_references()
    return g


def dump_graph(graph: EnhancedLevelGraph) -> str:
    return json.dumps(graph_to_dict(graph), indent=2, sort_keys=True) + "\n"


def load_graph(text: str) -> EnhancedLevelGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"invalid JSON: {exc}") from exc
    return graph_from_dict(data)


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def graph_to_dot(graph: EnhancedLevelGraph, name: str = "levelgraph") -> str:
    """Render with levels as ranked rows and enhancements as edge labels.

    Output ordering is canonical (sorted ids), so repeated runs are
    byte-identical.
    """
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=circle];"]
    for lvl in graph.levels():
        members = sorted(v.id for v in graph.vertices if v.level == lvl)
        lines.append("  { rank=same; " +
                     " ".join(f'"{m}";' for m in members) + f"  /* level {lvl} */ }}")
    for v in sorted(graph.vertices, key=lambda v: v.id):
        lines.append(f'  "{v.id}" [label="{v.id}\\ng={v.genus}"];')
    for e in sorted(graph.edges, key=lambda e: e.id):
        style = " style=dashed" if graph.is_horizontal(e) else ""
        lines.append(f'  "{e.top}" -> "{e.bottom}" [label="{e.kappa}"{style}];')
    leg_idx = 0
    for l in graph.legs:
        lines.append(f'  "leg{leg_idx}" [shape=plaintext label="{l.order}"];')
        lines.append(f'  "{l.vertex}" -> "leg{leg_idx}" [arrowhead=none];')
        leg_idx += 1
    lines.append("}")
    return "\n".join(lines) + "\n"
