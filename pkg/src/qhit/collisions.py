"""Boundary level graphs over a fixed smooth base curve.

When marked points of the principal stratum collide, the limiting
pointed stable curve is the smooth curve with trees of rational tails
attached, one tail vertex per cluster of collided points.  The
resulting enhanced level graphs are exactly:

* the underlying graph is a tree rooted at a unique top-level vertex of
  genus g; every other vertex has genus 0;
* there are no horizontal edges;
* the enhancement of the edge above a rational vertex is forced by the
  order sum at that vertex: with s legs and child enhancements kappa_c,
  kappa = s + sum(kappa_c - 2) + 2.  Equivalently kappa = (number of
  points collapsed below the edge) + 2.

Legs all have order 1 (the 4g - 4 simple zeros) and are unlabeled, so
enumeration is over nested set partitions of an unlabeled 4g-4 point
set, decorated with a level assignment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import EnhancedLevelGraph, validate


@dataclass(frozen=True)
class _Cluster:
    """A collision cluster: its own legs plus sub-clusters."""

    legs: int
    children: tuple["_Cluster", ...]

    @property
    def size(self) -> int:
        return self.legs + sum(c.size for c in self.children)


def _clusters_of_size(total: int, allow_levels: int) -> list[_Cluster]:
    """All clusters collapsing `total` points, with nesting depth bounded
    by allow_levels."""
    if total < 2:
        return []
    out = []
    for child_multiset in _child_multisets(total, allow_levels - 1, minimum_size=2):
        child_total = sum(c.size for c in child_multiset)
        legs = total - child_total
        if legs + len(child_multiset) >= 2:  # stability: >= 3 special points with the stalk
            out.append(_Cluster(legs, tuple(child_multiset)))
    return out


def _child_multisets(budget: int, allow_levels: int,
                     minimum_size: int) -> list[tuple[_Cluster, ...]]:
    """Multisets of clusters with total size <= budget (deduplicated)."""
    if allow_levels <= 0 or budget < minimum_size:
        return [()]
    pool: list[_Cluster] = []
    for size in range(minimum_size, budget + 1):
        pool.extend(_clusters_of_size(size, allow_levels))
    pool.sort(key=_cluster_key)
    results: set[tuple[_Cluster, ...]] = set()

    def extend(start: int, remaining: int, acc: tuple[_Cluster, ...]):
        results.add(acc)
        for i in range(start, len(pool)):
            c = pool[i]
            if c.size <= remaining:
                extend(i, remaining - c.size, acc + (c,))

    extend(0, budget, ())
    return sorted(results, key=lambda t: tuple(_cluster_key(c) for c in t))


def _cluster_key(c: _Cluster):
    return (c.size, c.legs, tuple(_cluster_key(x) for x in c.children))


def _depth(c: _Cluster) -> int:
    return 1 + max((_depth(x) for x in c.children), default=0)


def _level_assignments(clusters: tuple[_Cluster, ...], max_levels: int):
    """All level maps onto a contiguous range {0,-1,...}, respecting
    parent > child, as nested decorations ((cluster, level, children...))."""
    nodes: list[tuple] = []  # (path, cluster, parent_path)

    def walk(c: _Cluster, path: tuple, parent: tuple | None):
        nodes.append((path, c, parent))
        for i, ch in enumerate(c.children):
            walk(ch, path + (i,), path)

    for i, c in enumerate(clusters):
        walk(c, (i,), None)

    paths = [p for p, _c, _par in nodes]
    parent = {p: par for p, _c, par in nodes}
    out = []
    for levels in itertools.product(range(-max_levels + 1, 0), repeat=len(nodes)):
        lv = dict(zip(paths, levels))
        if any(parent[p] is not None and lv[p] >= lv[parent[p]] for p in paths):
            continue
        used = set(lv.values()) | {0}
        if used != set(range(-len(used) + 1, 1)):
            continue
        out.append(lv)
    return out


def _canonical(clusters, levels) -> tuple:
    def enc(c: _Cluster, path):
        return (levels[path], c.legs,
                tuple(sorted(enc(ch, path + (i,)) for i, ch in enumerate(c.children))))

    return tuple(sorted(enc(c, (i,)) for i, c in enumerate(clusters)))


def _to_graph(g: int, clusters, levels) -> EnhancedLevelGraph:
    vertices = [("v0", g, 0)]
    edges = []
    legs = []
    counter = itertools.count(1)

    def kappa_of(c: _Cluster) -> int:
        return c.size + 2

    def walk(c: _Cluster, path, parent_vid: str):
        vid = f"v{next(counter)}"
        vertices.append((vid, 0, levels[path]))
        edges.append((f"e{vid}", parent_vid, vid, kappa_of(c)))
        legs.extend([(vid, 1)] * c.legs)
        for i, ch in enumerate(c.children):
            walk(ch, path + (i,), vid)

    # deterministic child order: by canonical encoding
    order = sorted(range(len(clusters)),
                   key=lambda i: _canonical((clusters[i],), _shift(levels, (i,))))
    root_legs = 4 * g - 4 - sum(c.size for c in clusters)
    legs.extend([("v0", 1)] * root_legs)
    for i in order:
        walk(clusters[i], (i,), "v0")
    return EnhancedLevelGraph.build(vertices, edges, legs)


def _shift(levels: dict, prefix: tuple) -> dict:
    return {p[len(prefix) - 1:]: l for p, l in levels.items() if p[:len(prefix)] == prefix} | levels


def enumerate_collision_graphs(g: int, max_levels: int) -> list[EnhancedLevelGraph]:
    """Complete list, up to isomorphism with unlabeled legs, of boundary
    collision graphs on 4g - 4 simple zeros with at most ``max_levels``
    levels.  The smooth (one-level) graph is not a boundary stratum and
    is excluded."""
    if g < 2:
        raise ValueError("g >= 2 required")
    if max_levels < 2:
        raise ValueError("max_levels >= 2 required")
    n = 4 * g - 4
    seen: dict[tuple, EnhancedLevelGraph] = {}
    for clusters in _child_multisets(n, max_levels, minimum_size=2):
        if not clusters:
            continue
        for levels in _level_assignments(clusters, max_levels):
            key = _canonical(clusters, levels)
            if key in seen:
                continue
            graph = _to_graph(g, clusters, levels)
            rep = validate(graph)
            if not rep.ok:  # cannot happen; enumeration is constrained
                raise AssertionError(f"enumerated an invalid graph:\n{rep}")
            seen[key] = graph
    return [seen[k] for k in sorted(seen)]


def boundary_divisors(g: int) -> list[EnhancedLevelGraph]:
    """The two-level collision graphs (boundary divisors of the modified
    Hitchin base)."""
    return [gr for gr in enumerate_collision_graphs(g, 2) if len(gr.levels()) == 2]
