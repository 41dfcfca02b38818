"""Canonical double covers of enhanced level graphs.

A quadratic differential pulls back to the square of an abelian
differential on its canonical double cover.  Combinatorially the cover
is a level-preserving degree-2 graph cover ``source -> target`` with an
involution, governed by parity:

* an edge with even enhancement ``kappa`` has two preimages, each of
  enhancement ``kappa/2``; an edge with odd ``kappa`` has one preimage
  of enhancement ``kappa``;
* a leg of order ``m`` has ``gcd(2, m)`` preimages of order
  ``(2 + m)/gcd(2, m) - 1``;
* a vertex carrying any odd-order leg or odd-enhancement half-edge is a
  branched component, hence has a single connected preimage of genus
  ``2 g - 1 + b/2`` where ``b`` counts the odd legs and odd half-edges;
  a vertex with all-even data may have either one preimage of that
  genus or two disjoint preimages of genus ``g``.

Vertices with a free fiber-size choice and pairs of even edges between
two split vertices are exactly where distinct covers of the same target
branch off (the "criss-cross").  The enumerator returns covers up to
isomorphism over the target; the labeled count is available separately.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .graphs import (
    Edge,
    EnhancedLevelGraph,
    Leg,
    StructuralError,
    Vertex,
    graph_from_dict,
    graph_to_dict,
    validate,
)


# ---------------------------------------------------------------------------
# signature bookkeeping
# ---------------------------------------------------------------------------

def mu_hat(mu: Iterable[int]) -> tuple[int, ...]:
    """Signature of the double cover: odd m -> one m+1, even m -> two m/2."""
    mu = tuple(mu)
    if sum(mu) % 2 != 0:
        raise ValueError(f"not a quadratic signature, odd total {sum(mu)}")
    out: list[int] = []
    for m in mu:
        if m % 2:
            out.append(m + 1)
        else:
            out.extend([m // 2, m // 2])
    return tuple(out)


def genus_count(mu: Iterable[int], g: int) -> tuple[int, int]:
    """Genus and number of marked points of the cover.

    With s1 odd and s2 even entries, the cover has genus 2g - 1 + s1/2
    and s1 + 2*s2 marked points.
    """
    mu = tuple(mu)
    if sum(mu) != 4 * g - 4:
        raise ValueError(f"signature sums to {sum(mu)}, expected {4 * g - 4}")
    s1 = sum(1 for m in mu if m % 2)
    s2 = len(mu) - s1
    if s1 % 2:
        raise ValueError("odd number of odd-order points admits no double cover")
    return 2 * g - 1 + s1 // 2, s1 + 2 * s2


# ---------------------------------------------------------------------------
# cover graphs
# ---------------------------------------------------------------------------

@dataclass
class CoverGraph:
    """A degree-2 cover of enhanced level graphs with involution.

    ``source`` is the abelian-side graph (orders kappa-1 / -kappa-1 at
    edge ends, vertex sums 2g-2); maps send source objects to target
    objects, ``sigma_*`` is the deck involution.  Legs are addressed by
    index into the respective ``legs`` tuples.
    """

    target: EnhancedLevelGraph
    source: EnhancedLevelGraph
    vertex_map: dict[str, str]
    edge_map: dict[str, str]
    leg_map: dict[int, int]
    sigma_vertex: dict[str, str]
    sigma_edge: dict[str, str]
    sigma_leg: dict[int, int]

    @property
    def prongs(self) -> dict[str, int]:
        """Per vertical source edge, the prong count (its enhancement)."""
        return {e.id: e.kappa for e in self.source.edges if not self.source.is_horizontal(e)}

    @property
    def source_connected(self) -> bool:
        return self.source.is_connected()

    def vertex_fiber(self, target_vid: str) -> list[str]:
        return sorted(s for s, t in self.vertex_map.items() if t == target_vid)

    def edge_fiber(self, target_eid: str) -> list[str]:
        return sorted(s for s, t in self.edge_map.items() if t == target_eid)

    def leg_fiber(self, target_idx: int) -> list[int]:
        return sorted(s for s, t in self.leg_map.items() if t == target_idx)

    # -- consistency ---------------------------------------------------------

    def problems(self) -> list[str]:
        """All violated cover invariants (empty list when consistent)."""
        bad: list[str] = []
        src, tgt = self.source, self.target
        for s, t in self.vertex_map.items():
            if src.vertex(s).level != tgt.vertex(t).level:
                bad.append(f"vertex {s}: level not preserved")
        for e in tgt.edges:
            fiber = self.edge_fiber(e.id)
            if e.kappa % 2 == 0 and len(fiber) != 2:
                bad.append(f"edge {e.id}: even kappa needs 2 preimages, got {len(fiber)}")
            if e.kappa % 2 == 1 and len(fiber) != 1:
                bad.append(f"edge {e.id}: odd kappa needs 1 preimage, got {len(fiber)}")
            want = e.kappa // 2 if e.kappa % 2 == 0 else e.kappa
            for s in fiber:
                ke = next(se for se in src.edges if se.id == s).kappa
                if ke != want:
                    bad.append(f"edge {s}: enhancement {ke} != {want}")
        for i, leg in enumerate(tgt.legs):
            fiber = self.leg_fiber(i)
            n_want = 2 - leg.order % 2
            m_want = (2 + leg.order) // (2 - leg.order % 2) - 1
            if len(fiber) != n_want:
                bad.append(f"leg {i}: expected {n_want} preimages, got {len(fiber)}")
            for s in fiber:
                if src.legs[s].order != m_want:
                    bad.append(f"leg {s}: order {src.legs[s].order} != {m_want}")
        for v in tgt.vertices:
            fiber = self.vertex_fiber(v.id)
            b = sum(1 for m in tgt.legs_at(v.id) if m % 2)
            b += sum(1 for e, _end in tgt.half_edges_at(v.id) if e.kappa % 2)
            if b and len(fiber) != 1:
                bad.append(f"vertex {v.id}: odd data forces fiber size 1")
            if len(fiber) == 1:
                want = 2 * v.genus - 1 + b // 2
                if src.vertex(fiber[0]).genus != want:
                    bad.append(f"vertex {fiber[0]}: genus != {want}")
            elif len(fiber) == 2:
                if any(src.vertex(s).genus != v.genus for s in fiber):
                    bad.append(f"vertex {v.id}: split preimages must carry genus {v.genus}")
            else:
                bad.append(f"vertex {v.id}: fiber size {len(fiber)}")
        # involution
        for s in self.sigma_vertex:
            if self.sigma_vertex[self.sigma_vertex[s]] != s:
                bad.append(f"sigma^2 != id at vertex {s}")
            if self.vertex_map[self.sigma_vertex[s]] != self.vertex_map[s]:
                bad.append(f"sigma not over the target at vertex {s}")
        for s in self.sigma_edge:
            if self.sigma_edge[self.sigma_edge[s]] != s:
                bad.append(f"sigma^2 != id at edge {s}")
            if self.edge_map[self.sigma_edge[s]] != self.edge_map[s]:
                bad.append(f"sigma not over the target at edge {s}")
        rep = validate(src, kind="abelian")
        for viol in rep.violations:
            if viol.code != "connected":  # disconnected sources are legitimate data
                bad.append(f"source {viol.code} @ {viol.where}: {viol.message}")
        return bad

    # -- serialization ---------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "target": graph_to_dict(self.target),
            "source": graph_to_dict(self.source),
            "maps": {
                "vertex": dict(sorted(self.vertex_map.items())),
                "edge": dict(sorted(self.edge_map.items())),
                "leg": {str(k): v for k, v in sorted(self.leg_map.items())},
            },
            "sigma": {
                "vertex": dict(sorted(self.sigma_vertex.items())),
                "edge": dict(sorted(self.sigma_edge.items())),
                "leg": {str(k): v for k, v in sorted(self.sigma_leg.items())},
            },
        }

    @staticmethod
    def from_dict(data: dict) -> "CoverGraph":
        try:
            return CoverGraph(
                target=graph_from_dict(data["target"]),
                source=graph_from_dict(data["source"]),
                vertex_map=dict(data["maps"]["vertex"]),
                edge_map=dict(data["maps"]["edge"]),
                leg_map={int(k): v for k, v in data["maps"]["leg"].items()},
                sigma_vertex=dict(data["sigma"]["vertex"]),
                sigma_edge=dict(data["sigma"]["edge"]),
                sigma_leg={int(k): v for k, v in data["sigma"]["leg"].items()},
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise StructuralError(f"malformed cover JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _odd_count(graph: EnhancedLevelGraph, vid: str) -> int:
    b = sum(1 for m in graph.legs_at(vid) if m % 2)
    b += sum(1 for e, _end in graph.half_edges_at(vid) if e.kappa % 2)
    return b


def _build_cover(graph: EnhancedLevelGraph, fibers: dict[str, int],
                 choices: dict[str, int]) -> CoverGraph:
    """Assemble the labeled cover for a fiber-size vector and edge choices."""
    vmap: dict[str, str] = {}
    sig_v: dict[str, str] = {}
    src_vertices: list[Vertex] = []

    def preimages(vid: str) -> list[str]:
        return [f"{vid}^"] if fibers[vid] == 1 else [f"{vid}^1", f"{vid}^2"]

    for v in graph.vertices:
        if fibers[v.id] == 1:
            b = _odd_count(graph, v.id)
            src_vertices.append(Vertex(f"{v.id}^", 2 * v.genus - 1 + b // 2, v.level))
            vmap[f"{v.id}^"] = v.id
            sig_v[f"{v.id}^"] = f"{v.id}^"
        else:
            for j in (1, 2):
                src_vertices.append(Vertex(f"{v.id}^{j}", v.genus, v.level))
                vmap[f"{v.id}^{j}"] = v.id
            sig_v[f"{v.id}^1"] = f"{v.id}^2"
            sig_v[f"{v.id}^2"] = f"{v.id}^1"

    emap: dict[str, str] = {}
    sig_e: dict[str, str] = {}
    src_edges: list[Edge] = []

    def add_pair(eid: str, ends1: tuple[str, str], ends2: tuple[str, str], kap: int) -> None:
        src_edges.append(Edge(f"{eid}^1", ends1[0], ends1[1], kap))
        src_edges.append(Edge(f"{eid}^2", ends2[0], ends2[1], kap))
        emap[f"{eid}^1"] = emap[f"{eid}^2"] = eid
        sig_e[f"{eid}^1"] = f"{eid}^2"
        sig_e[f"{eid}^2"] = f"{eid}^1"

    for e in graph.edges:
        if e.kappa % 2 == 1:
            u, w = preimages(e.top)[0], preimages(e.bottom)[0]
            src_edges.append(Edge(f"{e.id}^", u, w, e.kappa))
            emap[f"{e.id}^"] = e.id
            sig_e[f"{e.id}^"] = f"{e.id}^"
            continue
        kap = e.kappa // 2
        if e.top == e.bottom:  # horizontal self-loop
            ups = preimages(e.top)
            if fibers[e.top] == 1 or choices.get(e.id, 0) == 0:
                v1 = ups[0]
                v2 = ups[-1]
                add_pair(e.id, (v1, v1), (v2, v2), kap)
            else:
                add_pair(e.id, (ups[0], ups[1]), (ups[1], ups[0]), kap)
            continue
        ups, downs = preimages(e.top), preimages(e.bottom)
        if len(ups) == 1 and len(downs) == 1:
            add_pair(e.id, (ups[0], downs[0]), (ups[0], downs[0]), kap)
        elif len(ups) == 2 and len(downs) == 1:
            add_pair(e.id, (ups[0], downs[0]), (ups[1], downs[0]), kap)
        elif len(ups) == 1 and len(downs) == 2:
            add_pair(e.id, (ups[0], downs[0]), (ups[0], downs[1]), kap)
        else:
            c = choices.get(e.id, 0)
            add_pair(e.id, (ups[0], downs[c]), (ups[1], downs[1 - c]), kap)

    lmap: dict[int, int] = {}
    sig_l: dict[int, int] = {}
    src_legs: list[Leg] = []
    for i, leg in enumerate(graph.legs):
        if leg.order % 2 == 1:
            src_legs.append(Leg(preimages(leg.vertex)[0], leg.order + 1))
            j = len(src_legs) - 1
            lmap[j] = i
            sig_l[j] = j
        else:
            pre = preimages(leg.vertex)
            v1, v2 = pre[0], pre[-1]
            src_legs.append(Leg(v1, leg.order // 2))
            src_legs.append(Leg(v2, leg.order // 2))
            j = len(src_legs) - 2
            lmap[j] = lmap[j + 1] = i
            sig_l[j] = j + 1
            sig_l[j + 1] = j

    source = EnhancedLevelGraph(tuple(src_vertices), tuple(src_edges), tuple(src_legs))
    return CoverGraph(graph, source, vmap, emap, lmap, sig_v, sig_e, sig_l)


def _choice_edges(graph: EnhancedLevelGraph, fibers: dict[str, int]) -> list[str]:
    """Edges whose preimage attachment is a genuine binary choice."""
    out = []
    for e in graph.edges:
        if e.kappa % 2:
            continue
        if e.top == e.bottom:
            if fibers[e.top] == 2:
                out.append(e.id)
        elif fibers[e.top] == 2 and fibers[e.bottom] == 2:
            out.append(e.id)
    return out


def _canonical_choice_key(graph: EnhancedLevelGraph, fibers: dict[str, int],
                          choices: dict[str, int]) -> tuple:
    """Orbit representative of the choice bits under per-fiber relabeling.

    Swapping the two sheets over a split vertex flips the bit of every
    incident split-split edge; self-loop bits are invariant.  The key is
    the lexicographic minimum over all sheet swaps.
    """
    split = sorted(v for v, f in fibers.items() if f == 2)
    ce = _choice_edges(graph, fibers)
    loops = [e for e in ce if next(x for x in graph.edges if x.id == e).top ==
             next(x for x in graph.edges if x.id == e).bottom]
    plain = [e for e in ce if e not in loops]
    edge_by_id = {e.id: e for e in graph.edges}
    best = None
    for flips in itertools.product((0, 1), repeat=len(split)):
        flip = dict(zip(split, flips))
        vec = tuple((choices[e] + flip[edge_by_id[e].top] + flip[edge_by_id[e].bottom]) % 2
                    for e in sorted(plain))
        if best is None or vec < best:
            best = vec
    loop_vec = tuple(choices[e] for e in sorted(loops))
    fiber_vec = tuple(fibers[v.id] for v in graph.vertices)
    return (fiber_vec, best if best is not None else (), loop_vec)


def enumerate_double_covers(graph: EnhancedLevelGraph) -> list[CoverGraph]:
    """All canonical double covers of a valid graph, up to isomorphism
    over the target.

    Vertices with all-even adjacent orders branch into both fiber-size
    options; the list is complete and duplicate-free, canonically
    sorted.  Use :func:`count_double_covers` for the labeled count.
    """
    rep = validate(graph)
    if not rep.ok:
        raise ValueError(f"invalid graph:\n{rep}")
    covers, _ = _enumerate(graph)
    return covers


def count_double_covers(graph: EnhancedLevelGraph) -> tuple[int, int]:
    """(labeled, up-to-isomorphism) counts of double covers."""
    rep = validate(graph)
    if not rep.ok:
        raise ValueError(f"invalid graph:\n{rep}")
    covers, labeled = _enumerate(graph)
    return labeled, len(covers)


def _enumerate(graph: EnhancedLevelGraph) -> tuple[list[CoverGraph], int]:
    free = [v.id for v in graph.vertices if _odd_count(graph, v.id) == 0]
    forced = {v.id: 1 for v in graph.vertices if _odd_count(graph, v.id) > 0}
    seen: dict[tuple, CoverGraph] = {}
    labeled = 0
    for sizes in itertools.product((1, 2), repeat=len(free)):
        fibers = dict(forced)
        fibers.update(dict(zip(free, sizes)))
        ce = _choice_edges(graph, fibers)
        for bits in itertools.product((0, 1), repeat=len(ce)):
            choices = dict(zip(ce, bits))
            labeled += 1
            key = _canonical_choice_key(graph, fibers, choices)
            if key in seen:
                continue
            cover = _build_cover(graph, fibers, choices)
            probs = cover.problems()
            if probs:  # cannot happen for valid graphs; guard anyway
                raise AssertionError("inconsistent cover: " + "; ".join(probs))
            seen[key] = cover
    ordered = [seen[k] for k in sorted(seen)]
    return ordered, labeled


# ---------------------------------------------------------------------------
# necessary conditions for membership in the rank-two spectral image
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StableGraph:
    """Bare stable dual graph: vertices (id, genus) and edges (id, v, w)."""

    vertices: tuple[tuple[str, int], ...]
    edges: tuple[tuple[str, str, str], ...]

    def genus_of(self, vid: str) -> int:
        for v, g in self.vertices:
            if v == vid:
                return g
        raise KeyError(vid)

    def arithmetic_genus(self) -> int:
        return sum(g for _v, g in self.vertices) + len(self.edges) - len(self.vertices) + 1


@dataclass
class GraphInvolution:
    vertex: dict[str, str]
    edge: dict[str, str]


@dataclass
class Rank2Check:
    status: str  # "pass-necessary" | "fail"
    certificate: dict | None = None
    reason: str | None = None


def _involution_ok(graph: StableGraph, sigma: GraphInvolution) -> str | None:
    vids = {v for v, _ in graph.vertices}
    eids = {e for e, _, _ in graph.edges}
    if set(sigma.vertex) != vids or set(sigma.vertex.values()) != vids:
        return "vertex map is not a bijection of the vertices"
    if set(sigma.edge) != eids or set(sigma.edge.values()) != eids:
        return "edge map is not a bijection of the edges"
    for v in vids:
        if sigma.vertex[sigma.vertex[v]] != v:
            return f"sigma^2 != id at vertex {v}"
        if graph.genus_of(sigma.vertex[v]) != graph.genus_of(v):
            return f"sigma does not preserve genus at {v}"
    ends = {e: frozenset((a, b)) for e, a, b in graph.edges}
    for e in eids:
        if sigma.edge[sigma.edge[e]] != e:
            return f"sigma^2 != id at edge {e}"
        a, b = next((a, b) for x, a, b in graph.edges if x == e)
        image = frozenset((sigma.vertex[a], sigma.vertex[b]))
        if ends[sigma.edge[e]] != image:
            return f"sigma is not a graph map at edge {e}"
    return None


def _ordered_partitions(items: list[str]):
    """All ordered set partitions (level structures, top block first)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in _ordered_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]
        for i in range(len(sub) + 1):
            yield sub[:i] + [[first]] + sub[i:]


def check_rank2_image_conditions(graph: StableGraph, sigma: GraphInvolution) -> Rank2Check:
    """Necessary combinatorial conditions for a stable curve to arise as a
    rank-two spectral limit.

    Passes when some level structure puts a single vertex, or two
    vertices exchanged by the involution, on top, and the graph obtained
    by replacing the involution-fixed self-nodes with rational bridges
    admits integer enhancements solving all abelian order sums for
    4g - 4 double zeros.  The global residue condition is not checked,
    so a pass is necessary, not sufficient.
    """
    bad = _involution_ok(graph, sigma)
    if bad is not None:
        raise ValueError(f"involution is not a graph automorphism: {bad}")
    ghat = graph.arithmetic_genus()
    if ghat < 5 or (ghat + 3) % 4 != 0:
        raise ValueError(f"arithmetic genus {ghat} is not of the form 4g-3 with g >= 2")
    g = (ghat + 3) // 4
    n_zeros = 4 * g - 4

    # replace sigma-fixed self-nodes by rational bridges (two horizontal edges)
    vertices = list(graph.vertices)
    edges = []
    sig_v = dict(sigma.vertex)
    sig_e = dict(sigma.edge)
    bridge_of: dict[str, str] = {}  # bridge vertex -> carrier vertex
    for e, a, b in graph.edges:
        if a == b and sigma.edge[e] == e:
            w = f"{e}:bridge"
            vertices.append((w, 0))
            edges.append((f"{e}:1", a, w))
            edges.append((f"{e}:2", a, w))
            del sig_e[e]
            sig_e[f"{e}:1"] = f"{e}:2"
            sig_e[f"{e}:2"] = f"{e}:1"
            sig_v[w] = w
            bridge_of[w] = a
        else:
            edges.append((e, a, b))

    vids = [v for v, _g in vertices]
    genus = dict(vertices)

    def half_edges(vid):
        out = []
        for e, a, b in edges:
            if a == vid:
                out.append((e, a, b))
            if b == vid:
                out.append((e, b, a))
        return out

    # sigma-orbits of vertices (for the zero distribution) and of edges
    def orbit_reps(ids, sig):
        reps = []
        for x in sorted(ids):
            if sig[x] == x or x <= sig[x]:
                reps.append(x)
        return reps

    reasons = set()
    for part in _ordered_partitions(sorted(vids)):
        level = {}
        for i, block in enumerate(part):
            for v in block:
                level[v] = -i
        # bridges stay on the level of their carrier
        if any(level[w] != level[c] for w, c in bridge_of.items()):
            continue
        if any(level[sig_v[v]] != level[v] for v in vids):
            continue
        top = part[0]
        if not (len(top) == 1 or (len(top) == 2 and sig_v[top[0]] == top[1])):
            reasons.add("top level is neither one vertex nor a sigma-swapped pair")
            continue
        cert = _solve_enhancements(vids, genus, edges, level, sig_v, sig_e,
                                   bridge_of, n_zeros, orbit_reps)
        if cert is not None:
            cert["levels"] = level
            return Rank2Check("pass-necessary", certificate=cert)
        reasons.add("no integer enhancement assignment solves the abelian order sums")
    return Rank2Check("fail", reason="; ".join(sorted(reasons)) or
                      "no admissible level structure")


def _solve_enhancements(vids, genus, edges, level, sig_v, sig_e, bridge_of,
                        n_zeros, orbit_reps):
    """Search zero distributions and vertical enhancements for one level
    structure; vertices are processed top level first so every edge is
    bounded when reached."""
    vertical = [(e, a, b) if level[a] > level[b] else (e, b, a)
                for e, a, b in edges if level[a] != level[b]]
    upper = {e: a for e, a, _b in vertical}
    lower = {e: b for e, _a, b in vertical}
    vorder = sorted(vids, key=lambda v: (-level[v], v))

    v_reps = [v for v in orbit_reps(vids, sig_v) if v not in bridge_of]
    free_zero_slots = len(v_reps)

    def zero_distributions(reps, total):
        if not reps:
            if total == 0:
                yield {}
            return
        v, rest = reps[0], reps[1:]
        weight = 1 if sig_v[v] == v else 2
        for n in range(0, total // weight + 1):
            for tail in zero_distributions(rest, total - weight * n):
                d = {v: n, sig_v[v]: n}
                d.update(tail)
                yield d

    if free_zero_slots == 0 and n_zeros != 0:
        return None

    edge_orbit = {}
    for e, _a, _b in vertical:
        rep = min(e, sig_e[e])
        edge_orbit[e] = rep

    horiz_count = {v: 0 for v in vids}
    for e, a, b in edges:
        if level[a] == level[b]:
            horiz_count[a] += 1
            horiz_count[b] += 1

    for zeros in zero_distributions(v_reps, n_zeros):
        zeros = {v: zeros.get(v, 0) for v in vids}
        kappa: dict[str, int] = {}

        def solve(vi: int) -> dict | None:
            if vi == len(vorder):
                return dict(kappa)
            v = vorder[vi]
            # down-edges at v grouped by orbit; up-edge values are known
            rhs = 2 * genus[v] - 2 - 2 * zeros[v] + horiz_count[v]
            down = [e for e in upper if upper[e] == v]
            for e in lower:
                if lower[e] == v:
                    rhs += kappa[edge_orbit[e]] + 1
            fixed = [e for e in down if edge_orbit[e] in kappa]
            todo_orbits = sorted({edge_orbit[e] for e in down} - set(kappa))
            rhs -= sum(kappa[edge_orbit[e]] - 1 for e in fixed)
            mult = {o: sum(1 for e in down if edge_orbit[e] == o and edge_orbit[e] not in kappa)
                    for o in todo_orbits}

            def assign(i: int, rem: int) -> dict | None:
                if i == len(todo_orbits):
                    if rem == 0:
                        return solve(vi + 1)
                    return None
                o = todo_orbits[i]
                m = mult[o]
                k = 1
                while m * (k - 1) <= rem:
                    kappa[o] = k
                    res = assign(i + 1, rem - m * (k - 1))
                    if res is not None:
                        return res
                    del kappa[o]
                    k += 1
                return None

            if not todo_orbits:
                return solve(vi + 1) if rhs == 0 else None
            if rhs < 0:
                return None
            return assign(0, rhs)

        sol = solve(0)
        if sol is not None:
            full = {e: sol[edge_orbit[e]] for e in upper}
            return {"zeros": zeros, "enhancements": full}
    return None
