"""Twin contraction of graphs, torsad packing of chord diagrams, and 2-tangles."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .diagram import ChordDiagram, EmbeddedDiagram
from .graphs import Graph
from .tangle import NotATangle, TangleCut, connector

__all__ = [
    "CondensedGraph", "Torsad", "CondensedChordDiagram", "TangleCut", "NotATangle",
    "neighborhood_graph", "condense_chord_diagram", "find_2tangles", "is_2tangle",
    "classify_connector", "tangle_correspondence_check", "merge_candidates",
]


@dataclass(frozen=True, eq=False)
class CondensedGraph:
    graph: Graph  # vertex ids are the least absorbed original vertex
    provenance: dict  # vertex -> frozenset of original vertices

    @property
    def vertices(self):
        return self.graph.vertices

    def weight(self, v) -> int:
        return self.graph.weight(v)

    def weight_multiset(self) -> list[int]:
        return sorted(self.graph.weight(v) for v in self.graph.vertices)

    def origin(self, v) -> frozenset:
        return self.provenance[v]


def merge_candidates(vertices, adj: dict, weights: dict):
    """Eligible twin pairs ``(a, b, new_weight)`` in increasing label order."""
    out = []
    for a, b in combinations(sorted(vertices), 2):
        wa, wb = weights[a], weights[b]
        if b in adj[a]:
            if wa >= 0 and wb >= 0 and adj[a] - {b} == adj[b] - {a}:
                out.append((a, b, wa + wb + 1))
        elif wa <= 0 and wb <= 0 and adj[a] == adj[b]:
            out.append((a, b, wa + wb - 1))
    return out


def contract(g: Graph, choose=None) -> CondensedGraph:
    """Merge twins until none is eligible; ``choose`` picks among candidates (default: first)."""
    adj = {v: set(g.adj[v]) for v in g.vertices}
    weights = {v: g.weight(v) for v in g.vertices}
    prov = {v: frozenset([v]) for v in g.vertices}
    while True:
        cands = merge_candidates(adj, adj, weights)
        if not cands:
            break
        a, b, w = cands[0] if choose is None else choose(cands)
        keep, drop = min(a, b), max(a, b)
        for u in adj.pop(drop):
            adj[u].discard(drop)
            if u != keep:
                adj[u].add(keep)
                adj[keep].add(u)
        adj[keep].discard(keep)
        weights[keep] = w
        del weights[drop]
        prov[keep] = prov[keep] | prov.pop(drop)
    edges = {frozenset((a, b)) for a in adj for b in adj[a]}
    return CondensedGraph(Graph.build(adj, edges, weights), prov)


def neighborhood_graph(g: Graph) -> CondensedGraph:
    return contract(g)


# --------------------------------------------------------------------------
# chord diagrams

@dataclass(frozen=True)
class Torsad:
    order: int
    kind: str  # "secant", "parallel", or "single" when order == 1
    sign: int | None = None

    @property
    def weight(self) -> int:
        if self.kind == "secant":
            return self.order - 1
        if self.kind == "parallel":
            return 1 - self.order
        return 0


@dataclass(frozen=True)
class CondensedChordDiagram:
    ends: tuple  # cyclic sequence of representative chord labels
    torsads: dict  # representative -> Torsad
    members: dict  # representative -> tuple of absorbed chords in circle order

    @property
    def weights(self) -> dict:
        return {a: t.weight for a, t in self.torsads.items()}


def condense_chord_diagram(cd: ChordDiagram) -> CondensedChordDiagram:
    ends = list(cd.ends)
    members = {a: [a] for a in cd.chords}
    kind = {a: "single" for a in cd.chords}

    def find_pair():
        m = len(ends)
        for i in range(m):
            a, b = ends[i], ends[(i + 1) % m]
            if a == b or m < 4:
                continue
            ja = next(k for k in range(m) if ends[k] == a and k != i)
            jb = next(k for k in range(m) if ends[k] == b and k != (i + 1) % m)
            if jb == (ja + 1) % m:
                new = "secant"
            elif jb == (ja - 1) % m:
                new = "parallel"
            else:
                continue
            if kind[a] in ("single", new) and kind[b] in ("single", new):
                return a, b, new
        return None

    while (hit := find_pair()) is not None:
        a, b, new = hit
        keep, drop = min(a, b), max(a, b)
        ends = [x for x in ends if x != drop]
        members[keep] = members[keep] + members.pop(drop)
        kind[keep] = new
        del kind[drop]
    signs = cd.signs
    torsads = {}
    for a, ms in members.items():
        sign = None
        if signs is not None and len({signs[x] for x in ms}) == 1:
            sign = signs[ms[0]]
        torsads[a] = Torsad(len(ms), kind[a], sign)
    return CondensedChordDiagram(tuple(ends), torsads, {a: tuple(ms) for a, ms in members.items()})


# --------------------------------------------------------------------------
# 2-tangles

def is_2tangle(g: Graph, t, allow_all: bool = False) -> bool:
    t = set(t)
    if not t or not t <= set(g.vertices):
        return False
    if len(t) == len(g.vertices) and not allow_all:
        return False
    inner = {v for v in t if g.adj[v] - t}
    outer = {u for v in t for u in g.adj[v] - t}
    return all(outer <= g.adj[v] for v in inner)


def find_2tangles(g: Graph) -> list[frozenset]:
    vs = g.vertices
    out = []
    for k in range(1, len(vs)):
        for t in combinations(vs, k):
            if is_2tangle(g, t):
                out.append(frozenset(t))
    return out


def tangle_image(cg: CondensedGraph, t) -> frozenset:
    t = set(t)
    return frozenset(v for v, p in cg.provenance.items() if p & t)


def tangle_correspondence_check(g: Graph) -> bool:
    cg = neighborhood_graph(g)
    return all(is_2tangle(cg.graph, tangle_image(cg, t), allow_all=True) for t in find_2tangles(g))


def classify_connector(emb: EmbeddedDiagram, cut: TangleCut) -> str:
    return connector(emb, cut.crossings, cut.nw)
