"""Small simple graphs with optional vertex weights and edge directions.

``canonical_form`` is an individualization-refinement search in the style
of nauty, cut down to what small graphs need: colour refinement, branching
on the first smallest non-trivial cell, and pruning by automorphisms found
along the way.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


@dataclass(frozen=True, eq=False)
class Graph:
    vertices: tuple
    edges: frozenset  # of frozenset pairs
    weights: dict | None = None
    arcs: frozenset | None = None  # (tail, head) per oriented edge

    @classmethod
    def build(cls, vertices, edges, weights=None, arcs=None) -> "Graph":
        es = frozenset(frozenset(e) for e in edges)
        if any(len(e) != 2 for e in es):
            raise ValueError("loops are not allowed")
        vs = tuple(sorted(set(vertices)))
        return cls(vs, es, dict(weights) if weights is not None else None,
                   frozenset(arcs) if arcs is not None else None)

    @cached_property
    def adj(self) -> dict:
        out = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            out[a].add(b)
            out[b].add(a)
        return {v: frozenset(s) for v, s in out.items()}

    def neighbors(self, v) -> frozenset:
        return self.adj[v]

    def degree(self, v) -> int:
        return len(self.adj[v])

    def has_edge(self, a, b) -> bool:
        return b in self.adj[a]

    def weight(self, v):
        return 0 if self.weights is None else self.weights.get(v, 0)

    def induced(self, vs) -> "Graph":
        vs = set(vs)
        return Graph.build(
            vs, [e for e in self.edges if e <= vs],
            {v: self.weights[v] for v in vs} if self.weights is not None else None,
            {a for a in self.arcs if a[0] in vs and a[1] in vs} if self.arcs is not None else None,
        )

    def __repr__(self):
        es = sorted(tuple(sorted(e)) for e in self.edges)
        return f"Graph(vertices={list(self.vertices)}, edges={es})"


def complement(g: Graph) -> Graph:
    """Edge complement; vertex weights are negated so cliques and anticliques trade places."""
    es = [frozenset(p) for p in combinations(g.vertices, 2) if not g.has_edge(*p)]
    w = {v: -x for v, x in g.weights.items()} if g.weights is not None else None
    return Graph.build(g.vertices, es, w)


def components(g: Graph) -> list[frozenset]:
    seen, out = set(), []
    for v in g.vertices:
        if v in seen:
            continue
        comp, stack = set(), [v]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(g.adj[x] - comp)
        seen |= comp
        out.append(frozenset(comp))
    return out


# --------------------------------------------------------------------------
# canonical labelling

def _direction_table(g: Graph) -> dict:
    d = {}
    if g.arcs is not None:
        for a, b in g.arcs:
            d[(a, b)] = 1
            d[(b, a)] = -1
    return d


def _refine(g: Graph, colors: dict, dirs: dict) -> dict:
    """Equitable refinement.  Colours are integers; their values depend only on structure."""
    while True:
        sig = {}
        for v in g.vertices:
            sig[v] = (colors[v], tuple(sorted((colors[u], dirs.get((v, u), 0)) for u in g.adj[v])))
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in g.vertices}
        if len(set(new.values())) == len(set(colors.values())):
            return new
        colors = new


def _individualize(colors: dict, v) -> dict:
    # v gets a colour just below its cell, keeping the order of all other cells
    out = {u: 2 * k for u, k in colors.items()}
    out[v] = 2 * colors[v] - 1
    return out


def _encode(g: Graph, order: list, dirs: dict) -> tuple:
    pos = {v: i for i, v in enumerate(order)}
    ws = tuple(g.weight(v) for v in order)
    es = sorted(tuple(sorted((pos[a], pos[b]))) + (dirs.get((a, b) if pos[a] < pos[b] else (b, a), 0),)
                for a, b in (tuple(e) for e in g.edges))
    return (len(order), ws, tuple(es))


def canonical_form(g: Graph) -> tuple:
    """Certificate equal for two graphs iff they are isomorphic (respecting weights and arcs)."""
    if not g.vertices:
        return (0, (), ())
    dirs = _direction_table(g)
    wrank = {w: i for i, w in enumerate(sorted({g.weight(v) for v in g.vertices}))}
    colors = _refine(g, {v: wrank[g.weight(v)] for v in g.vertices}, dirs)
    best: list = [None, None]  # encoding, order
    autos: list[dict] = []

    def orbits_fixing(prefix, cell):
        parent = {v: v for v in cell}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in autos:
            if all(a[p] == p for p in prefix):
                for v in cell:
                    w = a[v]
                    if w in parent:
                        parent[find(v)] = find(w)
        return find

    def search(colors, prefix):
        cells: dict = {}
        for v, c in colors.items():
            cells.setdefault(c, []).append(v)
        if len(cells) == len(colors):
            order = sorted(colors, key=colors.get)
            enc = _encode(g, order, dirs)
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, order
            elif enc == best[0]:
                autos.append(dict(zip(best[1], order)))
            return
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        cell = sorted(cells[target], key=repr)
        done = []
        for v in cell:
            if done:
                find = orbits_fixing(prefix, cell)
                if any(find(v) == find(u) for u in done):
                    continue
            search(_refine(g, _individualize(colors, v), dirs), prefix + [v])
            done.append(v)

    search(colors, [])
    return best[0]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return canonical_form(g) == canonical_form(h)
