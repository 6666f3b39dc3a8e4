"""Interlacement graphs, the three-condition realizability test and realization counts."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import graphs
from .code import GaussCode
from .diagram import ChordDiagram, NotRealizable, build_chord_diagram, chords_interlaced
from .graphs import Graph

# A knot's interlacement graph is a plain ``Graph`` whose vertices are chord
# labels; ``weights`` carries local writhe and ``arcs`` the edge orientation.
InterlacementGraph = Graph


def build_interlacement(cd: ChordDiagram) -> Graph:
    chords = cd.chords
    edges = [(a, b) for a, b in combinations(chords, 2) if chords_interlaced(cd, a, b)]
    return Graph.build(chords, edges, dict(cd.signs) if cd.signs is not None else None)


def interlacement_of(code: GaussCode) -> Graph:
    return build_interlacement(build_chord_diagram(code))


def is_cocycle(g: Graph, f) -> bool:
    """True iff ``f`` is exactly the set of edges crossing some bipartition of the vertices."""
    f = {frozenset(e) for e in f}
    if not f <= set(g.edges):
        raise ValueError("f must be a subset of the edges")
    side: dict = {}
    for root in g.vertices:
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                want = side[x] ^ (frozenset((x, y)) in f)
                if y not in side:
                    side[y] = want
                    stack.append(y)
                elif side[y] != want:
                    return False
    return True


@dataclass(frozen=True)
class Verdict:
    realizable: bool
    condition: str | None = None  # "i", "ii" or "iii"
    witness: object = None

    def __bool__(self):
        return self.realizable

    def describe(self, name=str) -> str:
        if self.realizable:
            return "realizable"
        if self.condition == "i":
            return f"condition (i) fails at vertex {name(self.witness)}"
        if self.condition == "ii":
            x, y = self.witness
            return f"condition (ii) fails at pair ({name(x)}, {name(y)})"
        edges = ", ".join(f"{name(a)}-{name(b)}" for a, b in self.witness)
        return f"condition (iii) fails: {{{edges}}} is not a cocycle"


def check_graph(g: Graph) -> Verdict:
    for x in g.vertices:
        if len(g.adj[x]) % 2:
            return Verdict(False, "i", x)
    for x, y in combinations(g.vertices, 2):
        if not g.has_edge(x, y) and len(g.adj[x] & g.adj[y]) % 2:
            return Verdict(False, "ii", (x, y))
    even = sorted(
        tuple(sorted(e)) for e in g.edges
        if len(g.adj[min(e)] & g.adj[max(e)]) % 2 == 0
    )
    if not is_cocycle(g, even):
        return Verdict(False, "iii", tuple(even))
    return Verdict(True)


def check_realizability(code: GaussCode) -> Verdict:
    return check_graph(interlacement_of(code))


def connected_components(g: Graph) -> list[frozenset]:
    return graphs.components(g)


def count_realizations(code: GaussCode) -> int:
    v = check_realizability(code)
    if not v:
        raise NotRealizable(v.describe(code.name))
    r = len(connected_components(interlacement_of(code)))
    return 2 ** max(r - 1, 0)


def canonical_lg(g: Graph) -> tuple:
    return graphs.canonical_form(g)
