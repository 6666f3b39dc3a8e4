"""Flypes on reduced alternating diagrams, flype orbits, flype cycles and the cwCD.

A flype opportunity is a crossing ``c`` glued by two adjacent slots to a
2-tangle ``T``.  The flype turns ``T`` over about the band axis and moves
``c`` to the opposite side.

Flype cycles are found as rings: every opportunity names three "gaps"
(pairs of edges) on one circle of 2-tangles, and gaps sharing an
opportunity belong to the same ring.  Cutting a ring's gaps splits the
diagram into its elements, single crossings or larger tangles.  Single
crossings of a ring with at least two larger tangles can be moved freely
between the q positions separating those tangles; each position becomes
one chord of weight (sum of their signs) / q in the cwCD.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from . import code as gc
from .diagram import EmbeddedDiagram, compute_signs
from .interlace import canonical_lg, build_interlacement
from .diagram import chord_diagram_of
from .tangle import NotATangle, connector, ends, transpose, two_run_tangles


class InvalidOpportunity(ValueError):
    pass


class NotReduced(ValueError):
    pass


class NotAlternating(ValueError):
    pass


def _edge(emb: EmbeddedDiagram, h) -> frozenset:
    return frozenset((h, emb.link[h]))


# --------------------------------------------------------------------------
# keys and checks

def diagram_key(emb: EmbeddedDiagram, oriented: bool = False) -> tuple:
    """Canonical signed over/under code, also minimized over viewing the plane from behind."""
    code = emb.to_code(signed=True)
    return min(gc.canonical_tokens(code, oriented), gc.canonical_tokens(gc.swap_ou(code), oriented))


def key_string(key: tuple) -> str:
    return " ".join(f"{'OU'[o]}{a}{'+-'[s]}" for a, o, s in key)


def check_reduced_alternating(emb: EmbeddedDiagram) -> None:
    code = emb.to_code(signed=False)
    if not code.is_alternating:
        raise NotAlternating("diagram is not alternating")
    g = build_interlacement(chord_diagram_of(emb.with_over(None)))
    lonely = [v for v in g.vertices if not g.adj[v]]
    if lonely:
        raise NotReduced(f"crossing {lonely[0]} is nugatory")


def restore_alternation(emb: EmbeddedDiagram, anchor) -> EmbeddedDiagram:
    """Set over/under everywhere from the state of crossing ``anchor``'s passages."""
    ps = emb.passages
    i0 = next(i for i, h in enumerate(ps) if h[0] == anchor)
    first_over = emb.is_over(ps[i0])
    over = {}
    for d in range(len(ps)):
        x, k = ps[(i0 + d) % len(ps)]
        is_over = first_over == (d % 2 == 0)
        over.setdefault(x, k % 2 if is_over else (k + 1) % 2)
    return emb.with_over(over)


# --------------------------------------------------------------------------
# opportunities

@dataclass(frozen=True)
class FlypeOpportunity:
    active: int
    tangle: frozenset
    boundary: tuple  # the 4 boundary edges of the tangle
    attached: tuple  # the 2 of them incident to the active crossing
    kind: str  # "I" or "II"; advisory only

    @property
    def gaps(self) -> tuple:
        """The three edge pairs this flype moves between: c-T, c-outside, T-far side."""
        far = tuple(e for e in self.boundary if e not in self.attached)
        return (frozenset(self.attached), self.outer, frozenset(far))

    outer: frozenset = field(default=frozenset(), compare=False)


def find_flype_opportunities(emb: EmbeddedDiagram) -> list[FlypeOpportunity]:
    out = []
    for t in two_run_tangles(emb):
        try:
            t_ends = ends(emb, t)
        except NotATangle:
            continue
        bnd = tuple(sorted((_edge(emb, h) for h in t_ends), key=sorted))
        neighbours = {emb.link[h][0] for h in t_ends}
        for c in sorted(neighbours):
            slots = [k for k in range(4) if emb.link[(c, k)][0] in t]
            if len(slots) != 2 or (slots[1] - slots[0]) % 2 == 0:
                continue
            if len(t) + 1 >= emb.n:
                continue
            others = [k for k in range(4) if k not in slots]
            if any(emb.link[(c, k)][0] == c for k in others):
                continue
            attached = tuple(sorted((_edge(emb, (c, k)) for k in slots), key=sorted))
            outer = frozenset(_edge(emb, (c, k)) for k in others)
            # strands straight across the band or turning back
            nw = emb.link[(c, slots[0])] if (slots[1] - slots[0]) % 4 == 1 else emb.link[(c, slots[1])]
            kind = "I" if connector(emb, t, nw) in ("H", "X") else "II"
            out.append(FlypeOpportunity(c, t, bnd, attached, kind, outer))
    return out


def apply_flype(emb: EmbeddedDiagram, of: FlypeOpportunity) -> EmbeddedDiagram:
    try:
        out = transpose(emb, {of.active}, of.tangle)
    except NotATangle as exc:
        raise InvalidOpportunity(str(exc)) from exc
    if not out.is_planar():
        raise InvalidOpportunity("flype broke planarity")
    if out.over is not None and not out.to_code(signed=False).is_alternating:
        out = restore_alternation(out, next(x for x in out.crossings if x != of.active and x not in of.tangle))
    return out


# --------------------------------------------------------------------------
# orbits

@dataclass
class FlypeOrbit:
    base: tuple
    members: dict  # key -> EmbeddedDiagram (crossing labels are those of the base)
    edges: set  # (key, key) pairs, one per nontrivial move
    loops: set  # keys where some flype was trivial

    @property
    def keys(self) -> frozenset:
        return frozenset(self.members)

    def __len__(self):
        return len(self.members)



def enumerate_orbit(emb: EmbeddedDiagram, limit: int | None = None, oriented: bool = False) -> FlypeOrbit:
    """Breadth-first closure under flypes, deduplicated by diagram key.

    With ``oriented`` the keys keep the direction of travel, so a member and
    its reverse count as different diagrams.
    """
    check_reduced_alternating(emb)
    k0 = diagram_key(emb, oriented)
    members = {k0: emb}
    edges, loops = set(), set()
    queue = deque([k0])
    while queue:
        k = queue.popleft()
        cur = members[k]
        for of in find_flype_opportunities(cur):
            nxt = apply_flype(cur, of)
            nk = diagram_key(nxt, oriented)
            if nk == k:
                loops.add(k)
                continue
            edges.add((k, nk))
            if nk not in members:
                members[nk] = nxt
                queue.append(nk)
                if limit is not None and len(members) > limit:
                    raise RuntimeError(f"orbit exceeds {limit} diagrams")
    return FlypeOrbit(k0, members, edges, loops)


# --------------------------------------------------------------------------
# flype cycles

@dataclass(frozen=True)
class Ring:
    gaps: frozenset  # of edge pairs
    singles: tuple  # crossings forming one element each
    tangles: tuple  # frozensets of crossings, elements with 2 or more crossings
    positions: tuple  # super-gaps: frozensets of gaps between consecutive tangles

    @property
    def active(self) -> bool:
        return len(self.tangles) >= 2


@dataclass(frozen=True)
class FlypeCycle:
    p: int
    q: int
    members: tuple
    sign: int | None

    @property
    def weight(self) -> Fraction:
        return Fraction((self.sign or 1) * self.p, self.q)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)

    def classes(self) -> list[frozenset]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), set()).add(x)
        return [frozenset(s) for s in out.values()]


def find_rings(emb: EmbeddedDiagram) -> list[Ring]:
    uf = _UnionFind()
    for of in find_flype_opportunities(emb):
        a, b, c = of.gaps
        uf.union(a, b)
        uf.union(a, c)
    rings = []
    for gaps in uf.classes():
        cut = set().union(*gaps)
        elements = _pieces(emb, cut)
        singles = tuple(sorted(next(iter(e)) for e in elements if len(e) == 1))
        tangles = tuple(sorted((e for e in elements if len(e) > 1), key=sorted))
        pos = _UnionFind()
        for g in gaps:
            pos.find(g)
        for x in singles:
            touching = [g for g in gaps if any(h[0] == x for e in g for h in e)]
            for g in touching[1:]:
                pos.union(touching[0], g)
        positions = tuple(sorted(pos.classes(), key=lambda s: sorted(map(sorted, s))))
        rings.append(Ring(frozenset(gaps), singles, tangles, positions))
    return sorted(rings, key=lambda r: (r.singles, [sorted(t) for t in r.tangles]))


def _pieces(emb: EmbeddedDiagram, cut: set) -> list[frozenset]:
    seen, out = set(), []
    for x in emb.crossings:
        if x in seen:
            continue
        comp, stack = {x}, [x]
        while stack:
            y = stack.pop()
            for k in range(4):
                if _edge(emb, (y, k)) in cut:
                    continue
                z = emb.link[(y, k)][0]
                if z not in comp:
                    comp.add(z)
                    stack.append(z)
        seen |= comp
        out.append(frozenset(comp))
    return out


def find_flype_cycles(emb: EmbeddedDiagram) -> list[FlypeCycle]:
    eps = compute_signs(emb).epsilon if emb.over is not None else {}
    out, covered = [], set()
    for r in find_rings(emb):
        if not r.singles:
            continue
        signs = {eps.get(x) for x in r.singles}
        sign = signs.pop() if len(signs) == 1 else None
        q = len(r.tangles) if r.active else len(r.singles)
        out.append(FlypeCycle(len(r.singles), q, r.singles, sign))
        covered |= set(r.singles)
    for x in emb.crossings:
        if x not in covered:
            out.append(FlypeCycle(1, 1, (x,), eps.get(x)))
    return sorted(out, key=lambda c: c.members)


# --------------------------------------------------------------------------
# chord-weighted chord diagrams

@dataclass(frozen=True)
class WeightedChordDiagram:
    """Chords on a circle of slots.

    A slot holds either one endpoint of an inactive chord or a bag of
    weighted endpoints met between the same two inactive endpoints; the
    order inside a bag carries no information.
    """
    slots: tuple  # of tuples of chord ids
    weights: dict  # chord id -> Fraction
    bags: frozenset  # indices of slots that are bags

    @property
    def size(self) -> int:
        return len(self.slots)

    @property
    def chords(self) -> list:
        return sorted(self.weights)

    def encoding(self) -> tuple:
        """Per slot: (is_bag, sorted (slot offset to partner, weight) of its endpoints)."""
        m = len(self.slots)
        where: dict = {}
        for i, s in enumerate(self.slots):
            for a in s:
                where.setdefault(a, []).append(i)
        out = []
        for i, s in enumerate(self.slots):
            items = []
            for a in s:
                i0, i1 = where[a]
                j = i1 if i == i0 else i0
                items.append(((j - i) % m, self.weights[a]))
            out.append((int(i in self.bags), tuple(sorted(items))))
        return tuple(out)

    def negated(self) -> "WeightedChordDiagram":
        return WeightedChordDiagram(self.slots, {a: -w for a, w in self.weights.items()}, self.bags)

    def reflected(self) -> "WeightedChordDiagram":
        m = len(self.slots)
        return WeightedChordDiagram(tuple(reversed(self.slots)), self.weights,
                                    frozenset(m - 1 - i for i in self.bags))

    def canonical(self, oriented: bool = False) -> tuple:
        return canonical_encoding(self.encoding(), oriented)

    def symmetries(self) -> dict:
        """Rotations and reflections of the circle preserving the weighted chords."""
        enc = self.encoding()
        m = len(enc)
        rots = [r for r in range(m) if _rotate(enc, r) == enc]
        refl = [r for r in range(m) if _rotate(_reflect(enc), r) == enc]
        return {"rotations": rots, "reflections": refl}


def _rotate(enc: tuple, r: int) -> tuple:
    return enc[r:] + enc[:r]


def _reflect(enc: tuple) -> tuple:
    m = len(enc)
    return tuple((k, tuple(sorted(((m - d) % m, w) for d, w in items))) for k, items in reversed(enc))


def canonical_encoding(enc: tuple, oriented: bool = False) -> tuple:
    m = len(enc)
    if m == 0:
        return ()
    cands = [enc] if oriented else [enc, _reflect(enc)]
    return min(_rotate(e, r) for e in cands for r in range(m))


def build_cwcd(emb: EmbeddedDiagram) -> WeightedChordDiagram:
    check_reduced_alternating(emb)
    eps = compute_signs(emb).epsilon
    active = [r for r in find_rings(emb) if r.active]
    moved = {x for r in active for x in r.singles}
    weights: dict = {}
    starts = []
    for ri, r in enumerate(active):
        pos_of = {e: pi for pi, s in enumerate(r.positions) for g in s for e in g}
        starts.append((ri, pos_of, set().union(*r.tangles)))
        w = Fraction(sum(eps[x] for x in r.singles), len(r.positions))
        for pi in range(len(r.positions)):
            weights[("w", ri, pi)] = w
    slots: list = []
    bag: list = []
    for x, k in emb.passages:
        if x not in moved:
            if bag:
                slots.append(tuple(bag))
                bag = []
            slots.append((("x", x),))
            weights[("x", x)] = Fraction(eps[x])
        arc = _edge(emb, (x, (k + 2) % 4))
        bag.extend(("w", ri, pos_of[arc]) for ri, pos_of, tx in starts if x in tx and arc in pos_of)
    if bag:
        if slots and slots[0][0][0] == "w":
            slots[0] = tuple(bag) + slots[0]
        else:
            slots.append(tuple(bag))
    bags = frozenset(i for i, s in enumerate(slots) if s[0][0] == "w")
    ids = {a: i for i, a in enumerate(dict.fromkeys(a for s in slots for a in s))}
    return WeightedChordDiagram(tuple(tuple(ids[a] for a in s) for s in slots),
                                {ids[a]: weights[a] for a in ids}, bags)


def canonical_cwcd(emb: EmbeddedDiagram, oriented: bool = False) -> tuple:
    return build_cwcd(emb).canonical(oriented)


def canonical_lg_of(emb: EmbeddedDiagram) -> tuple:
    return canonical_lg(build_interlacement(chord_diagram_of(emb.with_over(None))))


def ring_elements(emb: EmbeddedDiagram, ring: Ring) -> list[frozenset]:
    """Elements of a ring in cyclic order along its band."""
    elems = [frozenset([x]) for x in ring.singles] + list(ring.tangles)
    if len(elems) < 3:
        return elems
    touches = {e: {g for g in ring.gaps if any(h[0] in e for edge in g for h in edge)} for e in elems}
    order = [elems[0]]
    prev_gap = None
    while len(order) < len(elems):
        cur = order[-1]
        gap = min((g for g in touches[cur] if g != prev_gap), key=lambda g: sorted(map(sorted, g)))
        nxt = next(e for e in elems if e != cur and gap in touches[e])
        order.append(nxt)
        prev_gap = gap
    return order
