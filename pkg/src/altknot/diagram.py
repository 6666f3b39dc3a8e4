"""Chord diagrams and spherical embeddings of Gauss codes.

An ``EmbeddedDiagram`` is a port graph.  Each crossing has four slots
0..3 listed counterclockwise; the strand through a crossing always leaves
by the slot opposite the one it entered (``k -> k+2``).  ``link`` pairs
slots joined by an edge of the 4-regular graph.  This is a rotation system
together with its transversal Euler circuit, so it fixes the diagram on
the oriented sphere with no outer face.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from . import code as gc
from .code import GaussCode, OVER, UNDER

HalfEdge = tuple[int, int]

# +1: slot k+1 is counterclockwise of slot k.  Flipping it negates every
# local writhe and every path sign at once.
ORIENTATION_CONVENTION = 1


class NotRealizable(ValueError):
    pass


class SignMismatch(ValueError):
    pass


class MissingOU(ValueError):
    pass


class MultipleComponents(ValueError):
    pass


# --------------------------------------------------------------------------
# chord diagrams

@dataclass(frozen=True)
class ChordDiagram:
    ends: tuple  # chord label at each circle slot
    signs: dict | None = None  # chord -> +1/-1
    tails: dict | None = None  # chord -> slot holding the arrow tail

    @property
    def size(self) -> int:
        return len(self.ends) // 2

    @cached_property
    def slots(self) -> dict:
        out: dict = {}
        for i, a in enumerate(self.ends):
            out.setdefault(a, []).append(i)
        return {a: tuple(v) for a, v in out.items()}

    @property
    def chords(self) -> list:
        return sorted(self.slots)

    def partner(self, slot: int) -> int:
        i, j = self.slots[self.ends[slot]]
        return j if slot == i else i


@dataclass(frozen=True)
class LinearChordDiagram(ChordDiagram):
    cut: int = 0

    def close(self) -> ChordDiagram:
        m = len(self.ends)
        k = (-self.cut) % m if m else 0
        ends = self.ends[k:] + self.ends[:k]
        tails = None
        if self.tails is not None:
            tails = {a: (t + self.cut) % m for a, t in self.tails.items()}
        return ChordDiagram(ends, self.signs, tails)


def build_chord_diagram(code: GaussCode) -> ChordDiagram:
    signs = tails = None
    if code.signs is not None:
        signs = {a: code.sign(a) for a in code.positions}
    if code.ou is not None:
        tails = {}
        for i, a in enumerate(code.letters):
            if code.ou[i] == OVER:
                tails[a] = i
    return ChordDiagram(code.letters, signs, tails)


def chords_interlaced(cd: ChordDiagram, a, b) -> bool:
    i, j = cd.slots[a]
    k, l = cd.slots[b]
    return (i < k < j) != (i < l < j)


def to_linear(cd: ChordDiagram, cut: int) -> LinearChordDiagram:
    m = len(cd.ends)
    if not 0 <= cut < max(m, 1):
        raise ValueError(f"cut {cut} outside 0..{m - 1}")
    ends = cd.ends[cut:] + cd.ends[:cut]
    tails = None
    if cd.tails is not None:
        tails = {a: (t - cut) % m for a, t in cd.tails.items()}
    return LinearChordDiagram(ends, cd.signs, tails, cut)


# --------------------------------------------------------------------------
# embedded diagrams

@dataclass(frozen=True, eq=False)
class EmbeddedDiagram:
    link: dict  # HalfEdge -> HalfEdge, an involution without fixed points
    start: HalfEdge | None  # slot through which the traversal first arrives
    over: dict | None = None  # crossing -> parity (0 or 1) of its over slots
    convention: int = field(default_factory=lambda: ORIENTATION_CONVENTION)

    @cached_property
    def crossings(self) -> tuple[int, ...]:
        return tuple(sorted({h[0] for h in self.link}))

    @property
    def n(self) -> int:
        return len(self.crossings)

    @cached_property
    def passages(self) -> tuple[HalfEdge, ...]:
        """Arrival slots in traversal order: one entry per letter of the Gauss word."""
        if self.start is None:
            return ()
        out = []
        h = self.start
        while True:
            out.append(h)
            x, k = h
            h = self.link[(x, (k + 2) % 4)]
            if h == self.start:
                break
            if len(out) > 2 * self.n:
                raise MultipleComponents("traversal does not close")
        if len(out) != 2 * self.n:
            raise MultipleComponents(f"circuit visits {len(out)} of {2 * self.n} passages")
        return tuple(out)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.passages)

    def face_count(self) -> int:
        return count_faces(self.link)

    def is_planar(self) -> bool:
        return self.face_count() == self.n + 2

    def is_over(self, h: HalfEdge) -> bool:
        if self.over is None:
            raise MissingOU("diagram has no over/under data")
        return h[1] % 2 == self.over[h[0]]

    def ou_flags(self) -> tuple[str, ...]:
        return tuple(OVER if self.is_over(h) else UNDER for h in self.passages)

    def turn(self, p: HalfEdge, q: HalfEdge) -> int:
        """+1 when the outgoing slot of ``q`` is counterclockwise next to that of ``p``."""
        if p[0] != q[0]:
            raise ValueError("passages at different crossings")
        return self.convention * (1 if (q[1] - p[1]) % 4 == 1 else -1)

    def to_code(self, signed: bool = True) -> GaussCode:
        letters = self.word
        ou = self.ou_flags() if self.over is not None else None
        signs = None
        if signed and self.over is not None:
            signs = compute_signs(self).epsilon
        return gc.from_letters(letters, ou=ou, signs_by_label=signs)

    def with_over(self, over: dict | None) -> "EmbeddedDiagram":
        return EmbeddedDiagram(self.link, self.start, over, self.convention)

    def with_convention(self, convention: int) -> "EmbeddedDiagram":
        return EmbeddedDiagram(self.link, self.start, self.over, convention)

    def reversed(self) -> "EmbeddedDiagram":
        """Same diagram traversed the other way (arriving where we used to leave)."""
        if self.start is None:
            return self
        x, k = self.start
        return EmbeddedDiagram(self.link, (x, (k + 2) % 4), self.over, self.convention)

    def mirrored(self) -> "EmbeddedDiagram":
        """Exchange over and under at every crossing (mirror image in the projection plane)."""
        if self.over is None:
            raise MissingOU("mirror needs over/under data")
        return self.with_over({x: 1 - p for x, p in self.over.items()})

    def relabeled(self, mapping: dict) -> "EmbeddedDiagram":
        link = {(mapping[x], k): (mapping[y], l) for (x, k), (y, l) in self.link.items()}
        start = (mapping[self.start[0]], self.start[1]) if self.start else None
        over = {mapping[x]: p for x, p in self.over.items()} if self.over is not None else None
        return EmbeddedDiagram(link, start, over, self.convention)


def count_faces(link: dict) -> int:
    seen = set()
    faces = 0
    for h in link:
        if h in seen:
            continue
        faces += 1
        while h not in seen:
            seen.add(h)
            y, l = link[h]
            h = (y, (l + 1) % 4)
    return faces


def embedding_from_turns(code: GaussCode, turns: dict) -> EmbeddedDiagram:
    """Port graph for ``code`` in which ``turns[x]`` fixes the rotation at crossing x.

    With occurrences i < j of x, ``+1`` gives the counterclockwise order
    (out_i, out_j, in_i, in_j) and ``-1`` gives (out_i, in_j, in_i, out_j).
    """
    m = len(code.letters)
    if m == 0:
        return EmbeddedDiagram({}, None, {} if code.ou is not None else None)
    out_slot, in_slot = {}, {}
    for x, (i, j) in code.positions.items():
        if turns[x] > 0:
            out_slot[i], out_slot[j], in_slot[i], in_slot[j] = 0, 1, 2, 3
        else:
            out_slot[i], in_slot[j], in_slot[i], out_slot[j] = 0, 1, 2, 3
    link = {}
    for p in range(m):
        q = (p + 1) % m
        a = (code.letters[p], out_slot[p])
        b = (code.letters[q], in_slot[q])
        link[a] = b
        link[b] = a
    over = None
    if code.ou is not None:
        over = {}
        for p, a in enumerate(code.letters):
            if code.ou[p] == OVER:
                over[a] = in_slot[p] % 2
    return EmbeddedDiagram(link, (code.letters[0], in_slot[0]), over)


def _turn_assignments(n: int):
    for bits in itertools.product((1, -1), repeat=n):
        yield dict(zip(range(1, n + 1), bits))


def planar_embeddings(code: GaussCode):
    """Every rotation system (as an embedding) realizing ``code`` on the sphere."""
    for turns in _turn_assignments(code.n):
        emb = embedding_from_turns(code, turns)
        if emb.face_count() == code.n + 2:
            yield emb


def build_embedding(code: GaussCode) -> EmbeddedDiagram:
    if code.n == 0:
        return embedding_from_turns(code, {})
    for emb in planar_embeddings(code):
        return emb
    raise NotRealizable("no rotation system gives a sphere")


def is_realizable_by_search(code: GaussCode) -> bool:
    try:
        build_embedding(code)
    except NotRealizable:
        return False
    return True


@dataclass(frozen=True)
class SignData:
    epsilon: dict  # crossing -> +1/-1
    path_sign: dict  # crossing -> sign of its first passage along the traversal
    arrow_tail: dict  # crossing -> word position of the positive passage
    writhe: int


def compute_signs(emb: EmbeddedDiagram) -> SignData:
    if emb.over is None:
        raise MissingOU("signs need over/under data")
    seen: dict[int, tuple[int, HalfEdge]] = {}
    eps, psign, tail = {}, {}, {}
    for pos, h in enumerate(emb.passages):
        x = h[0]
        if x not in seen:
            seen[x] = (pos, h)
            continue
        p0, h0 = seen[x]
        o, u = (h0, h) if emb.is_over(h0) else (h, h0)
        eps[x] = emb.turn(o, u)
        # the passage the other one crosses from right to left is positive
        s = emb.turn(h0, h)
        psign[x] = s
        tail[x] = p0 if s > 0 else pos
    return SignData(eps, psign, tail, sum(eps.values()))


def validate_signed_code(code: GaussCode) -> EmbeddedDiagram:
    if code.ou is None or code.signs is None:
        raise MissingOU("a signed over/under code is required")
    want = {a: code.sign(a) for a in code.positions}
    found = False
    for emb in planar_embeddings(code):
        found = True
        if compute_signs(emb).epsilon == want:
            return emb
    if not found and code.n:
        raise NotRealizable("no rotation system gives a sphere")
    if code.n == 0:
        return embedding_from_turns(code, {})
    raise SignMismatch("no embedding reproduces the given signs")


def from_pd(pd) -> EmbeddedDiagram:
    """Embedding from a PD code: 4 edge labels counterclockwise, incoming under-strand first."""
    n = len(pd)
    m = 2 * n
    where: dict[int, list[HalfEdge]] = {}
    arrival: dict[int, HalfEdge] = {}  # edge label -> slot where that edge ends
    over = {}
    for x, (a, b, c, d) in enumerate(pd, 1):
        for k, e in enumerate((a, b, c, d)):
            where.setdefault(e, []).append((x, k))
        arrival[a] = (x, 0)
        over[x] = 1
        if (d - b) % m == 1:
            arrival[b] = (x, 1)
        elif (b - d) % m == 1:
            arrival[d] = (x, 3)
        else:
            raise ValueError(f"crossing {x}: over edges {b},{d} are not consecutive")
    link = {}
    for e, (h1, h2) in where.items():
        link[h1] = h2
        link[h2] = h1
    first = min(arrival)
    return EmbeddedDiagram(link, arrival[first], over)


def chord_diagram_of(emb: EmbeddedDiagram, arrows: str = "path") -> ChordDiagram:
    """Signed chord diagram read off an embedding.

    ``arrows='path'`` orients chords by crossing-path sign; ``'ou'`` from over to under.
    """
    word = emb.word
    signs = tails = None
    if emb.over is not None:
        sd = compute_signs(emb)
        signs = sd.epsilon
        if arrows == "path":
            tails = dict(sd.arrow_tail)
        else:
            tails = {x: p for p, (x, k) in enumerate(emb.passages) if emb.is_over((x, k))}
    return ChordDiagram(word, signs, tails)
