"""2-tangles of embedded diagrams and the surgery that moves them around.

A tangle is a set of crossings met by the Gauss circuit in exactly two
runs, so four edges leave it.  Its ends are listed counterclockwise as
``(NW, SW, SE, NE)``; each end is the slot *inside* the tangle.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import EmbeddedDiagram, HalfEdge

NW, SW, SE, NE = range(4)


class NotATangle(ValueError):
    pass


@dataclass(frozen=True)
class TangleCut:
    crossings: frozenset
    nw: HalfEdge | None = None  # end to call NW; default is the least boundary slot


def boundary(emb: EmbeddedDiagram, t) -> list[HalfEdge]:
    return sorted(h for h in emb.link if h[0] in t and emb.link[h][0] not in t)


def ccw_successor(emb: EmbeddedDiagram, t, h: HalfEdge) -> HalfEdge:
    """Next boundary slot counterclockwise around the region ``t``."""
    x, k = h
    g = (x, (k + 1) % 4)
    for _ in range(4 * len(emb.link)):
        if emb.link[g][0] not in t:
            return g
        y, l = emb.link[g]
        g = (y, (l + 1) % 4)
    raise NotATangle("boundary walk does not close")


def ends(emb: EmbeddedDiagram, t, nw: HalfEdge | None = None) -> tuple[HalfEdge, ...]:
    t = frozenset(t)
    bd = boundary(emb, t)
    if len(bd) != 4:
        raise NotATangle(f"{len(bd)} edges leave the region, expected 4")
    start = nw if nw is not None else bd[0]
    if start not in bd:
        raise NotATangle(f"{start} is not a boundary slot")
    out = [start]
    while len(out) < 4:
        out.append(ccw_successor(emb, t, out[-1]))
    if sorted(out) != bd or ccw_successor(emb, t, out[-1]) != start:
        raise NotATangle("boundary is not a single circle")
    return tuple(out)


def strand_exit(emb: EmbeddedDiagram, t, h: HalfEdge) -> HalfEdge:
    """Follow the strand entering the tangle at end ``h`` to the end where it leaves."""
    x, k = h
    for _ in range(len(emb.link) + 1):
        g = (x, (k + 2) % 4)
        y, l = emb.link[g]
        if y not in t:
            return g
        x, k = y, l
    raise NotATangle("strand does not leave the tangle")


def connector(emb: EmbeddedDiagram, t, nw: HalfEdge | None = None) -> str:
    e = ends(emb, t, nw)
    partner = strand_exit(emb, t, e[NW])
    if partner == e[NE]:
        return "H"
    if partner == e[SW]:
        return "V"
    if partner == e[SE]:
        return "X"
    raise NotATangle("strand returns to its own end")


def _reflect(h: HalfEdge, flip: set) -> HalfEdge:
    return (h[0], (-h[1]) % 4) if h[0] in flip else h


def _pick_start(emb: EmbeddedDiagram, keep: set, fallback: HalfEdge) -> HalfEdge:
    for h in emb.passages:
        if h[0] in keep:
            return h
    return fallback


def rewire(emb: EmbeddedDiagram, joins, flip=(), swap=(), keep=None) -> EmbeddedDiagram:
    """Reflect the crossings in ``flip``, exchange over/under in ``swap``, then join slot pairs.

    Slots in ``joins`` are named as *before* the reflection.  The traversal
    starts on the first old passage through a crossing in ``keep`` so the
    untouched part keeps its orientation.
    """
    flip = set(flip)
    link = {_reflect(a, flip): _reflect(b, flip) for a, b in emb.link.items()}
    for a, b in joins:
        a, b = _reflect(a, flip), _reflect(b, flip)
        link.pop(link.pop(a, None), None)
        link.pop(link.pop(b, None), None)
    for a, b in joins:
        a, b = _reflect(a, flip), _reflect(b, flip)
        link[a] = b
        link[b] = a
    over = None
    if emb.over is not None:
        over = {x: (1 - p if x in swap else p) for x, p in emb.over.items()}
    if keep is None:
        keep = set(emb.crossings) - flip - set(swap)
    start = _reflect(_pick_start(emb, keep, emb.start), flip)
    out = EmbeddedDiagram(link, start, over, emb.convention)
    if len(link) != len(emb.link):
        raise NotATangle("rewiring lost a slot")
    out.passages  # raises MultipleComponents for links
    return out


def transpose(emb: EmbeddedDiagram, moving, fixed) -> EmbeddedDiagram:
    """Carry the tangle ``moving`` across the adjacent tangle ``fixed``.

    ``fixed`` is turned over about the axis of the band (reflected, over and
    under exchanged) and ``moving`` is translated to its far side.  With a
    single crossing as ``moving`` this is a flype.
    """
    moving, fixed = frozenset(moving), frozenset(fixed)
    if moving & fixed:
        raise NotATangle("tangles overlap")
    e = ends(emb, moving)
    touching = [i for i in range(4) if emb.link[e[i]][0] in fixed]
    if len(touching) != 2:
        raise NotATangle("tangles do not share exactly two edges")
    i, j = touching
    if (j - i) % 4 == 1:
        se = i
    elif (i - j) % 4 == 1:
        se = j
    else:
        raise NotATangle("shared edges are not adjacent ends")
    m_se, m_ne, m_nw, m_sw = (e[(se + d) % 4] for d in range(4))
    t_sw, t_nw = emb.link[m_se], emb.link[m_ne]
    f = ends(emb, fixed, t_nw)
    if f[SW] != t_sw:
        raise NotATangle("tangle orientations disagree")
    t_se, t_ne = f[SE], f[NE]
    x_nw, x_sw = emb.link[m_nw], emb.link[m_sw]
    y_ne, y_se = emb.link[t_ne], emb.link[t_se]
    if {x_nw[0], x_sw[0], y_ne[0], y_se[0]} & (moving | fixed):
        raise NotATangle("nothing lies outside the two tangles")
    joins = [
        (x_nw, t_sw), (x_sw, t_nw),
        (m_nw, t_se), (m_sw, t_ne),
        (m_ne, y_ne), (m_se, y_se),
    ]
    keep = set(emb.crossings) - moving - fixed
    return rewire(emb, joins, flip=fixed, swap=fixed, keep=keep)


MUTATIONS = {
    "Id": (0, 1, 2, 3),
    "H": (1, 0, 3, 2),  # NW<->SW, SE<->NE
    "V": (3, 2, 1, 0),  # NW<->NE, SW<->SE
    "pi": (2, 3, 0, 1),
}


def mutate_tangle(emb: EmbeddedDiagram, t, symmetry: str, nw: HalfEdge | None = None) -> EmbeddedDiagram:
    t = frozenset(t)
    if symmetry not in MUTATIONS:
        raise ValueError(f"unknown symmetry {symmetry!r}")
    if symmetry == "Id":
        return emb
    e = ends(emb, t, nw)
    sigma = MUTATIONS[symmetry]
    outside = [emb.link[h] for h in e]
    joins = [(outside[i], e[sigma[i]]) for i in range(4)]
    reflect = symmetry in ("H", "V")
    keep = set(emb.crossings) - t
    return rewire(emb, joins, flip=t if reflect else (), swap=t if reflect else (), keep=keep)


def glue(left: EmbeddedDiagram, lt, right: EmbeddedDiagram, rt, shift: int = 0,
         offset: int | None = None) -> EmbeddedDiagram:
    """Close tangle ``lt`` of ``left`` with tangle ``rt`` of ``right`` into one diagram.

    Crossings of ``rt`` are renumbered after those of ``lt``.  The ends are
    matched as two discs glued along their boundary, rotated by ``shift``.
    """
    lt, rt = frozenset(lt), frozenset(rt)
    if offset is None:
        offset = max(lt)
    ren = {x: i + offset + 1 for i, x in enumerate(sorted(rt))}
    le = ends(left, lt)
    re_ = [(ren[x], k) for x, k in ends(right, rt)]
    link = {}
    for a, b in left.link.items():
        if a[0] in lt and b[0] in lt:
            link[a] = b
    for a, b in right.link.items():
        if a[0] in rt and b[0] in rt:
            link[(ren[a[0]], a[1])] = (ren[b[0]], b[1])
    for i in range(4):
        a, b = le[i], re_[(shift - i) % 4]
        link[a] = b
        link[b] = a
    over = None
    if left.over is not None and right.over is not None:
        over = {x: left.over[x] for x in lt} | {ren[x]: right.over[x] for x in rt}
    start = min(h for h in link if h[0] in lt)
    out = EmbeddedDiagram(link, start, over, left.convention)
    out.passages
    return out


def two_run_tangles(emb: EmbeddedDiagram) -> list[frozenset]:
    """Every crossing set met by the circuit in exactly two runs (and not all crossings)."""
    word = emb.word
    m = len(word)
    n = m // 2
    found = set()
    for s in range(m):
        first: set = set()
        for l1 in range(1, m - 2):
            first ^= {word[(s + l1 - 1) % m]}  # crossings seen once so far
            head = frozenset(word[(s + d) % m] for d in range(l1))
            for gap in range(1, m - l1 - 1):
                s2 = s + l1 + gap
                odd = set(first)
                for l2 in range(1, m - l1 - gap):
                    odd ^= {word[(s2 + l2 - 1) % m]}
                    if not odd:
                        t = head | frozenset(word[(s2 + d) % m] for d in range(l2))
                        if len(t) < n:
                            found.add(t)
    return sorted((t for t in found if _connected(emb, t) and _connected(emb, set(emb.crossings) - t)),
                  key=lambda t: (len(t), sorted(t)))


def _connected(emb: EmbeddedDiagram, vs) -> bool:
    vs = set(vs)
    if not vs:
        return False
    start = next(iter(vs))
    seen, stack = {start}, [start]
    while stack:
        x = stack.pop()
        for k in range(4):
            y = emb.link[(x, k)][0]
            if y in vs and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == vs
