"""Knot-level decisions: equality, chirality, symmetry, enhanced interlacement graphs, mutation."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import graphs
from .diagram import (EmbeddedDiagram, MultipleComponents, chord_diagram_of,
                      compute_signs)
from .flype import (NotAlternating, NotReduced, build_cwcd, check_reduced_alternating,
                    diagram_key, enumerate_orbit, find_flype_opportunities, apply_flype,
                    find_rings, ring_elements)
from .graphs import Graph
from .interlace import build_interlacement
from .tangle import NotATangle, TangleCut, ends, glue, mutate_tangle, transpose, two_run_tangles

__all__ = [
    "ChiralityProfile", "MutationSpec", "MissingSigns", "SplitsIntoLink", "NotABundle",
    "WouldSplit", "NotReduced", "NotAlternating", "NotATangle", "same_knot",
    "chirality_profile", "symmetry_group", "build_enhanced_lg", "enhanced_lg_key", "mutate",
    "cut_from_slots", "permute_tangles", "mutant_family", "probe_extended_mutation",
]


class MissingSigns(ValueError):
    pass


class SplitsIntoLink(ValueError):
    pass


class NotABundle(ValueError):
    pass


class WouldSplit(ValueError):
    pass


def same_knot(a: EmbeddedDiagram, b: EmbeddedDiagram) -> bool:
    check_reduced_alternating(a)
    check_reduced_alternating(b)
    if a.n != b.n:
        return False
    return diagram_key(b) in enumerate_orbit(a).keys


# --------------------------------------------------------------------------
# chirality and symmetry

@dataclass(frozen=True)
class ChiralityProfile:
    achiral_plus: bool
    achiral_minus: bool
    invertible: bool

    @property
    def achiral(self) -> bool:
        return self.achiral_plus or self.achiral_minus

    @property
    def verdict(self) -> str:
        if self.achiral_plus and self.achiral_minus:
            return "achiral"
        if self.achiral_plus:
            return "achiral+"
        if self.achiral_minus:
            return "achiral-"
        return "chiral"

    def describe(self) -> str:
        inv = "invertible" if self.invertible else "not invertible"
        return f"{self.verdict}, {inv}"


def chirality_profile(emb: EmbeddedDiagram) -> ChiralityProfile:
    w = build_cwcd(emb)
    key = w.canonical(oriented=True)
    return ChiralityProfile(
        achiral_plus=w.negated().canonical(oriented=True) == key,
        achiral_minus=w.negated().reflected().canonical(oriented=True) == key,
        invertible=w.reflected().canonical(oriented=True) == key,
    )


def symmetry_group(emb: EmbeddedDiagram) -> tuple[int, list[str]]:
    """Order of the dihedral stabilizer of the cwCD and a generating set."""
    sym = build_cwcd(emb).symmetries()
    m = build_cwcd(emb).size
    rots, refl = sym["rotations"], sym["reflections"]
    gens = []
    step = min((r for r in rots if r), default=None)
    if step is not None:
        gens.append(f"rotation by {step}/{m}")
    if refl:
        gens.append(f"reflection {refl[0]}")
    return len(rots) + len(refl), gens


# --------------------------------------------------------------------------
# enhanced interlacement graphs

def build_enhanced_lg(emb: EmbeddedDiagram, with_eps: bool = True, with_alpha: bool = False) -> Graph:
    if (with_eps or with_alpha) and emb.over is None:
        raise MissingSigns("over/under data is needed for signs and arrows")
    cd = chord_diagram_of(emb)
    g = build_interlacement(cd)
    weights = dict(cd.signs) if with_eps else None
    arcs = None
    if with_alpha:
        m = len(cd.ends)
        arcs = set()
        heads = {a: next(i for i, b in enumerate(cd.ends) if b == a and i != cd.tails[a]) for a in cd.chords}
        for e in g.edges:
            a, b = sorted(e)
            # a -> b when b's tail comes before b's head going round from a's tail
            ta = cd.tails[a]
            if (cd.tails[b] - ta) % m < (heads[b] - ta) % m:
                arcs.add((a, b))
            else:
                arcs.add((b, a))
    return Graph.build(g.vertices, g.edges, weights, arcs)


def enhanced_lg_key(emb: EmbeddedDiagram, with_eps: bool = True, with_alpha: bool = False) -> tuple:
    return graphs.canonical_form(build_enhanced_lg(emb, with_eps, with_alpha))


# --------------------------------------------------------------------------
# mutation

@dataclass(frozen=True)
class MutationSpec:
    cut: TangleCut
    symmetry: str  # "Id", "H", "V" or "pi"


def cut_from_slots(emb: EmbeddedDiagram, slots) -> TangleCut:
    """Tangle between four cut points of the circuit.

    Slot ``i`` is the arc leaving word position ``i``.  The tangle is made
    of the positions after the first and third cut points; its NW end is
    where the circuit enters it after the first cut.
    """
    m = 2 * emb.n
    s = sorted(int(x) % m for x in slots)
    if len(set(s)) != 4:
        raise NotATangle("four distinct cut points are required")
    first = int(slots[0]) % m
    r = s.index(first)
    s = s[r:] + s[:r]
    word = emb.word
    runs = [range(s[0] + 1, s[1] + 1 if s[1] > s[0] else s[1] + 1 + m),
            range(s[2] + 1, s[3] + 1 if s[3] > s[2] else s[3] + 1 + m)]
    pos = [p % m for run in runs for p in run]
    inside = [word[p] for p in pos]
    t = frozenset(inside)
    if any(inside.count(x) != 2 for x in t):
        raise NotATangle("the cut points do not isolate a 2-tangle")
    return TangleCut(t, emb.passages[(s[0] + 1) % m])


def mutate(emb: EmbeddedDiagram, spec: MutationSpec) -> EmbeddedDiagram:
    try:
        out = mutate_tangle(emb, spec.cut.crossings, spec.symmetry, spec.cut.nw)
    except MultipleComponents as exc:
        raise SplitsIntoLink(str(exc)) from exc
    if not out.is_planar():
        raise NotATangle("mutation broke planarity")
    return out


def permute_tangles(emb: EmbeddedDiagram, bundle, perm) -> EmbeddedDiagram:
    """Reorder the tangles of a bundle (listed in band order) so position i holds ``bundle[perm[i]]``."""
    cuts = [frozenset(c.crossings if isinstance(c, TangleCut) else c) for c in bundle]
    if sorted(perm) != list(range(len(cuts))):
        raise ValueError("perm must be a permutation of the bundle indices")
    for a, b in combinations(cuts, 2):
        if a & b:
            raise NotABundle("bundle tangles overlap")
    for a, b in zip(cuts, cuts[1:]):
        shared = sum(1 for h in ends(emb, a) if emb.link[h][0] in b)
        if shared != 2:
            raise NotABundle("consecutive bundle tangles must share two edges")
    order = list(range(len(cuts)))
    cur = emb
    target = list(perm)
    # bubble sort the arrangement into the target order by adjacent swaps
    for i in range(len(order)):
        for j in range(len(order) - 1 - i):
            if target.index(order[j]) > target.index(order[j + 1]):
                try:
                    cur = transpose(cur, cuts[order[j]], cuts[order[j + 1]])
                except MultipleComponents as exc:
                    raise WouldSplit(str(exc)) from exc
                except NotATangle as exc:
                    raise NotABundle(str(exc)) from exc
                order[j], order[j + 1] = order[j + 1], order[j]
    return cur


def ring_bundles(emb: EmbeddedDiagram) -> list[list[frozenset]]:
    """Elements of each flype ring, in band order; each is a bundle for ``permute_tangles``."""
    return [ring_elements(emb, r) for r in find_rings(emb) if len(r.singles) + len(r.tangles) >= 3]


# --------------------------------------------------------------------------
# a four-mutant family

@dataclass
class MutantFamily:
    source: EmbeddedDiagram
    tangle: frozenset
    mutants: dict  # symmetry -> EmbeddedDiagram


def _alternating_or_none(emb: EmbeddedDiagram, flip) -> EmbeddedDiagram | None:
    if emb.to_code(signed=False).is_alternating:
        return emb
    over = {x: (1 - p if x in flip else p) for x, p in emb.over.items()}
    out = emb.with_over(over)
    return out if out.to_code(signed=False).is_alternating else None


def mutant_family(left: EmbeddedDiagram, right: EmbeddedDiagram, min_size: int = 3,
                  distinct=None) -> MutantFamily:
    """First gluing of a tangle of ``left`` with one of ``right`` whose four mutants are distinct.

    Tangles are tried smallest first; ``distinct`` decides whether two
    diagrams are different knots (default: not ``same_knot``).
    """
    if distinct is None:
        def distinct(a, b):
            return not same_knot(a, b)
    lts = [t for t in two_run_tangles(left) if len(t) >= min_size]
    rts = [t for t in two_run_tangles(right) if len(t) >= min_size]
    for lt in lts:
        for rt in rts:
            for shift in range(4):
                try:
                    emb = glue(left, lt, right, rt, shift)
                except (MultipleComponents, NotATangle):
                    continue
                if not emb.is_planar():
                    continue
                rt_new = set(emb.crossings) - lt
                emb = _alternating_or_none(emb, rt_new)
                if emb is None:
                    continue
                try:
                    check_reduced_alternating(emb)
                    muts = {s: mutate(emb, MutationSpec(TangleCut(lt), s)) for s in ("Id", "H", "V", "pi")}
                except (NotReduced, NotAlternating, SplitsIntoLink, NotATangle):
                    continue
                ms = list(muts.values())
                if all(distinct(a, b) for a, b in combinations(ms, 2)):
                    return MutantFamily(emb, lt, muts)
    raise ValueError("no gluing gave four distinct mutants")


# --------------------------------------------------------------------------
# extended mutation search

def extended_neighbours(emb: EmbeddedDiagram):
    """Diagrams one flype, one classical mutation or one tangle transposition away."""
    for of in find_flype_opportunities(emb):
        yield apply_flype(emb, of)
    for t in two_run_tangles(emb):
        for s in ("H", "V", "pi"):
            try:
                yield mutate(emb, MutationSpec(TangleCut(t), s))
            except (SplitsIntoLink, NotATangle):
                pass
    for bundle in ring_bundles(emb):
        k = len(bundle)
        for i in range(k):
            a, b = bundle[i], bundle[(i + 1) % k]
            try:
                yield transpose(emb, a, b)
            except (NotATangle, MultipleComponents):
                pass


def probe_extended_mutation(a: EmbeddedDiagram, b: EmbeddedDiagram, budget: int = 2000) -> bool | None:
    """Search for an extended-mutation path from ``a`` to ``b``.

    Returns True if found, False if the reachable set was exhausted, None
    when the budget ran out first.
    """
    target = diagram_key(b)
    seen = {diagram_key(a): a}
    frontier = [a]
    while frontier:
        nxt = []
        for emb in frontier:
            for out in extended_neighbours(emb):
                if not out.is_planar() or not out.to_code(signed=False).is_alternating:
                    continue
                k = diagram_key(out)
                if k == target:
                    return True
                if k not in seen:
                    seen[k] = out
                    nxt.append(out)
                    if len(seen) > budget:
                        return None
        frontier = nxt
    return False


def writhe(emb: EmbeddedDiagram) -> int:
    return compute_signs(emb).writhe
