"""Acceptance suite: nine end-to-end checks, each reported as one PASS/FAIL line.

Run under pytest (the lines appear in the terminal summary) or directly
with ``python tests/test_acceptance.py``.
"""
import random
import sys
import time
from itertools import combinations, permutations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from altknot import code as gc
from altknot import condense as cd
from altknot import diagram as dg
from altknot import flype, graphs, interlace
from altknot import invariants as inv
from altknot.catalog import load_catalog
from altknot.code import parse_gauss_code
from altknot.graphs import Graph

from conftest import knot, small_names

RESULTS: dict[int, str] = {}

W77 = "1 2 3 4 5 6 4 7 2 1 7 3 6 5"


def report(num: int, ok: bool, detail: str) -> None:
    RESULTS[num] = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(RESULTS[num])
    assert ok, RESULTS[num]


# --------------------------------------------------------------------------

def test_criterion_1_realizability_oracle():
    t0 = time.time()
    classes = mismatches = 0
    for n in range(1, 7):
        for w in gc.word_classes(n):
            classes += 1
            if bool(interlace.check_realizability(w)) != dg.is_realizable_by_search(w):
                mismatches += 1
    elapsed = time.time() - t0
    report(1, mismatches == 0 and elapsed < 120,
           f"{classes} word classes with n<=6, {mismatches} disagreements, {elapsed:.1f}s")


def test_criterion_2_word_7_7():
    w = parse_gauss_code(W77)
    realizable = bool(interlace.check_realizability(w))
    g = interlace.interlacement_of(w)
    degrees = tuple(sorted((len(g.adj[v]) for v in g.vertices), reverse=True))
    n = cd.neighborhood_graph(Graph.build(g.vertices, g.edges))
    ok = (realizable and len(g.edges) == 12 and degrees == (4, 4, 4, 4, 4, 2, 2)
          and len(n.vertices) == 5 and n.weight_multiset() == [-1, -1, 0, 0, 0])
    report(2, ok, f"realizable={realizable}, {len(g.edges)} edges, degrees {degrees}, "
                  f"condensed weights {n.weight_multiset()}")


def test_criterion_3_flype_invariance():
    t0 = time.time()
    bad, members = [], 0
    for name in small_names(8):
        orbit = flype.enumerate_orbit(knot(name))
        ms = list(orbit.members.values())
        members += len(ms)
        eps = {tuple(sorted(dg.compute_signs(m).epsilon.items())) for m in ms}
        lg = {flype.canonical_lg_of(m) for m in ms}
        wr = {dg.compute_signs(m).writhe for m in ms}
        cw = {flype.canonical_cwcd(m) for m in ms}
        if max(len(eps), len(lg), len(wr), len(cw)) > 1:
            bad.append(name)
    elapsed = time.time() - t0
    report(3, not bad and elapsed < 300,
           f"{len(small_names(8))} knots, {members} orbit members, varying: {bad or 'none'}, {elapsed:.1f}s")


def test_criterion_4_completeness():
    names = small_names(8)
    keys = {name: flype.canonical_cwcd(knot(name)) for name in names}
    collisions = [(a, b) for a, b in combinations(names, 2) if keys[a] == keys[b]]
    chiral = [n for n in names if inv.chirality_profile(knot(n)).verdict == "chiral"]
    unseparated = [n for n in chiral if flype.canonical_cwcd(knot(n).mirrored()) == keys[n]]
    report(4, not collisions and not unseparated,
           f"{len(names)} knots, collisions {collisions or 'none'}, "
           f"{len(chiral)} chiral knots, mirror not separated: {unseparated or 'none'}")


def test_criterion_5_chirality():
    expected = {"8_12": ("achiral", None), "10_71": ("chiral", None),
                "8_17": ("achiral-", False), "7_7": ("chiral", None)}
    got, ok = [], True
    for name, (verdict, invertible) in expected.items():
        prof = inv.chirality_profile(knot(name))
        got.append(f"{name} {prof.describe()}")
        ok &= prof.verdict == verdict and (invertible is None or prof.invertible == invertible)
    report(5, ok, "; ".join(got))


def test_criterion_6_mutation_suite():
    fam = inv.mutant_family(knot("8_16"), knot("8_17"))
    ms = fam.mutants
    distinct = all(not inv.same_knot(ms[a], ms[b]) for a, b in combinations(ms, 2))
    lg = {flype.canonical_lg_of(m) for m in ms.values()}
    eps = {s: inv.enhanced_lg_key(m) for s, m in ms.items()}
    alpha = {s: inv.enhanced_lg_key(m, with_alpha=True) for s, m in ms.items()}
    shared = len(lg) == 1
    eps_split = (eps["Id"] == eps["pi"] and eps["H"] == eps["V"] and eps["Id"] != eps["H"])
    alpha_split = len(set(alpha.values())) == 4

    def classes(keys):
        out = []
        for s in keys:
            cls = "=".join(t for t in keys if keys[t] == keys[s])
            if cls not in out:
                out.append(cls)
        return "{" + ", ".join(out) + "}"

    report(6, distinct and shared and eps_split and alpha_split,
           f"{fam.source.n}-crossing family, mutants distinct={distinct}; shared LG={shared}; "
           f"LG^eps classes {classes(eps)} (want Id=pi, H=V); "
           f"LG^eps,alpha classes {classes(alpha)} (want four)")


def _random_graph(rng: random.Random) -> Graph:
    n = rng.randint(1, 8)
    p = rng.random()
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph.build(range(1, n + 1), edges, {v: 0 for v in range(1, n + 1)})


def _all_graphs(max_n: int):
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            yield Graph.build(range(1, n + 1), edges, {v: 0 for v in range(1, n + 1)})


def _confluent(g: Graph) -> bool:
    """Every maximal merge sequence ends in the same graph up to isomorphism."""
    start = ({v: frozenset(g.adj[v]) for v in g.vertices}, {v: g.weight(v) for v in g.vertices})
    seen, ends, stack = set(), set(), [start]
    while stack:
        adj, w = stack.pop()
        state = (frozenset((v, adj[v], w[v]) for v in adj))
        if state in seen:
            continue
        seen.add(state)
        cands = cd.merge_candidates(adj, adj, w)
        if not cands:
            edges = {frozenset((a, b)) for a in adj for b in adj[a]}
            ends.add(graphs.canonical_form(Graph.build(adj, edges, w)))
            if len(ends) > 1:
                return False
        for a, b, nw in cands:
            keep, drop = min(a, b), max(a, b)
            nadj = {}
            for v, ns in adj.items():
                if v == drop:
                    continue
                ns = ns - {drop}
                if drop in adj[v] and v != keep:
                    ns = ns | {keep}
                nadj[v] = ns
            nadj[keep] = frozenset((adj[keep] | adj[drop]) - {keep, drop})
            nw_ = {v: x for v, x in w.items() if v != drop}
            nw_[keep] = nw
            stack.append((nadj, nw_))
    return len(ends) == 1


def _graph_properties(g: Graph) -> tuple[bool, bool, bool]:
    dual = (graphs.canonical_form(cd.neighborhood_graph(graphs.complement(g)).graph)
            == graphs.canonical_form(graphs.complement(cd.neighborhood_graph(g).graph)))
    return _confluent(g), dual, cd.tangle_correspondence_check(g)


def test_criterion_7_neighborhood_graphs():
    t0 = time.time()
    rng = random.Random(20261016)
    sample = [_random_graph(rng) for _ in range(10_000)]
    exhaustive = list(_all_graphs(5))
    fails = [0, 0, 0]
    for g in sample + exhaustive:
        for i, ok in enumerate(_graph_properties(g)):
            fails[i] += not ok
    report(7, fails == [0, 0, 0],
           f"{len(sample)} random graphs (<=8 vertices) + {len(exhaustive)} labelled graphs (<=5 vertices); "
           f"failures confluence={fails[0]} duality={fails[1]} tangles={fails[2]}, {time.time() - t0:.1f}s")


def test_criterion_8_counting():
    cat = load_catalog()
    counts = {name: interlace.count_realizations(gc.from_letters(c.letters)) for name, c in cat.items()}
    composite = parse_gauss_code("1 2 3 1 2 3 4 5 6 4 5 6 7 8 9 7 8 9")
    comp = interlace.count_realizations(composite)
    not_one = [n for n, c in counts.items() if c != 1]
    report(8, not not_one and comp == 4,
           f"{len(counts)} prime shadows, count != 1 for {not_one or 'none'}; triple composite count {comp}")


def _permutation_check():
    checked, bad = 0, []
    for name in small_names(8) + ["10_71"]:
        e = knot(name)
        base = flype.canonical_lg_of(e)
        for bundle in inv.ring_bundles(e):
            for perm in permutations(range(len(bundle))):
                try:
                    out = inv.permute_tangles(e, bundle, list(perm))
                except inv.WouldSplit:
                    continue
                checked += 1
                if flype.canonical_lg_of(out) != base or not out.is_planar():
                    bad.append((name, perm))
    return checked, bad


def _probe_lg_to_mutation():
    """Pairs up to 7 crossings with equal interlacement graph, and whether extended mutation links them."""
    names = small_names(7)
    diagrams = {n: knot(n) for n in names}
    diagrams.update({n + "*": knot(n).mirrored() for n in names})
    lg = {n: flype.canonical_lg_of(d) for n, d in diagrams.items()}
    lines = []
    for a, b in combinations(diagrams, 2):
        if lg[a] != lg[b] or inv.same_knot(diagrams[a], diagrams[b]):
            continue
        found = inv.probe_extended_mutation(diagrams[a], diagrams[b], budget=500)
        lines.append(f"{a}~{b}:{ {True: 'linked', False: 'not linked', None: 'undecided'}[found] }")
    return lines


def test_criterion_9_extended_mutation():
    checked, bad = _permutation_check()
    probe = _probe_lg_to_mutation()
    report(9, checked > 0 and not bad,
           f"{checked} tangle permutations, LG changed in {len(bad)}; "
           f"converse probe (reported only): {', '.join(probe) or 'no pairs'}")


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for fn in sorted(tests, key=lambda f: int(f.__name__.split("_")[2])):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
