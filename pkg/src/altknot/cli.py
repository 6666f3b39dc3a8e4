"""Command-line front end.  Exit status: 0 success, 1 domain error, 2 usage error."""
from __future__ import annotations

import argparse
import sys

from . import condense, flype, interlace, invariants
from .catalog import load_catalog, resolve
from .code import CodeSyntaxError, GaussCode, GaussCodeError
from .diagram import (EmbeddedDiagram, NotRealizable, build_embedding, compute_signs,
                      validate_signed_code)
from .graphs import Graph


class DomainError(Exception):
    pass


def _embed(code: GaussCode) -> EmbeddedDiagram:
    if code.signs is not None:
        return validate_signed_code(code)
    emb = build_embedding(code)
    if code.ou is not None:
        over = {}
        for (x, k), f in zip(emb.passages, code.ou):
            over[x] = k % 2 if f == "O" else (k + 1) % 2
        emb = emb.with_over(over)
    return emb


def _knot(text: str) -> EmbeddedDiagram:
    code = resolve(text)
    if code.ou is None:
        raise DomainError("this command needs an over/under code or a catalog name")
    return _embed(code)


def _graph_lines(g: Graph, names=str, eps=None) -> list[str]:
    out = []
    for v in g.vertices:
        tag = ""
        if eps is not None:
            tag = " " + ("+" if eps[v] > 0 else "-")
        out.append(f"vertex {names(v)} w={g.weight(v)}{tag}")
    if g.arcs is not None:
        for a, b in sorted(g.arcs):
            out.append(f"arc {names(a)} -> {names(b)}")
    else:
        for a, b in sorted(tuple(sorted(e)) for e in g.edges):
            out.append(f"edge {names(a)} {names(b)}")
    return out


def _graph_dot(g: Graph, names=str, eps=None) -> list[str]:
    directed = g.arcs is not None
    out = ["digraph LG {" if directed else "graph LG {"]
    for v in g.vertices:
        sfx = "" if eps is None else ("+" if eps[v] > 0 else "-")
        out.append(f'  {v} [label="{names(v)}[w={g.weight(v)}]{sfx}"];')
    if directed:
        out += [f"  {a} -> {b};" for a, b in sorted(g.arcs)]
    else:
        out += [f"  {a} -- {b};" for a, b in sorted(tuple(sorted(e)) for e in g.edges)]
    out.append("}")
    return out


# --------------------------------------------------------------------------
# commands

def cmd_validate(args) -> list[str]:
    code = resolve(args.code)
    verdict = interlace.check_realizability(code)
    if not verdict:
        raise NotRealizable(verdict.describe(code.name))
    lines = ["realizable"]
    if code.signs is not None:
        validate_signed_code(code)
        lines.append("signs consistent with an embedding")
    if code.ou is not None:
        lines.append("alternating" if code.is_alternating else "not alternating")
    return lines


def cmd_embed(args) -> list[str]:
    code = resolve(args.code)
    emb = _embed(code)
    name = code.name
    lines = [f"crossings {emb.n}", f"faces {emb.face_count()}"]
    for x in emb.crossings:
        around = " ".join(f"{name(emb.link[(x, k)][0])}.{emb.link[(x, k)][1]}" for k in range(4))
        lines.append(f"rotation {name(x)}: {around}")
    if emb.over is not None:
        sd = compute_signs(emb)
        lines.append("epsilon " + " ".join(
            f"{name(x)}{'+' if sd.epsilon[x] > 0 else '-'}" for x in emb.crossings))
        lines.append(f"writhe {sd.writhe}")
    return lines


def cmd_lg(args) -> list[str]:
    code = resolve(args.code)
    name = code.name
    eps = None
    if args.eps or args.alpha:
        if code.ou is None:
            raise DomainError("--eps and --alpha need an over/under code")
        emb = _embed(code)
        g = invariants.build_enhanced_lg(emb, with_eps=False, with_alpha=args.alpha)
        eps = compute_signs(emb).epsilon
    else:
        g = interlace.interlacement_of(code)
        g = Graph.build(g.vertices, g.edges)
    if args.condense:
        cg = condense.neighborhood_graph(Graph.build(g.vertices, g.edges))
        g, eps = cg.graph, None
        name = _merged_names(cg.provenance, code.name)
    return _graph_dot(g, name, eps) if args.dot else _graph_lines(g, name, eps)


def _merged_names(provenance: dict, base):
    def name(v):
        members = sorted(provenance[v])
        return base(v) if len(members) == 1 else "[" + "".join(base(u) for u in members) + "]"
    return name


def cmd_cwcd(args) -> list[str]:
    emb = _knot(args.code)
    w = flype.build_cwcd(emb)
    enc = w.canonical()
    if args.dot:
        return _cwcd_dot(enc)
    lines = [f"slots {len(enc)}"]
    for i, (bag, items) in enumerate(enc):
        kind = "bag" if bag else "chord"
        lines.append(f"{i} {kind} " + " ".join(f"->{(i + d) % len(enc)}:{wt}" for d, wt in items))
    return lines


def _cwcd_dot(enc) -> list[str]:
    m = len(enc)
    out = ["graph cwCD {"]
    for i in range(m):
        out.append(f'  s{i} [label="{i}"];')
    for i in range(m):
        out.append(f"  s{i} -- s{(i + 1) % m} [style=bold];")
    seen = set()
    for i, (_, items) in enumerate(enc):
        for d, wt in items:
            j = (i + d) % m
            key = (min(i, j), max(i, j), wt)
            if key in seen and i != j:
                seen.discard(key)
                continue
            seen.add(key)
            out.append(f'  s{i} -- s{j} [label="{wt}"];')
    out.append("}")
    return out


def cmd_orbit(args) -> list[str]:
    emb = _knot(args.code)
    orbit = flype.enumerate_orbit(emb)
    lines = [f"diagrams {len(orbit)}", f"moves {len(orbit.edges)}"]
    lines += [flype.key_string(k) for k in sorted(orbit.keys)]
    return lines


def cmd_compare(args) -> list[str]:
    a, b = _knot(args.a), _knot(args.b)
    if invariants.same_knot(a, b):
        return ["same knot"]
    if invariants.same_knot(a, b.mirrored()):
        return ["mirror images"]
    return ["different knots"]


def cmd_chirality(args) -> list[str]:
    emb = _knot(args.code)
    prof = invariants.chirality_profile(emb)
    order, gens = invariants.symmetry_group(emb)
    return [prof.verdict, "invertible" if prof.invertible else "not invertible",
            f"cwCD symmetries {order}" + (": " + "; ".join(gens) if gens else "")]


def cmd_mutants(args) -> list[str]:
    emb = _knot(args.code)
    try:
        slots = [int(s) for s in args.tangle.split(",")]
    except ValueError:
        raise UsageError(f"bad --tangle value {args.tangle!r}")
    if len(slots) != 4:
        raise UsageError(f"--tangle needs four slots, got {args.tangle!r}")
    cut = invariants.cut_from_slots(emb, slots)
    out = invariants.mutate(emb, invariants.MutationSpec(cut, args.sym))
    return [str(out.to_code(signed=True))]


def cmd_catalog(args) -> list[str]:
    lines, bad = [], 0
    for name, code in load_catalog().items():
        if not args.check:
            lines.append(f"{name}\t{code}")
            continue
        try:
            emb = validate_signed_code(code)
            flype.check_reduced_alternating(emb)
            lines.append(f"{name} ok")
        except ValueError as exc:
            bad += 1
            lines.append(f"{name} FAILED: {exc}")
    if bad:
        raise DomainError("\n".join(lines + [f"{bad} catalog entries failed"]))
    return lines


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="altknot", description="Alternating knot diagrams from Gauss codes.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="realizability of a Gauss code")
    s.add_argument("code")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("embed", help="rotation system of a realizable code")
    s.add_argument("code")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("lg", help="interlacement graph")
    s.add_argument("code")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--condense", action="store_true", help="neighborhood graph")
    mode.add_argument("--eps", action="store_true", help="vertex signs")
    mode.add_argument("--alpha", action="store_true", help="vertex signs and edge orientation")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_lg)

    s = sub.add_parser("cwcd", help="canonical chord-weighted chord diagram")
    s.add_argument("code")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_cwcd)

    s = sub.add_parser("orbit", help="all diagrams reachable by flypes")
    s.add_argument("code")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("compare", help="decide whether two diagrams show the same knot")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("chirality", help="chirality and invertibility")
    s.add_argument("code")
    s.set_defaults(func=cmd_chirality)

    s = sub.add_parser("mutants", help="mutate a 2-tangle")
    s.add_argument("code")
    s.add_argument("--tangle", required=True, help="four cut slots, e.g. 0,3,7,10")
    s.add_argument("--sym", required=True, choices=["Id", "H", "V", "pi"])
    s.set_defaults(func=cmd_mutants)

    s = sub.add_parser("catalog", help="list or check the bundled catalog")
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_catalog)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        lines = args.func(args)
    except (UsageError, CodeSyntaxError) as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except NotRealizable as exc:
        print(f"not realizable: {exc}", file=out)
        return 1
    except (DomainError, GaussCodeError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    for line in lines:
        print(line, file=out)
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
