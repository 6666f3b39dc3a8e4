"""Gauss codes: parsing, validation and canonical forms.

A Gauss code is a cyclic double-occurrence word.  Three decorations are
supported, one per input line:

    plain       1 2 3 1 2 3
    over/under  O1 U2 O3 U1 O2 U3
    signed      O1+ U2+ O3+ U1+ O2+ U3+

Labels are renumbered 1..n in order of first occurrence; the original
spelling is kept in ``GaussCode.names`` for display.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

OVER, UNDER = "O", "U"


class GaussCodeError(ValueError):
    pass


class CodeSyntaxError(GaussCodeError):
    pass


class NotDoubleOccurrence(GaussCodeError):
    pass


class InconsistentOU(GaussCodeError):
    pass


class InconsistentSign(GaussCodeError):
    pass


class MixedDecoration(GaussCodeError):
    pass


class Undecorated(GaussCodeError):
    pass


class OddGap(GaussCodeError):
    """Raised when a label has an even cyclic gap, so alternation is impossible."""


_PLAIN = re.compile(r"^(\d+)$")
_OU = re.compile(r"^([OU])(\d+)$")
_SIGNED = re.compile(r"^([OU])(\d+)([+-])$")


@dataclass(frozen=True)
class GaussCode:
    letters: tuple[int, ...]
    ou: tuple[str, ...] | None = None
    signs: tuple[int, ...] | None = None  # indexed by label - 1
    names: tuple[str, ...] | None = None  # display name of label i+1

    def __post_init__(self):
        _check_double_occurrence(self.letters)
        n = len(self.letters) // 2
        if sorted(set(self.letters)) != list(range(1, n + 1)):
            raise NotDoubleOccurrence("labels must be 1..n")
        if self.ou is not None:
            if len(self.ou) != len(self.letters):
                raise InconsistentOU("one over/under flag per position required")
            seen: dict[int, str] = {}
            for a, f in zip(self.letters, self.ou):
                if f not in (OVER, UNDER):
                    raise InconsistentOU(f"bad flag {f!r}")
                if seen.get(a) == f:
                    raise InconsistentOU(f"label {self.name(a)} is {f} twice")
                seen[a] = f
        if self.signs is not None:
            if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
                raise InconsistentSign("one sign +1/-1 per label required")
        if self.names is not None and len(self.names) != n:
            raise GaussCodeError("one display name per label required")

    @property
    def n(self) -> int:
        return len(self.letters) // 2

    def __len__(self):
        return len(self.letters)

    def name(self, label: int) -> str:
        return self.names[label - 1] if self.names else str(label)

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        pos: dict[int, list[int]] = {}
        for i, a in enumerate(self.letters):
            pos.setdefault(a, []).append(i)
        return {a: (p[0], p[1]) for a, p in pos.items()}

    def sign(self, label: int) -> int:
        if self.signs is None:
            raise Undecorated("code carries no signs")
        return self.signs[label - 1]

    @property
    def is_alternating(self) -> bool:
        if self.ou is None:
            return False
        m = len(self.ou)
        return all(self.ou[i] != self.ou[(i + 1) % m] for i in range(m))

    @property
    def has_loops(self) -> bool:
        """True when some label occurs twice in a row (a nugatory kink)."""
        m = len(self.letters)
        return m > 0 and any(self.letters[i] == self.letters[(i + 1) % m] for i in range(m))

    def tokens(self, display_names: bool = True) -> list[str]:
        out = []
        for i, a in enumerate(self.letters):
            tok = self.name(a) if display_names else str(a)
            if self.ou is not None:
                tok = self.ou[i] + tok
                if self.signs is not None:
                    tok += "+" if self.signs[a - 1] > 0 else "-"
            out.append(tok)
        return out

    def __str__(self):
        return " ".join(self.tokens())

    def key(self) -> str:
        """Token string with normalized labels (no display names)."""
        return " ".join(self.tokens(display_names=False))


def _check_double_occurrence(letters) -> None:
    counts: dict[int, int] = {}
    for a in letters:
        counts[a] = counts.get(a, 0) + 1
    bad = [a for a, c in counts.items() if c != 2]
    if bad:
        raise NotDoubleOccurrence(f"label {bad[0]} occurs {counts[bad[0]]} time(s)")


def from_letters(letters, ou=None, signs_by_label=None, names=None) -> GaussCode:
    """Build a code from arbitrary hashable labels, renumbering by first occurrence.

    ``signs_by_label`` maps original labels to +1/-1.
    """
    letters = list(letters)
    _check_double_occurrence(letters)
    relabel: dict = {}
    for a in letters:
        if a not in relabel:
            relabel[a] = len(relabel) + 1
    order = sorted(relabel, key=relabel.get)
    signs = None
    if signs_by_label is not None:
        signs = tuple(int(signs_by_label[a]) for a in order)
    if names is None:
        names = tuple(str(a) for a in order)
    return GaussCode(
        tuple(relabel[a] for a in letters),
        tuple(ou) if ou is not None else None,
        signs,
        tuple(names),
    )


def parse_gauss_code(text: str) -> GaussCode:
    text = text.split("#", 1)[0]
    toks = text.split()
    kinds = set()
    raw, ou, sign_of = [], [], {}
    for tok in toks:
        if m := _PLAIN.match(tok):
            kinds.add("plain")
            raw.append(int(m.group(1)))
        elif m := _OU.match(tok):
            kinds.add("ou")
            ou.append(m.group(1))
            raw.append(int(m.group(2)))
        elif m := _SIGNED.match(tok):
            kinds.add("signed")
            ou.append(m.group(1))
            lab = int(m.group(2))
            raw.append(lab)
            s = 1 if m.group(3) == "+" else -1
            if sign_of.setdefault(lab, s) != s:
                raise InconsistentSign(f"label {lab} carries both signs")
        else:
            raise CodeSyntaxError(f"bad token {tok!r}")
        if raw[-1] < 1:
            raise CodeSyntaxError(f"labels start at 1, got {tok!r}")
    if len(kinds) > 1:
        raise MixedDecoration(f"mixed token kinds: {', '.join(sorted(kinds))}")
    kind = kinds.pop() if kinds else "plain"
    return from_letters(
        raw,
        ou=ou if kind != "plain" else None,
        signs_by_label=sign_of if kind == "signed" else None,
    )


def reverse(code: GaussCode) -> GaussCode:
    return from_letters(
        [code.name(a) for a in reversed(code.letters)],
        ou=tuple(reversed(code.ou)) if code.ou is not None else None,
        signs_by_label=(
            {code.name(a): code.sign(a) for a in code.positions} if code.signs else None
        ),
    )


def mirror(code: GaussCode) -> GaussCode:
    if code.ou is None and code.signs is None:
        raise Undecorated("a plain lacet word has no mirror image distinct from itself")
    ou = None
    if code.ou is not None:
        ou = tuple(UNDER if f == OVER else OVER for f in code.ou)
    signs = tuple(-s for s in code.signs) if code.signs is not None else None
    return GaussCode(code.letters, ou, signs, code.names)


def swap_ou(code: GaussCode) -> GaussCode:
    """Exchange over and under everywhere, keeping signs (the diagram seen from behind)."""
    if code.ou is None:
        return code
    return GaussCode(code.letters, tuple(UNDER if f == OVER else OVER for f in code.ou),
                     code.signs, code.names)


def assign_alternating(code: GaussCode) -> GaussCode:
    for a, (i, j) in code.positions.items():
        if (j - i) % 2 == 0:
            raise OddGap(f"label {code.name(a)} has even gap {j - i}")
    ou = tuple(OVER if i % 2 == 0 else UNDER for i in range(len(code.letters)))
    return GaussCode(code.letters, ou, code.signs, code.names)


def _rep(letters, ou, signs, start, step):
    m = len(letters)
    relabel: dict[int, int] = {}
    out = []
    for k in range(m):
        i = (start + step * k) % m
        a = letters[i]
        b = relabel.setdefault(a, len(relabel) + 1)
        out.append((
            b,
            0 if ou is None else (0 if ou[i] == OVER else 1),
            0 if signs is None else (0 if signs[a - 1] > 0 else 1),
        ))
    return tuple(out)


def canonical_tokens(code: GaussCode, oriented: bool = False) -> tuple:
    """Least decorated token sequence over rotations (and reversals unless ``oriented``)."""
    m = len(code.letters)
    if m == 0:
        return ()
    steps = (1,) if oriented else (1, -1)
    return min(
        _rep(code.letters, code.ou, code.signs, s, d) for d in steps for s in range(m)
    )


def canonicalize(code: GaussCode, oriented: bool = False) -> GaussCode:
    best = canonical_tokens(code, oriented)
    n = len(best) // 2
    letters = tuple(t[0] for t in best)
    ou = tuple(OVER if t[1] == 0 else UNDER for t in best) if code.ou is not None else None
    signs = None
    if code.signs is not None:
        by_label = {t[0]: (1 if t[2] == 0 else -1) for t in best}
        signs = tuple(by_label[a] for a in range(1, n + 1))
    return GaussCode(letters, ou, signs, tuple(str(a) for a in range(1, n + 1)))


def interlaced_pairs(code: GaussCode) -> set[frozenset[int]]:
    """Pairs of labels occurring in the pattern x..y..x..y."""
    pos = code.positions
    out = set()
    labels = sorted(pos)
    for ia, a in enumerate(labels):
        i, j = pos[a]
        for b in labels[ia + 1:]:
            k, l = pos[b]
            if (i < k < j) != (i < l < j):
                out.add(frozenset((a, b)))
    return out


def all_words(n: int):
    """Every double-occurrence word of length 2n, one per perfect matching of positions."""
    def matchings(free):
        if not free:
            yield []
            return
        first, rest = free[0], free[1:]
        for k in range(len(rest)):
            for m in matchings(rest[:k] + rest[k + 1:]):
                yield [(first, rest[k])] + m

    for m in matchings(list(range(2 * n))):
        letters = [0] * (2 * n)
        for lab, (i, j) in enumerate(m, 1):
            letters[i] = letters[j] = lab
        yield from_letters(letters)


def word_classes(n: int) -> list[GaussCode]:
    """One canonical representative per class of plain words with n letters."""
    seen = {}
    for w in all_words(n):
        c = canonicalize(w)
        seen.setdefault(c.letters, c)
    return [seen[k] for k in sorted(seen)]
