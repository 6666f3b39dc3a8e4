"""The bundled table of alternating knots, as signed over/under Gauss codes."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .code import GaussCode, parse_gauss_code


@lru_cache(maxsize=1)
def load_catalog() -> dict[str, GaussCode]:
    text = resources.files("altknot").joinpath("data/catalog.tsv").read_text()
    out = {}
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, code = line.split("\t")
        out[name] = parse_gauss_code(code)
    return out


def resolve(text: str) -> GaussCode:
    """A catalog name such as ``7_7`` (``7_7*`` for the mirror) or a Gauss code."""
    from .code import mirror

    cat = load_catalog()
    name = text.strip()
    if name.endswith("*") and name[:-1] in cat:
        return mirror(cat[name[:-1]])
    if name in cat:
        return cat[name]
    return parse_gauss_code(text)
