import sys
from functools import lru_cache

import pytest

from altknot.catalog import load_catalog
from altknot.code import parse_gauss_code
from altknot.diagram import validate_signed_code

W77 = "1 2 3 4 5 6 4 7 2 1 7 3 6 5"
W77_SIGNED = "O1+ U2+ O3- U4- O5+ U6+ O4- U7- O2+ U1+ O7- U3- O6+ U5+"

# symmetry types as listed by KnotInfo
KNOTINFO_SYMMETRY = {
    "3_1": "reversible", "4_1": "fully amphicheiral", "5_1": "reversible", "5_2": "reversible",
    "6_1": "reversible", "6_2": "reversible", "6_3": "fully amphicheiral",
    "7_1": "reversible", "7_2": "reversible", "7_3": "reversible", "7_4": "reversible",
    "7_5": "reversible", "7_6": "reversible", "7_7": "reversible",
    "8_1": "reversible", "8_2": "reversible", "8_3": "fully amphicheiral", "8_4": "reversible",
    "8_5": "reversible", "8_6": "reversible", "8_7": "reversible", "8_8": "reversible",
    "8_9": "fully amphicheiral", "8_10": "reversible", "8_11": "reversible",
    "8_12": "fully amphicheiral", "8_13": "reversible", "8_14": "reversible",
    "8_15": "reversible", "8_16": "reversible", "8_17": "negative amphicheiral",
    "8_18": "fully amphicheiral", "10_71": "reversible",
}


@lru_cache(maxsize=None)
def knot(name: str):
    return validate_signed_code(load_catalog()[name])


def small_names(max_crossings: int = 8) -> list[str]:
    return [n for n in load_catalog() if int(n.split("_")[0]) <= max_crossings]


@pytest.fixture
def w77():
    return parse_gauss_code(W77)


@pytest.fixture
def k77():
    return validate_signed_code(parse_gauss_code(W77_SIGNED))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
