from __future__ import annotations

import functools

import pytest

from cayleyham.catalog import catalog_entries, lookup
from cayleyham.groups import Permutation, group_from_permutations
from cayleyham.hamilton import solve_theorem

# Valid (2,s,3) generator pairs outside the catalog, as 0-based image lists.
# agl17: x -> -x and x -> 3x + 1 on Z7 (order 42, Hex = Heawood graph).
EXTRA_GROUPS = {
    "agl17": (6, (0, 6, 5, 4, 3, 2, 1), (1, 4, 0, 3, 6, 2, 5)),
    "s4_s6": (6, (4, 2, 1, 5, 0, 3), (1, 4, 2, 5, 0, 3)),
    "psl27": (7, (0, 4, 3, 2, 1, 5, 6), (2, 0, 5, 4, 1, 6, 3)),
    "s5_s10": (10, (2, 3, 0, 1, 5, 4, 6), (2, 3, 0, 6, 5, 1, 4)),
}

CATALOG_NAMES = [e.name for e in catalog_entries()]
ALL_NAMES = CATALOG_NAMES + list(EXTRA_GROUPS)


@functools.lru_cache(maxsize=None)
def group_and_s(name: str):
    if name in EXTRA_GROUPS:
        s, a, b = EXTRA_GROUPS[name]
        return group_from_permutations(Permutation(a), Permutation(b), name=name), s
    entry = lookup(name)
    return entry.group(), entry.s


@functools.lru_cache(maxsize=None)
def solved(name: str, augment: bool = True):
    G, s = group_and_s(name)
    return solve_theorem(G, s, augment=augment)


@pytest.fixture(params=CATALOG_NAMES)
def catalog_name(request):
    return request.param


@pytest.fixture(params=ALL_NAMES)
def any_name(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
