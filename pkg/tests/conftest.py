import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from rigidity.autsearch import brute_force_automorphisms
from rigidity.structures import FiniteStructure, Signature

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


class BruteForce:
    """Degrees straight from the definitions: all automorphisms, all subsets."""

    def __init__(self, s: FiniteStructure):
        self.n = s.n
        self.auts = brute_force_automorphisms(s)
        self.ident = tuple(range(s.n))

    def stab(self, a):
        return [g for g in self.auts if all(g[x] == x for x in a)]

    def dcl(self, a):
        st_ = self.stab(a)
        return frozenset(x for x in range(self.n) if all(g[x] == x for g in st_))

    def rigid(self, a):
        return all(g == self.ident for g in self.stab(a))

    def e_degree(self):
        for k in range(self.n + 1):
            for a in combinations(range(self.n), k):
                if self.rigid(a):
                    return k, a
        raise AssertionError

    def a_degree(self):
        for k in range(self.n + 1):
            if all(self.rigid(a) for a in combinations(range(self.n), k)):
                return k
        raise AssertionError

    def lex_least_failing(self, k):
        for a in combinations(range(self.n), k):
            if not self.rigid(a):
                return a
        return None

    def ind(self, a):
        st_ = self.stab(a)
        return max(len({g[x] for g in st_}) for x in range(self.n))


def random_structure(rng: random.Random, max_n=6, max_rels=2, arities=(1, 2)) -> FiniteStructure:
    n = rng.randint(1, max_n)
    symbols, interp = [], {}
    for i in range(rng.randint(0, max_rels)):
        ar = rng.choice(arities)
        name = f"R{i}"
        symbols.append((name, ar))
        density = rng.choice((0.15, 0.3, 0.5))
        if ar == 1:
            interp[name] = {(x,) for x in range(n) if rng.random() < density}
        elif ar == 2:
            interp[name] = {(x, y) for x in range(n) for y in range(n) if rng.random() < density}
        else:
            interp[name] = {tuple(rng.randrange(n) for _ in range(ar)) for _ in range(rng.randint(0, 2 * n))}
    return FiniteStructure(n, Signature(tuple(symbols)), interp)


@st.composite
def structures(draw, max_n=6, max_rels=2):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_structure(random.Random(seed), max_n=max_n, max_rels=max_rels, arities=(1, 2, 3))


@pytest.fixture
def brute():
    return BruteForce


_SUITE_CACHE: dict = {}


def cached_suite(group: str, seed: int = 1):
    """(reports, seconds) for one claim group over the default corpus, computed once per session."""
    import time

    from rigidity import harness

    key = (group, seed)
    if key not in _SUITE_CACHE:
        corpus = harness.default_corpus(seed)
        start = time.perf_counter()
        reports = harness.run_suite(group, corpus)
        _SUITE_CACHE[key] = (reports, time.perf_counter() - start)
    return _SUITE_CACHE[key]
