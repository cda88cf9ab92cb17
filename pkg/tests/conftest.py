import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import settings

from homotopes.graph import Graph

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def random_graph(rng, max_vertices=6, max_edges=9, rational=True, connected=False):
    """Random simple graph on 1..n with random nonzero rational parameters."""
    while True:
        n = rng.randint(1, max_vertices)
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        rng.shuffle(pairs)
        edges = pairs[:rng.randint(0, min(max_edges, len(pairs)))]
        params = None
        if rational:
            params = {}
            for e in edges:
                v = Fraction(rng.choice([-1, 1]) * rng.randint(1, 7), rng.randint(1, 5))
                params[e] = v
        g = Graph(range(1, n + 1), edges, params)
        if not connected or g.is_connected():
            return g


def random_tree(rng, n):
    edges = [(rng.randint(1, k - 1), k) for k in range(2, n + 1)]
    return Graph(range(1, n + 1), edges, {e: Fraction(rng.randint(1, 5), rng.randint(1, 5))
                                          for e in edges})


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results):
        terminalreporter.write_line(results[key])
