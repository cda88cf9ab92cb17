import os
import random
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_graph
from homotopes import _kernels_py, kernels
from homotopes.graph import enumerate_contracted_dense
from oracles import gauss_rank

try:
    from homotopes import _kernels as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


def _walk(g, rng, length):
    w = [rng.randrange(g.n)]
    for _ in range(length):
        w.append(rng.choice(list(g.neighbors[w[-1]]) + [w[-1]]))
    return tuple(w)


def test_backend_flag():
    assert kernels.BACKEND in ("compiled", "python")
    if compiled is not None:
        assert kernels.BACKEND == "compiled"


def test_pure_env_forces_fallback():
    env = dict(os.environ, HOMOTOPES_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from homotopes import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@needs_compiled
@given(st.integers(0, 10 ** 6), st.integers(0, 12))
def test_contract_backends_agree(seed, length):
    rng = random.Random(seed)
    g = random_graph(rng, 6, 9, rational=False)
    w = _walk(g, rng, length)
    a = _kernels_py.contract(w, g.n, g.edge_index)
    b = compiled.contract(w, g.n, g.edge_index)
    assert a[0] == b[0] and sorted(a[1]) == sorted(b[1])


@needs_compiled
@given(st.integers(0, 10 ** 6))
def test_assoc_scan_backends_agree(seed):
    rng = random.Random(seed)
    g = random_graph(rng, 4, 5, rational=False)
    paths = enumerate_contracted_dense(g, 2)
    a = _kernels_py.assoc_scan(paths, g.n, g.edge_index, len(g.edges))
    b = compiled.assoc_scan(paths, g.n, g.edge_index, len(g.edges))
    assert a == b and a[1] == []


@needs_compiled
@given(st.integers(0, 10 ** 6))
def test_int_rank_backends_agree(seed):
    rng = random.Random(seed)
    r, c = rng.randint(1, 7), rng.randint(1, 7)
    rows = [[rng.randint(-4, 4) if rng.random() < 0.6 else 0 for _ in range(c)] for _ in range(r)]
    assert _kernels_py.int_rank(rows) == compiled.int_rank(rows) == gauss_rank(rows)


def test_python_int_rank_big_entries():
    rows = [[10 ** 30, 1], [10 ** 30 + 1, 1], [1, 0]]
    assert _kernels_py.int_rank(rows) == 2


def test_assoc_scan_counts_all_triples():
    paths = [(), (0,), (1,), (0, 1), (1, 0)]
    edge_index = [-1, 0, 0, -1]
    checked, failures = _kernels_py.assoc_scan(paths, 2, edge_index, 1)
    assert checked == len(paths) ** 3 and failures == []
