"""Acceptance criteria, one test each. A pass/fail line per criterion is
printed in the pytest terminal summary (and directly when run as a script)."""
import functools
import random
import time
from fractions import Fraction

from conftest import random_graph, random_tree
from homotopes import balgebra as B
from homotopes import configurations as C
from homotopes import hadamard as Hd
from homotopes import homotope as H
from homotopes import kernels, linalg
from homotopes.graph import cycle_basis, cycle_graph, enumerate_contracted_dense, multipartite_graph
from homotopes.groupoid import delta_no_zero_divisor_filtered
from homotopes.laurent_linalg import corank_at, cyclic_laplacian, cyclic_strata
from homotopes.perverse import disc_cokernel, sphere_comparison, z_relations_check
from homotopes.scalars import LaurentPoly
from oracles import dense_matmul, gauss_rank, random_fraction

F = Fraction
RESULTS = {}
x = LaurentPoly.var("x")


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                RESULTS[number] = (f"criterion {number}: FAIL  {title} "
                                   f"[{time.perf_counter() - t0:.1f}s] {type(exc).__name__}: {exc}")
                raise
            extra = f" ({detail})" if detail else ""
            RESULTS[number] = (f"criterion {number}: PASS  {title} "
                               f"[{time.perf_counter() - t0:.1f}s]{extra}")
        return run
    return wrap


def corpus():
    rng = random.Random(2024)
    return [random_graph(rng, max_vertices=6, max_edges=9) for _ in range(50)]


@criterion(1, "B(Gamma) associativity, 50 random graphs, paths of length <= 3")
def test_normal_form_soundness():
    t0 = time.perf_counter()
    rng = random.Random(1)
    total = 0
    for g in corpus():
        checked, failures = B.associativity_scan(g, 3)
        assert failures == [], failures[:3]
        total += checked
        # the scan compares paths and exponent vectors; spot-check with the exact coefficients
        paths = enumerate_contracted_dense(g, 3)
        for _ in range(60):
            a, b, c = (B.basis_element(g, rng.choice(paths)) for _ in range(3))
            assert (a * b) * c == a * (b * c)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60, f"took {elapsed:.1f}s"
    return f"{total} triples, backend {kernels.BACKEND}"


@criterion(2, "b_mul equals the homotope product a Delta b in the groupoid algebra")
def test_homotope_oracle_equivalence():
    pairs = 0
    for g in corpus():
        if not g.edges and g.n == 0:
            continue
        ok, n, bad = B.check_homotope_iso(g, 3, report=True)
        assert ok, bad[:3]
        pairs += n
    return f"{pairs} pairs"


@criterion(3, "trees have n^2 + 1 contracted paths")
def test_tree_dimension():
    rng = random.Random(3)
    count = 0
    for n in range(1, 8):
        for _ in range(6):
            t = random_tree(rng, n)
            assert len(enumerate_contracted_dense(t, max(n - 1, 0))) == n * n + 1
            count += 1
    return f"{count} trees"


def _loop_power(cyc, k):
    base = cyc if k >= 0 else list(reversed(cyc))
    loop = base[:1]
    for _ in range(abs(k)):
        loop += base[1:]
    return loop


@criterion(4, "S-invariant laws and the character round trip")
def test_s_invariant_laws():
    rng = random.Random(4)
    graphs = [("C%d" % n, lambda n=n: cycle_graph(n, [random_fraction(rng, 1, 6)
                                                       for _ in range(n)])) for n in range(3, 7)]
    graphs.append(("Gamma_2(2)", lambda: multipartite_graph(2, 2, [random_fraction(rng, 1, 6)
                                                                   for _ in range(4)])))
    cases = 0
    for name, make in graphs:
        for _ in range(20):
            g = make()
            chi = random_fraction(rng)
            c = C.from_character(g, [chi])
            cb = cycle_basis(g)
            cyc = [g.vertices[i] for i in cb.cycles[0]]
            # round trip
            assert C.sclass(c) == [chi], name
            # S_gamma S_gamma_hat = 1
            for k in (1, 2, -1):
                loop = _loop_power(cyc, k)
                assert C.s_invariant(c, loop) * C.s_invariant(c, list(reversed(loop))) == 1
                assert C.s_invariant(c, loop) == chi ** k
            # contractible loops
            v = g.vertices[0]
            w = g.vertices[g.neighbors[0][0]]
            assert C.s_invariant(c, (v, w, v)) == 1
            assert C.s_invariant(c, cyc + list(reversed(cyc))[1:]) == 1
            # minimalize keeps S on the cycle basis
            m = C.minimalize(C.pad(c, rng.randint(1, 2)))
            assert C.sclass(m) == [chi] and m.dim == c.dim
            cases += 1
    return f"{cases} characters"


@criterion(5, "cyclic strata: det = A(x + 1/x) + B, A = +-prod s, corank <= 2")
def test_cyclic_strata():
    rng = random.Random(5)
    roots = 0
    for n in range(3, 7):
        for _ in range(100):
            s = [random_fraction(rng) for _ in range(n)]
            rep = cyclic_strata(n, s)
            prod = F(1)
            for v in s:
                prod *= v
            assert rep.A == prod or rep.A == -prod
            assert rep.det == rep.A * (x + x.inv()) + rep.B
            for r, k in zip(rep.roots, rep.coranks):
                assert k <= 2
                roots += 1
    rep = cyclic_strata(3, [1, 1, 1])
    assert rep.roots == [1] and rep.coranks == [2]
    assert corank_at(cyclic_laplacian(3, [1, 1, 1]), 1) == 2
    assert C.from_character(cycle_graph(3, 1), [1]).dim == 3 - 2
    return f"400 parameter sets, {roots} roots"


def _random_square(rng, n):
    if rng.random() < 0.5:
        m = 4 * n
        p, q = Hd.random_monomial(n, rng, m), Hd.random_monomial(n, rng, m)
        f = [[v.lift(m) for v in r] for r in Hd.fourier(n)]
        return linalg.matmul(linalg.matmul(p, f), q)
    while True:
        a = [[F(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)) for _ in range(n)]
             for _ in range(n)]
        if gauss_rank(a) == n:
            return a


@criterion(6, "Fourier matrices, prime MUB families, Cartan pair agreement")
def test_hadamard_mub():
    for p in (2, 3, 5, 7):
        f = Hd.fourier(p)
        assert Hd.is_generalized_hadamard(f)
        assert linalg.mat_eq(Hd.hadamard_involution(f), linalg.inverse(f))
    times = []
    for p in (3, 5, 7):
        t0 = time.perf_counter()
        fam = Hd.prime_mub_family(p)
        assert len(fam) == p + 1
        assert Hd.mub_check(fam)
        dt = time.perf_counter() - t0
        assert dt < 10, f"p={p} took {dt:.1f}s"
        times.append(f"p={p} {dt:.1f}s")
        assert C.check_config(Hd.mub_to_config(fam))["ok"]
        for i in range(len(fam)):
            for j in range(i + 1, len(fam)):
                cfg = Hd.mub_to_config([fam[i], fam[j]])
                assert cfg.r == [F(1, p)] * len(cfg.graph.edges)
                assert C.check_config(cfg)["ok"]
    rng = random.Random(6)
    agree = 0
    for _ in range(50):
        a = _random_square(rng, rng.randint(2, 4))
        assert Hd.cartan_pair_check(a) == Hd.is_generalized_hadamard(a)
        agree += 1
    return ", ".join(times) + f", {agree} random matrices"


def _invertible(rng, n):
    while True:
        m = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if gauss_rank(m) == n:
            return m


@criterion(7, "homotope identities: quiver class, Ext^1, split case, K x K")
def test_homotope_identities():
    rng = random.Random(7)
    for n in (2, 3, 4):
        A = H.matrix_algebra(n)
        for s in range(n):
            d = [[F(1) if i == j and i < n - s else F(0) for j in range(n)] for i in range(n)]
            D = dense_matmul(dense_matmul(_invertible(rng, n), d), _invertible(rng, n))
            h = H.Homotope(A, H.matrix_to_vector(D))
            assert H.quiver_class(D) == H.QuiverClass(s, s)
            assert H.ext1_dim_check(h) == (n * s, n * s)
            assert (h.split_idempotent() is not None) == (s == 0)
    K2 = H.product_algebra(2)
    for a in (F(0), F(1), F(-2, 3)):
        for b in (F(0), F(5), F(1, 7)):
            h = H.Homotope(K2, [a, b])
            assert H.is_well_tempered_findim(h) == (a != 0 and b != 0)


@criterion(8, "perverse sheaf computations on the disc and the sphere")
def test_perverse():
    t0 = time.perf_counter()
    for n in range(2, 7):
        assert disc_cokernel(n).torsion() == [x - 1]
    for n in range(2, 9):
        assert z_relations_check(n)
    assert sphere_comparison(3, 3, [1, 1, 1])
    elapsed = time.perf_counter() - t0
    assert elapsed < 30, f"took {elapsed:.1f}s"


@criterion(9, "filtered injectivity of psi_1 and of multiplication by Delta on C_n")
def test_filtered_checks():
    for n in (3, 4, 5):
        g = cycle_graph(n)
        assert B.psi_injectivity_filtered(g, 3, which=1)
        assert delta_no_zero_divisor_filtered(g, 3)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except Exception:
                pass
    for key in sorted(RESULTS):
        print(RESULTS[key])
