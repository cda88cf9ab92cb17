import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homotopes import homotope as H
from homotopes import linalg
from homotopes.errors import DomainError
from homotopes.graph import path_graph
from oracles import dense_matmul, gauss_rank

F = Fraction


def unit_matrix(n, i, j):
    return [[F(1) if (r, c) == (i, j) else F(0) for c in range(n)] for r in range(n)]


def random_invertible(rng, n):
    while True:
        m = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if gauss_rank(m) == n:
            return m


def delta_of_corank(rng, n, s):
    d = [[F(1) if i == j and i < n - s else F(0) for j in range(n)] for i in range(n)]
    return dense_matmul(dense_matmul(random_invertible(rng, n), d), random_invertible(rng, n))


def test_identity_delta_splits():
    h = H.Homotope(H.matrix_algebra(2), H.matrix_to_vector(linalg.identity(2)))
    e = h.split_idempotent()
    assert e is not None
    alg = h.as_algebra()
    # e = Delta^-1 in the ideal is a central idempotent
    el = [F(0)] + e
    assert alg.mul(el, el) == el
    for k in range(alg.dim):
        b = alg.basis(k)
        assert alg.mul(el, b) == alg.mul(b, el)


def test_zero_delta_squares_to_zero():
    k = H.product_algebra(1)
    h = H.Homotope(k, [0])
    assert h.product([F(1)], [F(1)]) == [F(0)]
    assert not H.is_well_tempered_findim(h)


def test_e11_span_is_everything():
    h = H.Homotope(H.matrix_algebra(2), H.matrix_to_vector(unit_matrix(2, 0, 0)))
    assert H.products_span_rank(h) == 4
    assert H.is_well_tempered_findim(h)


@pytest.mark.parametrize("delta,expected", [((1, 0), False), ((0, 1), False), ((0, 0), False),
                                            ((1, 1), True), ((F(2, 3), -5), True)])
def test_commutative_well_tempered_iff_invertible(delta, expected):
    h = H.Homotope(H.product_algebra(2), list(delta))
    assert H.is_well_tempered_findim(h) is expected


def test_quiver_examples():
    rng = random.Random(3)
    assert H.quiver_class(delta_of_corank(rng, 3, 1)) == H.QuiverClass(1, 1)
    rect = [[F(1), F(2), F(0)], [F(0), F(1), F(1)]]
    assert H.quiver_class(rect) == H.QuiverClass(1, 0)
    assert H.quiver_class(random_invertible(rng, 3)) == H.QuiverClass(0, 0)
    with pytest.raises(DomainError):
        H.quiver_class([[F(0)] * 2] * 2)


@pytest.mark.parametrize("n", [2, 3])
def test_ext1_all_coranks(n):
    rng = random.Random(n)
    for s in range(n):
        h = H.Homotope(H.matrix_algebra(n), H.matrix_to_vector(delta_of_corank(rng, n, s)))
        assert H.ext1_dim_check(h) == (n * s, n * s)


def test_ext1_e11():
    h = H.Homotope(H.matrix_algebra(2), H.matrix_to_vector(unit_matrix(2, 0, 0)))
    assert H.ext1_dim_check(h) == (2, 2)


def test_generalized_unit_and_product():
    delta = [[F(1), F(2)], [F(0), F(3)], [F(1), F(1)]]   # 2 -> 3
    a = [[F(1), F(0), F(2)], [F(0), F(1), F(-1)]]          # 3 -> 2
    b = [[F(2), F(1), F(0)], [F(1), F(0), F(1)]]
    one = (F(1), [[F(0)] * 3 for _ in range(2)])
    assert H.generalized_homotope_mul(one, (F(4), a), delta) == (F(4), a)
    lam, prod = H.generalized_homotope_mul((F(0), a), (F(0), b), delta)
    assert lam == 0 and prod == dense_matmul(dense_matmul(a, delta), b)


def test_generalized_shape_mismatch():
    with pytest.raises(DomainError):
        H.generalized_homotope_mul((F(0), [[F(1)]]), (F(0), [[F(1)]]), [[F(1), F(1)]])


def test_lambda_and_shadow_examples():
    rep = H.standard_representation(3)
    d = [F(v) for v in range(9)]
    assert H.lambda_map(rep, d) == H.vector_to_matrix(d, 3)
    rep2 = H.standard_representation(2)
    e11 = H.matrix_to_vector(unit_matrix(2, 0, 0))
    L = H.lambda_map(rep2, e11)
    assert gauss_rank(L) == 1 and linalg.matvec(L, [F(0), F(1)]) == [0, 0]
    sh = H.minimal_shadow(rep2, e11)
    assert sh.dim == 1
    assert H.trivial_sub_dim(sh) == 0 and H.trivial_quotient_dim(sh) == 0
    assert H.minimal_shadow(rep2, H.matrix_to_vector(linalg.identity(2))).dim == 2
    assert H.minimal_shadow(rep2, [F(0)] * 4).dim == 0


def test_zero_dim_representation():
    rep = H.Representation(H.product_algebra(2), [[], []])
    assert H.lambda_map(rep, [F(1), F(2)]) == []


def test_rank_spaces_a2():
    g = path_graph(2, 1)
    # psi_1^* of the free rank-1 module: x_i -> e_i + s_ij l_ij on K^2
    rho = [[[F(1), F(1)], [F(0), F(0)]], [[F(0), F(0)], [F(1), F(1)]]]
    spaces = H.rank_spaces(rho, g)
    assert [len(v) for v in spaces] == [1, 1]
    with pytest.raises(DomainError):
        H.rank_spaces([[[F(1), F(1)], [F(0), F(0)]], [[F(0), F(0)], [F(0), F(1)]]], g)


def test_representation_checks_relations():
    with pytest.raises(DomainError):
        H.Representation(H.product_algebra(2), [[[F(1)]], [[F(1)]]])


def _random_vec(rng, d):
    return [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(d)]


@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_psi_multiplicative(seed, n):
    rng = random.Random(seed)
    A = H.matrix_algebra(n)
    h = H.Homotope(A, _random_vec(rng, A.dim))
    x = (F(rng.randint(-2, 2)), _random_vec(rng, A.dim))
    y = (F(rng.randint(-2, 2)), _random_vec(rng, A.dim))
    xy = h.mul(x, y)
    assert h.psi1(xy) == A.mul(h.psi1(x), h.psi1(y))
    assert h.psi2(xy) == A.mul(h.psi2(x), h.psi2(y))


@given(st.integers(0, 10 ** 6))
def test_homotope_associative(seed):
    rng = random.Random(seed)
    A = H.matrix_algebra(2)
    h = H.Homotope(A, _random_vec(rng, 4))
    x, y, z = ((F(rng.randint(-2, 2)), _random_vec(rng, 4)) for _ in range(3))
    assert h.mul(h.mul(x, y), z) == h.mul(x, h.mul(y, z))


@given(st.integers(0, 10 ** 6))
def test_double_coset_isomorphism(seed):
    rng = random.Random(seed)
    n = 2
    A = H.matrix_algebra(n)
    D = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
    c, d = random_invertible(rng, n), random_invertible(rng, n)
    ci, di = linalg.inverse(c), linalg.inverse(d)
    h1 = H.Homotope(A, H.matrix_to_vector(D))
    h2 = H.Homotope(A, H.matrix_to_vector(dense_matmul(dense_matmul(c, D), d)))

    def f(v):
        return H.matrix_to_vector(dense_matmul(dense_matmul(di, H.vector_to_matrix(v, n)), ci))

    for i in range(A.dim):
        for j in range(A.dim):
            a, b = A.basis(i), A.basis(j)
            assert f(h1.product(a, b)) == h2.product(f(a), f(b))


@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_generalized_square_agrees(seed, n):
    rng = random.Random(seed)
    A = H.matrix_algebra(n)
    D = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
    h = H.Homotope(A, H.matrix_to_vector(D))
    x = (F(rng.randint(-2, 2)), _random_vec(rng, A.dim))
    y = (F(rng.randint(-2, 2)), _random_vec(rng, A.dim))
    lam, m = H.generalized_homotope_mul((x[0], H.vector_to_matrix(x[1], n)),
                                        (y[0], H.vector_to_matrix(y[1], n)), D)
    ref = h.mul(x, y)
    assert lam == ref[0] and H.matrix_to_vector(m) == ref[1]


@given(st.integers(0, 10 ** 6))
def test_minimal_shadow_has_no_trivial_parts(seed):
    rng = random.Random(seed)
    n = 3
    s = rng.randint(0, 2)
    d = H.matrix_to_vector(delta_of_corank(rng, n, s))
    sh = H.minimal_shadow(H.standard_representation(n), d)
    assert sh.dim == n - s
    assert H.trivial_sub_dim(sh) == 0 and H.trivial_quotient_dim(sh) == 0


def test_algebra_verification_rejects_bad_table():
    with pytest.raises(DomainError):
        H.FinDimAlgebra(2, {(0, 0): {1: 1}, (1, 1): {1: 1}}, [0, 1])
