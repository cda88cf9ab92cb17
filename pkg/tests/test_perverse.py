import random
from fractions import Fraction

import pytest

from homotopes.errors import DomainError
from homotopes.laurent_linalg import LaurentMatrix, det, smith_normal_form
from homotopes.perverse import disc_cokernel, disc_operator, sphere_comparison, z_relations_check
from homotopes.scalars import LaurentPoly
from oracles import leibniz_det

x = LaurentPoly.var("x")


def test_disc_shape():
    assert disc_operator(2).to_strings() == [["1", "-1"], ["-x", "1"]]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_disc_determinant(n):
    d = disc_operator(n)
    assert det(d) == leibniz_det(d.rows, LaurentPoly())
    assert det(d) == 1 - x


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_disc_cokernel(n):
    res = disc_cokernel(n)
    assert res.torsion() == [x - 1]
    assert res.free_rank() == 0
    assert res.factors[:-1] == [LaurentPoly.const(1)] * (n - 1)


def test_disc2_by_hand():
    # add column 1 to column 2, then row 1 times x to row 2: diag(1, 1 - x)
    d = disc_operator(2)
    V = LaurentMatrix([[1, 1], [0, 1]])
    U = LaurentMatrix([[1, 0], [x, 1]])
    assert U * d * V == LaurentMatrix([[1, 0], [0, 1 - x]])


def test_doubled_disc():
    d = disc_operator(3)
    assert smith_normal_form(d.direct_sum(d)).torsion() == [x - 1, x - 1]


@pytest.mark.parametrize("n", range(2, 9))
def test_z_relations(n):
    assert z_relations_check(n)


def test_sphere_comparison_examples():
    assert sphere_comparison(3, 3, [1, 1, 1])
    assert sphere_comparison(2, 3, [1, 1, 1])
    assert sphere_comparison(5, 3, [1, 1, 1])


def test_sphere_comparison_generic_fails():
    rng = random.Random(0)
    s = [Fraction(rng.randint(2, 9), rng.randint(1, 9)) for _ in range(3)]
    with pytest.raises(DomainError):
        sphere_comparison(3, 3, s)


def test_disc_needs_two():
    with pytest.raises(DomainError):
        disc_operator(1)
