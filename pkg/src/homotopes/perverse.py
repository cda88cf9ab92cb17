"""Homotope data for perverse sheaves on a disc and on a sphere with a
double point, checked through Smith normal forms over k[x, x^-1]."""
from .errors import DomainError
from .homotope import RectangularDelta, generalized_homotope_mul
from .laurent_linalg import (LaurentMatrix, cokernel_iso, corank_at, cyclic_laplacian,
                             smith_normal_form)
from .scalars import LaurentPoly


def disc_operator(n, var="x"):
    """1 on the diagonal, -1 on the superdiagonal, -x in the bottom-left corner."""
    if n < 2:
        raise DomainError("the disc operator needs n >= 2")
    x = LaurentPoly.var(var)
    rows = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        rows[i][i] = LaurentPoly.const(1)
        if i + 1 < n:
            rows[i][i + 1] = LaurentPoly.const(-1)
    rows[n - 1][0] = rows[n - 1][0] - x
    return LaurentMatrix(rows)


def disc_cokernel(n):
    return smith_normal_form(disc_operator(n))


def _unit(n, i):
    return [[LaurentPoly.const(1) if (r, c) == (i, i) else LaurentPoly() for c in range(n)]
            for r in range(n)]


def z_relations_check(n):
    """z_i = E_ii in the generalized homotope of the disc operator:
    z_i^2 = z_i, z_i z_j = 0 unless j is i or a neighbour mod n, and
    z_i z_(i+1) ... z_(i+n) = (-1)^n x z_i."""
    delta = RectangularDelta(disc_operator(n).rows)
    zero = LaurentPoly()
    z = [(zero, _unit(n, i)) for i in range(n)]
    x = LaurentPoly.var("x")

    def mul(a, b):
        return generalized_homotope_mul(a, b, delta)

    def same(a, b):
        return a[0] == b[0] and all(p == q for r, s in zip(a[1], b[1]) for p, q in zip(r, s))

    is_zero = lambda a: a[0] == 0 and all(p == 0 for r in a[1] for p in r)
    for i in range(n):
        if not same(mul(z[i], z[i]), z[i]):
            return False
        for j in range(n):
            if j not in {(i - 1) % n, i, (i + 1) % n} and not is_zero(mul(z[i], z[j])):
                return False
        prod = z[i]
        for k in range(1, n + 1):
            prod = mul(prod, z[(i + k) % n])
        sign = 1 if n % 2 == 0 else -1
        target = (zero, [[p * x * sign for p in r] for r in z[i][1]])
        if not same(prod, target):
            return False
    return True


def sphere_comparison(n_disc, n_cyc, s):
    """Cokernels of (disc (+) disc) and of the cyclic Laplacian agree.

    The Laplacian must have corank 2 at x = 1; otherwise DomainError.
    """
    lap = cyclic_laplacian(n_cyc, s)
    k = corank_at(lap, 1)
    if k != 2:
        raise DomainError(f"cyclic Laplacian has corank {k} at x = 1; corank 2 is required")
    d = disc_operator(n_disc)
    doubled = smith_normal_form(d.direct_sum(d))
    return cokernel_iso(doubled, smith_normal_form(lap))
