"""Generalized and complex Hadamard matrices, mutually unbiased bases.

Exact mode uses Cyclotomic (or Fraction) entries. Approximate mode, chosen
by passing eps, accepts complex floats and compares with tolerance eps.
Complex Hadamard matrices are stored with entries of modulus 1.
"""
from fractions import Fraction

from . import linalg
from .errors import DomainError
from .scalars import Cyclotomic, conj


def _is_zero(v, eps):
    if eps is None:
        return v == 0
    return abs(complex(v)) <= eps


def _equal(a, b, eps):
    return _is_zero(a - b, eps)


def _check_square(a):
    n = len(a)
    if any(len(r) != n for r in a):
        raise DomainError("matrix must be square")
    return n


def _check_nonzero(a, eps=None):
    for i, r in enumerate(a):
        for j, v in enumerate(r):
            if _is_zero(v, eps):
                raise DomainError(f"entry ({i}, {j}) is zero")


def _one(a):
    for r in a:
        for v in r:
            if isinstance(v, complex) or isinstance(v, float):
                return 1.0
    return Fraction(1)


def is_generalized_hadamard(a, eps=None):
    """sum_j a_ij / a_sj = 0 for every pair of distinct rows i, s."""
    n = _check_square(a)
    _check_nonzero(a, eps)
    for i in range(n):
        for s in range(n):
            if i == s:
                continue
            total = 0
            for j in range(n):
                total = total + a[i][j] / a[s][j]
            if not _is_zero(total, eps):
                return False
    return True


def hadamard_involution(a):
    """h(A)_ij = 1 / (n a_ji)."""
    n = _check_square(a)
    _check_nonzero(a)
    return [[1 / (n * a[j][i]) for j in range(n)] for i in range(n)]


def is_complex_hadamard(a, eps=None):
    """Generalized Hadamard with every entry of modulus 1 (a conj(a) = 1)."""
    if not is_generalized_hadamard(a, eps):
        return False
    return all(_equal(v * conj(v), 1, eps) for r in a for v in r)


def fourier(n):
    """F_n with entries zeta_n^(ij)."""
    return [[Cyclotomic.zeta(n, i * j) for j in range(n)] for i in range(n)]


def dephase(a):
    """Scale rows and columns so the first row and column are all 1."""
    n = _check_square(a)
    _check_nonzero(a)
    if n == 0:
        return []
    return [[a[i][j] * a[0][0] / (a[i][0] * a[0][j]) for j in range(n)] for i in range(n)]


def matmul(a, b):
    return linalg.matmul(a, b)


def invert(a):
    try:
        return linalg.inverse(a)
    except ZeroDivisionError:
        raise DomainError("matrix is singular") from None


def involution_inverse_check(a):
    """A invertible and h(A) = A^-1."""
    try:
        inv = linalg.inverse(a)
    except ZeroDivisionError:
        return False
    h = hadamard_involution(a)
    return linalg.mat_eq(h, inv)


def cartan_pair_check(a):
    """Diagonal projectors E_ii and the conjugates A E_jj A^-1 have orthogonal
    traceless parts: tr((E_ii - 1/n)(Q_j - 1/n)) = 0 for all i, j."""
    n = _check_square(a)
    if n == 0:
        return True
    ainv = invert(a)
    third = Fraction(1, n)
    for j in range(n):
        # Q_j = A E_jj A^-1 = (column j of A)(row j of A^-1)
        q = [[a[r][j] * ainv[j][c] for c in range(n)] for r in range(n)]
        qt = [[q[r][c] - (third if r == c else 0) for c in range(n)] for r in range(n)]
        for i in range(n):
            pt = [[(1 if (r, c) == (i, i) else 0) - (third if r == c else 0)
                   for c in range(n)] for r in range(n)]
            prod = linalg.matmul(pt, qt)
            tr = sum((prod[k][k] for k in range(n)), Fraction(0))
            if tr != 0:
                return False
    return True


# -- mutually unbiased bases ---------------------------------------------------

def hermitian(u, v):
    """<u, v> = sum u_k conj(v_k)."""
    total = Fraction(0)
    for a, b in zip(u, v):
        total = total + a * conj(b)
    return total


def check_orthogonal_basis(basis, eps=None, name="basis"):
    n = len(basis)
    if any(len(v) != n for v in basis):
        raise DomainError(f"{name} is not a square array of vectors")
    for i in range(n):
        if _is_zero(hermitian(basis[i], basis[i]), eps):
            raise DomainError(f"{name} has a zero vector")
        for j in range(i + 1, n):
            if not _is_zero(hermitian(basis[i], basis[j]), eps):
                raise DomainError(f"{name}: vectors {i} and {j} are not orthogonal")


def mub_check(family, eps=None):
    """Projective unbiasedness n <e,f> conj(<e,f>) = <e,e><f,f> for every
    cross pair of vectors in every pair of bases."""
    if not family:
        return True
    n = len(family[0])
    for k, b in enumerate(family):
        if len(b) != n:
            raise DomainError(f"basis {k} has {len(b)} vectors, expected {n}")
        check_orthogonal_basis(b, eps, name=f"basis {k}")
    norms = [[hermitian(v, v) for v in b] for b in family]
    for s in range(len(family)):
        for t in range(s + 1, len(family)):
            for i, e in enumerate(family[s]):
                for j, f in enumerate(family[t]):
                    ip = hermitian(e, f)
                    if not _equal(n * ip * conj(ip), norms[s][i] * norms[t][j], eps):
                        return False
    return True


def _is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def standard_basis(n, m=None):
    one = Cyclotomic.rational(1, m) if m else Fraction(1)
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def pauli_family():
    """Eigenbases of Z, X, Y in dimension 2 (conductor 4)."""
    z = Cyclotomic.zeta(4)
    one = Cyclotomic.rational(1, 4)
    return [standard_basis(2, 4), [[one, one], [one, -one]], [[one, z], [one, -z]]]


def prime_mub_family(p):
    """p + 1 mutually unbiased bases in dimension p over Q(zeta_p): the
    standard basis and B_t = {(zeta^(t j^2 + k j))_j : k} for t = 0..p-1."""
    if not isinstance(p, int) or not _is_prime(p):
        raise DomainError(f"{p} is not a prime")
    if p == 2:
        return pauli_family()
    family = [standard_basis(p, p)]
    for t in range(p):
        family.append([[Cyclotomic.zeta(p, (t * j * j + k * j) % p) for j in range(p)]
                       for k in range(p)])
    return family


def mub_to_config(family):
    """Projector configuration on Gamma_m(n): vertex "a.b" carries the
    orthogonal projector onto vector b of basis a, with r = 1/n."""
    from .configurations import Projector, ProjectorConfig
    from .graph import multipartite_graph
    m = len(family)
    n = len(family[0])
    g = multipartite_graph(m, n)
    projectors = []
    for b in family:
        for v in b:
            nv = hermitian(v, v)
            covector = [conj(c) / nv for c in v]
            projectors.append(Projector(v, covector))
    return ProjectorConfig(g, projectors, r=Fraction(1, n))


def random_monomial(n, rng, conductor):
    """Random permutation times a diagonal of random roots of unity."""
    perm = list(range(n))
    rng.shuffle(perm)
    zero = Cyclotomic.rational(0, conductor)
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        out[i][perm[i]] = Cyclotomic.zeta(conductor, rng.randrange(conductor))
    return out
