from hypothesis import given, strategies as st

from kantorlab.fields import PrimeField, QQ
from kantorlab.linalg import Subspace, inverse, mat_mul, nullspace, rank, solve


def test_rank_and_nullspace():
    m = [(1, 2, 3), (2, 4, 6), (1, 0, 1)]
    assert rank(m) == 2
    ns = nullspace(m, QQ, ncols=3)
    assert ns.dim == 1
    v = ns.basis[0]
    assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


def test_solve_and_inverse():
    m = [(2, 1), (1, 1)]
    assert solve(m, (3, 2)) == (1, 1)
    inv = inverse(m)
    assert mat_mul(m, inv) == [(1, 0), (0, 1)]
    assert inverse([(1, 2), (2, 4)]) is None
    assert solve([(1, 1), (1, 1)], (1, 2)) is None


def test_prime_field_rank_differs():
    m = [(1, 2), (3, 1)]
    assert rank(m, QQ) == 2
    assert rank(m, PrimeField(5)) == 1


def test_subspace_ops():
    U = Subspace(3, [(1, 0, 0), (0, 1, 0)])
    W = Subspace(3, [(0, 1, 0), (0, 0, 1)])
    assert (U + W).dim == 3
    assert U.intersect(W) == Subspace(3, [(0, 1, 0)])
    assert U.contains((2, 5, 0)) and not U.contains((0, 0, 1))


small = st.integers(-3, 3)
matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.tuples(*[small] * c), min_size=r, max_size=r)))


@given(matrices)
def test_rank_nullity(m):
    n = len(m[0])
    ns = nullspace(m, QQ, ncols=n)
    assert rank(m) + ns.dim == n
    for v in ns.basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


@given(matrices, matrices)
def test_dimension_formula(a, b):
    n = len(a[0])
    b = [tuple(list(r) + [0] * n)[:n] for r in b]
    U, W = Subspace(n, a), Subspace(n, b)
    assert (U + W).dim + U.intersect(W).dim == U.dim + W.dim
