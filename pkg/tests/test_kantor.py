from hypothesis import given, strategies as st

from kantorlab.constructions import (cayley_dickson, leibniz2, lie_cross, matrix_algebra,
                                     truncated_polynomial)
from kantorlab.kantor import generic_seed, kantor_product_algebra, kantor_square_algebra


def mul(A, x, y, p="m"):
    return A.multiply(p, x, y)


def test_identity_seed_on_matrices_negates_product():
    M = matrix_algebra(2)
    K = kantor_square_algebra(M, u=(1, 0, 0, 1))
    for x in M.basis_vectors():
        for y in M.basis_vectors():
            assert mul(K, x, y) == tuple(-c for c in mul(M, x, y))


def test_generic_seed_on_matrices_is_minus_xuy():
    M = matrix_algebra(2)
    u = generic_seed(M)
    K = kantor_square_algebra(M, u=u, allow_generic=True)
    for x in M.basis_vectors():
        for y in M.basis_vectors():
            assert mul(K, x, y) == tuple(-c for c in mul(M, mul(M, x, u), y))


def test_lie_and_leibniz_squares_vanish():
    for A in (lie_cross(), leibniz2()):
        K = kantor_square_algebra(A, u=generic_seed(A), allow_generic=True)
        assert K.table("m").is_zero()


def test_formula_by_hand():
    # x*y = u(xy) - (ux)y - x(uy) on t*Q[t]/(t^4) with u = t: t*t = t^3 - t^3 - t^3
    T = truncated_polynomial(3)
    K = kantor_square_algebra(T, u=T.basis(0))
    assert mul(K, T.basis(0), T.basis(0)) == (0, 0, -1)
    assert mul(K, T.basis(0), T.basis(1)) == (0, 0, 0)


def test_generic_specializes_to_concrete():
    O = cayley_dickson()
    G = kantor_square_algebra(O, u=generic_seed(O), allow_generic=True)
    u = (1, -2, 0, 3, 1, 0, 0, 2)
    spec = G.specialize({f"u{i}": c for i, c in enumerate(u)})
    assert spec == kantor_square_algebra(O, u=u)


vec4 = st.tuples(*[st.integers(-3, 3)] * 4)


@given(vec4, vec4, st.integers(-3, 3))
def test_linear_in_seed(u, v, a):
    M = matrix_algebra(2)
    w = tuple(a * x + y for x, y in zip(u, v))
    Ku, Kv, Kw = (kantor_square_algebra(M, u=s) for s in (u, v, w))
    for x in M.basis_vectors():
        for y in M.basis_vectors():
            lhs = mul(Kw, x, y)
            rhs = tuple(a * p + q for p, q in zip(mul(Ku, x, y), mul(Kv, x, y)))
            assert lhs == rhs


def test_mixed_product_uses_outer_then_inner():
    A = matrix_algebra(2)
    B = A.with_products({"m": A.table("m"), "n": A.table("m").transpose()})
    K = kantor_product_algebra(B, "m", "n", (1, 0, 0, 0))
    x, y, u = B.basis(1), B.basis(2), (1, 0, 0, 0)
    n = lambda a, b: mul(B, a, b, "n")
    expect = tuple(p - q - r for p, q, r in zip(mul(B, u, n(x, y)), n(mul(B, u, x), y), n(x, mul(B, u, y))))
    assert mul(K, x, y) == expect
