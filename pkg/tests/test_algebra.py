import json

import pytest

from kantorlab.algebra import Algebra, AlgebraError, MultTable
from kantorlab.constructions import matrix_algebra
from kantorlab.fields import PrimeField, QQ


def test_json_round_trip_is_exact():
    M = matrix_algebra(2)
    text = M.dumps()
    assert Algebra.loads(text) == M
    assert Algebra.loads(text).dumps() == text


def test_json_format():
    A = Algebra.from_json({"dim": 2, "field": {"type": "prime", "p": 3},
                           "products": {"m": [[0, 0, 1, "2 mod 3"], [1, 1, 0, "1"]]}})
    assert A.field == PrimeField(3)
    assert A.multiply("m", (1, 0), (1, 0)) == (0, A.field(2))
    data = A.to_json()
    assert data["products"]["m"] == [[0, 0, 1, "2 mod 3"], [1, 1, 0, "1 mod 3"]]


def test_duplicate_entries_rejected():
    with pytest.raises(AlgebraError):
        Algebra.from_json({"dim": 1, "products": {"m": [[0, 0, 0, "1"], [0, 0, 0, "2"]]}})


def test_malformed_rejected():
    with pytest.raises(AlgebraError):
        Algebra.from_json({"products": {}})
    with pytest.raises(AlgebraError):
        Algebra.from_json({"dim": 1, "products": {"m": [[0, 0, "1"]]}})


def test_matrix_units():
    M = matrix_algebra(2)
    e11, e12, e21, e22 = M.basis_vectors()
    assert M.multiply("m", e12, e21) == e11
    assert M.multiply("m", e21, e12) == e22
    assert M.multiply("m", e12, e12) == M.zero()
    assert M.find_unit() == (1, 0, 0, 1)


def test_inverse_element():
    M = matrix_algebra(2)
    g = (1, 1, 0, 1)
    ginv = M.invert_element("m", g)
    assert M.multiply("m", g, ginv) == (1, 0, 0, 1)
    assert M.invert_element("m", (1, 0, 0, 0)) is None


def test_operators_act_on_columns():
    M = matrix_algebra(2)
    x, y = (1, 2, 3, 4), (0, 1, -1, 2)
    L = M.left_operator("m", x)
    col = tuple(sum(L[r][c] * y[c] for c in range(4)) for r in range(4))
    assert col == M.multiply("m", x, y)


def test_polynomial_coefficients_round_trip():
    A = Algebra.from_json({"dim": 1, "products": {"m": [[0, 0, 0, "u0^2 - 1/2*u1"]]}})
    assert A.is_polynomial
    assert Algebra.loads(A.dumps()) == A
    assert A.specialize({"u0": 1, "u1": 2}).table("m").is_zero()
