from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kantorlab.constructions import (cayley_dickson, lambda_mutation, leibniz2, lie_cross, matrix_algebra,
                                     truncated_polynomial, zero_algebra)
from kantorlab.fields import PrimeField
from kantorlab.identities import (IdentitySyntaxError, check_identity, check_variety, dump_registry,
                                  fit_parameter, format_identity, get_variety, homogeneous_components,
                                  linearize, parse_identity, standard_polynomial, variety_registry)
from kantorlab.identities.expr import Prod, Var


# --- DSL -------------------------------------------------------------------

def test_parse_associator():
    e = parse_identity("m(m(x,y),z) - m(x,m(y,z))")
    assert list(e.variables) == ["x", "y", "z"]
    assert e.coefficient(Prod("m", Prod("m", Var("x"), Var("y")), Var("z"))) == 1
    assert e.coefficient(Prod("m", Var("x"), Prod("m", Var("y"), Var("z")))) == -1


def test_parse_equation_and_sugar():
    a = parse_identity("m(m(x,y),z) = m(x,m(y,z))")
    b = parse_identity("assoc(m;x,y,z)")
    assert a == b
    assert parse_identity("comm(b;x,y)") == parse_identity("b(x,y) - b(y,x)")
    cyc = parse_identity("cyc(x,y,z){ b(b(x,y),z) }")
    assert len(cyc.terms) == 3


def test_parse_coefficients_and_params():
    e = parse_identity("1/2*m(x,y) - @alpha*m(y,x)")
    assert e.params == {"alpha"}
    assert e.bind({"alpha": 3}) == parse_identity("1/2*m(x,y) - 3*m(y,x)")


def test_anticommutativity_defect():
    e = parse_identity("b(x,y) + b(y,x)")
    assert e.products == {"b"}
    assert e.is_multilinear()


def test_leibniz_defect_parses():
    e = parse_identity("m(x,m(y,z)) - m(m(x,y),z) - m(y,m(x,z))")
    assert len(e.terms) == 3


def test_syntax_error_has_position():
    with pytest.raises(IdentitySyntaxError) as info:
        parse_identity("m(x,")
    assert info.value.pos == 4


def test_like_terms_cancel():
    assert parse_identity("m(x,y) - m(x,y)").is_zero()


def test_is_multilinear():
    assert not parse_identity("m(m(x,x),y)").is_multilinear()
    assert parse_identity("m(m(x,z),y)").is_multilinear()


names = st.sampled_from(["x", "y", "z"])
terms = st.recursive(names.map(Var), lambda t: st.tuples(st.sampled_from(["m", "b"]), t, t).map(
    lambda a: Prod(*a)), max_leaves=4)


@given(st.lists(st.tuples(st.integers(-3, 3).filter(bool), terms), min_size=1, max_size=4))
def test_format_round_trip(items):
    from kantorlab.identities import IdentityExpr
    e = IdentityExpr(items)
    assert parse_identity(format_identity(e)) == e


# --- checking --------------------------------------------------------------

def test_methods_agree_on_octonions():
    O = cayley_dickson()
    flex = parse_identity("m(m(x,y),x) - m(x,m(y,x))")
    ass = parse_identity("assoc(m;x,y,z)")
    assert check_identity(O, flex, "generic").status == "holds"
    assert check_identity(O, ass, "basis").status == "fails"
    assert check_identity(O, ass, "generic").status == "fails"
    assert check_identity(O, ass, "random").status == "fails"
    assert check_identity(O, flex, "random").status == "not_falsified"


def test_basis_witness_is_smallest_tuple():
    O = cayley_dickson()
    v = check_identity(O, parse_identity("assoc(m;x,y,z)"), "basis")
    # e1 e2 e4 is the first nonassociating basis triple in lexicographic order
    assert [v.witness[k].index(1) for k in "xyz"] == [1, 2, 4]


def test_basis_method_needs_multilinear():
    with pytest.raises(Exception):
        check_identity(cayley_dickson(), parse_identity("m(m(x,x),y)"), "basis")


def test_prime_field_reports_generic_status():
    F = PrimeField(5)
    T = truncated_polynomial(3, unital=True, field=F)
    v = check_identity(T, parse_identity("m(m(x,x),y) - m(x,m(x,y))"), "generic")
    assert v.holds and v.status == "holds_generically"


def test_defect_is_reported():
    M = matrix_algebra(2)
    v = check_identity(M, parse_identity("comm(m;x,y)"), "generic")
    assert not v.holds and v.defect is not None


def test_standard_polynomial():
    s3 = standard_polynomial(3)
    assert len(s3.terms) == 6 and list(s3.variables) == ["x1", "x2", "x3"]
    M = matrix_algebra(2)
    assert check_identity(M, standard_polynomial(4), "basis").holds
    assert not check_identity(M, s3, "basis").holds


# --- linearization ---------------------------------------------------------

def test_homogeneous_components():
    parts = homogeneous_components(parse_identity("m(x,y) + m(m(x,y),x)"))
    assert [str(p) for p in parts] == ["m(x,y)", "m(m(x,y),x)"]


def test_linearize_left_alternative():
    (lin,) = linearize(parse_identity("m(m(x,x),y) - m(x,m(x,y))"))
    assert lin.is_multilinear()
    assert len(lin.terms) == 4


def test_linearize_needs_large_characteristic():
    with pytest.raises(ValueError):
        linearize(parse_identity("m(m(x,x),x)"), characteristic=3)
    assert linearize(parse_identity("m(m(x,x),x)"), characteristic=5)


def test_linearized_identity_equivalent_on_examples():
    e = parse_identity("m(m(x,y),x) - m(x,m(y,x))")
    (lin,) = linearize(e)
    O = cayley_dickson()
    M = lambda_mutation(matrix_algebra(2), lam=Fraction(1, 3))
    for A in (O, M):
        assert check_identity(A, e, "generic").holds == check_identity(A, lin, "basis").holds


# --- registry and varieties ------------------------------------------------

def test_registry_contents():
    names = set(variety_registry())
    for v in ("associative", "lie", "leibniz_left", "perm", "bicommutative", "zinbiel_left", "novikov_left",
              "alternative", "flexible", "quasi_associative", "dialgebra_assoc", "duplicial", "dual_duplicial",
              "as2", "comm_tridendriform", "poisson", "generalized_poisson", "novikov_poisson_left",
              "novikov_poisson_right", "jordan", "noncommutative_jordan"):
        assert v in names
    assert get_variety("dialgebra_assoc").products == ("vdash", "dashv")
    text = dump_registry()
    assert "[lie] products=m" in text


def test_registry_dump_parses():
    for line in dump_registry().splitlines():
        if line.startswith("  "):
            body = line.split(":", 1)[1]
            parse_identity(body)


def test_small_varieties():
    assert check_variety(lie_cross(), "lie").holds
    assert check_variety(leibniz2(), "leibniz_left").holds
    assert not check_variety(leibniz2(), "lie").holds
    assert check_variety(zero_algebra(2), "zero_product").holds
    assert check_variety(cayley_dickson(), "moufang").holds


def test_eps_must_be_sign():
    with pytest.raises(ValueError):
        check_variety(lie_cross(), "eps_commutative", {"eps": 2})
    assert check_variety(lie_cross(), "eps_commutative", {"eps": -1}).holds


def test_missing_parameter_is_an_error():
    with pytest.raises(ValueError):
        check_variety(matrix_algebra(2), "quasi_associative")


def test_fit_parameter():
    Q = lambda_mutation(matrix_algebra(2), lam=Fraction(2, 3))
    ident = get_variety("quasi_associative").identities[-1]
    assert fit_parameter(Q, ident, "alpha") == 2
    # associative algebras fit alpha = 0, octonions fit no value
    assert fit_parameter(matrix_algebra(2), ident, "alpha") == 0
    assert fit_parameter(cayley_dickson(), ident, "alpha") is None
    assert fit_parameter(zero_algebra(2), ident, "alpha") == "any"
