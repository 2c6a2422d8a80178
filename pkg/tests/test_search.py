import pytest

from kantorlab.algebra import AlgebraError
from kantorlab.identities import check_variety
from kantorlab.kantor import generic_seed, kantor_product_algebra
from kantorlab.search import SearchSpec, is_trivial, search_instance


def test_lie_plane_instances():
    res = search_instance(SearchSpec("lie", 2, nontrivial=True))
    assert res.complete
    assert len(res.algebras) == 2
    for A in res.algebras:
        assert check_variety(A, "lie").holds and not is_trivial(A)


def test_perm_counts():
    assert len(search_instance(SearchSpec("perm", 2)).algebras) == 19
    found = search_instance(SearchSpec("perm", 2, nontrivial=True)).algebras
    assert len(found) == 2
    for A in found:
        K = kantor_product_algebra(A, "m", "m", generic_seed(A), allow_generic=True)
        assert check_variety(K, "perm").holds


def test_results_are_pairwise_distinct_tables():
    found = search_instance(SearchSpec("bicommutative", 2, nontrivial=True)).algebras
    keys = {A.dumps().split('"name"')[0] for A in found}
    assert len(keys) == len(found) == 14


def test_budget_stops_search():
    res = search_instance(SearchSpec("duplicial", 2, budget=50))
    assert not res.complete
    assert res.nodes == 50


def test_max_results():
    res = search_instance(SearchSpec("perm", 2, max_results=3))
    assert len(res.algebras) == 3 and not res.complete


def test_guards():
    with pytest.raises(AlgebraError):
        search_instance(SearchSpec("lie", 5))
    with pytest.raises(KeyError):
        search_instance(SearchSpec("no_such_variety", 2))


def test_spec_from_json():
    spec = SearchSpec.from_json({"variety": "lie", "dim": 2, "coeffs": ["-1", "0", "1/2"], "nontrivial": True})
    assert spec.coeffs[2] == spec.field.parse("1/2") and spec.nontrivial


def test_zero_algebra_is_trivial():
    res = search_instance(SearchSpec("zero_product", 2))
    assert len(res.algebras) == 1 and is_trivial(res.algebras[0])
