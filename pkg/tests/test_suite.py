from kantorlab import suite
from kantorlab.algebra import AlgebraError

REQUIRED = {"T-ass", "T-com", "T-perm", "T-lie", "T-leib", "T-lcom", "T-bicom", "T-zinb", "T-nov", "T-alt",
            "T-alt-4", "T-qass", "T-qalt", "T-dialg", "T-dup", "T-ddup", "T-as2", "T-tri", "T-poisson", "T-gp",
            "T-np-left", "T-np-right", "T-ideal", "T-pi1", "T-pi2", "T-nil", "T-rnil", "T-der", "T-aut", "T-iso"}


def test_every_case_once():
    ids = [c.id for c in suite.theorem_cases()]
    assert len(ids) == len(set(ids))
    assert set(ids) == REQUIRED


def test_anchor_integrity():
    anchors = [c.anchor for c in suite.theorem_cases()]
    assert all(a in suite.ANCHORS for a in anchors)
    assert len(set(anchors)) == len(anchors)


def test_report_is_deterministic():
    ids = ["T-lie", "T-nil", "T-iso", "T-perm"]
    a = suite.run_suite(ids).dumps()
    b = suite.run_suite(ids).dumps()
    assert a == b


def test_negative_claims_are_expected_failures():
    res = suite.run_suite(["T-rnil"]).results[0]
    assert res.passed
    negatives = [c for c in res.checks if c.expected is False]
    assert negatives and all(c.observed is False for c in negatives)


def test_fixture_error_fails_case(monkeypatch):
    def broken():
        raise AlgebraError("cannot build fixture")
    case = suite.TheoremCase("T-x", "square/associative", "broken", broken)
    res = suite.run_case(case)
    assert not res.passed and "cannot build fixture" in res.error


def test_unknown_case():
    import pytest
    with pytest.raises(KeyError):
        suite.run_suite(["T-nope"])
