"""Claim registry: domains, judging, serialization."""

import io

import pytest

from revdickson import (
    DEFAULT_GRID,
    FieldTooLarge,
    GridConfig,
    NotPrime,
    REGISTRY,
    UnknownClaim,
    claim_ids,
    get_claim,
    verify_all,
    verify_claim,
    write_csv,
    write_lines,
)


def test_registry_contents():
    ids = claim_ids()
    assert len(ids) == len(set(ids))
    for cid in ("T3.1", "T3.2", "T3.3", "T3.5", "T3.GEN", "T4.1", "T4.QR",
                "T4.QNR", "R4.HMS", "T5.QR", "T5.QNR", "T5.k2", "C6.1",
                "C6.2", "T6.3", "C6.4", "C6.5"):
        assert cid in ids
    for cid in ids:
        claim = get_claim(cid)
        assert claim.id == cid
        assert claim.description


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        get_claim("T9.9")
    with pytest.raises(UnknownClaim):
        verify_claim("nope")


def test_grid_validation():
    with pytest.raises(FieldTooLarge):
        GridConfig(q_cap=2**21).validate()
    with pytest.raises(NotPrime):
        GridConfig(primes=(2,)).validate()
    with pytest.raises(NotPrime):
        GridConfig(primes=(9,)).validate()
    with pytest.raises(ValueError):
        GridConfig(e_max=0).validate()
    DEFAULT_GRID.validate()


def test_empty_grid_is_vacuous():
    res = verify_claim("T3.1", GridConfig(primes=()))
    assert res.passed
    assert res.tuples_checked == 0
    assert res.failures == ()
    assert res.coverage == {}


def test_gcd_claim_small_grid():
    # p = 3, all e up to 4, exponent l up to 4: 20 tuples, both verdicts
    res = verify_claim("T3.1", GridConfig(primes=(3,), e_max=4, l_max=4))
    assert res.passed
    assert res.tuples_checked == 20
    assert res.coverage.get("expect-PP", 0) > 0
    assert res.coverage.get("expect-not-PP", 0) > 0
    by_case = {(o.case.e, o.case.ls): o for o in res.outcomes}
    # l = 1, e = 1: n = 6, index 3 is coprime to 2
    assert by_case[(1, (1, 0, 0, 0))].expected == "PP"
    # l = 0, e = 1: n = 4, gcd(2, 2) = 2
    low = by_case[(1, (0, 0, 0, 0))]
    assert low.expected == "not-PP" and low.observed == "not-PP"


def test_soundness_passed_iff_no_failures():
    grid = GridConfig(primes=(3, 5), e_max=2, l_max=2)
    for cid in ("T3.1", "T3.2", "T6.3", "C6.1", "T4.QNR"):
        res = verify_claim(cid, grid)
        assert res.passed == (len(res.failures) == 0)
        for outcome in res.outcomes:
            assert outcome.passed == (outcome not in res.failures)


def test_never_pp_claim():
    res = verify_claim("T6.3", GridConfig(primes=(5, 7), e_max=2, l_max=2))
    assert res.passed
    assert res.tuples_checked > 0
    assert set(res.coverage) == {"expect-not-PP"}
    for o in res.outcomes:
        assert o.case.k == 2 and o.case.p > 3


def test_equivalence_claim_reports_sides():
    res = verify_claim("T4.QNR", GridConfig(primes=(5,), e_max=2, l_max=2))
    assert res.passed
    assert set(res.coverage) <= {"both-PP", "both-not-PP", "split"}
    assert "split" not in res.coverage


def test_verify_all_subset_and_workers():
    grid = GridConfig(primes=(3,), e_max=2, l_max=2)
    seq = verify_all(grid, ids=["T3.1", "T4.1"])
    par = verify_all(grid, ids=["T3.1", "T4.1"], workers=2)
    assert [r.id for r in seq] == ["T3.1", "T4.1"]
    assert seq == par
    with pytest.raises(UnknownClaim):
        verify_all(grid, ids=["T3.1", "bogus"])


def test_csv_shape():
    res = verify_claim("T6.3", GridConfig(primes=(5,), e_max=1, l_max=1))
    buf = io.StringIO()
    write_csv([res], buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "claim_id,p,e,k,ls,expected,observed,passed"
    assert lines[1] == 'T6.3,5,1,2,"1,1",not-PP,not-PP,true'
    assert len(lines) == 1 + res.tuples_checked


def test_lines_output_shape():
    res = verify_claim("T3.1", GridConfig(primes=(3,), e_max=1, l_max=1))
    buf = io.StringIO()
    write_lines([res], buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == ("claim=T3.1 p=3 e=1 k=0 ls=1,0,0,0 "
                        "expected=PP observed=PP passed=true")
    assert lines[-1].startswith("summary claim=T3.1 tuples=2 failures=0 "
                                "passed=true coverage=")


def test_registry_is_data():
    # every claim exposes a case generator and a judge, nothing else
    for claim in REGISTRY.values():
        cases = claim.cases(GridConfig(primes=(3,), e_max=1, l_max=1))
        for case in cases:
            outcome = claim.judge(case)
            assert outcome.case == case
            assert isinstance(outcome.passed, bool)
