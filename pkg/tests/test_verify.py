import json

import jsonschema
import pytest

from hookbias.errors import DomainError
from hookbias.report import VerificationReport
from hookbias.schemas import REPORT_SCHEMA
from hookbias.verify import (CONJECTURES, TARGETS, _DISPATCH, scan_conjecture, verify,
                             verify_all, verify_nekrasov_okounkov, verify_q_binomial_theorem,
                             verify_weighted_unbounded)

# targets whose default run is expected to fail: the quotient form of the odd weighted total
KNOWN_FALSE = {"T2.4", "Rem2.3"}


def test_manifest_complete():
    assert set(TARGETS) == set(_DISPATCH)


@pytest.mark.parametrize("target", sorted(set(TARGETS) - KNOWN_FALSE))
def test_default_runs_verified(target):
    rep = verify(target)
    assert rep.status == "verified", rep.first_violation
    jsonschema.validate(json.loads(rep.to_json()), REPORT_SCHEMA)


def test_reports_reproducible():
    a, b = verify("T2.2", L_max=4, N=20), verify("T2.2", L_max=4, N=20)
    assert a == b and a.to_dict()["params"] == {"L_max": 4, "N": 20, "L_extra": 21}


def test_quotient_weighted_form_fails():
    rep = verify("T2.4")
    assert rep.status == "violated"
    assert rep.first_violation == {"L": 3, "n": 15, "lhs": "34", "rhs": "33"}
    assert rep.details["first_mismatch"]["pair-sum"] is None
    assert verify("T2.4", form="pair-sum").status == "verified"


def test_quotient_middle_term_fails():
    rep = verify("Rem2.3")
    assert rep.status == "violated"
    assert rep.first_violation["L"] == 3
    assert rep.details["not_polynomial_for_L"] == [3, 6, 9, 12, 15, 18]
    assert rep.details["pair_sum_term_negative_for_L"] == []


def test_threshold_table():
    rep = verify("Ntable")
    assert rep.details["candidates"] == {"2": 0, "3": 7, "4": 8, "5": 18, "6": 16, "7": 34,
                                         "8": 34, "9": 56, "10": 59}


def test_unknown_target():
    with pytest.raises(DomainError):
        verify("T9.9")
    with pytest.raises(DomainError):
        verify("T2.1", bogus=3)
    with pytest.raises(DomainError):
        scan_conjecture("C1.1")


class TestConjectures:
    @pytest.mark.parametrize("target", sorted(CONJECTURES))
    def test_scan(self, target):
        rep = scan_conjecture(target, 10, 120)
        assert rep.status == "evidence-only" and rep.first_violation is None

    def test_trivial_L1(self):
        rep = scan_conjecture("C2.6", 1, 10)
        assert rep.status == "evidence-only" and rep.details["min_margin"] == {"1": 0}

    def test_never_verified(self):
        for target in CONJECTURES:
            assert verify(target, L_max=2, n_max=5).status != "verified"


class TestWeightedUnbounded:
    @pytest.mark.parametrize("N", [0, 5, 60])
    def test_runs(self, N):
        rep = verify_weighted_unbounded(N)
        assert rep.status == "verified"

    def test_leading_term(self):
        coeffs = verify_weighted_unbounded(5).details["difference"]
        assert coeffs == [0, 0, 0, 0, 0, 1]


class TestQBinomial:
    @pytest.mark.parametrize("z_exp,sign,length,N", [
        (2, -1, 8, 40), (3, -1, 6, 40), (1, 1, 8, 40), (2, 1, 6, 40), (0, 1, 0, 10), (5, 1, 9, 60)])
    def test_instances(self, z_exp, sign, length, N):
        assert verify_q_binomial_theorem(z_exp, sign, length, N).ok

    def test_empty_length(self):
        rep = verify_q_binomial_theorem(4, -1, 0, 12)
        assert rep.status == "verified"


class TestNekrasovOkounkov:
    @pytest.mark.parametrize("z", range(-2, 7))
    def test_integer_z(self, z):
        rep = verify_nekrasov_okounkov(z, 15)
        assert rep.status == "verified", rep.first_violation
        assert rep.target == f"NO-z{z}"

    def test_z0_is_partition_numbers(self):
        coeffs = verify_nekrasov_okounkov(0, 10).details["coefficients"]
        assert coeffs == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_z1_only_empty_partition(self):
        assert verify_nekrasov_okounkov(1, 15).details["coefficients"] == [1] + [0] * 15

    def test_dispatch_by_name(self):
        assert verify("NO-z4", N=12).ok


def test_status_validated():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, "maybe")


def test_verify_all_parallel(monkeypatch):
    monkeypatch.setenv("HOOKBIAS_THREADS", "2")
    reports = verify_all(["T2.9", "Euler336", "C4.1"])
    assert [r.status for r in reports] == ["verified", "verified", "evidence-only"]
