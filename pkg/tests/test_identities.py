import json
from dataclasses import replace

import pytest

from qcong.errors import UnknownIdentity
from qcong.identities import (
    IdentityRecord,
    check_all,
    check_dissection,
    check_identity,
    check_record,
    export_json,
    get_identity,
    list_identities,
)

REQUIRED = [
    "phi_prod", "psi_prod", "chi_prod", "chi_neg_prod", "phi_neg", "psi_neg", "phipsi",
    "lemma21_a", "lemma21_b", "dis_f1_4", "dis_inv_f1_4", "guad_a", "guad_b", "tri_phi",
    "tri_psi", "hirsch_a", "hirsch_b", "toh", "ahs", "lem22", "frobenius_mod_p",
    "phi_inverse_mod8",
]


def test_catalog_contents():
    ids = [r.id for r in list_identities()]
    assert len(ids) >= 21
    assert len(set(ids)) == len(ids)
    assert "tri_psi" in ids
    assert set(REQUIRED) <= set(ids)
    assert all(r.anchor for r in list_identities())


def test_examples():
    assert check_identity("phipsi", 200).holds
    assert check_identity("dis_f1_4", 200).holds


def test_corrupted_record_reports_first_exponent():
    rec = get_identity("phipsi")
    bad = replace(rec, rhs=f"2*({rec.rhs})")
    report = check_record(bad, 50)
    assert not report.holds
    assert report.first_bad_exponent == 0
    assert (report.lhs_coeff, report.rhs_coeff) == (1, 2)


def test_corrupted_later_coefficient():
    bad = IdentityRecord("bad", "f1", "f1 + q^7", "test")
    report = check_record(bad, 20)
    assert report.first_bad_exponent == 7
    assert report.lhs_coeff == 1 and report.rhs_coeff == 2


def test_modulus_is_respected():
    rec = IdentityRecord("m", "f1^3", "f3", "test", modulus=3)
    assert check_record(rec, 100).holds
    assert not check_record(replace(rec, modulus=None), 100).holds


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        check_identity("nope", 10)


@pytest.mark.parametrize("N", [1, 200])
def test_check_all(N):
    reports = check_all(N)
    assert len(reports) == len(list_identities())
    assert [r.id for r in reports] == [r.id for r in list_identities()]
    assert all(r.holds for r in reports), [r for r in reports if not r.holds]


def test_check_all_parallel_same_order():
    assert check_all(60, parallelism=2) == check_all(60)


@pytest.mark.parametrize("rec", [r for r in list_identities() if r.dissection_base],
                         ids=lambda r: r.id)
def test_dissection_components(rec):
    assert check_dissection(rec, 150).holds


def test_frobenius_family_covers_grid():
    rec = get_identity("frobenius_mod_p")
    grid = {(p["p"], p["k"]) for p in rec.params}
    assert grid == {(p, k) for p in (2, 3, 5) for k in (1, 2, 3, 4)}


def test_frobenius_failure_names_instance():
    rec = replace(get_identity("frobenius_mod_p"), modulus="4")
    report = check_record(rec, 50)
    assert not report.holds and report.instance


def test_export():
    data = json.loads(export_json())
    assert len(data) >= 21
    for item in data:
        assert {"id", "lhs", "rhs", "modulus", "paper_anchor"} <= item.keys()
    assert next(d for d in data if d["id"] == "phi_inverse_mod8")["modulus"] == 8
