"""Acceptance suite: seven criteria, exact comparisons throughout.

Run with pytest (one PASS/FAIL line per criterion appears in the terminal
summary) or directly: ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time

import pytest

from qcong import series as S
from qcong.congruence import (
    MOD8_TARGETS,
    PROOF_FORM_LISTS,
    CongruenceClaim,
    QuadraticFormSpec,
    claim_catalog,
    check_missed_residues,
    gen_function,
    mod8_route,
    parse_form,
    residues_of_form,
    verify_claims,
)
from qcong.identities import check_all, check_dissection, list_identities
from qcong.oracle import count_biregular_enum, count_overpartitions, oracle_series
from qcong.products import ProductSpec, eta_quotient

PAIRS = [(2, 3), (4, 3), (4, 9), (8, 27), (16, 81)]
THEOREMS = {(2, 3, 9, 6, 6), (4, 3, 12, 7, 8), (4, 3, 12, 11, 8), (4, 3, 9, 3, 6),
            (4, 3, 12, 11, 9), (4, 9, 12, 3, 8), (4, 9, 12, 7, 8), (4, 9, 12, 11, 8),
            (4, 9, 18, 12, 3), (4, 9, 18, 15, 3), (8, 27, 36, 15, 8), (16, 81, 36, 33, 8)}
COMPOSITES = [(4, 3, 12, 7, 24), (4, 3, 12, 11, 72), (4, 9, 18, 12, 24), (4, 9, 18, 15, 24),
              (8, 27, 36, 15, 24), (16, 81, 36, 33, 48)]
CASES = 200

RESULTS = {}


def _key(c):
    return (c.ell, c.mu, c.A, c.B, c.M)


def _failed(reports):
    return [f"{r.claim}: n={r.first_counterexample[0]}" for r in reports if not r.holds]


def criterion_1():
    claims = [c for c in claim_catalog() if c.status == "theorem"]
    problems = [] if {_key(c) for c in claims} == THEOREMS else ["theorem set differs"]
    problems += _failed(verify_claims(claims, 2000))
    return problems, f"{len(claims)} theorem claims at N=2000"


def criterion_2():
    claims = [CongruenceClaim(*k) for k in COMPOSITES]
    problems = [f"{c} missing from catalog" for c in claims
                if _key(c) not in {_key(x) for x in claim_catalog()}]
    problems += _failed(verify_claims(claims, 2000))
    return problems, f"{len(claims)} composite claims at N=2000"


def criterion_3():
    records = list_identities()
    problems = [] if len(records) >= 21 else [f"only {len(records)} identities"]
    problems += [f"{r.id} at q^{r.first_bad_exponent}" for r in check_all(500) if not r.holds]
    dis = [r for r in records if r.dissection_base]
    problems += [f"{r.id} component {rep.component}" for r in dis
                 if not (rep := check_dissection(r, 150)).holds]
    return problems, f"{len(records)} identities at N=500, {len(dis)} dissections at N=150"


def criterion_4():
    problems = []
    for pair in PAIRS:
        dp = oracle_series(pair, 60)
        if dp != gen_function(pair, 60):
            problems.append(f"{pair}: DP differs from eta quotient")
        if [count_biregular_enum(n, pair) for n in range(31)] != list(dp.coeffs[:31]):
            problems.append(f"{pair}: enumeration differs from DP")
    if count_overpartitions(3) != 8:
        problems.append(f"overpartitions(3) = {count_overpartitions(3)}")
    return problems, "5 pairs to order 60, enumeration n<=30, overpartitions(3)=8"


def criterion_5():
    problems = []
    if residues_of_form(QuadraticFormSpec((1,), 12, (0,))) != {0, 1, 4, 9}:
        problems.append("squares mod 12")
    if residues_of_form(QuadraticFormSpec((1,), 36, (0,))) != {0, 1, 4, 9, 13, 16, 25, 28}:
        problems.append("squares mod 36")
    expected = {(4, 9): (3, 7, 11), (8, 27): (15,), (16, 81): (33,)}
    for pair, (texts, m, targets) in PROOF_FORM_LISTS.items():
        if pair in expected and tuple(targets) != expected[pair]:
            problems.append(f"{pair}: targets {targets}")
        rep = check_missed_residues([parse_form(t, m) for t in texts], m, targets)
        if not rep.missed:
            problems.append(f"{pair}: hits {rep.hits}")
    return problems, "squares mod 12 and 36; form lists for 4 pairs"


def criterion_6():
    problems = []
    for pair, (A, _) in MOD8_TARGETS.items():
        rep = mod8_route(*pair, N=2000)
        if not rep.holds:
            problems.append(f"{pair}: nonzero at {rep.first_nonzero}")
        if not rep.matches_gf_mod8:
            problems.append(f"{pair}: quotient differs from gf mod 8")
        direct = verify_claims([CongruenceClaim(*pair, A, b, 8) for b in rep.zero_classes], 2000)
        problems += _failed(direct)
    return problems, f"{len(MOD8_TARGETS)} pairs, A in {{12, 36}}, N=2000"


def _random_series(rng, n, unit=False):
    c = [rng.randint(-30, 30) for _ in range(n)]
    if unit:
        c[0] = rng.choice((1, -1))
    return S.from_coeffs(c)


def criterion_7():
    rng = random.Random(0)
    bad = {"ring": 0, "roundtrip": 0, "invert": 0, "frobenius": 0}
    for _ in range(CASES):
        n = rng.randint(1, 80)
        a, b, c = (_random_series(rng, n) for _ in range(3))
        bad["ring"] += not (a * b == b * a and (a * b) * c == a * (b * c)
                            and a * (b + c) == a * b + a * c and a * S.one(n) == a
                            and a + S.zero(n) == a and a - a == S.zero(n))
    for _ in range(CASES):
        n = rng.randint(1, 120)
        a = _random_series(rng, n)
        k = rng.randint(1, n)
        bad["roundtrip"] += S.reassemble(S.dissect(a, k)) != a
    for _ in range(CASES):
        u = _random_series(rng, rng.randint(1, 300), unit=True)
        bad["invert"] += S.mul(u, S.invert(u)) != S.one(u.order)
    for _ in range(CASES):
        p = rng.choice((2, 3, 5))
        k = rng.randint(1, 6)
        N = rng.randint(p * k, 200)
        lhs = eta_quotient(ProductSpec.of({k: p}), N)
        rhs = eta_quotient(ProductSpec.of({p * k: 1}), N)
        # the same congruence for an arbitrary series: a(q)^p = a(q^p) mod p
        a = _random_series(rng, rng.randint(1, 40))
        bad["frobenius"] += not (S.series_congruent(lhs, rhs, p)
                                 and S.series_congruent(S.power(a, p), a.dilate(p).truncate(a.order), p))
    problems = [f"{name}: {count} failures" for name, count in bad.items() if count]
    return problems, f"seed 0, {CASES} cases each: " + ", ".join(bad)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7]


def run_criterion(i):
    start = time.perf_counter()
    problems, detail = CRITERIA[i - 1]()
    line = (f"criterion {i}: {'PASS' if not problems else 'FAIL'}  {detail}"
            f"  ({time.perf_counter() - start:.1f}s)")
    if problems:
        line += "  " + "; ".join(problems[:5])
    RESULTS[i] = line
    return problems


@pytest.mark.parametrize("i", range(1, 8), ids=lambda i: f"criterion_{i}")
def test_criterion(i):
    problems = run_criterion(i)
    assert not problems, RESULTS[i]


if __name__ == "__main__":
    failed = 0
    for i in range(1, 8):
        failed += bool(run_criterion(i))
        print(RESULTS[i], flush=True)
    sys.exit(1 if failed else 0)
