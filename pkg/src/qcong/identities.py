"""Registry of theta-function and dissection identities.

Each record is a pair of expressions in the :mod:`qcong.expr` grammar that
are checked coefficient by coefficient, exactly or modulo ``m``. Records
with a ``dissection_base`` have a right-hand side of the form
``sum_r q^r g_r(q^k)``; for those the ``k``-dissection of the left side is
also compared component by component against ``g_r``.

A record may be a family: ``params`` lists substitutions applied with
``str.format`` to ``lhs``, ``rhs`` and ``modulus``.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterable, Optional

from qcong import expr as E
from qcong import series as S
from qcong.errors import UnknownIdentity

__all__ = [
    "IdentityRecord",
    "IdentityReport",
    "list_identities",
    "get_identity",
    "check_record",
    "check_identity",
    "check_all",
    "check_dissection",
    "export_json",
    "biregular_gf_text",
]


def biregular_gf_text(ell: int, mu: int) -> str:
    """Eta-quotient text of the biregular overpartition generating function."""
    return (f"f2*f{ell}^2*f{mu}^2*f{2 * ell * mu}"
            f" / (f1^2*f{2 * ell}*f{2 * mu}*f{ell * mu}^2)")


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    lhs: str
    rhs: str
    anchor: str
    modulus: Optional[int | str] = None
    dissection_base: Optional[int] = None
    params: tuple[dict[str, Any], ...] = ({},)

    def instances(self) -> Iterable[tuple[dict[str, Any], str, str, Optional[int]]]:
        for p in self.params:
            m = self.modulus
            if isinstance(m, str):
                m = int(m.format(**p))
            yield p, self.lhs.format(**p), self.rhs.format(**p), m

    def to_dict(self) -> dict[str, Any]:
        out = {"id": self.id, "lhs": self.lhs, "rhs": self.rhs,
               "modulus": self.modulus, "paper_anchor": self.anchor}
        if self.dissection_base:
            out["dissection_base"] = self.dissection_base
        if self.params != ({},):
            out["params"] = list(self.params)
        return out


@dataclass(frozen=True)
class IdentityReport:
    id: str
    order: int
    holds: bool
    first_bad_exponent: Optional[int] = None
    lhs_coeff: Optional[int] = None
    rhs_coeff: Optional[int] = None
    instance: dict[str, Any] = field(default_factory=dict)
    component: Optional[int] = None
    # "series" compares whole sides, "dissection" compares components
    kind: str = "series"

    def to_dict(self) -> dict[str, Any]:
        return {"id": self.id, "N": self.order, "holds": self.holds,
                "first_bad_exponent": self.first_bad_exponent,
                "lhs_coeff": self.lhs_coeff, "rhs_coeff": self.rhs_coeff,
                "instance": self.instance, "component": self.component, "kind": self.kind}


_GF43 = biregular_gf_text(4, 3)
_GF23 = biregular_gf_text(2, 3)
_GF49 = biregular_gf_text(4, 9)

_PAIRS = ({"l": 2, "m": 3}, {"l": 4, "m": 3}, {"l": 4, "m": 9},
          {"l": 8, "m": 27}, {"l": 16, "m": 81})

_CATALOG = (
    IdentityRecord("phi_prod", "phi(q)", "f2^5 / (f1^2*f4^2)",
                   "Jacobi triple product: phi(q) = f(q,q)"),
    IdentityRecord("psi_prod", "psi(q)", "f2^2 / f1",
                   "Jacobi triple product: psi(q) = f(q,q^3)"),
    IdentityRecord("euler_f", "f(-q,-q^2)", "f1",
                   "f(-q) = f(-q,-q^2) = (q;q)_inf"),
    IdentityRecord("chi_prod", "chi(q)", "f2^2 / (f1*f4)", "chi(q) = (-q;q^2)_inf"),
    IdentityRecord("chi_neg_prod", "chi(-q)", "f1 / f2", "chi(-q) = (q;q^2)_inf"),
    IdentityRecord("phi_neg", "phi(-q)", "f1^2 / f2", "phi(q) with q -> -q"),
    IdentityRecord("psi_neg", "psi(-q)", "f1*f4 / f2", "psi(q) with q -> -q"),
    IdentityRecord("phipsi", "phi(-q)*psi(q)", "f1*f2", "phi(-q) psi(q) = f1 f2"),
    IdentityRecord("lemma21_a", "f(q,q^5)", "psi(-q^3)*chi(q)",
                   "Berndt, Ramanujan's Notebooks III, p. 51"),
    IdentityRecord("lemma21_b", "f(q,q^2)", "phi(-q^3) / chi(-q)",
                   "Berndt, Ramanujan's Notebooks III, p. 350"),
    IdentityRecord("dis_f1_4", "f1^4",
                   "f4^10 / (f2^2*f8^4) - 4*q*f2^2*f8^4 / f4^2",
                   "2-dissection of f1^4", dissection_base=2),
    IdentityRecord("dis_inv_f1_4", "f1^-4",
                   "f4^14 / (f2^14*f8^4) + 4*q*f4^2*f8^4 / f2^10",
                   "2-dissection of 1/f1^4", dissection_base=2),
    IdentityRecord("guad_a", "f3 / f1^3",
                   "f4^6*f6^3 / (f2^9*f12^2) + 3*q*f4^2*f6*f12^2 / f2^7",
                   "Guadalupe: 2-dissection of f3/f1^3", dissection_base=2),
    IdentityRecord("guad_b", "f3^3 / f1",
                   "f4^3*f6^2 / (f2^2*f12) + q*f12^3 / f4",
                   "Guadalupe: 2-dissection of f3^3/f1", dissection_base=2),
    IdentityRecord("tri_phi", "phi(q)", "phi(q^9) + 2*q*f(q^3,q^15)",
                   "Berndt, Ramanujan's Notebooks III, p. 49: 3-dissection of phi",
                   dissection_base=3),
    IdentityRecord("tri_psi", "psi(q)", "f(q^3,q^6) + q*psi(q^9)",
                   "Berndt, Ramanujan's Notebooks III, p. 49: 3-dissection of psi",
                   dissection_base=3),
    IdentityRecord("hirsch_a", "f1^2 / f2",
                   "f9^2 / f18 - 2*q*f3*f18^2 / (f6*f9)",
                   "Hirschhorn (14.3.2): 3-dissection of f1^2/f2", dissection_base=3),
    IdentityRecord("hirsch_b", "f2^2 / f1",
                   "f6*f9^2 / (f3*f18) + q*f18^2 / f9",
                   "Hirschhorn (14.3.3): 3-dissection of f2^2/f1", dissection_base=3),
    IdentityRecord("toh", "f2 / (f1*f4)",
                   "f18^9 / (f3^2*f9^3*f12^2*f36^3)"
                   " + q*f6^2*f18^3 / (f3^3*f12^3)"
                   " + q^2*f6^4*f9^3*f36^3 / (f3^4*f12^4*f18^3)",
                   "Toh (2.1c): partitions with distinct odd parts", dissection_base=3),
    IdentityRecord("ahs", "f4 / f1",
                   "f12*f18^4 / (f3^3*f36^2)"
                   " + q*f6^2*f9^3*f36 / (f3^4*f18^2)"
                   " + 2*q^2*f6*f18*f36 / f3^3",
                   "Andrews-Hirschhorn-Sellers: partitions with distinct even parts",
                   dissection_base=3),
    IdentityRecord("lem22", "f2 / f1^2",
                   "f6^4*f9^6 / (f3^8*f18^3) + 2*q*f6^3*f9^3 / f3^7"
                   " + 4*q^2*f6^2*f18^3 / f3^6",
                   "Guadalupe: 3-dissection of f2/f1^2", dissection_base=3),
    IdentityRecord("frobenius_mod_p", "f{k}^{p}", "f{pk}",
                   "f_k^p = f_pk (mod p) for prime p", modulus="{p}",
                   params=tuple({"p": p, "k": k, "pk": p * k}
                                for p in (2, 3, 5) for k in (1, 2, 3, 4))),
    IdentityRecord("phi_inverse_mod8", "phi(-q)^-1", "phi(q)*phi(q^2)^2",
                   "1/phi(-q) = phi(q) phi(q^2)^2 phi(q^4)^4 ..., phi^j = 1 (mod 8) for even j >= 4",
                   modulus=8),
    IdentityRecord("gf_theta_form",
                   "f2*f{l}^2*f{m}^2*f{lm2} / (f1^2*f{l2}*f{m2}*f{lm}^2)",
                   "phi(-q^{l})*phi(-q^{m}) / (phi(-q)*phi(-q^{lm}))",
                   "biregular generating function as a phi(-q) quotient",
                   params=tuple(dict(p, lm=p["l"] * p["m"], lm2=2 * p["l"] * p["m"],
                                     l2=2 * p["l"], m2=2 * p["m"]) for p in _PAIRS)),
    IdentityRecord("r23_mod2", _GF23, "1", "R(2,3) generating function is 1 mod 2",
                   modulus=2),
    IdentityRecord("r23_mod3", _GF23, "f3^2*f4^2 / (f6^2*f1^2)",
                   "R(2,3) generating function mod 3", modulus=3),
    IdentityRecord("r23_3n_mod3", f"extract({_GF23}, 3, 0)",
                   "f4^2*f6^8 / (f2^2*f1^4*f12^4) + 4*q*f2*f3^3*f12^2 / (f1^5*f6)",
                   "R(2,3)(3n) generating function mod 3", modulus=3),
    IdentityRecord("r43_mod2", _GF43, "1", "R(4,3) generating function is 1 mod 2",
                   modulus=2),
    IdentityRecord("r43_mod3", _GF43, "f3*f24 / (f6*f12^2) * psi(q)*phi(-q)*phi(-q^4)",
                   "R(4,3) generating function mod 3 via theta functions", modulus=3),
    IdentityRecord("r43_3n_mod3", f"extract({_GF43}, 3, 0)",
                   "f1*f8 / (f2*f4^2) * (f(q,q^2)*phi(-q^3)*phi(-q^12)"
                   " + q^2*psi(q^3)*f(-q,-q^5)*f(-q^4,-q^20))",
                   "R(4,3)(3n) generating function mod 3", modulus=3),
    IdentityRecord("r49_9n3_mod3", f"extract({_GF49}, 9, 3)",
                   "-f3^3 / f1 - 8*q*f12^3 / f4",
                   "R(4,9)(9n+3) generating function mod 3", modulus=3),
)


def list_identities() -> tuple[IdentityRecord, ...]:
    return _CATALOG


def get_identity(identity_id: str) -> IdentityRecord:
    for rec in _CATALOG:
        if rec.id == identity_id:
            return rec
    raise UnknownIdentity(identity_id)


@lru_cache(maxsize=256)
def _parsed(text: str) -> E.Node:
    return E.parse(text)


def _compare(a: S.TruncatedSeries, b: S.TruncatedSeries, m: Optional[int]):
    for i, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if (x != y) if m is None else (x - y) % m:
            return i, x, y
    return None


def check_record(record: IdentityRecord, N: int) -> IdentityReport:
    """Expand both sides of every instance to order ``N`` and compare."""
    for params, lhs, rhs, m in record.instances():
        a = E.evaluate(_parsed(lhs), N)
        b = E.evaluate(_parsed(rhs), N)
        bad = _compare(a, b, m)
        if bad is not None:
            i, x, y = bad
            return IdentityReport(record.id, N, False, i, x, y, dict(params))
    return IdentityReport(record.id, N, True)


def check_identity(identity_id: str, N: int) -> IdentityReport:
    return check_record(get_identity(identity_id), N)


def check_dissection(record: IdentityRecord | str, N: int) -> IdentityReport:
    """Compare ``dissect(lhs, k).parts[r]`` with the ``r``-th summand of the
    right side after ``q^k -> q``, each to order ``N``."""
    if isinstance(record, str):
        record = get_identity(record)
    k = record.dissection_base
    if not k:
        raise ValueError(f"{record.id} is not a dissection identity")
    for params, lhs, rhs, m in record.instances():
        parts = S.dissect(E.evaluate(_parsed(lhs), k * N), k)
        for r, comp in enumerate(E.dissection_components(_parsed(rhs), k)):
            bad = _compare(parts[r].truncate(N), E.evaluate(comp, N), m)
            if bad is not None:
                i, x, y = bad
                return IdentityReport(record.id, N, False, i, x, y, dict(params), r, "dissection")
    return IdentityReport(record.id, N, True, kind="dissection")


def _check_by_id(args: tuple[str, int]) -> IdentityReport:
    return check_identity(*args)


def check_all(N: int, parallelism: int = 1) -> list[IdentityReport]:
    """Check the whole catalog; reports come back in catalog order."""
    jobs = [(rec.id, N) for rec in _CATALOG]
    if parallelism == 1:
        return [_check_by_id(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=parallelism or None) as pool:
        return list(pool.map(_check_by_id, jobs))


def export_json(indent: int | None = 2) -> str:
    return json.dumps([rec.to_dict() for rec in _CATALOG], indent=indent)
