"""Congruences ``R(An + B) = 0 (mod M)`` for biregular overpartitions.

``R_{l,m}(n)`` counts overpartitions of ``n`` with no part divisible by ``l``
or ``m``. Its generating function is the eta quotient

    f2 f_l^2 f_m^2 f_{2lm} / (f1^2 f_{2l} f_{2m} f_{lm}^2).

This module holds the claim catalog, a verifier that reads coefficients off
that expansion, the quadratic-form residue checker behind the mod-8
arguments, an independent mod-8 verifier built from theta sums, and a scanner
for new candidate progressions.

Verification to a finite order is evidence, not proof; every report says so
in its ``kind`` field.
"""

from __future__ import annotations

import itertools
import json
import re
import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Any, Iterable, Optional, Sequence

from qcong import series as S
from qcong.errors import InvalidModulus, InvalidOrder, ParseError, TruncationTooSmall
from qcong.oracle import BiregularConstraint
from qcong.products import ProductSpec, eta_quotient, phi, theta_expand

__all__ = [
    "STATUSES",
    "DEFAULT_ORDER",
    "CongruenceClaim",
    "VerificationReport",
    "QuadraticFormSpec",
    "MissReport",
    "Mod8Report",
    "ScanCandidate",
    "claim_catalog",
    "biregular_spec",
    "gen_function",
    "verify_claim",
    "verify_claims",
    "residues_of_form",
    "parse_form",
    "check_missed_residues",
    "mod8_forms",
    "PROOF_FORM_LISTS",
    "mod8_numerator",
    "mod8_route",
    "MOD8_TARGETS",
    "scan",
    "scan_covers",
    "load_claims",
]

STATUSES = ("theorem", "implied", "conjectured-elementary")
DEFAULT_ORDER = 2000


@dataclass(frozen=True)
class CongruenceClaim:
    """``R_{ell,mu}(A n + B) = 0 (mod M)`` for all ``n >= 0``."""

    ell: int
    mu: int
    A: int
    B: int
    M: int
    status: str = "theorem"
    anchor: str = ""

    def __post_init__(self):
        BiregularConstraint(self.ell, self.mu)
        if self.A < 1:
            raise ValueError(f"A must be >= 1, got {self.A}")
        if not 0 <= self.B < self.A:
            raise ValueError(f"need 0 <= B < A, got A={self.A}, B={self.B}")
        if self.M < 2:
            raise InvalidModulus(f"modulus must be >= 2, got {self.M}")
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.ell, self.mu)

    def to_dict(self) -> dict[str, Any]:
        return {"ell": self.ell, "mu": self.mu, "A": self.A, "B": self.B,
                "M": self.M, "status": self.status, "anchor": self.anchor}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> CongruenceClaim:
        return cls(int(d["ell"]), int(d["mu"]), int(d["A"]), int(d["B"]), int(d["M"]),
                   d.get("status", "theorem"), d.get("anchor", ""))

    def __str__(self) -> str:
        return f"R_{{{self.ell},{self.mu}}}({self.A}n+{self.B}) = 0 (mod {self.M})"


@dataclass(frozen=True)
class VerificationReport:
    claim: CongruenceClaim
    order: int
    checked_count: int
    holds: bool
    first_counterexample: Optional[tuple[int, int]] = None
    kind: str = "verified-to-order"

    def to_dict(self) -> dict[str, Any]:
        ce = None
        if self.first_counterexample is not None:
            n, c = self.first_counterexample
            ce = {"n": n, "coefficient": str(c)}
        return {"claim": self.claim.to_dict(), "N": self.order,
                "checked_count": self.checked_count, "holds": self.holds,
                "first_counterexample": ce, "kind": self.kind}


def _claim(ell, mu, A, B, M, status, anchor):
    return CongruenceClaim(ell, mu, A, B, M, status, anchor)


_THETA = "elementary proof via theta and dissection identities"
_MOD8 = "elementary proof via phi sums and quadratic-form residues mod 8"
_IMPLIED = "follows from the mod 8 and mod 3 results"
_OPEN = "no elementary proof known; numerically checked"

_CATALOG = (
    _claim(2, 3, 9, 6, 6, "theorem", _THETA),
    _claim(4, 3, 12, 7, 8, "theorem", _MOD8),
    _claim(4, 3, 12, 11, 8, "theorem", _MOD8),
    _claim(4, 3, 9, 3, 6, "theorem", _THETA),
    _claim(4, 3, 12, 11, 9, "theorem", _THETA),
    _claim(4, 9, 12, 3, 8, "theorem", _MOD8),
    _claim(4, 9, 12, 7, 8, "theorem", _MOD8),
    _claim(4, 9, 12, 11, 8, "theorem", _MOD8),
    _claim(4, 9, 18, 12, 3, "theorem", _THETA),
    _claim(4, 9, 18, 15, 3, "theorem", _THETA),
    _claim(8, 27, 36, 15, 8, "theorem", _MOD8),
    _claim(16, 81, 36, 33, 8, "theorem", _MOD8),
    _claim(4, 3, 12, 7, 24, "implied", _IMPLIED),
    _claim(4, 3, 12, 11, 72, "implied", _IMPLIED),
    _claim(4, 9, 18, 12, 24, "implied", _IMPLIED),
    _claim(4, 9, 18, 15, 24, "implied", _IMPLIED),
    _claim(8, 27, 36, 15, 3, "conjectured-elementary", _OPEN),
    _claim(16, 81, 36, 33, 6, "conjectured-elementary", _OPEN),
    _claim(8, 27, 36, 15, 24, "conjectured-elementary", _OPEN),
    _claim(16, 81, 36, 33, 48, "conjectured-elementary", _OPEN),
)


def claim_catalog() -> tuple[CongruenceClaim, ...]:
    return _CATALOG


def biregular_spec(ell: int, mu: int) -> ProductSpec:
    return ProductSpec.of([
        (2, 1), (ell, 2), (mu, 2), (2 * ell * mu, 1),
        (1, -2), (2 * ell, -1), (2 * mu, -1), (ell * mu, -2),
    ])


# (ell, mu) -> largest expansion computed so far; smaller orders truncate it
_GF_CACHE: dict[tuple[int, int], S.TruncatedSeries] = {}
_GF_LOCKS: dict[tuple[int, int], threading.Lock] = {}
_GF_GUARD = threading.Lock()


def gen_function(c, N: int) -> S.TruncatedSeries:
    """Generating function of ``R_{ell,mu}`` modulo ``q^N``."""
    if N < 1:
        raise InvalidOrder(f"order must be >= 1, got {N}")
    c = c if isinstance(c, BiregularConstraint) else BiregularConstraint(*c)
    key = c.pair
    with _GF_GUARD:
        lock = _GF_LOCKS.setdefault(key, threading.Lock())
    with lock:
        cached = _GF_CACHE.get(key)
        if cached is None or cached.order < N:
            cached = eta_quotient(biregular_spec(*key), N)
            _GF_CACHE[key] = cached
    return cached.truncate(N)


def verify_claim(claim: CongruenceClaim, N: int = DEFAULT_ORDER) -> VerificationReport:
    if N <= claim.B:
        raise TruncationTooSmall(f"order {N} does not reach the first term {claim.B} of {claim}")
    coeffs = gen_function(claim.pair, N).coeffs
    checked = 0
    for n, idx in enumerate(range(claim.B, N, claim.A)):
        checked += 1
        if coeffs[idx] % claim.M:
            return VerificationReport(claim, N, (N - 1 - claim.B) // claim.A + 1, False,
                                      (n, coeffs[idx]))
    return VerificationReport(claim, N, checked, True)


def _verify_group(args):
    claims, N = args
    return [verify_claim(c, N) for c in claims]


def verify_claims(claims: Sequence[CongruenceClaim], N: int = DEFAULT_ORDER,
                  parallelism: int = 1) -> list[VerificationReport]:
    """Verify ``claims``; reports are returned in input order.

    With ``parallelism != 1`` claims are grouped by pair so each worker
    expands a generating function once.
    """
    for c in claims:
        if N <= c.B:
            raise TruncationTooSmall(f"order {N} does not reach the first term {c.B} of {c}")
    if parallelism == 1 or len(claims) < 2:
        return [verify_claim(c, N) for c in claims]
    groups: dict[tuple[int, int], list[int]] = {}
    for i, c in enumerate(claims):
        groups.setdefault(c.pair, []).append(i)
    jobs = [([claims[i] for i in idxs], N) for idxs in groups.values()]
    out: list[Optional[VerificationReport]] = [None] * len(claims)
    with ProcessPoolExecutor(max_workers=parallelism or None) as pool:
        for idxs, reports in zip(groups.values(), pool.map(_verify_group, jobs)):
            for i, rep in zip(idxs, reports):
                out[i] = rep
    return out  # type: ignore[return-value]


def load_claims(text: str) -> list[CongruenceClaim]:
    """Parse a claim file: a JSON array, one JSON object, or JSON lines.

    Errors carry the 1-based line number of the offending claim.
    """
    stripped = text.strip()
    if not stripped:
        return []
    try:
        data = json.loads(stripped)
    except json.JSONDecodeError as exc:
        if "\n" not in stripped or stripped.startswith("["):
            raise ParseError(f"line {exc.lineno}: {exc.msg}") from None
        data = None
    if data is not None:
        items = data if isinstance(data, list) else [data]
        out = []
        for i, item in enumerate(items):
            try:
                out.append(CongruenceClaim.from_dict(item))
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"claim {i + 1}: {exc}") from None
        return out
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            out.append(CongruenceClaim.from_dict(json.loads(line)))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return out


# -- quadratic-form residues -------------------------------------------------


@dataclass(frozen=True)
class QuadraticFormSpec:
    """``sum a_i x_i^2`` reduced mod ``modulus``; ``starts[i]`` is 0 or 1."""

    coeffs: tuple[int, ...]
    modulus: int
    starts: tuple[int, ...] = ()

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidModulus(f"modulus must be >= 2, got {self.modulus}")
        if not self.starts:
            object.__setattr__(self, "starts", (1,) * len(self.coeffs))
        if len(self.starts) != len(self.coeffs):
            raise ValueError("one start value per variable")

    @property
    def text(self) -> str:
        names = "ijklmn"
        return "+".join(("" if a == 1 else str(a)) + f"{names[v]}^2"
                        for v, a in enumerate(self.coeffs))


def residues_of_form(form: QuadraticFormSpec, periods: int = 1) -> frozenset[int]:
    """All values of the form mod ``m``, each variable exhausted over
    ``periods`` full periods starting at its declared lower bound."""
    m = form.modulus
    ranges = [range(s, s + periods * m) for s in form.starts]
    sq = [[x * x % m for x in r] for r in ranges]
    out = set()
    for combo in itertools.product(*sq):
        out.add(sum(a * x for a, x in zip(form.coeffs, combo)) % m)
    return frozenset(out)


_FORM_TERM = re.compile(r"^(\d*)\*?(?:\(([^()]*)\)|([a-z])\^2)$")


def parse_form(text: str, modulus: int, start: int = 1) -> QuadraticFormSpec:
    """Parse ``"3i^2+4j^2"``, ``"2(i^2+j^2)"``, ``"i^2"`` and the like."""
    body = re.sub(r"\s+", "", text)
    if not body:
        raise ParseError("empty quadratic form")
    coeffs: dict[str, int] = {}
    depth, chunk, chunks = 0, "", []
    for ch in body:
        if ch == "+" and depth == 0:
            chunks.append(chunk)
            chunk = ""
            continue
        depth += (ch == "(") - (ch == ")")
        chunk += ch
    chunks.append(chunk)
    for piece in chunks:
        m = _FORM_TERM.match(piece)
        if not m:
            raise ParseError(f"cannot read quadratic-form term {piece!r}", text, body.find(piece))
        scale = int(m.group(1) or 1)
        if m.group(2) is not None:
            inner = parse_form(m.group(2), modulus, start)
            for v, a in zip(_vars(m.group(2)), inner.coeffs):
                coeffs[v] = coeffs.get(v, 0) + scale * a
        else:
            v = m.group(3)
            coeffs[v] = coeffs.get(v, 0) + scale
    names = sorted(coeffs)
    return QuadraticFormSpec(tuple(coeffs[v] for v in names), modulus, (start,) * len(names))


def _vars(text: str) -> list[str]:
    return sorted(set(re.findall(r"([a-z])\^2", text)))


@dataclass(frozen=True)
class MissReport:
    missed: bool
    modulus: int
    targets: frozenset[int]
    hits: dict[str, list[int]] = field(default_factory=dict)


def check_missed_residues(forms: Sequence[QuadraticFormSpec], modulus: int,
                          targets: Iterable[int]) -> MissReport:
    """True iff no form takes a value in ``targets`` mod ``modulus``."""
    targets = frozenset(t % modulus for t in targets)
    hits = {}
    for form in forms:
        if form.modulus != modulus:
            raise ValueError(f"form {form.text} has modulus {form.modulus}, expected {modulus}")
        attained = residues_of_form(form) & targets
        if attained:
            hits[form.text] = sorted(attained)
    return MissReport(not hits, modulus, targets, hits)


def mod8_forms(ell: int, mu: int, modulus: int) -> list[QuadraticFormSpec]:
    """Exponent forms whose terms survive mod 8 in
    ``phi(q) phi(q^2)^2 phi(-q^ell) phi(-q^mu)``.

    Each ``phi`` is ``1 + 2 sum q^(t n^2)``: single sums carry 2, products of
    two sums carry 4, and anything longer is 0 mod 8. ``phi(q^2)^2`` adds
    ``4 sum q^(2n^2)`` and ``4 sum q^(2(i^2+j^2))``.
    """
    scales = (1, ell, mu)
    forms = [(t,) for t in scales] + [(2,), (2, 2)]
    forms += [(a, b) for a, b in itertools.combinations(scales, 2)]
    return [QuadraticFormSpec(f, modulus) for f in forms]


# The form lists written out in the mod-8 proofs, with their target classes.
PROOF_FORM_LISTS = {
    (4, 3): (["i^2", "4i^2", "3i^2", "2i^2", "2(i^2+j^2)", "i^2+4j^2", "i^2+3j^2",
              "3i^2+4j^2"], 12, (11,)),
    (4, 9): (["i^2", "4i^2", "9i^2", "2i^2", "2(i^2+j^2)", "i^2+4j^2", "4i^2+9j^2",
              "i^2+9j^2"], 12, (3, 7, 11)),
    (8, 27): (["i^2", "8i^2", "27i^2", "2i^2", "2(i^2+j^2)", "i^2+27j^2", "8i^2+27j^2",
               "8i^2+j^2"], 36, (15,)),
    (16, 81): (["i^2", "16i^2", "81i^2", "2i^2", "2(i^2+j^2)", "i^2+16j^2",
                "16i^2+81j^2", "i^2+81j^2"], 36, (33,)),
}


# -- independent mod-8 route ------------------------------------------------

MOD8_TARGETS = {
    (4, 3): (12, (7, 11)),
    (4, 9): (12, (3, 7, 11)),
    (8, 27): (36, (15,)),
    (16, 81): (36, (33,)),
}


def mod8_numerator(ell: int, mu: int, N: int) -> S.TruncatedSeries:
    """``phi(q) phi(q^2)^2 phi(-q^ell) phi(-q^mu)`` from theta sums, reduced mod 8.

    Up to the factor ``1/phi(-q^(ell mu))`` this is the biregular generating
    function mod 8, because ``1/phi(-q) = prod_k phi(q^(2^k))^(2^k)`` and every
    factor with ``2^k >= 4`` is 1 mod 8.
    """
    result = theta_expand(phi(1, 1), N)
    for spec in (phi(1, 2), phi(1, 2), phi(-1, ell), phi(-1, mu)):
        result = S.reduce_mod(S.mul(result, theta_expand(spec, N)), 8)
    return result


@dataclass(frozen=True)
class Mod8Report:
    pair: tuple[int, int]
    A: int
    order: int
    zero_classes: dict[int, bool]
    first_nonzero: dict[int, Optional[int]]
    matches_gf_mod8: bool

    @property
    def holds(self) -> bool:
        return all(self.zero_classes.values())


def mod8_route(ell: int, mu: int, A: Optional[int] = None,
               targets: Optional[Iterable[int]] = None,
               N: int = DEFAULT_ORDER) -> Mod8Report:
    """Check the target classes mod ``A`` of the theta-sum numerator vanish mod 8.

    Dividing by ``phi(-q^(ell mu))`` only mixes exponents that differ by
    multiples of ``ell mu``, so when ``A`` divides ``ell mu`` a class that is
    zero in the numerator is zero in the generating function. As a
    cross-check the full quotient is compared with the eta-quotient expansion
    mod 8.
    """
    if A is None or targets is None:
        A, targets = MOD8_TARGETS[(ell, mu)]
    if (ell * mu) % A:
        raise ValueError(f"A={A} must divide ell*mu={ell * mu}")
    num = mod8_numerator(ell, mu, N)
    parts = S.dissect(num, A)
    zero, first = {}, {}
    for r in targets:
        nz = [n for n, c in enumerate(parts[r].coeffs) if c % 8]
        zero[r] = not nz
        first[r] = A * nz[0] + r if nz else None
    quotient = S.mul(num, S.invert(theta_expand(phi(-1, ell * mu), N)))
    matches = S.series_congruent(quotient, gen_function((ell, mu), N), 8)
    return Mod8Report((ell, mu), A, N, zero, first, matches)


# -- scanner -----------------------------------------------------------------


@dataclass(frozen=True)
class ScanCandidate:
    ell: int
    mu: int
    A: int
    B: int
    M: int
    checked_count: int
    implies: tuple[tuple[int, int, int], ...] = ()

    def as_claim(self) -> CongruenceClaim:
        return CongruenceClaim(self.ell, self.mu, self.A, self.B, self.M,
                               "conjectured-elementary", "scanner candidate")

    def covers(self, A: int, B: int, M: int) -> bool:
        return A % self.A == 0 and B % self.A == self.B and self.M % M == 0


def scan(c, maxA: int, moduli: Iterable[int], N: int = DEFAULT_ORDER) -> list[ScanCandidate]:
    """Find every progression ``An+B`` (``A <= maxA``) whose checked
    coefficients all vanish mod some ``M`` in ``moduli``.

    A candidate implied by another (its ``A`` a multiple, ``B`` in the same
    class, ``M`` a divisor) is folded into that candidate's ``implies`` list.
    Survivors are ordered by ``A``, then descending ``M``, then ``B``.
    """
    moduli = sorted(set(moduli))
    for m in moduli:
        if m < 2:
            raise InvalidModulus(f"modulus must be >= 2, got {m}")
    if not moduli:
        raise InvalidModulus("no moduli given")
    if maxA < 1:
        raise ValueError(f"maxA must be >= 1, got {maxA}")
    if N < 10 * maxA:
        raise TruncationTooSmall(f"order {N} < 10 * maxA = {10 * maxA}")
    c = c if isinstance(c, BiregularConstraint) else BiregularConstraint(*c)
    coeffs = gen_function(c, N).coeffs
    found = []
    for A in range(1, maxA + 1):
        for B in range(A):
            g = reduce(gcd, coeffs[B::A], 0)
            count = len(range(B, N, A))
            for M in moduli:
                if g % M == 0:
                    found.append((A, B, M, count))
    found.sort(key=lambda t: (t[0], -t[2], t[1]))
    kept: list[list] = []
    for A, B, M, count in found:
        for k in kept:
            if A % k[0] == 0 and B % k[0] == k[1] and k[2] % M == 0:
                k[4].append((A, B, M))
                break
        else:
            kept.append([A, B, M, count, []])
    return [ScanCandidate(c.ell, c.mu, A, B, M, count, tuple(imp))
            for A, B, M, count, imp in kept]


def scan_covers(candidates: Iterable[ScanCandidate], A: int, B: int, M: int) -> bool:
    """Whether the scan reported ``(A, B, M)`` directly or through an implying candidate."""
    return any(cand.covers(A, B, M) for cand in candidates)
