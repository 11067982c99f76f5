"""Named series: eta products ``f_n^k``, eta quotients, and the theta
functions phi, psi, chi and ``f(a, b)``.

``f_n`` is the Euler product ``prod_{j>=1} (1 - q^(jn))`` with no ``q^(n/24)``
prefactor. Products are expanded from the pentagonal number theorem, so
``f_1`` costs ``O(sqrt N)`` terms and never a dense product.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from qcong.errors import DivergentSpec, InvalidOrder, NoProductForm
from qcong.series import TruncatedSeries, invert, mul, one, power

__all__ = [
    "ProductSpec",
    "ThetaSpec",
    "pentagonal_euler",
    "eta_power",
    "eta_quotient",
    "theta_expand",
    "theta_product_form",
    "phi",
    "psi",
    "chi",
    "general_f",
]


@dataclass(frozen=True)
class ProductSpec:
    """A finite product ``prod f_n^k`` stored as ``(scale, exponent)`` pairs."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        factors = tuple((int(n), int(k)) for n, k in self.factors)
        for n, _ in factors:
            if n < 1:
                raise ValueError(f"eta scale must be positive, got {n}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def of(cls, factors: Iterable[tuple[int, int]] | dict[int, int]) -> ProductSpec:
        if isinstance(factors, dict):
            factors = factors.items()
        return cls(tuple(factors)).canonical()

    def canonical(self) -> ProductSpec:
        merged: dict[int, int] = defaultdict(int)
        for n, k in self.factors:
            merged[n] += k
        return ProductSpec(tuple((n, k) for n, k in sorted(merged.items()) if k))

    def scaled(self, t: int) -> ProductSpec:
        return ProductSpec(tuple((n * t, k) for n, k in self.factors))

    def __mul__(self, other: ProductSpec) -> ProductSpec:
        return ProductSpec(self.factors + other.factors).canonical()

    def inverse(self) -> ProductSpec:
        return ProductSpec(tuple((n, -k) for n, k in self.factors))

    def __eq__(self, other):
        if not isinstance(other, ProductSpec):
            return NotImplemented
        return self.canonical().factors == other.canonical().factors

    def __hash__(self):
        return hash(self.canonical().factors)

    @property
    def text(self) -> str:
        parts = [f"f{n}" if k == 1 else f"f{n}^{k}" for n, k in self.canonical().factors]
        return " * ".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.text


THETA_KINDS = ("phi", "psi", "chi", "general_f")


@dataclass(frozen=True)
class ThetaSpec:
    """One of ``phi(+-q^t)``, ``psi(+-q^t)``, ``chi(+-q^t)`` or ``f(+-q^r, +-q^s)``.

    For ``general_f`` the two arguments are ``a = sign * q^scale`` and
    ``b = sign_b * q^scale_b``.
    """

    kind: str
    sign: int = 1
    scale: int = 1
    sign_b: int = 1
    scale_b: int = 0

    def __post_init__(self):
        if self.kind not in THETA_KINDS:
            raise ValueError(f"unknown theta kind {self.kind!r}")
        if self.sign not in (1, -1) or self.sign_b not in (1, -1):
            raise ValueError("theta argument signs must be +1 or -1")
        if self.kind == "general_f":
            if self.scale + self.scale_b < 1:
                raise DivergentSpec(
                    f"f(a,b) needs |ab| < 1, i.e. r + s >= 1; got r={self.scale}, s={self.scale_b}")
            if self.scale < 0 or self.scale_b < 0:
                raise DivergentSpec("negative argument exponents give a Laurent series")
        elif self.scale < 1:
            raise ValueError(f"theta scale must be positive, got {self.scale}")

    def scaled(self, t: int) -> ThetaSpec:
        return ThetaSpec(self.kind, self.sign, self.scale * t, self.sign_b, self.scale_b * t)

    @property
    def text(self) -> str:
        def arg(sign, t):
            body = "q" if t == 1 else f"q^{t}"
            return body if sign > 0 else "-" + body

        if self.kind == "general_f":
            return f"f({arg(self.sign, self.scale)},{arg(self.sign_b, self.scale_b)})"
        return f"{self.kind}({arg(self.sign, self.scale)})"

    def __str__(self) -> str:
        return self.text


def phi(sign: int = 1, scale: int = 1) -> ThetaSpec:
    return ThetaSpec("phi", sign, scale)


def psi(sign: int = 1, scale: int = 1) -> ThetaSpec:
    return ThetaSpec("psi", sign, scale)


def chi(sign: int = 1, scale: int = 1) -> ThetaSpec:
    return ThetaSpec("chi", sign, scale)


def general_f(sign_a: int, r: int, sign_b: int, s: int) -> ThetaSpec:
    return ThetaSpec("general_f", sign_a, r, sign_b, s)


def _check_order(N: int) -> None:
    if N < 1:
        raise InvalidOrder(f"order must be >= 1, got {N}")


@lru_cache(maxsize=None)
def pentagonal_euler(N: int) -> TruncatedSeries:
    """``f_1 = sum_j (-1)^j q^(j(3j-1)/2)`` over all integers ``j``, mod ``q^N``."""
    _check_order(N)
    out = [0] * N
    out[0] = 1
    j = 1
    while j * (3 * j - 1) // 2 < N:
        sign = -1 if j % 2 else 1
        out[j * (3 * j - 1) // 2] += sign
        e = j * (3 * j + 1) // 2
        if e < N:
            out[e] += sign
        j += 1
    return TruncatedSeries(tuple(out))


@lru_cache(maxsize=4096)
def eta_power(n: int, k: int, N: int) -> TruncatedSeries:
    """``f_n^k`` modulo ``q^N``.

    Works at order ``ceil(N/n)`` in the variable ``q^n`` and dilates at the
    end, so only the exponents below ``N`` are ever computed.
    """
    if n < 1:
        raise ValueError(f"eta scale must be positive, got {n}")
    _check_order(N)
    if k == 0:
        return one(N)
    m = -(-N // n)
    base = pentagonal_euler(m)
    if k < 0:
        base, k = invert(base), -k
    return power(base, k).dilate(n).truncate(N)


def eta_quotient(spec: ProductSpec, N: int) -> TruncatedSeries:
    """Expand ``prod f_n^k`` to order ``N``.

    The positive-exponent block is multiplied first, then the inverted
    negative block is folded in.
    """
    _check_order(N)
    spec = spec.canonical()
    result = one(N)
    for n, k in spec.factors:
        if k > 0:
            result = mul(result, eta_power(n, k, N))
    for n, k in spec.factors:
        if k < 0:
            result = mul(result, eta_power(n, k, N))
    return result


def _phi_sum(sign: int, t: int, N: int) -> list[int]:
    out = [0] * N
    out[0] = 1
    n = 1
    while t * n * n < N:
        out[t * n * n] += 2 * (sign if n % 2 else 1)
        n += 1
    return out


def _psi_sum(sign: int, t: int, N: int) -> list[int]:
    out = [0] * N
    n = 0
    while t * n * (n + 1) // 2 < N:
        tri = n * (n + 1) // 2
        out[t * tri] += sign if tri % 2 else 1
        n += 1
    return out


def _general_f_sum(spec: ThetaSpec, N: int) -> list[int]:
    # exponent r*k(k+1)/2 + s*k(k-1)/2 is nondecreasing along k = 0, 1, 2, ...
    # and along k = -1, -2, ..., so each side stops at the first term >= N.
    r, s = spec.scale, spec.scale_b
    out = [0] * N
    for direction in (1, -1):
        k = 0 if direction == 1 else -1
        while True:
            ta, tb = k * (k + 1) // 2, k * (k - 1) // 2
            e = r * ta + s * tb
            if e >= N:
                break
            sgn = (spec.sign if ta % 2 else 1) * (spec.sign_b if tb % 2 else 1)
            out[e] += sgn
            k += direction
    return out


_PRODUCT_FORMS = {
    ("phi", 1): ((2, 5), (1, -2), (4, -2)),
    ("phi", -1): ((1, 2), (2, -1)),
    ("psi", 1): ((2, 2), (1, -1)),
    ("psi", -1): ((1, 1), (4, 1), (2, -1)),
    ("chi", 1): ((2, 2), (1, -1), (4, -1)),
    ("chi", -1): ((1, 1), (2, -1)),
}


def theta_product_form(spec: ThetaSpec) -> ProductSpec:
    if spec.kind == "general_f":
        raise NoProductForm(f"no tabulated product form for {spec.text}")
    return ProductSpec(_PRODUCT_FORMS[spec.kind, spec.sign]).scaled(spec.scale).canonical()


def theta_expand(spec: ThetaSpec, N: int) -> TruncatedSeries:
    """Expand a theta function from its sparse sum (chi uses its product form)."""
    _check_order(N)
    if spec.kind == "phi":
        return TruncatedSeries(tuple(_phi_sum(spec.sign, spec.scale, N)))
    if spec.kind == "psi":
        return TruncatedSeries(tuple(_psi_sum(spec.sign, spec.scale, N)))
    if spec.kind == "chi":
        return eta_quotient(theta_product_form(spec), N)
    return TruncatedSeries(tuple(_general_f_sum(spec, N)))
