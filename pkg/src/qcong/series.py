"""Exact arithmetic on formal power series truncated at order N.

A :class:`TruncatedSeries` stores the coefficients of ``q^0 .. q^(N-1)`` as
Python integers and represents the series modulo ``q^N``. Every binary
operation returns a result at the smaller of the two operand orders, so no
coefficient is ever reported that the inputs do not determine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from qcong.errors import InvalidBase, InvalidModulus, InvalidOrder, NotInvertible

__all__ = [
    "TruncatedSeries",
    "DissectionParts",
    "from_coeffs",
    "one",
    "zero",
    "monomial",
    "add",
    "sub",
    "mul",
    "invert",
    "power",
    "dissect",
    "reassemble",
    "reduce_mod",
    "series_congruent",
]

# Below this many nonzero terms in the sparser operand, plain loops over the
# nonzero coefficients beat packing into one big integer.
_SPARSE_CUTOFF = 48


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise InvalidOrder("a truncated series needs order >= 1")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, idx):
        return self.coeffs[idx]

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:12])
        more = ", ..." if self.order > 12 else ""
        return f"TruncatedSeries([{shown}{more}], order={self.order})"

    def __add__(self, other):
        if isinstance(other, int):
            other = _const(other, self.order)
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = _const(other, self.order)
        return sub(self, other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> TruncatedSeries:
        return power(self, k)

    def scale(self, c: int) -> TruncatedSeries:
        return TruncatedSeries(tuple(c * x for x in self.coeffs))

    def truncate(self, n: int) -> TruncatedSeries:
        if n < 1:
            raise InvalidOrder(f"cannot truncate to order {n}")
        if n > self.order:
            raise InvalidOrder(f"cannot extend order {self.order} to {n}")
        return TruncatedSeries(self.coeffs[:n])

    def shift(self, j: int) -> TruncatedSeries:
        """Multiply by ``q^j``; the result is known modulo ``q^(N+j)``."""
        if j < 0:
            raise InvalidOrder("negative powers of q are not supported")
        return TruncatedSeries((0,) * j + self.coeffs)

    def dilate(self, k: int) -> TruncatedSeries:
        """Substitute ``q -> q^k``; the result is known modulo ``q^(kN)``."""
        if k < 1:
            raise InvalidBase(f"dilation factor must be >= 1, got {k}")
        out = [0] * (k * self.order)
        out[::k] = self.coeffs
        return TruncatedSeries(tuple(out))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def nonzero_terms(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]


@dataclass(frozen=True)
class DissectionParts:
    base: int
    parts: tuple[TruncatedSeries, ...]

    def __post_init__(self):
        if len(self.parts) != self.base:
            raise InvalidBase(f"expected {self.base} parts, got {len(self.parts)}")

    def __getitem__(self, r: int) -> TruncatedSeries:
        return self.parts[r]

    def __len__(self) -> int:
        return self.base


def from_coeffs(values: Iterable[int]) -> TruncatedSeries:
    values = tuple(int(v) for v in values)
    if not values:
        raise InvalidOrder("from_coeffs needs at least one coefficient")
    return TruncatedSeries(values)


def _const(c: int, order: int) -> TruncatedSeries:
    return TruncatedSeries((c,) + (0,) * (order - 1))


def one(order: int) -> TruncatedSeries:
    if order < 1:
        raise InvalidOrder(f"order must be >= 1, got {order}")
    return _const(1, order)


def zero(order: int) -> TruncatedSeries:
    if order < 1:
        raise InvalidOrder(f"order must be >= 1, got {order}")
    return TruncatedSeries((0,) * order)


def monomial(c: int, j: int, order: int) -> TruncatedSeries:
    """``c q^j`` modulo ``q^order``."""
    out = [0] * order
    if j < order:
        out[j] = c
    return from_coeffs(out)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n])))


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(x - y for x, y in zip(a.coeffs[:n], b.coeffs[:n])))


def _schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    # loop over the nonzero terms of the sparser operand only
    terms_a = [(i, c) for i, c in enumerate(a[:n]) if c]
    terms_b = [(i, c) for i, c in enumerate(b[:n]) if c]
    if len(terms_b) < len(terms_a):
        terms_a, terms_b = terms_b, terms_a
        b = a
    out = [0] * n
    dense = b[:n]
    for i, c in terms_a:
        for j in range(n - i):
            v = dense[j]
            if v:
                out[i + j] += c * v
    return out


def _pack(values: Sequence[int], width: int) -> int:
    return int.from_bytes(b"".join(v.to_bytes(width, "little") for v in values), "little")


def _unpack(x: int, width: int, n: int) -> list[int]:
    # only the low n slots are wanted; the product carries up to 2n - 1
    x &= (1 << (8 * width * n)) - 1
    raw = x.to_bytes(width * n, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") for i in range(n)]


def _kronecker(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Exact product via Kronecker substitution: pack each operand into one
    big integer, multiply once, and read the coefficients back out.

    Signs are handled by splitting both operands into nonnegative parts.
    """
    a, b = list(a[:n]), list(b[:n])
    ap = [max(c, 0) for c in a]
    am = [max(-c, 0) for c in a]
    bp = [max(c, 0) for c in b]
    bm = [max(-c, 0) for c in b]
    bits = (max(map(abs, a)).bit_length() + max(map(abs, b)).bit_length()
            + n.bit_length() + 1)
    width = (bits + 7) // 8
    packed = [_pack(v, width) for v in (ap, am, bp, bm)]
    pp = _unpack(packed[0] * packed[2], width, n)
    pm = _unpack(packed[0] * packed[3], width, n)
    mp = _unpack(packed[1] * packed[2], width, n)
    mm = _unpack(packed[1] * packed[3], width, n)
    return [w - x - y + z for w, x, y, z in zip(pp, pm, mp, mm)]


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    nza = sum(1 for c in a.coeffs[:n] if c)
    nzb = sum(1 for c in b.coeffs[:n] if c)
    if min(nza, nzb) == 0:
        return zero(n)
    if min(nza, nzb) <= _SPARSE_CUTOFF:
        return TruncatedSeries(tuple(_schoolbook(a.coeffs, b.coeffs, n)))
    return TruncatedSeries(tuple(_kronecker(a.coeffs, b.coeffs, n)))


def _invert_recurrence(a: TruncatedSeries) -> list[int]:
    a0 = a.coeffs[0]
    terms = [(i, c) for i, c in enumerate(a.coeffs) if c and i > 0]
    n = a.order
    b = [0] * n
    b[0] = a0
    for m in range(1, n):
        s = 0
        for i, c in terms:
            if i > m:
                break
            s += c * b[m - i]
        b[m] = -a0 * s
    return b


def _invert_newton(a: TruncatedSeries) -> list[int]:
    # b <- b (2 - a b), doubling the number of correct terms each round
    n = a.order
    b = TruncatedSeries((a.coeffs[0],))
    known = 1
    while known < n:
        known = min(2 * known, n)
        b = TruncatedSeries(b.coeffs + (0,) * (known - b.order))
        ab = mul(a.truncate(known), b)
        b = mul(b, add(_const(2, known), -ab))
    return list(b.coeffs)


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse modulo ``q^N``; the constant term must be +-1."""
    if a.coeffs[0] not in (1, -1):
        raise NotInvertible(f"constant term {a.coeffs[0]} is not a unit")
    nonzero = sum(1 for c in a.coeffs if c)
    if nonzero <= _SPARSE_CUTOFF or a.order <= 256:
        return TruncatedSeries(tuple(_invert_recurrence(a)))
    return TruncatedSeries(tuple(_invert_newton(a)))


def power(a: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        return power(invert(a), -k)
    result = one(a.order)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def dissect(a: TruncatedSeries, k: int) -> DissectionParts:
    """Split ``a`` by exponent residue mod ``k``.

    ``parts[r]`` holds ``sum_n a[kn + r] q^n`` and is known to order
    ``ceil((N - r) / k)``; nothing is padded.
    """
    if k < 1:
        raise InvalidBase(f"dissection base must be >= 1, got {k}")
    if k > a.order:
        raise InvalidBase(f"base {k} exceeds series order {a.order}; some parts would be empty")
    return DissectionParts(k, tuple(TruncatedSeries(a.coeffs[r::k]) for r in range(k)))


def reassemble(parts: DissectionParts) -> TruncatedSeries:
    k = parts.base
    n = min(k * p.order + r for r, p in enumerate(parts.parts))
    out = [0] * n
    for r, p in enumerate(parts.parts):
        for m, c in enumerate(p.coeffs):
            idx = k * m + r
            if idx >= n:
                break
            out[idx] = c
    return TruncatedSeries(tuple(out))


def _check_modulus(m: int) -> None:
    if m < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {m}")


def reduce_mod(a: TruncatedSeries, m: int) -> TruncatedSeries:
    _check_modulus(m)
    return TruncatedSeries(tuple(c % m for c in a.coeffs))


def series_congruent(a: TruncatedSeries, b: TruncatedSeries, m: int) -> bool:
    _check_modulus(m)
    return all((x - y) % m == 0 for x, y in zip(a.coeffs, b.coeffs))
