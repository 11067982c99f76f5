"""Text grammar for series expressions.

Eta quotients are written ``f2^5 * f1^-2 * f4^-2`` and theta functions
``phi(-q^3)``, ``psi(q)``, ``chi(-q^4)``, ``f(q,q^5)``. Whitespace is ignored.
On top of that an expression may use integers, powers of ``q``, ``+``/``-``,
``*``/``/``, parentheses, ``^`` with integer exponents, and
``extract(expr, k, r)`` for the ``r``-th component of a ``k``-dissection
(``sum_n c_{kn+r} q^n``).

Grammar::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor (('*'|'/') factor)*
    factor  := primary ['^' ['+'|'-'] INT]
    primary := INT | 'q' | 'f'INT | ('phi'|'psi'|'chi') '(' arg ')'
             | 'f' '(' arg ',' arg ')' | 'extract' '(' expr ',' INT ',' INT ')'
             | '(' expr ')'
    arg     := ['+'|'-'] 'q' ['^' INT]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from qcong import series as S
from qcong.errors import InvalidBase, InvalidOrder, NotInvertible, ParseError
from qcong.products import ProductSpec, ThetaSpec, eta_power, eta_quotient, theta_expand

__all__ = [
    "Const",
    "QPow",
    "Eta",
    "Theta",
    "Pow",
    "Prod",
    "Sum",
    "Neg",
    "Extract",
    "parse",
    "parse_product",
    "parse_theta",
    "evaluate",
    "expand",
    "contract",
    "to_text",
    "dissection_components",
]


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class QPow:
    exponent: int


@dataclass(frozen=True)
class Eta:
    scale: int


@dataclass(frozen=True)
class Theta:
    spec: ThetaSpec


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Prod:
    factors: tuple["Node", ...]


@dataclass(frozen=True)
class Sum:
    terms: tuple["Node", ...]


@dataclass(frozen=True)
class Neg:
    inner: "Node"


@dataclass(frozen=True)
class Extract:
    inner: "Node"
    base: int
    residue: int


Node = Union[Const, QPow, Eta, Theta, Pow, Prod, Sum, Neg, Extract]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_]*\d*)|(.))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "name", "sym", "end"
    value: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        num, name, sym = m.groups()
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if num is not None:
            toks.append(_Tok("int", num, start))
        elif name is not None:
            toks.append(_Tok("name", name, start))
        elif sym is not None:
            if sym not in "+-*/^(),":
                raise ParseError(f"unexpected character {sym!r}", text, start)
            toks.append(_Tok("sym", sym, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message: str, tok: _Tok | None = None):
        tok = tok or self.tok
        return ParseError(message, self.text, tok.pos)

    def accept(self, sym: str) -> bool:
        if self.tok.kind == "sym" and self.tok.value == sym:
            self.i += 1
            return True
        return False

    def expect(self, sym: str) -> None:
        if not self.accept(sym):
            found = self.tok.value or "end of input"
            raise self.error(f"expected {sym!r}, found {found!r}")

    def integer(self) -> int:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        if self.tok.kind != "int":
            raise self.error("expected an integer")
        value = int(self.tok.value)
        self.i += 1
        return sign * value

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.value!r}")
        return node

    def expr(self) -> Node:
        terms = []
        negate = False
        if self.accept("-"):
            negate = True
        else:
            self.accept("+")
        while True:
            term = self.term()
            terms.append(Neg(term) if negate else term)
            if self.accept("+"):
                negate = False
            elif self.accept("-"):
                negate = True
            else:
                break
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Node:
        factors = [self.factor()]
        while True:
            if self.accept("*"):
                factors.append(self.factor())
            elif self.accept("/"):
                factors.append(_power(self.factor(), -1))
            else:
                break
        return factors[0] if len(factors) == 1 else Prod(tuple(factors))

    def factor(self) -> Node:
        start = self.tok
        base = self.primary()
        if self.accept("^"):
            k = self.integer()
            if isinstance(base, QPow) and k < 0:
                raise self.error("negative powers of q are not supported", start)
            return _power(base, k)
        return base

    def primary(self) -> Node:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return Const(int(tok.value))
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind != "name":
            raise self.error(f"unexpected {tok.value or 'end of input'!r}")
        self.i += 1
        name = tok.value
        if name == "q":
            return QPow(1)
        if re.fullmatch(r"f\d+", name):
            n = int(name[1:])
            if n < 1:
                raise self.error("eta scale must be positive", tok)
            return Eta(n)
        if name in ("phi", "psi", "chi"):
            self.expect("(")
            sign, t = self.arg()
            self.expect(")")
            return Theta(ThetaSpec(name, sign, t))
        if name == "f":
            self.expect("(")
            sa, r = self.arg()
            self.expect(",")
            sb, s = self.arg()
            self.expect(")")
            return Theta(ThetaSpec("general_f", sa, r, sb, s))
        if name == "extract":
            self.expect("(")
            inner = self.expr()
            self.expect(",")
            k = self.integer()
            self.expect(",")
            r = self.integer()
            self.expect(")")
            if k < 1 or not 0 <= r < k:
                raise self.error(f"extract needs k >= 1 and 0 <= r < k, got k={k}, r={r}", tok)
            return Extract(inner, k, r)
        raise self.error(f"unknown name {name!r}", tok)

    def arg(self) -> tuple[int, int]:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        tok = self.tok
        if tok.kind != "name" or tok.value != "q":
            raise self.error("theta argument must look like +-q^t")
        self.i += 1
        t = 1
        if self.accept("^"):
            t = self.integer()
            if t < 0:
                raise self.error("theta argument exponent must be nonnegative", tok)
        return sign, t


def _power(base: Node, k: int) -> Node:
    if k == 1:
        return base
    if isinstance(base, QPow):
        return QPow(base.exponent * k)
    if isinstance(base, Pow):
        return Pow(base.base, base.exponent * k)
    return Pow(base, k)


def parse(text: str) -> Node:
    return _Parser(text).parse()


def _as_product_spec(node: Node) -> ProductSpec | None:
    """The node as a pure eta quotient, or None if it is anything else."""
    if isinstance(node, Const) and node.value == 1:
        return ProductSpec()
    if isinstance(node, Eta):
        return ProductSpec(((node.scale, 1),))
    if isinstance(node, Pow):
        inner = _as_product_spec(node.base)
        if inner is None:
            return None
        return ProductSpec(tuple((n, k * node.exponent) for n, k in inner.factors))
    if isinstance(node, Prod):
        spec = ProductSpec()
        for f in node.factors:
            sub = _as_product_spec(f)
            if sub is None:
                return None
            spec = spec * sub
        return spec
    return None


def parse_product(text: str) -> ProductSpec:
    spec = _as_product_spec(parse(text))
    if spec is None:
        raise ParseError(f"not an eta quotient: {text!r}")
    return spec.canonical()


def parse_theta(text: str) -> ThetaSpec:
    node = parse(text)
    if not isinstance(node, Theta):
        raise ParseError(f"not a theta function: {text!r}")
    return node.spec


def to_text(node: Node) -> str:
    if isinstance(node, Const):
        return str(node.value)
    if isinstance(node, QPow):
        return "q" if node.exponent == 1 else f"q^{node.exponent}"
    if isinstance(node, Eta):
        return f"f{node.scale}"
    if isinstance(node, Theta):
        return node.spec.text
    if isinstance(node, Pow):
        inner = to_text(node.base)
        if not isinstance(node.base, (Eta, Theta, Const, QPow)):
            inner = f"({inner})"
        return f"{inner}^{node.exponent}"
    if isinstance(node, Prod):
        return "*".join(f"({to_text(f)})" if isinstance(f, (Sum, Neg)) else to_text(f)
                        for f in node.factors)
    if isinstance(node, Sum):
        out = to_text(node.terms[0])
        for t in node.terms[1:]:
            out += f" - {to_text(t.inner)}" if isinstance(t, Neg) else f" + {to_text(t)}"
        return out
    if isinstance(node, Neg):
        return f"-{to_text(node.inner)}"
    if isinstance(node, Extract):
        return f"extract({to_text(node.inner)}, {node.base}, {node.residue})"
    raise TypeError(node)


def _split_qpower(factors: tuple[Node, ...]) -> tuple[int, list[Node]]:
    j = 0
    rest = []
    for f in factors:
        if isinstance(f, QPow):
            j += f.exponent
        else:
            rest.append(f)
    return j, rest


def evaluate(node: Node, N: int) -> S.TruncatedSeries:
    """Expand ``node`` modulo ``q^N``."""
    if N < 1:
        raise InvalidOrder(f"order must be >= 1, got {N}")
    if isinstance(node, Const):
        return S.monomial(node.value, 0, N)
    if isinstance(node, QPow):
        return S.monomial(1, node.exponent, N)
    if isinstance(node, Eta):
        return eta_power(node.scale, 1, N)
    if isinstance(node, Theta):
        return theta_expand(node.spec, N)
    if isinstance(node, Pow):
        if isinstance(node.base, Eta):
            return eta_power(node.base.scale, node.exponent, N)
        base = evaluate(node.base, N)
        try:
            return S.power(base, node.exponent)
        except NotInvertible as exc:
            raise NotInvertible(f"{exc} in factor {to_text(node.base)!r}") from None
    if isinstance(node, Prod):
        j, rest = _split_qpower(node.factors)
        if j >= N:
            return S.zero(N)
        M = N - j
        etas = [f for f in rest if _as_product_spec(f) is not None]
        others = [f for f in rest if _as_product_spec(f) is None]
        spec = ProductSpec()
        for f in etas:
            spec = spec * _as_product_spec(f)
        result = eta_quotient(spec, M)
        for f in others:
            if isinstance(f, Const):
                result = result.scale(f.value)
            else:
                result = S.mul(result, evaluate(f, M))
        return result.shift(j).truncate(N)
    if isinstance(node, Sum):
        result = evaluate(node.terms[0], N)
        for t in node.terms[1:]:
            result = S.add(result, evaluate(t, N))
        return result
    if isinstance(node, Neg):
        return -evaluate(node.inner, N)
    if isinstance(node, Extract):
        inner = evaluate(node.inner, node.base * N + node.residue)
        return S.dissect(inner, node.base)[node.residue].truncate(N)
    raise TypeError(node)


def expand(text: str, N: int) -> S.TruncatedSeries:
    return evaluate(parse(text), N)


def contract(node: Node, k: int) -> Node:
    """Rewrite a series in ``q^k`` as the same series in ``q`` (``q^k -> q``).

    Raises InvalidBase when some part of ``node`` is not a function of ``q^k``.
    """
    if isinstance(node, Const):
        return node
    if isinstance(node, QPow):
        if node.exponent % k:
            raise InvalidBase(f"q^{node.exponent} is not a power of q^{k}")
        return QPow(node.exponent // k)
    if isinstance(node, Eta):
        if node.scale % k:
            raise InvalidBase(f"f{node.scale} is not a function of q^{k}")
        return Eta(node.scale // k)
    if isinstance(node, Theta):
        spec = node.spec
        if spec.scale % k or spec.scale_b % k:
            raise InvalidBase(f"{spec.text} is not a function of q^{k}")
        return Theta(ThetaSpec(spec.kind, spec.sign, spec.scale // k,
                               spec.sign_b, spec.scale_b // k))
    if isinstance(node, Pow):
        return Pow(contract(node.base, k), node.exponent)
    if isinstance(node, Prod):
        return Prod(tuple(contract(f, k) for f in node.factors))
    if isinstance(node, Sum):
        return Sum(tuple(contract(t, k) for t in node.terms))
    if isinstance(node, Neg):
        return Neg(contract(node.inner, k))
    raise InvalidBase(f"cannot contract {to_text(node)}")


def dissection_components(node: Node, k: int) -> list[Node]:
    """Split a sum of ``c q^j g(q^k)`` terms into its ``k`` dissection components.

    Component ``r`` collects the terms with ``j = r (mod k)``, written as
    series in ``q`` after ``q^k -> q``. A residue with no terms gives ``0``.
    """
    terms = node.terms if isinstance(node, Sum) else (node,)
    buckets: list[list[Node]] = [[] for _ in range(k)]
    for term in terms:
        negate = isinstance(term, Neg)
        body = term.inner if negate else term
        factors = body.factors if isinstance(body, Prod) else (body,)
        j, rest = _split_qpower(factors)
        r, m = j % k, j // k
        new = [contract(f, k) for f in rest]
        if m:
            lead = next((i for i, f in enumerate(new) if not isinstance(f, Const)), len(new))
            new.insert(lead, QPow(m))
        piece = Prod(tuple(new)) if len(new) > 1 else (new[0] if new else Const(1))
        buckets[r].append(Neg(piece) if negate else piece)
    return [Sum(tuple(b)) if len(b) > 1 else (b[0] if b else Const(0)) for b in buckets]
