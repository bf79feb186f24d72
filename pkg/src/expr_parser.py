"""
Expression language for ring elements.

    expr   := term (('+' | '-') term)*
    term   := unary (['*'] unary)*          juxtaposition multiplies
    unary  := '-' unary | factor
    factor := atom ('^' ['-'] int)?
    atom   := int | name | 'm' '[' int ']' | 'tau' '(' expr ')' | '(' expr ')'

Names: z0 z1 cw cxw (cl cxl cg cxg on the Grassmannian), m[s], e, xi,
kappa (or k), g, tau(n) = τ(ι^n), iota inside tau, and c m0 m1 on the
nonequivariant ring.  Unicode spellings such as ζ₀, ĉ_χω, κ, ξ are accepted.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Union

from . import hpoint, projspace, quadric, restrict
from .errors import ExpressionSyntaxError, MalformedExpression, UnknownGenerator
from .hpoint import HElem, IotaElem
from .ring import ONE_MONO, Mono, RingElem, Space, Terms

log = logging.getLogger("eqquad.expr_parser")


# ── tokens ─────────────────────────────────────────────────────────────────────
class Token(NamedTuple):
    type: str
    value: str | int
    where: int


_TOKENS = {
    "name": r"[A-Za-z_][A-Za-z0-9_]*",
    "num": r"\d+",
    "lpar": r"\(",
    "rpar": r"\)",
    "lbrack": r"\[",
    "rbrack": r"\]",
    "plus": r"\+",
    "minus": r"-",
    "mul": r"\*",
    "pow": r"\^",
    "skip": r"\s+",
    "error": r".",
}
_REGEX = re.compile("|".join(f"(?P<{name}>{text})" for name, text in _TOKENS.items()))

UNICODE_ALIASES = [
    ("ĉ_χω", "cxw"),
    ("ĉ_χλ", "cxl"),
    ("ĉ_χγ", "cxg"),
    ("ĉ_ω", "cw"),
    ("ĉ_λ", "cl"),
    ("ĉ_γ", "cg"),
    ("ĉ", "cw"),
    ("ζ₀", "z0"),
    ("ζ₁", "z1"),
    ("κ", "kappa"),
    ("ξ", "xi"),
    ("τ", "tau"),
    ("ι", "iota"),
    ("·", "*"),
    ("−", "-"),
]


def normalize_text(text: str) -> str:
    for old, new in UNICODE_ALIASES:
        text = text.replace(old, f" {new} " if new[0].isalpha() else new)
    return text


def tokenize(text: str) -> Iterator[Token]:
    for mo in _REGEX.finditer(text):
        kind = str(mo.lastgroup)
        if kind == "skip":
            continue
        if kind == "error":
            raise ExpressionSyntaxError(f"unexpected character {mo.group()!r}", mo.start(), text)
        value: str | int = int(mo.group()) if kind == "num" else mo.group()
        yield Token(kind, value, mo.start())
    yield Token("end", "", len(text))


# ── syntax tree ────────────────────────────────────────────────────────────────
class Num(NamedTuple):
    value: int


class Gen(NamedTuple):
    name: str
    index: int | None = None


class Tau(NamedTuple):
    arg: "Node"


class Neg(NamedTuple):
    operand: "Node"


class BinOp(NamedTuple):
    op: str
    left: "Node"
    right: "Node"


class Pow(NamedTuple):
    base: "Node"
    exp: int


Node = Union[Num, Gen, Tau, Neg, BinOp, Pow]

_ATOM_START = {"num", "name", "lpar"}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = list(tokenize(text))
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self, kind: str | None = None) -> Token:
        tok = self.tok
        if kind is not None and tok.type != kind:
            raise ExpressionSyntaxError(f"expected {kind}, found {tok.value or tok.type!r}", tok.where, self.text)
        self.pos += 1
        return tok

    def parse(self) -> Node:
        if self.tok.type == "end":
            raise ExpressionSyntaxError("empty expression", 0, self.text)
        node = self.expr()
        if self.tok.type != "end":
            raise ExpressionSyntaxError(f"unexpected {self.tok.value!r}", self.tok.where, self.text)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.type in ("plus", "minus"):
            op = "+" if self.advance().type == "plus" else "-"
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.tok.type == "mul" or self.tok.type in _ATOM_START:
            if self.tok.type == "mul":
                self.advance()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Node:
        if self.tok.type == "minus":
            self.advance()
            return Neg(self.unary())
        return self.factor()

    def factor(self) -> Node:
        node = self.atom()
        if self.tok.type == "pow":
            self.advance()
            return Pow(node, self.signed_int())
        return node

    def signed_int(self) -> int:
        sign = 1
        if self.tok.type == "minus":
            self.advance()
            sign = -1
        return sign * int(self.advance("num").value)

    def atom(self) -> Node:
        tok = self.tok
        if tok.type == "num":
            self.advance()
            return Num(int(tok.value))
        if tok.type == "lpar":
            self.advance()
            node = self.expr()
            self.advance("rpar")
            return node
        if tok.type == "name":
            self.advance()
            name = str(tok.value)
            if name == "m" and self.tok.type == "lbrack":
                self.advance()
                index = int(self.advance("num").value)
                self.advance("rbrack")
                return Gen("m", index)
            if name == "tau":
                self.advance("lpar")
                inner = self.expr()
                self.advance("rpar")
                return Tau(inner)
            return Gen(name)
        raise ExpressionSyntaxError(f"unexpected {tok.value or tok.type!r}", tok.where, self.text)


def parse(text: str) -> Node:
    return _Parser(normalize_text(text)).parse()


# ── evaluation ─────────────────────────────────────────────────────────────────
SCALARS = {"e", "xi", "kappa", "k", "g"}
RING_GENERATORS = {"z0": Mono(a=1), "z1": Mono(b=1), "cw": Mono(i=1), "cxw": Mono(j=1)}
LAMBDA_GENERATORS = {"cl": Mono(i=1), "cxl": Mono(j=1)}


def _scalar_value(name: str) -> HElem:
    if name == "xi":
        return hpoint.XI
    if name in ("kappa", "k"):
        return hpoint.KAPPA
    if name == "g":
        return hpoint.G
    return hpoint.from_symbol(hpoint.sym_e(1))


def _flatten(node: Node) -> list[Node]:
    if isinstance(node, BinOp) and node.op == "*":
        return _flatten(node.left) + _flatten(node.right)
    return [node]


def _is_gen(node: Node, *names: str) -> bool:
    return isinstance(node, Gen) and node.name in names


def _power_of(node: Node, *names: str) -> int | None:
    if _is_gen(node, *names):
        return 1
    if isinstance(node, Pow) and _is_gen(node.base, *names):
        return node.exp
    return None


def _iota_value(node: Node) -> IotaElem:
    if isinstance(node, Num):
        return hpoint.iota(0, node.value)
    if _is_gen(node, "iota"):
        return hpoint.iota(1)
    if isinstance(node, Pow):
        base = _iota_value(node.base)
        if node.exp < 0:
            if len(base.coeffs) != 1 or list(base.coeffs.values())[0] != 1:
                raise MalformedExpression("only monomials in iota can be inverted")
            (k,) = base.coeffs
            return hpoint.iota(k * node.exp)
        out = hpoint.iota(0)
        for _ in range(node.exp):
            out = out * base
        return out
    if isinstance(node, Neg):
        return _iota_value(node.operand) * -1
    if isinstance(node, BinOp):
        left, right = _iota_value(node.left), _iota_value(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left + right * -1
        return left * right
    raise MalformedExpression("tau(...) takes an integer exponent or a polynomial in iota")


def _tau_value(node: Tau) -> HElem:
    arg = node.arg
    if isinstance(arg, Num):
        return hpoint.tau_power(arg.value)
    if isinstance(arg, Neg) and isinstance(arg.operand, Num):
        return hpoint.tau_power(-arg.operand.value)
    return hpoint.tau(_iota_value(arg))


@dataclass
class Evaluator:
    """
    Evaluates a syntax tree in a space.

    strategy "eager" reduces after every product; "lazy" keeps formal
    products and reduces once at the end.
    """

    space: Space
    strategy: str = "eager"
    table: object | None = None
    divisions: int = field(default=0, init=False)

    # ── ring arithmetic ──
    def _formal(self, x: Terms, y: Terms) -> Terms:
        if self.space.is_quadric:
            return quadric.formal_product(x, y, self.space.p)
        return projspace.formal_product(x, y)

    def _reduce(self, terms: Terms) -> Terms:
        if self.space.is_quadric:
            return quadric.reduce_terms(terms, self.space.p)
        if self.space.is_projective:
            p, q = projspace.caps(self.space)
            return projspace.reduce_terms(terms, p, q)
        return terms

    def _mul(self, x: Terms, y: Terms) -> Terms:
        if self.strategy == "lazy":
            return self._formal(x, y)
        if self.space.is_quadric and self.table is not None:
            return quadric.mul(RingElem(self.space, x), RingElem(self.space, y), table=self.table).terms
        return self._reduce(self._formal(x, y))

    def _check_name(self, name: str) -> None:
        allowed = set(SCALARS)
        if self.space.is_quadric or self.space.is_projective:
            allowed |= set(RING_GENERATORS)
        if self.space.is_quadric:
            allowed |= {"m"}
        if self.space.lambda_names:
            allowed |= set(LAMBDA_GENERATORS) | {"cg", "cxg"}
        if name not in allowed:
            raise UnknownGenerator(name, self.space.tag)

    def _atom(self, node: Node) -> Terms:
        if isinstance(node, Num):
            return Terms.scalar(hpoint.from_int(node.value))
        if isinstance(node, Tau):
            return Terms.scalar(_tau_value(node))
        if isinstance(node, Gen):
            name = node.name
            if name == "iota":
                raise MalformedExpression("iota only appears inside tau(...)")
            self._check_name(name)
            if name in SCALARS:
                return Terms.scalar(_scalar_value(name))
            if name == "m":
                if not 0 <= node.index <= self.space.p:
                    raise UnknownGenerator(f"m[{node.index}]", self.space.tag)
                return Terms.single(Mono(m=node.index))
            if name == "cg":
                return Terms.single(Mono(m=2))
            if name == "cxg":
                return Terms.single(Mono(b=2, m=0))
            return Terms.single(RING_GENERATORS.get(name) or LAMBDA_GENERATORS[name])
        return self.eval_terms(node)

    def _power(self, node: Pow) -> Terms:
        if node.exp < 0:
            raise MalformedExpression("negative powers are only allowed on z0 and z1")
        base = self._atom(node.base)
        out = Terms.scalar(hpoint.ONE)
        for _ in range(node.exp):
            out = self._mul(out, base)
        return out

    def _product(self, factors: list[Node]) -> Terms:
        e_exp = 0
        zeta_div = [0, 0]
        kappa_nodes = [f for f in factors if (_power_of(f, "kappa", "k") or 0) >= 1]
        rest: list[Node] = []
        for f in factors:
            k = _power_of(f, "e")
            if k is not None:
                e_exp += k
                continue
            for which, name in enumerate(("z0", "z1")):
                k = _power_of(f, name)
                if k is not None and k < 0:
                    zeta_div[which] -= k
                    break
            else:
                rest.append(f)
        scalar = hpoint.ONE
        if e_exp < 0:
            if not kappa_nodes:
                raise MalformedExpression(f"e^{e_exp} only exists multiplied by kappa")
            # κ^k = 2^{k−1}κ: one κ goes into e^{−m}κ, the rest stays a factor
            node = kappa_nodes[0]
            at = rest.index(node)
            if isinstance(node, Pow) and node.exp > 1:
                rest[at] = Pow(node.base, node.exp - 1)
            else:
                rest.pop(at)
            scalar = hpoint.from_symbol(hpoint.sym_negkappa(-e_exp))
        elif e_exp > 0:
            scalar = hpoint.e_power(e_exp)
        out = Terms.scalar(scalar)
        for f in rest:
            value = self._power(f) if isinstance(f, Pow) else self._atom(f)
            out = self._mul(out, value)
        if any(zeta_div):
            out = self._divide(out, zeta_div)
        return out

    def _divide(self, terms: Terms, zeta_div: list[int]) -> Terms:
        elem = RingElem(self.space, terms)
        for which, k in enumerate(zeta_div):
            if k:
                self.divisions += 1
                if self.space.is_quadric:
                    elem = quadric.divide(elem, which, k)
                elif self.space.is_projective:
                    elem = projspace.divide(elem, which, k)
                else:
                    raise MalformedExpression("z0 and z1 are not invertible here")
        return elem.terms

    def eval_terms(self, node: Node) -> Terms:
        if isinstance(node, BinOp) and node.op in "+-":
            left, right = self.eval_terms(node.left), self.eval_terms(node.right)
            return left + right if node.op == "+" else left - right
        if isinstance(node, Neg):
            return -self.eval_terms(node.operand)
        return self._product(_flatten(node))

    def evaluate(self, node: Node) -> RingElem:
        return RingElem(self.space, self._reduce(self.eval_terms(node)))


def _evaluate_noneq(node: Node, p: int) -> restrict.NoneqQElem:
    if isinstance(node, Num):
        return restrict.noneq_one(p).scale(node.value)
    if isinstance(node, Gen):
        if node.name == "c":
            return restrict.noneq_c(p)
        if node.name in ("m0", "m1"):
            return restrict.noneq_m(p, int(node.name[1]))
        raise UnknownGenerator(node.name, f"noneq:{p}")
    if isinstance(node, Neg):
        return _evaluate_noneq(node.operand, p).scale(-1)
    if isinstance(node, Pow):
        if node.exp < 0:
            raise MalformedExpression("negative powers do not exist in the nonequivariant ring")
        base = _evaluate_noneq(node.base, p)
        out = restrict.noneq_one(p)
        for _ in range(node.exp):
            out = out * base
        return out
    if isinstance(node, BinOp):
        left, right = _evaluate_noneq(node.left, p), _evaluate_noneq(node.right, p)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right
    raise MalformedExpression("tau(...) has no meaning in the nonequivariant ring")


def evaluate(
    text: str | Node, space: Space, strategy: str = "eager", table: object | None = None
) -> RingElem | restrict.NoneqQElem:
    """
    Parse (if needed) and evaluate an expression.

    Args:
        text: Expression source or an already parsed tree
        space: Ambient space
        strategy: "eager" or "lazy" reduction
        table: Optional product table for quadric multiplication

    Returns:
        A normal-form ring element, or a nonequivariant element for noneq:p
    """
    node = parse(text) if isinstance(text, str) else text
    if space.kind == "noneq":
        return _evaluate_noneq(node, space.p)
    result = Evaluator(space, strategy, table).evaluate(node)
    log.debug("evaluated in %s (%s): %s", space, strategy, result.render())
    return result


def evaluate_point(text: str) -> HElem:
    from .ring import POINT

    elem = evaluate(text, POINT)
    return elem.terms.coeff(ONE_MONO)


__all__ = ["parse", "evaluate", "evaluate_point", "tokenize", "Evaluator"]
