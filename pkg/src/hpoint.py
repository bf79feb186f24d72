"""
Cohomology of a point, ℍ = H^{RO(C₂)}(S⁰), on the charted region.

Elements are integer combinations of canonical symbols: the Burnside slot at
the origin, e^a, ξ^b, e^aξ^b, e^{−m}κ and τ(ι^{−n}).  The nonequivariant
point ring ℤ[ι^{±1}] and the maps ρ, τ and fixed points live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, NamedTuple

from . import burnside
from .burnside import BurnsideElem
from .errors import OutOfScopeRegion
from .grading import Grading


class Kind(IntEnum):
    UNIT = 0
    E = 1
    XI = 2
    EXI = 3
    NEGKAPPA = 4
    TAUNEG = 5


@dataclass(frozen=True, order=True)
class HSymbol:
    kind: Kind
    a: int = 0
    b: int = 0

    @property
    def grading(self) -> Grading:
        k = self.kind
        if k is Kind.UNIT:
            return Grading()
        if k is Kind.E:
            return Grading(0, self.a, 0)
        if k is Kind.XI:
            return Grading(-2 * self.b, 2 * self.b, 0)
        if k is Kind.EXI:
            return Grading(-2 * self.b, self.a + 2 * self.b, 0)
        if k is Kind.NEGKAPPA:
            return Grading(0, -self.a, 0)
        return Grading(self.a, -self.a, 0)

    @property
    def torsion(self) -> bool:
        """True when the symbol generates a ℤ/2."""
        return self.kind is Kind.EXI or (self.kind is Kind.TAUNEG and self.a % 2 == 1)

    def render(self) -> str:
        k = self.kind
        if k is Kind.UNIT:
            return "1"
        if k is Kind.E:
            return _power("e", self.a)
        if k is Kind.XI:
            return _power("xi", self.b)
        if k is Kind.EXI:
            return f"{_power('e', self.a)} {_power('xi', self.b)}"
        if k is Kind.NEGKAPPA:
            return f"e^-{self.a} kappa"
        return f"tau(-{self.a})"


def _power(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


UNIT = HSymbol(Kind.UNIT)


def sym_e(a: int) -> HSymbol:
    return HSymbol(Kind.E, a)


def sym_xi(b: int) -> HSymbol:
    return HSymbol(Kind.XI, 0, b)


def sym_exi(a: int, b: int) -> HSymbol:
    return HSymbol(Kind.EXI, a, b)


def sym_negkappa(m: int) -> HSymbol:
    return HSymbol(Kind.NEGKAPPA, m)


def sym_tauneg(n: int) -> HSymbol:
    return HSymbol(Kind.TAUNEG, n)


Coeff = BurnsideElem | int


def _normalize_coeff(sym: HSymbol, c: Coeff) -> Coeff:
    if sym.kind is Kind.UNIT:
        return c if isinstance(c, BurnsideElem) else BurnsideElem(c, 0)
    if isinstance(c, BurnsideElem):
        raise TypeError(f"symbol {sym.render()} takes an integer coefficient")
    return c % 2 if sym.torsion else c


class HElem:
    """A finite combination of ℍ symbols."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[HSymbol, Coeff] | Iterable[tuple[HSymbol, Coeff]] | None = None):
        self._terms: dict[HSymbol, Coeff] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for sym, c in items:
            self._accumulate(sym, c)

    def _accumulate(self, sym: HSymbol, c: Coeff) -> None:
        c = _normalize_coeff(sym, c)
        if sym in self._terms:
            c = _normalize_coeff(sym, self._terms[sym] + c)
        if c:
            self._terms[sym] = c
        else:
            self._terms.pop(sym, None)

    # ── container protocol ──
    def items(self) -> Iterator[tuple[HSymbol, Coeff]]:
        return iter(sorted(self._terms.items()))

    def __iter__(self) -> Iterator[HSymbol]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = from_int(other)
        if not isinstance(other, HElem):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"HElem({self.render()})"

    def coeff(self, sym: HSymbol) -> Coeff:
        return self._terms.get(sym, BurnsideElem() if sym.kind is Kind.UNIT else 0)

    # ── arithmetic ──
    def __add__(self, other: HElem) -> HElem:
        out = HElem(self._terms)
        for sym, c in other._terms.items():
            out._accumulate(sym, c)
        return out

    def __neg__(self) -> HElem:
        return HElem({sym: -c for sym, c in self._terms.items()})

    def __sub__(self, other: HElem) -> HElem:
        return self + (-other)

    def __mul__(self, other: HElem | int) -> HElem:
        if isinstance(other, int):
            return HElem({sym: c * other for sym, c in self._terms.items()})
        return mul(self, other)

    __rmul__ = __mul__

    @property
    def gradings(self) -> set[Grading]:
        return {sym.grading for sym in self._terms}

    def is_unit_integer(self) -> int | None:
        """The integer n when this element is n·1, else None."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and UNIT in self._terms:
            c = self._terms[UNIT]
            if c.b == 0:
                return c.a
        return None

    def render(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for sym, c in self.items():
            if sym.kind is Kind.UNIT:
                piece = burnside.render(c)
            elif c == 1:
                piece = sym.render()
            elif c == -1:
                piece = f"-{sym.render()}"
            else:
                piece = f"{c} {sym.render()}"
            if not out:
                out = piece
            elif piece.startswith("-"):
                out += f" - {piece[1:]}"
            else:
                out += f" + {piece}"
        return out

    def render_as_coefficient(self) -> str:
        """Rendering that can prefix a monomial without ambiguity."""
        text = self.render()
        compound = len(self._terms) > 1 or (
            UNIT in self._terms and any(ch in text[1:] for ch in "+-")
        )
        return f"({text})" if compound else text

    def __str__(self) -> str:
        return self.render()


def from_burnside(x: BurnsideElem) -> HElem:
    return HElem({UNIT: x})


def from_int(n: int) -> HElem:
    return HElem({UNIT: BurnsideElem(n, 0)})


def from_symbol(sym: HSymbol, c: int = 1) -> HElem:
    return HElem({sym: c})


def e_power(a: int) -> HElem:
    return from_int(1) if a == 0 else from_symbol(sym_e(a))


def xi_power(b: int) -> HElem:
    return from_int(1) if b == 0 else from_symbol(sym_xi(b))


ZERO = HElem()
ONE = from_int(1)
G = from_burnside(burnside.G)
KAPPA = from_burnside(burnside.KAPPA)
ONE_MINUS_KAPPA = from_burnside(burnside.ONE - burnside.KAPPA)
XI = from_symbol(sym_xi(1))
E2 = from_symbol(sym_e(2))


# ── symbol products ────────────────────────────────────────────────────────────
def _eξ_exponents(sym: HSymbol) -> tuple[int, int] | None:
    if sym.kind is Kind.E:
        return sym.a, 0
    if sym.kind is Kind.XI:
        return 0, sym.b
    if sym.kind is Kind.EXI:
        return sym.a, sym.b
    return None


def _from_exponents(ea: int, xb: int, c: int) -> HElem:
    if ea and xb:
        return from_symbol(sym_exi(ea, xb), c)
    if ea:
        return from_symbol(sym_e(ea), c)
    if xb:
        return from_symbol(sym_xi(xb), c)
    return from_int(c)


def _unit_acts(u: BurnsideElem, sym: HSymbol) -> int:
    # g acts by 2 on ξ-powers and transfers, by 0 where e or κ divides
    if sym.kind in (Kind.XI, Kind.TAUNEG):
        return burnside.rho(u)
    return burnside.fixed(u)


def _symbol_product(x: HSymbol, cx: Coeff, y: HSymbol, cy: Coeff) -> HElem:
    if x.kind is Kind.UNIT and y.kind is Kind.UNIT:
        return from_burnside(burnside.mul(cx, cy))
    if x.kind is Kind.UNIT:
        return from_symbol(y, _unit_acts(cx, y) * cy)
    if y.kind is Kind.UNIT:
        return from_symbol(x, _unit_acts(cy, x) * cx)

    c = cx * cy
    if y.kind is Kind.TAUNEG:
        x, y = y, x
    if x.kind is Kind.TAUNEG:
        # Frobenius: y·τ(ι^{−n}) = τ(ρ(y)·ι^{−n})
        if y.kind is Kind.TAUNEG:
            if x.a % 2 or y.a % 2:
                return ZERO
            return from_symbol(sym_tauneg(x.a + y.a), 2 * c)
        if y.kind is Kind.XI:
            return tau_power(2 * y.b - x.a) * c
        return ZERO

    if y.kind is Kind.NEGKAPPA:
        x, y = y, x
    if x.kind is Kind.NEGKAPPA:
        m = x.a
        if y.kind is Kind.NEGKAPPA:
            return from_symbol(sym_negkappa(m + y.a), 2 * c)
        if y.kind is Kind.E:
            j = y.a
            if j < m:
                return from_symbol(sym_negkappa(m - j), c)
            if j == m:
                return KAPPA * c
            return from_symbol(sym_e(j - m), 2 * c)
        return ZERO

    ex, ey = _eξ_exponents(x), _eξ_exponents(y)
    return _from_exponents(ex[0] + ey[0], ex[1] + ey[1], c)


def mul(x: HElem, y: HElem) -> HElem:
    out = HElem()
    for sx, cx in x._terms.items():
        for sy, cy in y._terms.items():
            out = out + _symbol_product(sx, cx, sy, cy)
    return out


# ── the region chart ───────────────────────────────────────────────────────────
class GroupInfo(NamedTuple):
    kind: str  # "0", "Z", "Z/2" or "A(C2)"
    generator: HSymbol | None


def group_at(g: Grading) -> GroupInfo:
    """Classify H^{u+sσ}; fourth-quadrant gradings off the diagonal are out of scope."""
    if g.w:
        raise OutOfScopeRegion(g)
    u, s = g.u, g.s
    if u == 0 and s == 0:
        return GroupInfo("A(C2)", UNIT)
    if u == 0:
        if s > 0:
            return GroupInfo("Z", sym_e(s))
        return GroupInfo("Z", sym_negkappa(-s))
    if u > 0 and s < 0:
        if s != -u:
            raise OutOfScopeRegion(g)
        if u == 1:
            return GroupInfo("0", None)
        sym = sym_tauneg(u)
        return GroupInfo("Z/2" if sym.torsion else "Z", sym)
    if u < 0 and u % 2 == 0:
        b = -u // 2
        if s == 2 * b:
            return GroupInfo("Z", sym_xi(b))
        if s > 2 * b:
            return GroupInfo("Z/2", sym_exi(s - 2 * b, b))
    return GroupInfo("0", None)


# ── ℤ[ι^{±1}] and the maps ρ, τ, fixed ─────────────────────────────────────────
class IotaElem:
    """Laurent polynomial in ι; ι has grading σ − 1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    def __add__(self, other: IotaElem) -> IotaElem:
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return IotaElem(out)

    def __mul__(self, other: IotaElem | int) -> IotaElem:
        if isinstance(other, int):
            return IotaElem({k: c * other for k, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return IotaElem(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IotaElem) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"IotaElem({self.coeffs})"

    def scalar(self) -> int:
        """Sum of coefficients, i.e. the value with ι-powers dropped."""
        return sum(self.coeffs.values())


def iota(k: int, c: int = 1) -> IotaElem:
    return IotaElem({k: c})


def _rho_symbol(sym: HSymbol, c: Coeff) -> IotaElem:
    if sym.kind is Kind.UNIT:
        return iota(0, burnside.rho(c))
    if sym.kind is Kind.XI:
        return iota(2 * sym.b, c)
    if sym.kind is Kind.TAUNEG:
        # ρτ(ι^k) = ι^k + (−ι)^k
        return iota(-sym.a, 2 * c) if sym.a % 2 == 0 else IotaElem()
    return IotaElem()


def rho(x: HElem) -> IotaElem:
    out = IotaElem()
    for sym, c in x.items():
        out = out + _rho_symbol(sym, c)
    return out


def tau_power(k: int) -> HElem:
    """τ(ι^k)."""
    if k == 0:
        return G
    if k > 0:
        return xi_power(k // 2) * 2 if k % 2 == 0 else ZERO
    if k <= -2:
        return from_symbol(sym_tauneg(-k))
    return ZERO


def tau(x: IotaElem) -> HElem:
    out = HElem()
    for k, c in x.coeffs.items():
        out = out + tau_power(k) * c
    return out


def fixed(x: HElem) -> int:
    total = 0
    for sym, c in x.items():
        if sym.kind is Kind.UNIT:
            total += burnside.fixed(c)
        elif sym.kind is Kind.E:
            total += c
        elif sym.kind is Kind.NEGKAPPA:
            total += 2 * c
    return total
