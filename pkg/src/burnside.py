"""
The Burnside ring A(C₂): a + b·g with g = [C₂/e] and g² = 2g.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParityError


@dataclass(frozen=True)
class BurnsideElem:
    a: int = 0
    b: int = 0

    def __add__(self, other: BurnsideElem) -> BurnsideElem:
        return BurnsideElem(self.a + other.a, self.b + other.b)

    def __sub__(self, other: BurnsideElem) -> BurnsideElem:
        return BurnsideElem(self.a - other.a, self.b - other.b)

    def __neg__(self) -> BurnsideElem:
        return BurnsideElem(-self.a, -self.b)

    def __mul__(self, other: BurnsideElem | int) -> BurnsideElem:
        if isinstance(other, int):
            return BurnsideElem(other * self.a, other * self.b)
        return mul(self, other)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def render(self) -> str:
        return render(self)

    def __str__(self) -> str:
        return render(self)


ZERO = BurnsideElem(0, 0)
ONE = BurnsideElem(1, 0)
G = BurnsideElem(0, 1)
KAPPA = BurnsideElem(2, -1)


def mul(x: BurnsideElem, y: BurnsideElem) -> BurnsideElem:
    return BurnsideElem(x.a * y.a, x.a * y.b + y.a * x.b + 2 * x.b * y.b)


def rho(x: BurnsideElem) -> int:
    """Cardinality of the underlying set."""
    return x.a + 2 * x.b


def fixed(x: BurnsideElem) -> int:
    return x.a


def solve(r: int, f: int) -> BurnsideElem:
    """
    Find the element with underlying cardinality r and f fixed points.

    Args:
        r: Value of rho
        f: Value of the fixed-point count

    Returns:
        f + ((r - f) / 2)·g
    """
    if (r - f) % 2:
        raise ParityError(f"no element of A(C2) has rho={r} and fixed={f}")
    return BurnsideElem(f, (r - f) // 2)


def _signed(coeff: int, sym: str, first: bool) -> str:
    mag = abs(coeff)
    body = sym if (sym and mag == 1) else f"{mag}{sym}"
    if first:
        return f"-{body}" if coeff < 0 else body
    return f" - {body}" if coeff < 0 else f" + {body}"


def render(x: BurnsideElem) -> str:
    if not x:
        return "0"
    # κ-form (a + 2b) − b·κ
    k_const, k_coeff = x.a + 2 * x.b, -x.b
    g_neg = (x.a < 0) + (x.b < 0)
    k_neg = (k_const < 0) + (k_coeff < 0)
    if x.b and k_const >= 0 and k_neg <= g_neg and k_const != x.a:
        out = str(k_const) if k_const else ""
        if k_coeff:
            mag = "" if abs(k_coeff) == 1 else str(abs(k_coeff))
            if out:
                out += ("-" if k_coeff < 0 else "+") + f"{mag}kappa"
            else:
                out = ("-" if k_coeff < 0 else "") + f"{mag}kappa"
        return out
    out = ""
    for coeff, sym in ((x.a, ""), (x.b, "g")):
        if coeff:
            out += _signed(coeff, sym, not out)
    return out
