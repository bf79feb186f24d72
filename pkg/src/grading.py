"""
Gradings in RO(ΠBU(1)), kept in the basis (1, σ, Ω₁).

Ω₀ is eliminated through Ω₀ + Ω₁ = 2σ − 2, so a grading is a plain triple
(u, s, w) meaning u + sσ + wΩ₁.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import IndexRangeError, ParityError, ParseError


@dataclass(frozen=True, order=True)
class Grading:
    u: int = 0
    s: int = 0
    w: int = 0

    def __add__(self, other: Grading) -> Grading:
        return Grading(self.u + other.u, self.s + other.s, self.w + other.w)

    def __sub__(self, other: Grading) -> Grading:
        return Grading(self.u - other.u, self.s - other.s, self.w - other.w)

    def __neg__(self) -> Grading:
        return Grading(-self.u, -self.s, -self.w)

    def __mul__(self, k: int) -> Grading:
        return Grading(k * self.u, k * self.s, k * self.w)

    __rmul__ = __mul__

    def render(self, ascii_only: bool = False) -> str:
        sigma, omega = ("s", "O1") if ascii_only else ("σ", "Ω₁")
        parts: list[tuple[int, str]] = [(self.u, ""), (self.s, sigma), (self.w, omega)]
        out = ""
        for coeff, sym in parts:
            if coeff == 0:
                continue
            mag = abs(coeff)
            body = sym if (sym and mag == 1) else f"{mag}{sym}"
            if not out:
                out = f"-{body}" if coeff < 0 else body
            else:
                out += f" - {body}" if coeff < 0 else f" + {body}"
        return out or "0"

    def __str__(self) -> str:
        return self.render()


def make(u: int, s: int, o0: int, o1: int) -> Grading:
    """u·1 + s·σ + o0·Ω₀ + o1·Ω₁ in canonical form."""
    return Grading(u - 2 * o0, s + 2 * o0, o1 - o0)


ZERO = Grading()
ONE = Grading(1, 0, 0)
SIGMA = Grading(0, 1, 0)
OMEGA1 = Grading(0, 0, 1)
OMEGA0 = make(0, 0, 1, 0)
OMEGA = make(2, 0, 0, 1)
CHI_OMEGA = make(2, 0, 1, 0)


def rank(g: Grading) -> int:
    return g.u + g.s


def fixed_dims(g: Grading) -> tuple[int, int]:
    """Real fixed-point dimensions over the two fixed components."""
    return g.u, g.u - 2 * g.w


def from_dims(total_rank: int, fixed0: int, fixed1: int) -> Grading:
    """
    Recover a grading from its rank and its two fixed dimensions.

    Args:
        total_rank: Real rank
        fixed0: Real fixed dimension over the first component
        fixed1: Real fixed dimension over the second component

    Returns:
        The unique grading with those invariants
    """
    if (fixed0 - fixed1) % 2:
        raise ParityError(f"fixed dimensions {fixed0}, {fixed1} differ by an odd amount")
    return Grading(fixed0, total_rank - fixed0, (fixed0 - fixed1) // 2)


def nu(p: int, s: int) -> Grading:
    """Grading of m_s in the quadric of dimension 2p."""
    if p < 1 or not 0 <= s <= p:
        raise IndexRangeError(f"m index {s} out of range for p={p}")
    return Grading(2 * s, 2 * (p - s - 1), 2 * s - p)


def s_index(p: int, n: int) -> int:
    if n >= p:
        return p
    if n <= -p:
        return 0
    return (p + n) // 2


def coset(g: Grading) -> tuple[int, Grading]:
    return g.w, Grading(g.u, g.s, 0)


# ── Parsing ────────────────────────────────────────────────────────────────────
_SYMBOLS = {
    "": ONE,
    "σ": SIGMA,
    "s": SIGMA,
    "sigma": SIGMA,
    "Ω₁": OMEGA1,
    "O1": OMEGA1,
    "Ω₀": OMEGA0,
    "O0": OMEGA0,
    "ω": OMEGA,
    "w": OMEGA,
    "χω": CHI_OMEGA,
    "xw": CHI_OMEGA,
}
_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*(Ω₁|Ω₀|χω|ω|σ|sigma|O1|O0|xw|w|s|)\s*")


def parse_grading(text: str) -> Grading:
    """Parse "a + bσ + nΩ₁" style text; Ω₀, ω and χω are accepted as well."""
    src = text.strip()
    if not src:
        raise ParseError("empty grading")
    pos = 0
    total = ZERO
    first = True
    while pos < len(src):
        match = _TERM.match(src, pos)
        if match is None or match.end() == pos:
            raise ParseError(f"cannot read grading {text!r} at position {pos}")
        sign, digits, sym = match.groups()
        if not sign and not first:
            raise ParseError(f"missing operator in grading {text!r} at position {pos}")
        if not digits and not sym:
            raise ParseError(f"empty term in grading {text!r} at position {pos}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        total = total + coeff * _SYMBOLS[sym]
        pos = match.end()
        first = False
    return total
