"""
Restriction maps out of the quadric ring.

ρ forgets the involution and lands in H*(Q^{2p}) with basis
c^k (k ≤ p−2), m₀, m₁, c^k m₀ (1 ≤ k ≤ p−1).  The fixed-point map lands in
ℤ[c]/(c^p) × ℤ[c]/(c^p), one factor per fixed component.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import sympy

from . import burnside, hpoint
from .burnside import BurnsideElem
from .errors import InconsistentTargets, SpaceMismatch
from .grading import fixed_dims, rank
from .ring import Mono, RingElem

log = logging.getLogger("eqquad.restrict")

NKey = tuple[int, "int | None"]


# ── nonequivariant quadric ring ────────────────────────────────────────────────
def _noneq_step(key: NKey, p: int) -> list[tuple[int, NKey]] | None:
    k, m = key
    if m is None and k >= p - 1:
        # c^{p−1} = m₀ + m₁
        return [(1, (k - p + 1, 0)), (1, (k - p + 1, 1))]
    if m == 1 and k >= 1:
        return [(1, (k, 0))]
    if m == 0 and k >= p:
        return []
    return None


def _m_square(p: int, x: int, y: int) -> list[tuple[int, NKey]]:
    """m_[x]·m_[y] in terms of c^k m₀."""
    if p == 1:
        # Q² = two points: m₀, m₁ are orthogonal idempotents
        return [(1, (0, y))] if x == y else []
    if p % 2:
        return [] if x != y else [(1, (p - 1, 0))]
    return [(1, (p - 1, 0))] if x != y else []


@dataclass(frozen=True)
class NoneqQElem:
    p: int
    coeffs: dict = field(default_factory=dict)

    @classmethod
    def build(cls, p: int, raw: dict[NKey, int] | list[tuple[int, NKey]]) -> NoneqQElem:
        items = list(raw.items()) if isinstance(raw, dict) else [(key, c) for c, key in raw]
        done: dict[NKey, int] = {}
        stack = items
        while stack:
            key, c = stack.pop()
            if not c:
                continue
            step = _noneq_step(key, p)
            if step is None:
                done[key] = done.get(key, 0) + c
            else:
                stack.extend((image, c * k) for k, image in step)
        return cls(p, {key: c for key, c in done.items() if c})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NoneqQElem) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, frozenset(self.coeffs.items())))

    def _check(self, other: NoneqQElem) -> None:
        if self.p != other.p:
            raise SpaceMismatch(f"nonequivariant rings for p={self.p} and p={other.p}")

    def __add__(self, other: NoneqQElem) -> NoneqQElem:
        self._check(other)
        raw = dict(self.coeffs)
        for key, c in other.coeffs.items():
            raw[key] = raw.get(key, 0) + c
        return NoneqQElem.build(self.p, raw)

    def __sub__(self, other: NoneqQElem) -> NoneqQElem:
        return self + other.scale(-1)

    def scale(self, n: int) -> NoneqQElem:
        return NoneqQElem(self.p, {key: n * c for key, c in self.coeffs.items() if n * c})

    def __mul__(self, other: NoneqQElem | int) -> NoneqQElem:
        if isinstance(other, int):
            return self.scale(other)
        return noneq_mul(self, other)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def degrees(self) -> set[int]:
        """Real degrees of the terms."""
        return {2 * k + (0 if m is None else 2 * self.p - 2) for k, m in self.coeffs}

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for (k, m), c in sorted(self.coeffs.items(), key=lambda kv: (kv[0][1] is not None, kv[0][1] or 0, kv[0][0])):
            body = " ".join(
                filter(None, ["" if k == 0 else ("c" if k == 1 else f"c^{k}"), "" if m is None else f"m{m}"])
            ) or "1"
            pieces.append(body if c == 1 else f"-{body}" if c == -1 else f"{c} {body}")
        out = pieces[0]
        for piece in pieces[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    def __str__(self) -> str:
        return self.render()


def noneq_mul(x: NoneqQElem, y: NoneqQElem) -> NoneqQElem:
    x._check(y)
    p = x.p
    raw: list[tuple[int, NKey]] = []
    for (k1, m1), c1 in x.coeffs.items():
        for (k2, m2), c2 in y.coeffs.items():
            c, k = c1 * c2, k1 + k2
            if m1 is None or m2 is None:
                raw.append((c, (k, m1 if m2 is None else m2)))
            else:
                raw.extend((c * s, (k + kk, mm)) for s, (kk, mm) in _m_square(p, m1, m2))
    return NoneqQElem.build(p, raw)


def noneq_reduce(p: int, raw: dict[NKey, int]) -> NoneqQElem:
    return NoneqQElem.build(p, raw)


def noneq_c(p: int, k: int = 1, n: int = 1) -> NoneqQElem:
    return NoneqQElem.build(p, {(k, None): n})


def noneq_m(p: int, s: int, n: int = 1) -> NoneqQElem:
    return NoneqQElem.build(p, {(0, s % 2): n})


def noneq_one(p: int) -> NoneqQElem:
    return noneq_c(p, 0)


def noneq_basis(p: int) -> list[NKey]:
    return [(k, None) for k in range(p - 1)] + [(0, 0), (0, 1)] + [(k, 0) for k in range(1, p)]


def vanishing_square(p: int, s: int) -> tuple[int, int]:
    """Which product of m_[0], m_[1] is ρ(m_s m_{p−s})."""
    if p % 2:
        return (0, 1)
    return (0, 0) if s % 2 == 0 else (1, 1)


# ── fixed-point ring ───────────────────────────────────────────────────────────
C = sympy.Symbol("c")


def truncate_poly(poly: sympy.Poly | dict[int, int], p: int) -> sympy.Poly:
    """Image of a polynomial in c in ℤ[c]/(c^p)."""
    if isinstance(poly, sympy.Poly):
        expr = poly.as_expr()
    else:
        expr = sum((c * C**k for k, c in poly.items()), sympy.Integer(0))
    poly = sympy.Poly(expr, C, domain="ZZ")
    return poly.rem(sympy.Poly(C**p, C, domain="ZZ"))


def poly_coeffs(poly: sympy.Poly) -> dict[int, int]:
    return {k: int(c) for (k,), c in poly.terms() if c}


@dataclass(frozen=True)
class FixedQElem:
    p: int
    comp0: sympy.Poly
    comp1: sympy.Poly
    tags: tuple[int, int] | None = field(default=None, compare=False)

    @classmethod
    def build(
        cls,
        p: int,
        comp0: sympy.Poly | dict[int, int],
        comp1: sympy.Poly | dict[int, int],
        tags: tuple[int, int] | None = None,
    ) -> FixedQElem:
        return cls(p, truncate_poly(comp0, p), truncate_poly(comp1, p), tags)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FixedQElem)
            and self.p == other.p
            and self.comp0 == other.comp0
            and self.comp1 == other.comp1
        )

    def __hash__(self) -> int:
        return hash((self.p, frozenset(poly_coeffs(self.comp0).items()), frozenset(poly_coeffs(self.comp1).items())))

    def _check(self, other: FixedQElem) -> None:
        if self.p != other.p:
            raise SpaceMismatch(f"fixed rings for p={self.p} and p={other.p}")

    def __add__(self, other: FixedQElem) -> FixedQElem:
        self._check(other)
        return FixedQElem.build(self.p, self.comp0 + other.comp0, self.comp1 + other.comp1, self.tags)

    def __mul__(self, other: FixedQElem) -> FixedQElem:
        self._check(other)
        tags = None
        if self.tags is not None and other.tags is not None:
            tags = (self.tags[0] + other.tags[0], self.tags[1] + other.tags[1])
        return FixedQElem.build(self.p, self.comp0 * other.comp0, self.comp1 * other.comp1, tags)

    def scale(self, n: int) -> FixedQElem:
        return FixedQElem.build(self.p, self.comp0 * n, self.comp1 * n, self.tags)

    def with_tags(self, tags: tuple[int, int] | None) -> FixedQElem:
        return FixedQElem(self.p, self.comp0, self.comp1, tags)

    def coeffs(self, component: int) -> dict[int, int]:
        """Coefficients of c^k on one fixed component."""
        return poly_coeffs(self.comp1 if component else self.comp0)

    def __bool__(self) -> bool:
        return not (self.comp0.is_zero and self.comp1.is_zero)

    def render(self) -> str:
        return f"({_render_poly(self.comp0)} | {_render_poly(self.comp1)})"

    def __str__(self) -> str:
        return self.render()


def fixed_pair(p: int, comp0: sympy.Poly | dict[int, int], comp1: sympy.Poly | dict[int, int]) -> FixedQElem:
    return FixedQElem.build(p, comp0, comp1)


def _render_poly(poly: sympy.Poly) -> str:
    coeffs = poly_coeffs(poly)
    if not coeffs:
        return "0"
    parts = []
    for k, c in sorted(coeffs.items()):
        if k == 0:
            parts.append(str(c))
            continue
        body = "c" if k == 1 else f"c^{k}"
        parts.append(body if c == 1 else f"-{body}" if c == -1 else f"{c}{body}")
    out = parts[0]
    for piece in parts[1:]:
        out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return out


# ── the restriction homomorphisms ──────────────────────────────────────────────
def _require_quadric(x: RingElem) -> int:
    if not x.space.is_quadric:
        raise SpaceMismatch(f"restriction maps are defined on quadrics, not {x.space}")
    return x.space.p


def rho_quadric(x: RingElem) -> NoneqQElem:
    """ζ ↦ 1, ĉ and ĉ_χ ↦ c, m_s ↦ m_[s mod 2]; ℍ-coefficients through ρ with ι dropped."""
    p = _require_quadric(x)
    x.grading  # homogeneity check
    raw: list[tuple[int, NKey]] = []
    for mono, coeff in x.terms.items():
        r = hpoint.rho(coeff).scalar()
        if r:
            raw.append((r, (mono.degree, None if mono.m is None else mono.m % 2)))
    return NoneqQElem.build(p, raw)


def fixed_mono(mono: Mono, p: int) -> FixedQElem:
    t = mono.m
    comp0: dict[int, int] = {}
    comp1: dict[int, int] = {}
    # ζ₀ ↦ (0, 1), ζ₁ ↦ (1, 0); divided classes vanish where their ζ does
    if mono.a == 0:
        comp0 = {mono.i + (t or 0): 1}
    if mono.b == 0:
        comp1 = {mono.j + (0 if t is None else p - t): 1}
    return FixedQElem.build(p, comp0, comp1)


def fixed_quadric(x: RingElem) -> FixedQElem:
    p = _require_quadric(x)
    g = x.grading
    out = fixed_pair(p, {}, {})
    for mono, coeff in x.terms.items():
        f = hpoint.fixed(coeff)
        if f:
            out = out + fixed_mono(mono, p).scale(f)
    return out.with_tags(None if g is None else fixed_dims(g))


def noneq_degree(x: RingElem) -> int | None:
    g = x.grading
    return None if g is None else rank(g)


# ── Burnside coefficient solver ────────────────────────────────────────────────
def _ratio(target: dict, base: dict, what: str) -> int:
    if not base:
        raise InconsistentTargets(f"the basis element has zero {what} image")
    key = next(iter(sorted(base, key=str)))
    if target.get(key, 0) % base[key]:
        raise InconsistentTargets(f"{what} target is not an integer multiple of the basis image")
    r = target.get(key, 0) // base[key]
    keys = set(target) | set(base)
    if any(target.get(k, 0) != r * base.get(k, 0) for k in keys):
        raise InconsistentTargets(f"{what} target is not proportional to the basis image")
    return r


def _keyed(x: FixedQElem) -> dict[tuple[int, int], int]:
    return {(which, k): c for which in (0, 1) for k, c in x.coeffs(which).items()}


def solve_burnside_coeff(target: RingElem, rho_target: NoneqQElem, fixed_target: FixedQElem) -> BurnsideElem:
    """
    Find α ∈ A(C₂) with ρ(α·target) and (α·target)^{C₂} equal to the given images.

    Args:
        target: A single basis monomial with coefficient 1
        rho_target: Required nonequivariant image
        fixed_target: Required fixed-point image

    Returns:
        α, via burnside.solve on the two extracted integers
    """
    rho_base = rho_quadric(target)
    fixed_base = fixed_quadric(target)
    r = _ratio(rho_target.coeffs, rho_base.coeffs, "nonequivariant")
    f = _ratio(_keyed(fixed_target), _keyed(fixed_base), "fixed-point")
    log.info("burnside coefficient from rho=%d, fixed=%d", r, f)
    return burnside.solve(r, f)
