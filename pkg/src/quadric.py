"""
The ring H^⋄(XQ^{2p}) of the antisymmetric quadric.

Generators over H^⋄(BU(1)) are m_0, …, m_p with

    (i)   ĉ^s ĉ_χ^{p−1−s} = ζ₀ m_{s+1} + ζ₁ m_s
    (ii)  ĉ_χ m_{s+1} = ĉ m_s
    (iii) m_s m_{p−s} = 0

and ĉ^{p−s} m_s (resp. ĉ_χ^s m_s) infinitely divisible by ζ₀ (resp. ζ₁).
Normal forms live on the per-coset basis: a staircase of pure monomials in
Xℙ^{s|p−s} followed by m_s times a staircase in Xℙ^{p−s|s}, s = s_n.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import TYPE_CHECKING

from . import hpoint, projspace
from .errors import (
    IndexRangeError,
    InternalNonDivisible,
    MalformedExpression,
    NotDivisible,
    NotHomogeneous,
    SpaceMismatch,
)
from .grading import Grading, s_index
from .hpoint import HElem
from .ring import Mono, RingElem, Space, Terms, absorb_xi, mono_coset, mono_grading, rewrite
from .ring import quadric as quadric_space

if TYPE_CHECKING:
    from .table_cache import TableCache

log = logging.getLogger("eqquad.quadric")


def _p(space: Space) -> int:
    if not space.is_quadric:
        raise SpaceMismatch(f"{space} is not a quadric")
    return space.p


# ── validity ───────────────────────────────────────────────────────────────────
def is_valid(mono: Mono, p: int) -> bool:
    if mono.m is None:
        return min(mono.a, mono.b, mono.i, mono.j) >= 0
    if not 0 <= mono.m <= p:
        return False
    return projspace.is_valid(mono, p - mono.m, mono.m)


def check_valid(terms: Terms, p: int) -> None:
    for mono in terms:
        if mono.m is not None and not 0 <= mono.m <= p:
            raise IndexRangeError(f"m[{mono.m}] does not exist for p={p}")
        if not is_valid(mono, p):
            raise MalformedExpression(f"{mono} is not a class of XQ^{2 * p}")


# ── rewriting ──────────────────────────────────────────────────────────────────
def _pure_to_m(mono: Mono, p: int) -> list[tuple[HElem, Mono]]:
    """ĉ^{s}ĉ_χ^{p−s} = (ζ₀ĉ + ζ₁ĉ_χ) m_s, with s chosen near s_n."""
    a, b, i, j = mono.a, mono.b, mono.i, mono.j
    lo, hi = max(0, p - j), min(i, p)
    s = min(max(s_index(p, mono_coset(mono)), lo), hi)
    ri, rj = i - s, j - (p - s)
    return [
        (hpoint.ONE, Mono(a + 1, b, ri + 1, rj, s)),
        (hpoint.ONE, Mono(a, b + 1, ri, rj + 1, s)),
    ]


def _slide(mono: Mono, p: int, s: int) -> list[tuple[HElem, Mono]]:
    """Move the m-index one step toward s using (ii), or (i) at an edge."""
    a, b, i, j, t = mono
    if t < s:
        if i >= 1:
            return [(hpoint.ONE, Mono(a, b, i - 1, j + 1, t + 1))]
        if b >= 1:
            # ζ₁ m_t = ĉ^t ĉ_χ^{p−1−t} − ζ₀ m_{t+1}
            return [
                (hpoint.ONE, Mono(a, b - 1, i + t, j + p - 1 - t)),
                (-hpoint.ONE, Mono(a + 1, b - 1, i, j, t + 1)),
            ]
    else:
        if j >= 1:
            return [(hpoint.ONE, Mono(a, b, i + 1, j - 1, t - 1))]
        if a >= 1:
            # ζ₀ m_t = ĉ^{t−1} ĉ_χ^{p−t} − ζ₁ m_{t−1}
            return [
                (hpoint.ONE, Mono(a - 1, b, i + t - 1, j + p - t)),
                (-hpoint.ONE, Mono(a - 1, b + 1, i, j, t - 1)),
            ]
    raise InternalNonDivisible(f"cannot move {mono} toward m[{s}] in XQ^{2 * p}")


def rewrite_step(mono: Mono, p: int) -> list[tuple[HElem, Mono]] | None:
    if mono.m is None:
        step = projspace.rewrite_step(mono, None, None)
        if step is not None:
            return step
        if mono.degree >= p:
            return _pure_to_m(mono, p)
        return None
    t = mono.m
    step = projspace.rewrite_step(mono, p - t, t)
    if step is not None:
        return step
    s = s_index(p, mono_coset(mono, p))
    if t == s:
        return None
    return _slide(mono, p, s)


def reduce_terms(terms: Terms, p: int, strategy: str = "breadth") -> Terms:
    check_valid(terms, p)
    return rewrite(terms, lambda mono: rewrite_step(mono, p), strategy)


def reduce(space: Space, terms: Terms, strategy: str = "breadth") -> RingElem:
    return RingElem(space, reduce_terms(terms, _p(space), strategy))


# ── m-products ─────────────────────────────────────────────────────────────────
@lru_cache(maxsize=None)
def m_product(p: int, a: int, b: int) -> tuple[tuple[int, Mono], ...]:
    """
    m_a·m_b as a formal combination of monomials times m_a.

    Multiplying (i) by m_a and descending toward the annihilating pair
    m_a m_{p−a} = 0 gives, with negative ζ-exponents standing for the
    divided classes,

        m_a m_b = ζ₀^{−1}(ĉ^{b−1}ĉ_χ^{p−b} − ζ₁ m_a m_{b−1}) m_a   (b > p − a)
        m_a m_b = ζ₁^{−1}(ĉ^b ĉ_χ^{p−1−b} − ζ₀ m_a m_{b+1}) m_a    (b < p − a)
    """
    if a + b == p:
        return ()
    if b > p - a:
        head = [(1, Mono(-1, 0, b - 1, p - b, a))]
        tail = [(-c, mono._replace(a=mono.a - 1, b=mono.b + 1)) for c, mono in m_product(p, a, b - 1)]
    else:
        head = [(1, Mono(0, -1, b, p - 1 - b, a))]
        tail = [(-c, mono._replace(a=mono.a + 1, b=mono.b - 1)) for c, mono in m_product(p, a, b + 1)]
    return tuple(head + tail)


def formal_mono_product(x: Mono, y: Mono, p: int) -> list[tuple[int, Mono]]:
    if x.m is None or y.m is None:
        return [(1, x.times(y))]
    rest = x._replace(m=None).times(y._replace(m=None))
    return [(c, rest.times(mono._replace(m=None))._replace(m=mono.m)) for c, mono in m_product(p, x.m, y.m)]


def formal_product(x: Terms, y: Terms, p: int) -> Terms:
    acc: list[tuple[Mono, HElem]] = []
    for mx, cx in x.items():
        for my, cy in y.items():
            coeff = cx * cy
            acc.extend((mono, coeff * c) for c, mono in formal_mono_product(mx, my, p))
    return Terms(acc)


def mul(
    x: RingElem,
    y: RingElem,
    strategy: str = "breadth",
    table: TableCache | None = None,
) -> RingElem:
    if x.space != y.space:
        raise SpaceMismatch(f"cannot multiply elements of {x.space} and {y.space}")
    p = _p(x.space)
    if table is None:
        return reduce(x.space, formal_product(x.terms, y.terms, p), strategy)
    out = Terms()
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            out = out + table.product(mx, my, lambda u, v: mono_product(p, u, v)).scale(cx * cy)
    return RingElem(x.space, out)


def mono_product(p: int, x: Mono, y: Mono) -> Terms:
    formal = Terms((mono, hpoint.from_int(c)) for c, mono in formal_mono_product(x, y, p))
    return reduce_terms(formal, p)


# ── constructors ───────────────────────────────────────────────────────────────
def m_class(p: int, s: int, space: Space | None = None) -> RingElem:
    if not 0 <= s <= p:
        raise IndexRangeError(f"m[{s}] does not exist for p={p}")
    return RingElem(space or quadric_space(p), Terms.single(Mono(m=s)))


def element(space: Space, mono: Mono, coeff: HElem | int = 1) -> RingElem:
    return reduce(space, Terms.single(mono, coeff))


# ── bases ──────────────────────────────────────────────────────────────────────
def basis(p: int, n: int) -> list[Mono]:
    """
    Basis of H^{nΩ₁+RO(C₂)}(XQ^{2p}) over ℍ.

    Args:
        p: Half the complex dimension plus one
        n: Coset index

    Returns:
        2p monomials: p pure ones, then p multiples of m_{s_n}
    """
    s = s_index(p, n)
    shifted = n - (2 * s - p)
    pure = projspace.basis(s, p - s, n)
    tagged = [mono._replace(m=s) for mono in projspace.basis(p - s, s, shifted)]
    return pure + tagged


def ro2_basis(p: int) -> list[tuple[Mono, tuple[int, int]]]:
    """The RO(C₂)-graded basis with lattice points (a, b) for grading a + bσ."""
    out = []
    for mono in basis(p, 0):
        g = mono_grading(mono, p)
        out.append((mono, (g.u, g.s)))
    return out


def basis_gradings(p: int, n: int) -> list[Grading]:
    return [mono_grading(mono, p) for mono in basis(p, n)]


def express_in_basis(x: RingElem) -> dict[Mono, HElem]:
    p = _p(x.space)
    cosets = x.cosets()
    if len(cosets) > 1:
        raise NotHomogeneous(f"{x.render()} spans cosets {sorted(cosets)}")
    normal = reduce(x.space, x.terms)
    if not normal.terms:
        return {}
    members = set(basis(p, next(iter(cosets))))
    for mono in normal.terms:
        if mono not in members:
            raise InternalNonDivisible(f"normal form left non-basis monomial {mono}")
    return dict(normal.terms.items())


# ── ζ-division ─────────────────────────────────────────────────────────────────
def _divisible(mono: Mono, which: int, k: int, p: int) -> Mono | None:
    if which == 0:
        cand = mono._replace(a=mono.a - k)
    else:
        cand = mono._replace(b=mono.b - k)
    return cand if is_valid(cand, p) else None


def _strip(terms: Terms, which: int, k: int, p: int) -> Terms:
    out: list[tuple[Mono, HElem]] = []
    for mono, coeff in terms.items():
        cand = _divisible(mono, which, k, p)
        if cand is None:
            name = "z0" if which == 0 else "z1"
            raise NotDivisible(f"{mono} is not divisible by {name}^{k}", monomial=mono)
        out.append((cand, coeff))
    return Terms(out)


def _expand_edge(terms: Terms, p: int) -> Terms:
    """Replace pure ĉ^sĉ_χ^{p−1−s} factors by ζ₀m_{s+1} + ζ₁m_s."""
    out: list[tuple[Mono, HElem]] = []
    for mono, coeff in terms.items():
        if mono.m is None and mono.degree == p - 1:
            s = mono.i
            out.append((Mono(mono.a + 1, mono.b, 0, 0, s + 1), coeff))
            out.append((Mono(mono.a, mono.b + 1, 0, 0, s), coeff))
        else:
            out.append((mono, coeff))
    return Terms(out)


def divide(x: RingElem, which: int, k: int) -> RingElem:
    """
    Solve ζ^k·y = x for y, ζ = ζ₀ (which=0) or ζ₁ (which=1).

    Monomials are stripped one by one; when that fails on the given terms
    the normal form is retried after moving ξ into ζ₀ζ₁ and opening pure
    edge monomials through relation (i).
    """
    if which not in (0, 1) or k < 1:
        raise IndexRangeError("divide needs which in {0, 1} and k >= 1")
    p = _p(x.space)
    attempts = [x.terms]
    normal = reduce_terms(x.terms, p)
    attempts.append(_expand_edge(absorb_xi(normal), p))
    attempts.append(_expand_edge(normal, p))
    zeta = Terms.single(Mono(a=k) if which == 0 else Mono(b=k))
    last_error: NotDivisible | None = None
    for terms in attempts:
        try:
            stripped = _strip(terms, which, k, p)
        except NotDivisible as exc:
            last_error = exc
            continue
        y = reduce_terms(stripped, p)
        if reduce_terms(formal_product(zeta, y, p), p) == normal:
            return RingElem(x.space, y)
        log.debug("division candidate %s failed the multiply-back check", y)
    raise last_error or NotDivisible(f"{x.render()} is not divisible by the requested power")
