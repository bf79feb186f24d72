"""
The ring H^⋄(Xℙ^{p|q}) over ℍ.

Monomials ζ₀^a ζ₁^b ĉ^i ĉ_χ^j are rewritten with

    ζ₀ζ₁ = ξ,    ζ₁ĉ_χ = (1−κ)ζ₀ĉ + e²,    ζ₀²ĉ = ξĉ_χ + e²ζ₀,    ĉ^pĉ_χ^q = 0,

where ζ₀ may carry a negative exponent once ĉ^p divides the monomial (and
ζ₁ once ĉ_χ^q does).  A cap of None means no cap, which gives BU(1).
"""

from __future__ import annotations

import logging

from . import hpoint
from .errors import IndexRangeError, MalformedExpression, NotDivisible, NotHomogeneous, SpaceMismatch
from .hpoint import HElem
from .ring import Mono, RingElem, Space, Terms, absorb_xi, rewrite

log = logging.getLogger("eqquad.projspace")

Cap = int | None


def _sat(x: int, cap: Cap) -> bool:
    return cap is not None and x >= cap


def _over(x: int, cap: Cap) -> bool:
    return cap is not None and x > cap


def caps(space: Space) -> tuple[Cap, Cap]:
    if space.kind == "bu1":
        return None, None
    if space.kind != "proj":
        raise SpaceMismatch(f"{space} is not a projective space")
    return space.p, space.q


def rewrite_step(mono: Mono, p: Cap, q: Cap) -> list[tuple[HElem, Mono]] | None:
    """One rewrite of ``mono`` in Xℙ^{p|q}; None when it is already normal."""
    a, b, i, j = mono.a, mono.b, mono.i, mono.j
    if _sat(i, p) and _sat(j, q):
        return []
    if (b > 0 and (a > 0 or _sat(i, p))) or (a > 0 and (b > 0 or _sat(j, q))):
        return [(hpoint.XI, mono._replace(a=a - 1, b=b - 1))]
    if b == 0 and i >= 1 and (a >= 2 or _over(i, p)):
        return [
            (hpoint.XI, mono._replace(a=a - 2, i=i - 1, j=j + 1)),
            (hpoint.E2, mono._replace(a=a - 1, i=i - 1)),
        ]
    if a == 0 and j >= 1 and (b >= 2 or _over(j, q)):
        return [
            (hpoint.XI, mono._replace(b=b - 2, i=i + 1, j=j - 1)),
            (hpoint.E2, mono._replace(b=b - 1, j=j - 1)),
        ]
    if a == 0 and b == 1 and j >= 1:
        return [
            (hpoint.ONE_MINUS_KAPPA, mono._replace(a=1, b=0, i=i + 1, j=j - 1)),
            (hpoint.E2, mono._replace(b=0, j=j - 1)),
        ]
    return None


def is_valid(mono: Mono, p: Cap, q: Cap) -> bool:
    """Negative ζ-exponents are allowed only on the divided families."""
    if mono.i < 0 or mono.j < 0:
        return False
    if mono.a < 0 and not _sat(mono.i, p):
        return False
    if mono.b < 0 and not _sat(mono.j, q):
        return False
    return True


def check_valid(terms: Terms, p: Cap, q: Cap, label: str) -> None:
    for mono in terms:
        if not is_valid(mono, p, q):
            raise MalformedExpression(f"{label}: monomial {mono} is not a class of the ring")


def reduce_terms(terms: Terms, p: Cap, q: Cap, strategy: str = "breadth") -> Terms:
    check_valid(terms, p, q, f"Xℙ^{{{p}|{q}}}")
    return rewrite(terms, lambda mono: rewrite_step(mono, p, q), strategy)


def reduce(space: Space, terms: Terms, strategy: str = "breadth") -> RingElem:
    p, q = caps(space)
    return RingElem(space, reduce_terms(terms, p, q, strategy))


def formal_product(x: Terms, y: Terms) -> Terms:
    out = Terms()
    for mx, cx in x.items():
        for my, cy in y.items():
            out = out + Terms.single(mx.times(my), cx * cy)
    return out


def mul(x: RingElem, y: RingElem, strategy: str = "breadth") -> RingElem:
    if x.space != y.space:
        raise SpaceMismatch(f"cannot multiply elements of {x.space} and {y.space}")
    return reduce(x.space, formal_product(x.terms, y.terms), strategy)


def generator(space: Space, mono: Mono, coeff: HElem | int = 1) -> RingElem:
    return reduce(space, Terms.single(mono, coeff))


# ── Staircase bases ────────────────────────────────────────────────────────────
def _staircase_form(p: int, q: int, n: int, i: int, j: int) -> Mono:
    if i == p:
        return Mono(a=i - j - n, i=i, j=j)
    e1 = n - i + j
    if j == q or e1 >= 0:
        return Mono(b=e1, i=i, j=j)
    return Mono(a=-e1, i=i, j=j)


def basis(p: int, q: int, n: int) -> list[Mono]:
    """
    The ℍ-basis of H^{nΩ₁+RO(C₂)}(Xℙ^{p|q}).

    Walks (i, j) from (0, 0), one step per element, keeping the ζ-exponent
    as small as possible; ties step in ĉ.  Saturating i (or j) forces the
    other index and may produce divided classes.
    """
    i = j = 0
    out = [_staircase_form(p, q, n, 0, 0)]
    for _ in range(1, p + q):
        if i == p:
            j += 1
        elif j == q:
            i += 1
        elif n - i + j >= 0:
            # |e − 1| <= |e + 1| exactly when e >= 0
            i += 1
        else:
            j += 1
        out.append(_staircase_form(p, q, n, i, j))
    return out


def express_in_basis(x: RingElem) -> dict[Mono, HElem]:
    """Coefficients of ``x`` over the staircase basis of its coset."""
    p, q = caps(x.space)
    if p is None:
        raise SpaceMismatch("BU(1) has no finite basis")
    cosets = x.cosets()
    if len(cosets) > 1:
        raise NotHomogeneous(f"{x.render()} spans cosets {sorted(cosets)}")
    normal = reduce(x.space, x.terms)
    if not normal.terms:
        return {}
    n = next(iter(cosets))
    members = set(basis(p, q, n))
    out: dict[Mono, HElem] = {}
    for mono, coeff in normal.terms.items():
        if mono not in members:
            raise MalformedExpression(f"normal form produced non-basis monomial {mono}")
        out[mono] = coeff
    return out


# ── ζ-division ─────────────────────────────────────────────────────────────────
def _strip(terms: Terms, which: int, k: int, p: Cap, q: Cap) -> Terms | None:
    out: list[tuple[Mono, HElem]] = []
    for mono, coeff in terms.items():
        cand = mono._replace(a=mono.a - k) if which == 0 else mono._replace(b=mono.b - k)
        if not is_valid(cand, p, q):
            return None
        out.append((cand, coeff))
    return Terms(out)


def divide(x: RingElem, which: int, k: int) -> RingElem:
    """Solve ζ^k·y = x in Xℙ^{p|q} or BU(1), ζ = ζ₀ (which=0) or ζ₁ (which=1)."""
    if which not in (0, 1) or k < 1:
        raise IndexRangeError("divide needs which in {0, 1} and k >= 1")
    p, q = caps(x.space)
    normal = reduce_terms(x.terms, p, q)
    zeta = Terms.single(Mono(a=k) if which == 0 else Mono(b=k))
    for terms in (x.terms, absorb_xi(normal)):
        stripped = _strip(terms, which, k, p, q)
        if stripped is None:
            continue
        y = reduce_terms(stripped, p, q)
        if reduce_terms(formal_product(zeta, y), p, q) == normal:
            return RingElem(x.space, y)
    name = "z0" if which == 0 else "z1"
    raise NotDivisible(f"{x.render()} is not divisible by {name}^{k}")
