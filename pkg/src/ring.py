"""
Shared vocabulary for the graded rings: space descriptors, generator
monomials, ℍ-linear combinations of monomials and the rewriting driver.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, NamedTuple

from . import hpoint
from .errors import NotHomogeneous, RewriteLoopError, SpaceMismatch, UnreducedMProduct, UsageError
from .grading import CHI_OMEGA, OMEGA, OMEGA0, OMEGA1, Grading, nu
from .hpoint import HElem

log = logging.getLogger("eqquad.ring")

REWRITE_LIMIT = 200_000


# ── Spaces ─────────────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class Space:
    """
    An ambient space.

    kind is one of "proj" (Xℙ^{p|q}), "bu1", "quadric" (XQ^{2p}),
    "grass" (Gr(2, ℂ^{3|1}) = XQ⁶ with λ-names), "noneq" (the
    nonequivariant quadric ring) or "point" (ℍ alone).
    """

    kind: str
    p: int | None = None
    q: int | None = None

    @property
    def tag(self) -> str:
        if self.kind == "proj":
            return f"proj:{self.p}|{self.q}"
        if self.kind in ("quadric", "noneq"):
            return f"{self.kind}:{self.p}"
        if self.kind == "grass":
            return "grass:2|3+1"
        return self.kind

    @property
    def is_quadric(self) -> bool:
        return self.kind in ("quadric", "grass")

    @property
    def is_projective(self) -> bool:
        return self.kind in ("proj", "bu1")

    @property
    def lambda_names(self) -> bool:
        return self.kind == "grass"

    def __str__(self) -> str:
        return self.tag


BU1 = Space("bu1")
POINT = Space("point")
GRASS = Space("grass", 3)


def proj(p: int, q: int) -> Space:
    if p < 0 or q < 0 or p + q < 1:
        raise UsageError(f"projective space needs p, q >= 0 and p + q >= 1, got {p}|{q}")
    return Space("proj", p, q)


def quadric(p: int) -> Space:
    if p < 1:
        raise UsageError(f"quadric needs p >= 1, got {p}")
    return Space("quadric", p)


def noneq(p: int) -> Space:
    if p < 1:
        raise UsageError(f"quadric needs p >= 1, got {p}")
    return Space("noneq", p)


_SPACE_RE = re.compile(
    r"^(?:proj:(\d+)\|(\d+)|quadric:(\d+)|noneq:(\d+)|(grass)(?::2\|3\+1)?|(bu1)|(point))$"
)


def parse_space(text: str) -> Space:
    match = _SPACE_RE.match(text.strip().replace(" ", ""))
    if match is None:
        raise UsageError(
            f"unknown space {text!r}; expected proj:p|q, quadric:p, grass:2|3+1, noneq:p, bu1 or point"
        )
    pp, pq, qp, np_, grass, bu1, point = match.groups()
    if pp is not None:
        return proj(int(pp), int(pq))
    if qp is not None:
        return quadric(int(qp))
    if np_ is not None:
        return noneq(int(np_))
    if grass:
        return GRASS
    if bu1:
        return BU1
    return POINT


# ── Monomials ──────────────────────────────────────────────────────────────────
class Mono(NamedTuple):
    """ζ₀^a ζ₁^b ĉ_ω^i ĉ_χω^j, times m_m when m is set."""

    a: int = 0
    b: int = 0
    i: int = 0
    j: int = 0
    m: int | None = None

    def times(self, other: Mono) -> Mono:
        if self.m is not None and other.m is not None:
            raise UnreducedMProduct(f"formal product of m[{self.m}] and m[{other.m}] needs the m-product table")
        return Mono(
            self.a + other.a,
            self.b + other.b,
            self.i + other.i,
            self.j + other.j,
            self.m if self.m is not None else other.m,
        )

    @property
    def degree(self) -> int:
        return self.i + self.j


ONE_MONO = Mono()


def mono_grading(mono: Mono, p: int | None = None) -> Grading:
    g = mono.a * OMEGA0 + mono.b * OMEGA1 + mono.i * OMEGA + mono.j * CHI_OMEGA
    if mono.m is not None:
        g = g + nu(p, mono.m)
    return g


def mono_coset(mono: Mono, p: int | None = None) -> int:
    n = mono.b + mono.i - mono.a - mono.j
    if mono.m is not None:
        n += 2 * mono.m - p
    return n


def _factor(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


def render_mono(mono: Mono, space: Space | None = None) -> str:
    lam = space is not None and space.lambda_names
    names = ("z0", "z1", "cl" if lam else "cw", "cxl" if lam else "cxw")
    parts = [_factor(n, k) for n, k in zip(names, mono[:4]) if k]
    if mono.m is not None:
        parts.append(f"m[{mono.m}]")
    return " ".join(parts) or "1"


def order_key(mono: Mono) -> tuple:
    return (mono.m is not None, mono.m or 0, -mono.degree, -mono.i, -mono.a, -mono.b)


# ── ℍ-linear combinations ──────────────────────────────────────────────────────
class Terms:
    """Immutable mapping monomial → nonzero ℍ coefficient."""

    __slots__ = ("_d",)

    def __init__(self, items: Iterable[tuple[Mono, HElem]] | dict[Mono, HElem] | None = None):
        self._d: dict[Mono, HElem] = {}
        source = items.items() if isinstance(items, dict) else (items or ())
        for mono, coeff in source:
            _accumulate(self._d, mono, coeff)

    @classmethod
    def single(cls, mono: Mono, coeff: HElem | int = 1) -> Terms:
        if isinstance(coeff, int):
            coeff = hpoint.from_int(coeff)
        return cls([(mono, coeff)])

    @classmethod
    def scalar(cls, coeff: HElem) -> Terms:
        return cls([(ONE_MONO, coeff)])

    def items(self) -> list[tuple[Mono, HElem]]:
        return sorted(self._d.items(), key=lambda kv: order_key(kv[0]))

    def monomials(self) -> list[Mono]:
        return sorted(self._d, key=order_key)

    def coeff(self, mono: Mono) -> HElem:
        return self._d.get(mono, hpoint.ZERO)

    def __iter__(self) -> Iterator[Mono]:
        return iter(self.monomials())

    def __len__(self) -> int:
        return len(self._d)

    def __bool__(self) -> bool:
        return bool(self._d)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Terms) and self._d == other._d

    def __hash__(self) -> int:
        return hash(frozenset(self._d.items()))

    def __add__(self, other: Terms) -> Terms:
        out = Terms(self._d)
        for mono, coeff in other._d.items():
            _accumulate(out._d, mono, coeff)
        return out

    def __neg__(self) -> Terms:
        return Terms({mono: -c for mono, c in self._d.items()})

    def __sub__(self, other: Terms) -> Terms:
        return self + (-other)

    def scale(self, h: HElem | int) -> Terms:
        if isinstance(h, int):
            h = hpoint.from_int(h)
        return Terms((mono, c * h) for mono, c in self._d.items())

    def __repr__(self) -> str:
        return f"Terms({render_terms(self)})"


def _accumulate(d: dict[Mono, HElem], mono: Mono, coeff: HElem) -> None:
    total = d[mono] + coeff if mono in d else coeff
    if total:
        d[mono] = total
    else:
        d.pop(mono, None)


def render_terms(terms: Terms, space: Space | None = None) -> str:
    if not terms:
        return "0"
    out = ""
    for mono, coeff in terms.items():
        ms = render_mono(mono, space)
        n = coeff.is_unit_integer()
        if mono == ONE_MONO:
            piece = coeff.render()
        elif n == 1:
            piece = ms
        elif n == -1:
            piece = f"-{ms}"
        else:
            piece = f"{coeff.render_as_coefficient()} {ms}"
        if not out:
            out = piece
        elif piece.startswith("-"):
            out += f" - {piece[1:]}"
        else:
            out += f" + {piece}"
    return out


def absorb_xi(terms: Terms) -> Terms:
    """Rewrite ξ^r-coefficients as ζ₀^rζ₁^r on the monomial."""
    out: list[tuple[Mono, HElem]] = []
    for mono, coeff in terms.items():
        for sym, c in coeff.items():
            r = sym.b if sym.kind in (hpoint.Kind.XI, hpoint.Kind.EXI) else 0
            if r == 0:
                out.append((mono, hpoint.HElem({sym: c})))
                continue
            rest = hpoint.from_int(c) if sym.kind is hpoint.Kind.XI else hpoint.from_symbol(hpoint.sym_e(sym.a), c)
            out.append((mono._replace(a=mono.a + r, b=mono.b + r), rest))
    return Terms(out)


# ── Elements ───────────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class RingElem:
    space: Space
    terms: Terms

    def _check(self, other: RingElem) -> None:
        if self.space != other.space:
            raise SpaceMismatch(f"cannot combine elements of {self.space} and {other.space}")

    def __add__(self, other: RingElem) -> RingElem:
        self._check(other)
        return RingElem(self.space, self.terms + other.terms)

    def __sub__(self, other: RingElem) -> RingElem:
        self._check(other)
        return RingElem(self.space, self.terms - other.terms)

    def __neg__(self) -> RingElem:
        return RingElem(self.space, -self.terms)

    def scale(self, h: HElem | int) -> RingElem:
        return RingElem(self.space, self.terms.scale(h))

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def p(self) -> int | None:
        return self.space.p

    def term_gradings(self) -> set[Grading]:
        p = self.space.p if self.space.is_quadric else None
        out: set[Grading] = set()
        for mono, coeff in self.terms.items():
            base = mono_grading(mono, p)
            out.update(base + g for g in coeff.gradings)
        return out

    @property
    def grading(self) -> Grading | None:
        """Grading of a homogeneous element; None for zero."""
        gradings = self.term_gradings()
        if not gradings:
            return None
        if len(gradings) > 1:
            raise NotHomogeneous(f"{self.render()} spans gradings {sorted(map(str, gradings))}")
        return next(iter(gradings))

    def cosets(self) -> set[int]:
        p = self.space.p if self.space.is_quadric else None
        return {mono_coset(mono, p) for mono in self.terms}

    def render(self) -> str:
        return render_terms(self.terms, self.space)

    def __str__(self) -> str:
        return self.render()


# ── Rewriting driver ───────────────────────────────────────────────────────────
Step = Callable[[Mono], "list[tuple[HElem, Mono]] | None"]


def rewrite(terms: Terms, step: Step, strategy: str = "breadth") -> Terms:
    """
    Apply a monomial rewrite step until every monomial is terminal.

    Args:
        terms: Starting combination
        step: Returns None for a terminal monomial, else its replacement
        strategy: "breadth" rewrites whole generations with early
            cancellation; "depth" drives one monomial at a time to the end

    Returns:
        The combination over terminal monomials
    """
    if strategy == "depth":
        return _rewrite_depth(terms, step)
    done: dict[Mono, HElem] = {}
    current = dict(terms.items())
    rounds = 0
    while current:
        rounds += 1
        if rounds > REWRITE_LIMIT:
            raise RewriteLoopError("rewriting did not terminate")
        nxt: dict[Mono, HElem] = {}
        for mono, coeff in current.items():
            out = step(mono)
            if out is None:
                _accumulate(done, mono, coeff)
                continue
            for h, image in out:
                _accumulate(nxt, image, coeff * h)
        current = nxt
    log.debug("rewrite finished after %d rounds, %d terms", rounds, len(done))
    return Terms(done)


def _rewrite_depth(terms: Terms, step: Step) -> Terms:
    done: dict[Mono, HElem] = {}
    stack = list(reversed(terms.items()))
    steps = 0
    while stack:
        steps += 1
        if steps > REWRITE_LIMIT * 10:
            raise RewriteLoopError("rewriting did not terminate")
        mono, coeff = stack.pop()
        if not coeff:
            continue
        out = step(mono)
        if out is None:
            _accumulate(done, mono, coeff)
            continue
        for h, image in reversed(out):
            stack.append((image, coeff * h))
    return Terms(done)
