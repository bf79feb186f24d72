"""
Gr(2, ℂ^{3|1}) as the quadric XQ⁶ in λ-notation.

ĉ_λ and ĉ_χλ are ĉ_ω and ĉ_χω under the Plücker identification; the
tautological Euler classes are ĉ_γ = m₂ and ĉ_χγ = ζ₁²m₀.  The second half
of the module counts the lines on a cubic surface as the Euler class of
Sym³ of the dual tautological bundle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

import sympy
from sympy.polys.polyfuncs import symmetrize

from . import burnside, hpoint, quadric, restrict
from .burnside import BurnsideElem
from .errors import AmbiguousGrading, InconsistentTargets, MalformedExpression, NotDivisible
from .grading import Grading, from_dims
from .ring import GRASS, Mono, RingElem, Terms, mono_grading

log = logging.getLogger("eqquad.grassmann")

P = 3


# ── C₂-representations ─────────────────────────────────────────────────────────
@dataclass(frozen=True)
class RepC2:
    """ℂ^{nplus|nminus}: nplus trivial lines plus nminus sign lines."""

    nplus: int
    nminus: int

    @property
    def rank(self) -> int:
        return self.nplus + self.nminus

    @property
    def fixed_dim(self) -> int:
        return self.nplus


def sym_power(r: RepC2, k: int) -> RepC2:
    """Sym^k by counting monomials; a monomial is fixed when its sign degree is even."""
    fixed = moved = 0
    for mono in combinations_with_replacement(range(r.rank), k):
        if sum(1 for v in mono if v >= r.nplus) % 2 == 0:
            fixed += 1
        else:
            moved += 1
    return RepC2(fixed, moved)


# π∨ over the two fixed components: ℂ² on Gr(2,3), η ⊕ ℂ^σ on Xℙ²×Xℙ^σ
FIBERS = (RepC2(2, 0), RepC2(1, 1))


def sym3_grading() -> Grading:
    """Equivariant dimension of Sym³(π∨), read off from real fiber dimensions."""
    reps = [sym_power(fiber, 3) for fiber in FIBERS]
    rank = 2 * reps[0].rank
    return from_dims(rank, 2 * reps[0].fixed_dim, 2 * reps[1].fixed_dim)


# ── tautological bundle ────────────────────────────────────────────────────────
def _grass(terms: Terms) -> RingElem:
    return quadric.reduce(GRASS, terms)


def tautological_euler() -> tuple[RingElem, RingElem]:
    """(ĉ_γ, ĉ_χγ) = (m₂, ζ₁²m₀), both in normal form."""
    return _grass(Terms.single(Mono(m=2))), _grass(Terms.single(Mono(b=2, m=0)))


DERIVATION_STEPS = (
    "z1^2*m[0]",
    "z1*(cxl^2 - z0*m[1])",
    "z1*cxl^2 - xi*m[1]",
    # κξ = 0
    "(1-kappa)*z0*cl*cxl + e^2*cxl - (1-kappa)*xi*m[1]",
    "(1-kappa)*z0*cl*cxl + e^2*cxl - (1-kappa)*z0*(cl*cxl - z0*m[2])",
    "(1-kappa)*z0^2*m[2] + e^2*cxl",
    "(1-kappa)*z0^2*cg + e^2*cxl",
)


@dataclass(frozen=True)
class DerivationStep:
    expression: str
    normal_form: str
    holds: bool


def cxg_relation_check(steps: tuple[str, ...] | list[str] | None = None) -> tuple[bool, list[DerivationStep]]:
    """
    Verify the chain computing ĉ_χγ step by step.

    Args:
        steps: Expressions in grass syntax, each claimed equal to the last;
            defaults to DERIVATION_STEPS

    Returns:
        (every step and the end-to-end identity hold, per-step trace)
    """
    from .expr_parser import evaluate

    steps = list(steps or DERIVATION_STEPS)
    trace: list[DerivationStep] = []
    previous: RingElem | None = None
    ok = True
    for text in steps:
        value = evaluate(text, GRASS)
        holds = previous is None or value == previous
        ok = ok and holds
        trace.append(DerivationStep(text, value.render(), holds))
        previous = value
    if ok:
        ok = evaluate("cxg", GRASS) == previous
    log.info("cxg derivation: %d steps, holds=%s", len(steps), ok)
    return ok, trace


# ── the λ-presentation ───────────────────────────────────────────────────────
def presentation_relations() -> list[tuple[str, str, str]]:
    """(family, lhs, rhs) for every relation of the λ-presentation."""
    out = [
        ("zeta product", "z0*z1", "xi"),
        ("euler twist", "z1*cxl", "(1-kappa)*z0*cl + e^2"),
    ]
    for s in range(P):
        out.append(("edge", f"cl^{s}*cxl^{P - 1 - s}", f"z0*m[{s + 1}] + z1*m[{s}]"))
        out.append(("slide", f"cxl*m[{s + 1}]", f"cl*m[{s}]"))
    out.append(("annihilation", "m[3]*m[0]", "0"))
    out.append(("annihilation", "m[2]*m[1]", "0"))
    return out


DIVISIBLE = {
    0: ("m[3]", "cl*m[2]", "cl^2*m[1]", "cl^3*m[0]"),
    1: ("cxl^3*m[3]", "cxl^2*m[2]", "cxl*m[1]", "m[0]"),
}


def presentation_checks(max_power: int = 3) -> list[tuple[str, bool]]:
    """Check the six relation families and the ζ-divisibility facts."""
    from .expr_parser import evaluate

    results: list[tuple[str, bool]] = []
    for family, lhs, rhs in presentation_relations():
        holds = evaluate(lhs, GRASS) == evaluate(rhs, GRASS)
        results.append((f"{family}: {lhs} = {rhs}", holds))
    for which, names in DIVISIBLE.items():
        zeta = "z0" if which == 0 else "z1"
        for text in names:
            x = evaluate(text, GRASS)
            for k in range(1, max_power + 1):
                try:
                    quadric.divide(x, which, k)
                    holds = True
                except NotDivisible:
                    holds = False
                results.append((f"{text} divisible by {zeta}^{k}", holds))
    return results


def m_representatives() -> dict[str, str]:
    return {
        "m[0]": "[Gr(2,3)]*",
        "m[1]": "[Xℙ×Xℙ^{2|1}]*",
        "m[2]": "[Gr(2,ℂ^{2|1})]*",
        "m[3]": "[Xℙ³×Xℙ^σ]*",
    }


# ── Euler class of Sym³(π∨) ────────────────────────────────────────────────────
def chern_root_target(k: int = 3) -> restrict.NoneqQElem:
    """
    e(Sym^k E) for a rank-2 bundle E, pushed into H*(Q⁶).

    The Chern roots of Sym^k are the weights i·x₁ + (k−i)·x₂; their product
    is symmetrized into c₁, c₂, which become c and m₀.
    """
    x1, x2 = sympy.symbols("x1 x2")
    product = sympy.Integer(1)
    for i in range(k + 1):
        product *= i * x1 + (k - i) * x2
    sym, rest, defs = symmetrize(sympy.expand(product), x1, x2, formal=True)
    if rest != 0:
        raise MalformedExpression(f"Euler class of Sym^{k} failed to symmetrize: {rest}")
    s1, s2 = (name for name, _ in defs)
    log.debug("e(Sym^%d) = %s", k, sympy.factor(sym))
    out = restrict.NoneqQElem.build(P, {})
    for (e1, e2), coeff in sympy.Poly(sym, s1, s2).terms():
        piece = restrict.noneq_c(P, e1, int(coeff))
        for _ in range(e2):
            piece = piece * restrict.noneq_m(P, 0)
        out = out + piece
    return out


# π∨ on each fixed component: (c₁, c₂) where it does not split, else its roots
COMPONENT_CHERN = (
    ("chern", (restrict.C, restrict.C**2)),
    ("roots", (restrict.C, sympy.Integer(0))),
)

AMBIENT = RepC2(3, 1)


def _fixed_weights(fiber: RepC2, roots: tuple, k: int = 3) -> sympy.Expr:
    """Product of the weights of Sym^k(fiber) whose sign degree is even."""
    out = sympy.Integer(1)
    for mono in combinations_with_replacement(range(fiber.rank), k):
        if sum(1 for v in mono if v >= fiber.nplus) % 2 == 0:
            out *= sum(roots[v] for v in mono)
    return sympy.expand(out)


def _component_euler(fiber: RepC2, chern: tuple[str, tuple], k: int = 3) -> sympy.Poly:
    x = sympy.symbols("x1 x2")
    product = _fixed_weights(fiber, x, k)
    kind, values = chern
    if kind == "roots":
        expr = product.subs(dict(zip(x, values)))
    else:
        sym, rest, defs = symmetrize(product, *x, formal=True)
        if rest != 0:
            raise MalformedExpression(f"fixed part of Sym^{k} failed to symmetrize: {rest}")
        expr = sym.subs(dict(zip((name for name, _ in defs), values)))
    return restrict.truncate_poly(sympy.Poly(sympy.expand(expr), restrict.C, domain="ZZ"), P)


def _fixed_euler() -> restrict.FixedQElem:
    """Euler class of the fixed subbundle on each fixed component."""
    # on Gr(2,3) all four weights are fixed; the degree-4 class dies in c^3 = 0
    return restrict.fixed_pair(P, *(_component_euler(f, c) for f, c in zip(FIBERS, COMPONENT_CHERN)))


def euler_sym3(trace: list[str] | None = None) -> RingElem:
    """
    The equivariant Euler class of Sym³(π∨) on Gr(2, ℂ^{3|1}).

    The grading pins down one basis monomial; the coefficient in A(C₂) is
    solved from the nonequivariant and fixed-point images.
    """
    note = trace.append if trace is not None else (lambda _msg: None)
    g = sym3_grading()
    note(f"grading of Sym^3(pi dual): {g}")
    candidates = [mono for mono in quadric.basis(P, g.w) if mono_grading(mono, P) == g]
    if len(candidates) != 1:
        raise AmbiguousGrading(f"expected one basis monomial in grading {g}, found {len(candidates)}")
    target = RingElem(GRASS, Terms.single(candidates[0]))
    note(f"basis monomial: {target.render()}")
    rho_target = chern_root_target()
    note(f"nonequivariant target: {rho_target.render()}")
    fixed_target = _fixed_euler()
    note("fixed splitting on Xℙ²×Xℙ^σ: η³ ⊕ η²⊗ℂ^σ ⊕ η ⊕ ℂ^σ, fixed part η³ ⊕ η")
    note(f"fixed-point target: {fixed_target.render()}")
    alpha = restrict.solve_burnside_coeff(target, rho_target, fixed_target)
    note(f"coefficient: {burnside.render(alpha)}")
    log.info("e(Sym^3) = (%s) %s", alpha, target.render())
    return target.scale(hpoint.from_burnside(alpha))


# ── the 27 lines ───────────────────────────────────────────────────────────────
LINE_TYPES = {
    "I": "lines in the trivial plane Xℙ²",
    "II": "lines Xℙ^{1|1}",
    "III": "lines in the sign plane Xℙ^{σ2}",
    "IV": "free pairs C₂×Xℙ²",
}


@dataclass
class LinesReport:
    euler: str
    alpha: BurnsideElem
    counts: dict[str, int]
    c2_set: str
    total: int
    representatives: dict[str, str] = field(default_factory=m_representatives)
    trace: list[str] = field(default_factory=list)


def _c2_set(alpha: BurnsideElem) -> str:
    parts = []
    if alpha.b:
        parts.append(f"{alpha.b}[C₂/e]")
    if alpha.a:
        parts.append(f"{alpha.a}[C₂/C₂]")
    return " + ".join(parts) or "0"


def lines_report(euler: RingElem | None = None, trace: list[str] | None = None) -> LinesReport:
    """Decompose e(Sym³(π∨)) into the four C₂-types of lines."""
    trace = [] if trace is None else trace
    euler = euler if euler is not None else euler_sym3(trace)
    ((_mono, coeff),) = euler.terms.items()
    if set(coeff) != {hpoint.UNIT}:
        raise MalformedExpression(f"Euler class coefficient {coeff} is not in A(C2)")
    alpha = coeff.coeff(hpoint.UNIT)
    fixed_image = restrict.fixed_quadric(euler)
    # Gr(2, ℂ^{0|n}) is the third fixed component; its Euler characteristic is C(n, 2)
    sign_cells = int(sympy.binomial(AMBIENT.nminus, 2))
    if sign_cells:
        raise MalformedExpression("lines in a sign plane of dimension ≥ 2 are not modelled")
    counts = {
        "I": fixed_image.coeffs(0).get(P - 1, 0),
        "II": fixed_image.coeffs(1).get(P - 1, 0),
        "III": sign_cells,
        "IV": alpha.b,
    }
    if counts["I"] + counts["II"] + counts["III"] != burnside.fixed(alpha):
        raise InconsistentTargets(f"fixed lines {counts} do not add up to {burnside.fixed(alpha)}")
    return LinesReport(
        euler=euler.render(),
        alpha=alpha,
        counts=counts,
        c2_set=_c2_set(alpha),
        total=burnside.rho(alpha),
        trace=trace,
    )
