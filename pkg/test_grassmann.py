import pytest
import sympy

from src import grassmann, restrict
from src.burnside import BurnsideElem
from src.expr_parser import evaluate
from src.grading import Grading
from src.grassmann import RepC2, sym_power
from src.ring import GRASS, Mono, Terms


def test_symmetric_powers():
    assert sym_power(RepC2(2, 0), 3) == RepC2(4, 0)
    assert sym_power(RepC2(1, 1), 3) == RepC2(2, 2)
    assert sym_power(RepC2(1, 1), 2) == RepC2(2, 1)


def test_sym3_grading():
    assert grassmann.sym3_grading() == Grading(8, 0, 2)


def test_tautological_classes():
    cg, cxg = grassmann.tautological_euler()
    assert cg == evaluate("m[2]", GRASS)
    assert cxg == evaluate("z1^2*m[0]", GRASS)
    assert cxg == evaluate("(1-kappa)*z0^2*m[2] + e^2*cxl", GRASS)


def test_cxg_derivation_holds():
    ok, steps = grassmann.cxg_relation_check()
    assert ok
    assert len(steps) == len(grassmann.DERIVATION_STEPS)
    assert all(step.holds for step in steps)


def test_perturbed_derivation_fails():
    steps = list(grassmann.DERIVATION_STEPS)
    steps[-1] = "(1-kappa)*z0^2*cg + 2*e^2*cxl"
    ok, trace = grassmann.cxg_relation_check(steps)
    assert not ok
    assert not trace[-1].holds
    assert all(step.holds for step in trace[:-1])


def test_presentation():
    failed = [name for name, holds in grassmann.presentation_checks() if not holds]
    assert failed == []


def test_chern_root_target():
    assert grassmann.chern_root_target() == restrict.NoneqQElem.build(3, {(2, 0): 27})


def test_euler_class():
    trace: list[str] = []
    euler = grassmann.euler_sym3(trace)
    assert euler.terms.monomials() == [Mono(a=-1, i=1, j=1, m=2)]
    assert euler.render() == "(3 + 12g) z0^-1 cl cxl m[2]"
    assert euler.grading == Grading(8, 0, 2)
    assert any("27 c^2 m0" in line for line in trace)
    assert evaluate("(3 + 12g) z0^-1 cl cxl m[2]", GRASS) == euler


def test_euler_images():
    euler = grassmann.euler_sym3()
    assert restrict.rho_quadric(euler) == restrict.NoneqQElem.build(3, {(2, 0): 27})
    assert restrict.fixed_quadric(euler) == restrict.fixed_pair(3, {}, {2: 3})


def test_fixed_euler_is_computed_per_component():
    assert grassmann._fixed_euler() == restrict.fixed_pair(3, {}, {2: 3})
    c = restrict.C
    sign_split = grassmann._component_euler(RepC2(1, 1), ("roots", (c, sympy.Integer(0))))
    assert sign_split == restrict.truncate_poly({2: 3}, 3)
    # all four weights of Sym³ of a rank-2 trivial fiber survive and die in c³ = 0
    assert grassmann._component_euler(RepC2(2, 0), ("chern", (c, c**2))).is_zero


def test_component_euler_chern_and_roots_agree():
    c = restrict.C
    by_roots = grassmann._component_euler(RepC2(2, 0), ("roots", (c, 2 * c)), k=1)
    by_chern = grassmann._component_euler(RepC2(2, 0), ("chern", (3 * c, 2 * c**2)), k=1)
    assert by_roots == by_chern == restrict.truncate_poly({2: 2}, 3)


def test_lines_report():
    report = grassmann.lines_report()
    assert report.alpha == BurnsideElem(3, 12)
    assert report.counts == {"I": 0, "II": 3, "III": 0, "IV": 12}
    assert report.c2_set == "12[C₂/e] + 3[C₂/C₂]"
    assert report.total == 27
    assert sum(report.counts.values()) + report.counts["IV"] == 27
    assert set(report.representatives) == {"m[0]", "m[1]", "m[2]", "m[3]"}
    assert report.trace
    assert report.counts["I"] + report.counts["II"] + report.counts["III"] == 3


def test_lines_report_rejects_non_burnside_coefficient():
    from src.errors import MalformedExpression
    from src.hpoint import XI
    from src.ring import RingElem

    bogus = RingElem(GRASS, Terms.single(Mono(a=-1, i=1, j=1, m=2), XI))
    with pytest.raises(MalformedExpression):
        grassmann.lines_report(bogus)
