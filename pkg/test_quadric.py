import random

import pytest

from src import quadric
from src.errors import IndexRangeError, MalformedExpression, NotDivisible, UnreducedMProduct
from src.expr_parser import evaluate
from src.grading import Grading
from src.ring import Mono, RingElem, Terms, mono_coset, mono_grading
from src.ring import quadric as quadric_space


def _ev(text: str, p: int) -> RingElem:
    return evaluate(text, quadric_space(p))


def _elem(mono: Mono, p: int) -> RingElem:
    return RingElem(quadric_space(p), Terms.single(mono))


@pytest.mark.parametrize("p", range(1, 7))
def test_basis_shape(p):
    for n in range(-2 * p, 2 * p + 1):
        basis = quadric.basis(p, n)
        assert len(basis) == 2 * p
        assert len(set(basis)) == 2 * p
        assert all(mono_coset(mono, p) == n for mono in basis)
        assert [mono.m for mono in basis[p:]] == [basis[p].m] * p


@pytest.mark.parametrize("p", range(1, 6))
def test_basis_monomials_are_normal(p):
    for n in range(-p - 2, p + 3):
        for mono in quadric.basis(p, n):
            assert quadric.reduce_terms(Terms.single(mono), p) == Terms.single(mono), (p, n, mono)


def test_basis_p3_coset2():
    assert quadric.basis(3, 2) == [
        Mono(b=2),
        Mono(b=1, i=1),
        Mono(i=2),
        Mono(b=1, m=2),
        Mono(i=1, m=2),
        Mono(a=-1, i=1, j=1, m=2),
    ]
    assert [g.u for g in quadric.basis_gradings(3, 2)] == [0, 2, 4, 4, 6, 8]
    assert all(g.s == 0 and g.w == 2 for g in quadric.basis_gradings(3, 2))


def test_ro2_lattice_points_even():
    points = sorted(point for _, point in quadric.ro2_basis(4))
    assert points == [(0, 0), (0, 2), (2, 2), (2, 4), (4, 2), (4, 4), (6, 4), (6, 6)]
    assert (Mono(m=2), (4, 2)) in quadric.ro2_basis(4)


def test_ro2_lattice_points_odd():
    basis = quadric.ro2_basis(5)
    points = sorted(point for _, point in basis)
    assert points == [(0, 0), (0, 2), (2, 2), (2, 4), (4, 4), (4, 4), (6, 4), (6, 6), (8, 6), (8, 8)]
    doubled = {mono for mono, point in basis if point == (4, 4)}
    assert doubled == {Mono(i=2, j=2), Mono(b=1, m=2)}


def test_m_gradings():
    assert mono_grading(Mono(m=2), 4) == Grading(4, 2, 0)
    assert mono_grading(Mono(a=-1, i=1, j=1, m=2), 3) == Grading(8, 0, 2)


@pytest.mark.parametrize("p", range(1, 6))
def test_annihilating_pairs(p):
    for s in range(p + 1):
        assert not _ev(f"m[{s}]*m[{p - s}]", p)


@pytest.mark.parametrize("p", range(1, 6))
def test_edge_and_slide_relations(p):
    for s in range(p):
        assert _ev(f"cw^{s}*cxw^{p - s - 1}", p) == _ev(f"z0*m[{s + 1}] + z1*m[{s}]", p)
        assert _ev(f"cxw*m[{s + 1}]", p) == _ev(f"cw*m[{s}]", p)


def test_products_p5():
    assert _ev("m[2]^2", 5) == _ev("z1^-1*cw^2*cxw^2*m[2]", 5)
    assert _ev("m[3]^2", 5) == _ev("z0^-1*cw^2*cxw^2*m[3]", 5)
    assert _ev("(z1*m[2])^2", 5) == _ev("(1-kappa)*z0*cw^3*cxw*m[2] + e^2*cw^2*cxw*m[2]", 5)


def test_middle_square_vanishes_for_even_p():
    for p in (2, 4, 6):
        assert not _ev(f"m[{p // 2}]^2", p)


def test_alternative_basis_at_double_point():
    assert _ev("cw^2*cxw^2", 5) == _ev("z0*m[3] + z1*m[2]", 5)
    assert _ev("z0*cw^2*cxw", 4) == _ev("z0^2*m[3] + xi*m[2]", 4)


def test_express_in_basis():
    x = _ev("(z1*m[2])^2", 5)
    coeffs = quadric.express_in_basis(x)
    assert set(coeffs) <= set(quadric.basis(5, x.cosets().pop()))


def _random_pairs(p: int, count: int, seed: int) -> list[tuple[Mono, Mono]]:
    rng = random.Random(seed)
    pool = [mono for n in range(-p - 1, p + 2) for mono in quadric.basis(p, n)]
    return [(rng.choice(pool), rng.choice(pool)) for _ in range(count)]


@pytest.mark.parametrize("p", range(1, 5))
def test_multiplication_is_commutative_and_strategy_free(p):
    for x, y in _random_pairs(p, 500, seed=p):
        ex, ey = _elem(x, p), _elem(y, p)
        xy = quadric.mul(ex, ey)
        if xy:
            assert xy.grading == mono_grading(x, p) + mono_grading(y, p)
        assert xy == quadric.mul(ey, ex), (x, y)
        assert xy == quadric.mul(ex, ey, strategy="depth"), (x, y)


@pytest.mark.parametrize("p", range(2, 5))
def test_multiplication_is_associative(p):
    rng = random.Random(100 + p)
    pool = quadric.basis(p, 0) + quadric.basis(p, 1) + quadric.basis(p, -1)
    for _ in range(60):
        x, y, z = (_elem(rng.choice(pool), p) for _ in range(3))
        assert quadric.mul(quadric.mul(x, y), z) == quadric.mul(x, quadric.mul(y, z))


def test_lazy_and_eager_agree():
    for text in ("(z1*m[2])^2", "m[3]*cw^2*z1", "(cw + cxw)^3*m[1]", "z0*z1*m[4] - xi*m[4]"):
        assert evaluate(text, quadric_space(5), "eager") == evaluate(text, quadric_space(5), "lazy")


def test_divide_divided_class():
    x = _ev("cw*cxw*m[2]", 3)
    y = quadric.divide(x, 0, 1)
    assert y.terms == Terms.single(Mono(a=-1, i=1, j=1, m=2))
    assert quadric.mul(_ev("z0", 3), y) == x


@pytest.mark.parametrize("p", range(1, 5))
def test_divide_inverts_zeta_multiplication(p):
    for s in range(p + 1):
        m = _ev(f"m[{s}]", p)
        for which, name in ((0, "z0"), (1, "z1")):
            product = quadric.mul(_ev(name, p), m)
            assert quadric.divide(product, which, 1) == m


def test_divide_failures():
    with pytest.raises(NotDivisible):
        quadric.divide(_ev("1", 3), 0, 1)
    with pytest.raises(NotDivisible):
        quadric.divide(_ev("cw", 3), 1, 1)
    with pytest.raises(IndexRangeError):
        quadric.divide(_ev("cw", 3), 0, 0)


def test_rejects_missing_m_class():
    with pytest.raises(IndexRangeError):
        quadric.reduce(quadric_space(3), Terms.single(Mono(m=5)))
    with pytest.raises(MalformedExpression):
        quadric.reduce(quadric_space(3), Terms.single(Mono(a=-1)))
    with pytest.raises(IndexRangeError):
        quadric.m_class(3, 4)


def test_formal_m_product_is_an_engine_error():
    with pytest.raises(UnreducedMProduct) as info:
        Mono(i=1, m=1).times(Mono(j=1, m=2))
    assert info.value.exit_code == 4
    assert "m[1]" in str(info.value)
    assert Mono(i=1, m=1).times(Mono(a=1)) == Mono(a=1, i=1, m=1)
