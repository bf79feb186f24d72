import pytest
from hypothesis import given
from hypothesis import strategies as st

from src import hpoint, projspace
from src.errors import IndexRangeError, MalformedExpression, NotDivisible
from src.expr_parser import evaluate
from src.grading import s_index
from src.ring import BU1, Mono, RingElem, Terms, mono_coset, proj


def _listed_basis(p: int, n: int) -> list[Mono]:
    """The explicit bases of H^{nΩ₁+RO(C₂)}(Xℙ^{s|p−s}), s = s_n, written out by hand."""
    if n <= -p:
        return [Mono(a=-n - k, j=k) for k in range(p)]
    if n >= p:
        return [Mono(b=n - k, i=k) for k in range(p)]
    out: list[Mono] = []
    if n >= 0:
        out += [Mono(b=n - k, i=k) for k in range(n + 1)]
        t = 1
        while len(out) < p:
            out += [Mono(a=1, i=n + t, j=t - 1), Mono(i=n + t, j=t)]
            t += 1
    else:
        m = -n
        out += [Mono(a=m - k, j=k) for k in range(m + 1)]
        t = 1
        while len(out) < p:
            out += [Mono(a=1, i=t, j=m + t - 1), Mono(i=t, j=m + t)]
            t += 1
    return out[:p]


@pytest.mark.parametrize("p", range(1, 8))
def test_staircase_matches_listed_bases(p):
    for n in range(-p - 2, p + 3):
        s = s_index(p, n)
        assert projspace.basis(s, p - s, n) == _listed_basis(p, n), (p, n)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(-10, 10))
def test_basis_size_and_coset(p, q, n):
    if p + q == 0:
        return
    basis = projspace.basis(p, q, n)
    assert len(basis) == p + q
    assert len(set(basis)) == p + q
    assert all(mono_coset(mono) == n for mono in basis)
    assert [mono.degree for mono in basis] == list(range(p + q))


@given(st.integers(1, 5), st.integers(0, 5), st.integers(-8, 8))
def test_basis_elements_are_normal(p, q, n):
    for mono in projspace.basis(p, q, n):
        assert projspace.rewrite_step(mono, p, q) is None


def _ev(text, space):
    return evaluate(text, space)


@pytest.mark.parametrize(
    "lhs,rhs",
    [
        ("z0*z1", "xi"),
        ("z1*cxw", "(1-kappa)*z0*cw + e^2"),
        ("z0^2*cw", "xi*cxw + e^2*z0"),
        ("cw^2*cxw", "0"),
        ("z1^2*cxw", "xi*cw + e^2*z1"),
    ],
)
def test_relations_in_proj_2_1(lhs, rhs):
    space = proj(2, 1)
    assert _ev(lhs, space) == _ev(rhs, space)


def test_bu1_has_no_top_relation():
    assert _ev("cw^7*cxw^5", BU1)
    assert _ev("z0*z1", BU1) == _ev("xi", BU1)


def test_express_in_basis():
    space = proj(2, 1)
    x = _ev("z1*cxw", space)
    coeffs = projspace.express_in_basis(x)
    assert coeffs == {Mono(a=1, i=1): hpoint.ONE_MINUS_KAPPA, Mono(): hpoint.E2}


def test_divide_top_class():
    space = proj(2, 1)
    y = projspace.divide(_ev("cw^2", space), 0, 1)
    assert y.terms == Terms.single(Mono(a=-1, i=2))
    assert y.render() == "z0^-1 cw^2"
    assert projspace.mul(_ev("z0", space), y) == _ev("cw^2", space)


def test_divide_by_xi():
    space = proj(2, 1)
    assert projspace.divide(_ev("xi*cw", space), 1, 1) == _ev("z0*cw", space)


def test_divide_failures():
    space = proj(2, 1)
    with pytest.raises(NotDivisible):
        projspace.divide(_ev("cw", space), 0, 1)
    with pytest.raises(IndexRangeError):
        projspace.divide(_ev("cw", space), 2, 1)


def test_invalid_negative_exponent():
    with pytest.raises(MalformedExpression):
        projspace.reduce(proj(2, 1), Terms.single(Mono(a=-1, i=1)))


def test_generator_reduces():
    assert projspace.generator(proj(1, 1), Mono(i=1, j=1)) == RingElem(proj(1, 1), Terms())
