import pytest
from hypothesis import given
from hypothesis import strategies as st

from src import hpoint
from src.burnside import BurnsideElem
from src.errors import OutOfScopeRegion
from src.grading import Grading
from src.hpoint import (
    E2,
    G,
    KAPPA,
    ONE,
    ONE_MINUS_KAPPA,
    XI,
    ZERO,
    e_power,
    from_burnside,
    from_symbol,
    group_at,
    iota,
    sym_e,
    sym_exi,
    sym_negkappa,
    sym_tauneg,
    sym_xi,
    tau_power,
)

E = e_power(1)
SAMPLES = [
    ONE,
    G,
    KAPPA,
    ONE_MINUS_KAPPA,
    XI,
    XI * XI,
    E,
    E2,
    E * XI,
    from_symbol(sym_negkappa(1)),
    from_symbol(sym_negkappa(2)),
    from_symbol(sym_tauneg(2)),
    from_symbol(sym_tauneg(3)),
    from_symbol(sym_tauneg(4)),
]
samples = st.sampled_from(SAMPLES)


def test_products():
    assert G * XI == XI * 2
    assert G * E == ZERO
    assert E * XI * 2 == ZERO
    assert KAPPA * XI == ZERO
    assert KAPPA * KAPPA == KAPPA * 2
    for m in (1, 2, 5):
        assert e_power(m) * from_symbol(sym_negkappa(m)) == KAPPA
    negk = from_symbol(sym_negkappa(1))
    assert negk * negk == from_symbol(sym_negkappa(2), 2)
    assert E2 * negk == E * 2


def test_tau_powers():
    assert tau_power(0) == G
    assert tau_power(2) == XI * 2
    assert tau_power(1) == ZERO
    assert tau_power(-1) == ZERO
    assert tau_power(-3) == from_symbol(sym_tauneg(3))
    assert hpoint.tau(iota(2) + iota(0)) == XI * 2 + G


def test_tau_frobenius():
    t2 = from_symbol(sym_tauneg(2))
    assert XI * t2 == G
    assert XI * XI * t2 == XI * 2
    assert XI * from_symbol(sym_tauneg(4)) == t2
    assert G * t2 == t2 * 2
    assert from_symbol(sym_tauneg(3)) * 2 == ZERO


@given(samples, samples, samples)
def test_commutative_and_associative(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)


def test_rho_and_fixed_maps():
    assert hpoint.rho(XI) == iota(2)
    assert hpoint.rho(G) == iota(0, 2)
    assert hpoint.rho(KAPPA) == hpoint.IotaElem()
    assert hpoint.rho(from_symbol(sym_tauneg(2))) == iota(-2, 2)
    assert hpoint.rho(E) == hpoint.IotaElem()
    assert hpoint.fixed(KAPPA) == 2
    assert hpoint.fixed(G) == 0
    assert hpoint.fixed(E) == 1
    assert hpoint.fixed(XI) == 0
    assert hpoint.fixed(ONE_MINUS_KAPPA) == -1


@given(samples, samples)
def test_rho_is_multiplicative(x, y):
    assert hpoint.rho(x * y) == hpoint.rho(x) * hpoint.rho(y)


@pytest.mark.parametrize(
    "g,kind,generator",
    [
        (Grading(0, 0, 0), "A(C2)", hpoint.UNIT),
        (Grading(0, 3, 0), "Z", sym_e(3)),
        (Grading(0, -2, 0), "Z", sym_negkappa(2)),
        (Grading(-4, 4, 0), "Z", sym_xi(2)),
        (Grading(-4, 5, 0), "Z/2", sym_exi(1, 2)),
        (Grading(3, -3, 0), "Z/2", sym_tauneg(3)),
        (Grading(2, -2, 0), "Z", sym_tauneg(2)),
        (Grading(1, -1, 0), "0", None),
        (Grading(1, 1, 0), "0", None),
        (Grading(-3, 4, 0), "0", None),
    ],
)
def test_group_at(g, kind, generator):
    info = group_at(g)
    assert info.kind == kind
    assert info.generator == generator


@pytest.mark.parametrize("g", [Grading(3, -1, 0), Grading(0, 0, 1)])
def test_group_at_out_of_region(g):
    with pytest.raises(OutOfScopeRegion):
        group_at(g)


def test_symbol_gradings_match_chart():
    for sym in (sym_e(2), sym_xi(3), sym_exi(2, 1), sym_negkappa(4), sym_tauneg(5)):
        assert group_at(sym.grading).generator == sym


def test_render():
    assert sym_e(2).render() == "e^2"
    assert sym_xi(1).render() == "xi"
    assert sym_exi(1, 2).render() == "e xi^2"
    assert sym_negkappa(3).render() == "e^-3 kappa"
    assert sym_tauneg(4).render() == "tau(-4)"
    assert ONE_MINUS_KAPPA.render() == "1-kappa"
    assert ONE_MINUS_KAPPA.render_as_coefficient() == "(1-kappa)"
    assert G.render_as_coefficient() == "g"
    assert from_burnside(BurnsideElem(3, 12)).render_as_coefficient() == "(3 + 12g)"
    assert (E2 + XI).render() == "e^2 + xi"
    assert ZERO.render() == "0"


def test_unit_integer():
    assert ONE.is_unit_integer() == 1
    assert ZERO.is_unit_integer() == 0
    assert G.is_unit_integer() is None
    assert XI.is_unit_integer() is None


def test_torsion_coefficients_reduce():
    assert from_symbol(sym_exi(1, 1), 3) == from_symbol(sym_exi(1, 1))
    with pytest.raises(TypeError):
        hpoint.HElem({sym_e(1): BurnsideElem(1, 1)})


@given(samples, st.integers(-6, 6))
def test_frobenius_on_samples(x, k):
    assert x * tau_power(k) == hpoint.tau(hpoint.rho(x) * iota(k))


@given(samples, samples)
def test_fixed_is_multiplicative(x, y):
    assert hpoint.fixed(x * y) == hpoint.fixed(x) * hpoint.fixed(y)


@pytest.mark.parametrize("k", range(-6, 7))
def test_rho_tau_is_trace(k):
    # ρτ(ι^k) = ι^k + (−ι)^k
    assert hpoint.rho(tau_power(k)) == iota(k, 1 + (-1) ** k)


def test_odd_transfer_restricts_to_zero():
    t3 = from_symbol(sym_tauneg(3))
    assert hpoint.rho(t3) == hpoint.IotaElem()
    assert hpoint.rho(t3 + from_symbol(sym_tauneg(2))) == iota(-2, 2)
    assert hpoint.tau(hpoint.rho(t3)) == ZERO


def _chart_table() -> dict[tuple[int, int], object]:
    table = {(0, 0): hpoint.UNIT}
    for n in range(1, 17):
        table[(0, n)] = sym_e(n)
        table[(0, -n)] = sym_negkappa(n)
        table[(-2 * n, 2 * n)] = sym_xi(n)
        if n >= 2:
            table[(n, -n)] = sym_tauneg(n)
        for a in range(1, 17):
            table[(-2 * n, a + 2 * n)] = sym_exi(a, n)
    return table


def test_group_at_sweep():
    table = _chart_table()
    for u in range(-8, 9):
        for s in range(-8, 9):
            g = Grading(u, s, 0)
            if u > 0 and s < 0 and s != -u:
                with pytest.raises(OutOfScopeRegion):
                    group_at(g)
                continue
            info = group_at(g)
            sym = table.get((u, s))
            assert info.generator == sym, g
            if sym is None:
                assert info.kind == "0", g
            elif sym == hpoint.UNIT:
                assert info.kind == "A(C2)"
            else:
                assert info.kind == ("Z/2" if sym.torsion else "Z"), g
                assert sym.grading == g
