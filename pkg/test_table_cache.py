import json
import logging

from src import __version__, quadric
from src.burnside import BurnsideElem
from src.expr_parser import evaluate
from src.hpoint import from_burnside, from_symbol, sym_exi
from src.ring import Mono, Terms
from src.ring import quadric as quadric_space
from src.table_cache import TableCache, decode_terms, encode_terms

SPACE = quadric_space(3)


def _compute(x, y):
    return quadric.mono_product(3, x, y)


def test_memoizes_products():
    calls = []

    def compute(x, y):
        calls.append((x, y))
        return _compute(x, y)

    table = TableCache(SPACE, compute)
    x, y = Mono(m=1), Mono(b=1, m=2)
    first = table.product(x, y)
    assert table.product(x, y) == first
    assert len(calls) == 1
    assert (table.hits, table.misses) == (1, 1)


def test_coefficients_survive_encoding():
    terms = Terms(
        [
            (Mono(a=-1, i=1, j=1, m=2), from_burnside(BurnsideElem(3, 12))),
            (Mono(i=2), from_symbol(sym_exi(1, 2))),
        ]
    )
    assert decode_terms(json.loads(json.dumps(encode_terms(terms)))) == terms


def test_save_and_reload(tmp_path):
    path = tmp_path / "products.json"
    table = TableCache(SPACE, _compute, path)
    value = table.product(Mono(m=1), Mono(m=2))
    table.save()
    assert path.is_file()
    assert not list(tmp_path.glob(".products-*"))

    fresh = TableCache(SPACE, _compute, path)
    assert fresh.load()
    assert fresh.product(Mono(m=1), Mono(m=2)) == value
    assert fresh.hits == 1


def test_stale_version_is_discarded(tmp_path, caplog):
    path = tmp_path / "products.json"
    table = TableCache(SPACE, _compute, path)
    table.product(Mono(m=1), Mono(m=1))
    table.save()
    data = json.loads(path.read_text())
    data["engine_version"] = "0.0.0"
    path.write_text(json.dumps(data))

    fresh = TableCache(SPACE, _compute, path)
    with caplog.at_level(logging.WARNING, logger="eqquad.table_cache"):
        assert not fresh.load()
    assert fresh.entries == {}
    assert "discarding" in caplog.text


def test_wrong_entry_is_discarded(tmp_path):
    path = tmp_path / "products.json"
    key = "0,0,0,0,1|0,0,0,0,1"
    path.write_text(
        json.dumps({"engine_version": __version__, "space": SPACE.tag, "entries": {key: encode_terms(Terms.single(Mono(i=5)))}})
    )
    assert not TableCache(SPACE, _compute, path).load()


def test_unreadable_file_is_discarded(tmp_path):
    path = tmp_path / "products.json"
    path.write_text("{not json")
    assert not TableCache(SPACE, _compute, path).load()


def test_warm_and_cold_agree(tmp_path):
    cold = TableCache.for_space(SPACE, str(tmp_path))
    exprs = ["(z1*m[1])^2", "m[2]*m[2]*cw", "(cw + z1*m[0])^3"]
    first = [evaluate(text, SPACE, table=cold) for text in exprs]
    cold.save()

    warm = TableCache.for_space(SPACE, str(tmp_path))
    assert warm.entries
    second = [evaluate(text, SPACE, table=warm) for text in exprs]
    plain = [evaluate(text, SPACE) for text in exprs]
    assert first == second == plain
    assert warm.hits > 0
