import pytest

from src import diagram, identities
from src.markdown_report import write_identity_report


def test_suite_holds():
    trace: list[str] = []
    checks = identities.run_suite(max_p=4, trace=trace)
    failed = [f"{chk.name}: {chk.detail}" for chk in checks if not chk.holds]
    assert failed == []
    assert len(trace) == 7
    assert any(chk.name.startswith("grass:") for chk in checks)


@pytest.mark.parametrize("p", [4, 5, 6])
def test_sample_products(p):
    assert all(chk.holds for chk in identities.sample_products(p))


@pytest.mark.parametrize("p", range(1, 7))
def test_alternative_basis(p):
    assert all(chk.holds for chk in identities.alternative_basis_identities(p))


def test_noneq_chain():
    for p in range(1, 7):
        assert all(chk.holds for chk in identities.noneq_chain(p))


def test_failed_chain_reports_normal_forms():
    from src.ring import quadric

    chk = identities._chain("broken", ["m[1]", "m[2]"], quadric(3))
    assert not chk.holds
    assert "normal forms" in chk.detail


def test_identity_report(tmp_path):
    checks = identities.relation_checks(2)
    path = write_identity_report(checks, str(tmp_path / "out" / "identities.md"))
    text = open(path, encoding="utf-8").read()
    assert text.startswith("# Identity suite")
    assert "| p=2 (i) s=0 | yes |" in text
    assert '"failed": []' in text


def test_ro2_chart_marks_double_point():
    chart = diagram.ro2_chart(5)
    doubles = [pt for pt in chart.points if pt.shape == "double"]
    assert [(pt.x, pt.y) for pt in doubles] == [(4, 4)]
    assert len(chart.points) == 9


def test_hpoint_chart():
    chart = diagram.hpoint_chart(4)
    shapes = {(pt.x, pt.y): pt.shape for pt in chart.points}
    assert shapes[(0, 0)] == "square"
    assert shapes[(0, 3)] == "dot"
    assert shapes[(-2, 3)] == "ring"
    assert shapes[(3, -1)] == "out"
    text = diagram.render_text(chart)
    assert "#" in text and "?" in text
