import json

import pytest

from src.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lines27(isolated_env, capsys):
    code, out, _ = run(capsys, "lines27", "--no-cache")
    assert code == 0
    assert out.startswith("(3 + 12g) z0^-1 cl cxl m[2]")
    assert "total: 27" in out
    assert "12[C₂/e] + 3[C₂/C₂]" in out


def test_lines27_json_with_report(isolated_env, capsys):
    report = isolated_env / "reports" / "lines.md"
    code, out, _ = run(capsys, "lines27", "--format", "json", "--trace", "--report", str(report))
    assert code == 0
    data = json.loads(out)
    assert data["coefficient"] == {"a": 3, "b": 12}
    assert data["counts"] == {"I": 0, "II": 3, "III": 0, "IV": 12}
    assert data["total"] == 27
    assert data["trace"]
    assert "12[C₂/e] + 3[C₂/C₂]" in report.read_text(encoding="utf-8")


def test_normalize(isolated_env, capsys):
    code, out, _ = run(capsys, "normalize", "--space", "proj:2|1", "z1*cxw")
    assert code == 0
    assert out.strip() == "(1-kappa) z0 cw + e^2"


def test_normalize_quadric_square(isolated_env, capsys):
    code, out, _ = run(capsys, "normalize", "--space", "quadric:5", "(z1*m[2])^2")
    assert code == 0
    assert out.strip() == "(1-kappa) z0 cw^3 cxw m[2] + e^2 cw^2 cxw m[2]"


def test_normalize_json(isolated_env, capsys):
    code, out, _ = run(capsys, "normalize", "--space", "quadric:3", "--format", "json", "z0^-1*cw*cxw*m[2]")
    assert code == 0
    data = json.loads(out)
    assert data["grading"] == {"u": 8, "s": 0, "w": 2}
    assert data["terms"][0]["monomial"] == {"a": -1, "b": 0, "i": 1, "j": 1, "m": 2}


def test_normalize_reads_stdin(isolated_env, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("z0*z1\n"))
    code, out, _ = run(capsys, "normalize", "--space", "bu1", "-")
    assert code == 0
    assert out.strip() == "xi"


def test_mul(isolated_env, capsys):
    code, out, _ = run(capsys, "mul", "--space", "quadric:4", "m[2]", "m[2]")
    assert code == 0
    assert out.strip() == "0"


def test_basis_json(isolated_env, capsys):
    code, out, _ = run(capsys, "basis", "--space", "quadric:3", "--coset", "2", "--format", "json")
    assert code == 0
    texts = [entry["text"] for entry in json.loads(out)["elements"]]
    assert texts == ["z1^2", "z1 cw", "cw^2", "z1 m[2]", "cw m[2]", "z0^-1 cw cxw m[2]"]


def test_ro2_basis(isolated_env, capsys):
    code, out, _ = run(capsys, "ro2-basis", "4")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()]
    assert len(rows) == 8
    assert ["m[2]", "(4,2)", "4", "+", "2σ"] in rows


def test_grading(isolated_env, capsys):
    code, out, _ = run(capsys, "grading", "--literal", "2O1 + 8")
    assert code == 0
    assert out.splitlines()[0] == "8 + 2Ω₁"
    assert "rank 8, fixed dims (8, 4), coset 2" in out


def test_restrict_and_fixed(isolated_env, capsys):
    assert run(capsys, "restrict", "--space", "quadric:3", "cw^2")[1].strip() == "m0 + m1"
    assert run(capsys, "fixed", "--space", "quadric:3", "m[2]")[1].strip() == "(c^2 | c)"


def test_divide(isolated_env, capsys):
    code, out, _ = run(capsys, "divide", "--space", "quadric:3", "--by", "z0", "cw*cxw*m[2]")
    assert code == 0
    assert out.strip() == "z0^-1 cw cxw m[2]"


def test_check_identities(isolated_env, capsys):
    code, out, _ = run(capsys, "check-identities", "--max-p", "2", "--no-cache")
    assert code == 0
    assert "identities hold" in out
    assert "FAILED" not in out


def test_diagram_text(isolated_env, capsys):
    code, out, _ = run(capsys, "diagram", "ro2-basis", "5")
    assert code == 0
    assert "@" in out
    assert "(4,4): cw^2 cxw^2, z1 m[2]" in out


@pytest.mark.parametrize("kind", ["hpoint-chart", "hpoint"])
def test_diagram_hpoint_chart_and_alias(isolated_env, capsys, kind):
    code, out, _ = run(capsys, "diagram", kind, "--radius", "4")
    assert code == 0
    assert out.startswith("H^{a+b sigma} of a point")
    assert "?" in out


def test_diagram_hpoint_alias_matches_chart(isolated_env, capsys):
    _, chart, _ = run(capsys, "diagram", "hpoint-chart", "--radius", "3")
    _, alias, _ = run(capsys, "diagram", "hpoint", "--radius", "3")
    assert chart == alias


def test_diagram_svg(isolated_env, capsys):
    pytest.importorskip("reportlab")
    target = isolated_env / "chart.svg"
    code, _, _ = run(capsys, "diagram", "hpoint", "--radius", "4", "--format", "svg", "--output", str(target))
    assert code == 0
    assert "<svg" in target.read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "argv,code",
    [
        (["bogus"], 1),
        (["normalize", "--space", "nowhere", "z0"], 1),
        (["normalize", "--format", "svg", "z0"], 1),
        (["normalize", "--space", "quadric:3", "m[4]"], 2),
        (["normalize", "--space", "quadric:3", "z0 +"], 2),
        (["divide", "--space", "quadric:3", "1"], 3),
        (["normalize", "--space", "quadric:3", "e^-1"], 3),
    ],
)
def test_exit_codes(isolated_env, capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    if code != 1 or argv[0] != "bogus":
        assert err.startswith("error:") or "usage" in err


def test_product_table_written(isolated_env, capsys):
    cache = isolated_env / "cache"
    run(capsys, "normalize", "--space", "quadric:3", "(z1*m[1])^2")
    assert (cache / "products-quadric-3.json").is_file()


def test_no_cache_leaves_no_table(isolated_env, capsys):
    cache = isolated_env / "cache"
    run(capsys, "normalize", "--space", "quadric:3", "--no-cache", "(z1*m[1])^2")
    assert not cache.exists()
