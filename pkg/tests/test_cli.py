import io

import pytest

from troplag.cli import main
from conftest import FIGURES, GOLDEN

TOPOLOGY_GOLDENS = ["fig1_left", "fig1_right", "fig2_klein", "fig3_family",
                    "fig4_squeeze"]


def run(capsys, *argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("name", TOPOLOGY_GOLDENS)
def test_topology_reports_match_goldens(capsys, name):
    code, out, _ = run(capsys, "topology", str(FIGURES / f"{name}.trop"))
    assert code == 0
    assert out == (GOLDEN / f"{name}.topology.txt").read_text()


@pytest.mark.parametrize("name", ["fig2_klein", "fig3_family"])
def test_homology_reports_match_goldens(capsys, name):
    code, out, _ = run(capsys, "homology", str(FIGURES / f"{name}.trop"))
    assert code == 0
    assert out == (GOLDEN / f"{name}.homology.txt").read_text()


def test_audin_report_matches_golden(capsys):
    code, out, _ = run(capsys, "audin", str(FIGURES / "fig2_klein.trop"))
    assert code == 0
    assert out == (GOLDEN / "fig2_klein.audin.txt").read_text()


def test_audin_with_class_override(capsys):
    code, out, _ = run(capsys, "audin", str(FIGURES / "fig1_left.trop"),
                       "--class", "1,1,1")
    assert code == 0
    assert "P2 = 1, chi = 1" in out and "PASS" in out


def test_validate_all_bundled_documents(capsys):
    for name in TOPOLOGY_GOLDENS:
        code, out, _ = run(capsys, "validate", str(FIGURES / f"{name}.trop"))
        assert code == 0, out


def test_validate_failing_document_exits_1(capsys):
    code, out, _ = run(capsys, "validate",
                       str(FIGURES / "invalid_unbalanced.trop"))
    assert code == 1
    assert "INVALID" in out and "balancing" in out


def test_topology_failing_document_exits_1(capsys):
    code, out, _ = run(capsys, "topology",
                       str(FIGURES / "invalid_unbalanced.trop"))
    assert code == 1


def test_malformed_document_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.trop"
    bad.write_text("diagram rectangle width=0.5 height=1\n")
    code, _, err = run(capsys, "topology", str(bad))
    assert code == 2
    assert "decimals" in err


def test_semantically_invalid_diagram_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.trop"
    bad.write_text("diagram rectangle width=0 height=1\n")
    code, _, err = run(capsys, "topology", str(bad))
    assert code == 2


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "topology", "no_such_file.trop")
    assert code == 2


def test_unknown_command_exits_2(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_triangle_command(capsys):
    code, out, _ = run(capsys, "triangle", "1", "1", "1")
    assert code == 0 and "satisfied" in out
    code, out, _ = run(capsys, "triangle", "1", "1", "3")
    assert code == 1
    assert "violated: c < a+b" in out
    code, out, _ = run(capsys, "triangle", "2/3", "5/3", "2/3")
    assert code == 1 and "violated: b < c+a" in out


def test_gen_family_pipes_into_topology(capsys, monkeypatch):
    code, doc_text, _ = run(capsys, "gen-family", "2")
    assert code == 0
    code, out, _ = run(capsys, "topology", "-", stdin_text=doc_text,
                       monkeypatch=monkeypatch)
    assert code == 0
    assert "nonorientable genus k=42" in out


def test_gen_visible_pipes_into_topology(capsys, monkeypatch):
    code, doc_text, _ = run(capsys, "gen-visible", "4", "5/2")
    assert code == 0
    code, out, _ = run(capsys, "topology", "-", stdin_text=doc_text,
                       monkeypatch=monkeypatch)
    assert code == 0
    assert "(Klein bottle)" in out


def test_gen_visible_that_does_not_fit_exits_2(capsys):
    code, _, err = run(capsys, "gen-visible", "4", "2")
    assert code == 2
    assert "corner" in err or "does not fit" in err or "horizontal" in err


def test_genus_bound_command(capsys):
    code, out, _ = run(capsys, "genus-bound", "3/2")
    assert code == 0 and "k = 2" in out and "Klein bottle" in out
    code, out, _ = run(capsys, "genus-bound", "5")
    assert code == 0 and "k = 22" in out and "ell = 1" in out
    code, out, _ = run(capsys, "genus-bound", "12")
    assert code == 0 and "k = 42" in out and "ell = 2" in out
    code, out, _ = run(capsys, "genus-bound", "11")
    assert "ell = 1" in out
    code, out, _ = run(capsys, "genus-bound", "11", "--threshold=proof")
    assert "ell = 2" in out


def test_squeeze_command(capsys):
    code, out, _ = run(capsys, "squeeze", "101/100")
    assert code == 0
    assert "(0,1/200)" in out and "(2,201/200)" in out
    code, out, _ = run(capsys, "squeeze", "1")
    assert code == 1 and "inessential" in out


@pytest.mark.parametrize("name", TOPOLOGY_GOLDENS)
def test_render_matches_golden_and_is_deterministic(capsys, tmp_path, name):
    out1 = tmp_path / "a.svg"
    out2 = tmp_path / "b.svg"
    assert run(capsys, "render", str(FIGURES / f"{name}.trop"),
               "-o", str(out1))[0] == 0
    assert run(capsys, "render", str(FIGURES / f"{name}.trop"),
               "-o", str(out2))[0] == 0
    first = out1.read_bytes()
    assert first == out2.read_bytes()
    assert first == (GOLDEN / f"{name}.svg").read_bytes()


def test_render_to_stdout(capsys):
    code, out, _ = run(capsys, "render", str(FIGURES / "fig2_klein.trop"),
                       "-o", "-")
    assert code == 0
    assert out.startswith("<?xml") and "</svg>" in out
