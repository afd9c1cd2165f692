"""End-to-end smoke tests for the python package."""

import pytest

import frobtsct
from frobtsct import Cyclotomic


def test_version():
    assert frobtsct.__version__ == "1.0.0"


def test_cyclotomic_arithmetic():
    z8 = Cyclotomic.zeta(8, 1)
    assert (z8 * z8).to_atom() == "E(4)"
    assert (z8 * Cyclotomic.zeta(8, 3)).to_atom() == "-1"
    assert Cyclotomic.parse("E(8)^3") == Cyclotomic.zeta(8, 3)
    assert (Cyclotomic.parse("1+E(3)+E(3)^2")).is_zero()
    assert (-Cyclotomic.zeta(4, 1)).to_atom() == "-E(4)"
    assert Cyclotomic.zeta(12, 4).reduced().conductor() == 3
    assert Cyclotomic(7).is_integral()


def test_chartab_document():
    doc = frobtsct.chartab(3, 8, "maximal")
    assert doc["schema"] == "frobtsct/1"
    assert doc["kind"] == "chartab"
    assert doc["spec"] == {
        "p": 3,
        "m": 8,
        "case": "maximal",
        "order": 72,
        "shape": "(C3 x C3) : C8",
        "num_vertices": 3,
    }
    assert [c["name"] for c in doc["columns"]] == [
        "1a", "8a", "4a", "8b", "2a", "8c", "4b", "8d", "3a",
    ]
    assert doc["rows"][0]["values"] == ["1"] * 9
    assert doc["rows"][8]["values"][0] == "8"


def test_tsct_document():
    doc = frobtsct.tsct(5, 4, "minimal")
    assert len(doc["vertices"]) == 8
    assert doc["row_labels"][0][0] == "chi_1+chi_5+chi_6+chi_7+chi_8+chi_9+chi_10"
    blocks = {(b["i"], b["v"]): b["entries"] for b in doc["blocks"]}
    assert blocks[(8, 8)][1] == ["1", "E(4)", "-1", "-E(4)"]
    assert blocks[(2, 2)][0] == ["5", "1", "1", "1"]
    assert all(x == "0" for row in blocks[(1, 2)] for x in row)


def test_decomposition_and_projectives():
    dec = frobtsct.decomposition(3, 8, "maximal")
    assert len(dec["rows"]) == 9
    assert len(dec["columns"]) == 8
    assert dec["entries"][8] == [1] * 8

    proj = frobtsct.projectives(3, 8, "maximal")
    assert [r["values"][0] for r in proj["rows"]] == ["9"] * 8


def test_verify():
    rep = frobtsct.verify(3, 2, "minimal")
    assert rep["ok"] is True
    assert any(c["name"] == "diagonal_blocks_projective" for c in rep["checks"])
    assert frobtsct.verify_ok(3, 8, "maximal")


def test_invalid_spec_raises():
    with pytest.raises(ValueError):
        frobtsct.chartab(4, 3, "minimal")
    with pytest.raises(ValueError):
        frobtsct.tsct(5, 3, "maximal")


def test_render_formats():
    csv = frobtsct.render(3, 8, "maximal", "chartab", "csv")
    assert csv.splitlines()[0] == "name,1a,8a,4a,8b,2a,8c,4b,8d,3a"
    latex = frobtsct.render(3, 8, "maximal", "tsct", "latex")
    assert "N_{2} \\cong (C_{3} \\times C_{3}) \\rtimes C_{2}" in latex
    # determinism
    assert frobtsct.render(3, 8, "maximal", "tsct") == frobtsct.render(3, 8, "maximal", "tsct")
