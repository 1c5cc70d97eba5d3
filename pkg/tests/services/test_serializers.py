"""Tests for JSON encoding and decoding of the input and output formats."""

from fractions import Fraction

import pytest
from src.core.calculus import graded_kernel
from src.core.errors import InputFormatError, ScalarParseError
from src.core.free_algebra import FreeElement
from src.core.lie import CheckReport
from src.core.scalars import RationalFunctionQ
from src.core.tensor_ops import from_bilinear_form
from src.services import serializers

SL2 = {
    "dim": 3,
    "basis": ["h", "e", "f"],
    "bracket": [[0, 1, 1, "2"], [0, 2, 2, "-2"], [1, 2, 0, "1"]],
    "r": [[0, 0, "1/4"], [1, 2, "1"]],
}


def test_dumps_is_canonical():
    """Test sorted keys and a trailing newline."""
    assert serializers.dumps({"b": 1, "a": [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'


def test_scalars():
    """Test integer and string scalar literals."""
    assert serializers.scalar_from_json(3) == 3
    assert serializers.scalar_from_json("q^-1 + 1") == RationalFunctionQ.q(-1) + 1
    with pytest.raises(InputFormatError):
        serializers.scalar_from_json(True)
    with pytest.raises(InputFormatError):
        serializers.scalar_from_json(1.5)
    with pytest.raises(ScalarParseError):
        serializers.scalar_from_json("q^^2")


def test_rationals():
    """Test rational literals for Lie structure constants."""
    assert serializers.rational_from_json("-3/6") == Fraction(-1, 2)
    assert serializers.rational_to_json(Fraction(4, 2)) == "2"
    with pytest.raises(InputFormatError):
        serializers.rational_from_json("1/0")
    with pytest.raises(InputFormatError):
        serializers.rational_from_json(0.5)


def test_rmatrix_layouts():
    """Test the bilinear-form and entries layouts."""
    R = serializers.rmatrix_from_json({"beta": [[2, -1], [-1, 2]]})
    assert R == from_bilinear_form([[2, -1], [-1, 2]])
    assert serializers.rmatrix_to_json(serializers.rmatrix_from_json({"dim": 1, "entries": [["q"]]})) == {
        "dim": 1, "entries": [["q"]],
    }
    with pytest.raises(InputFormatError):
        serializers.rmatrix_from_json({"dim": 2, "entries": [["1"]]})
    with pytest.raises(InputFormatError):
        serializers.rmatrix_from_json({"entries": [["1"]]})


def test_cartan_validation():
    """Test default symmetrizers and rejection of bad Cartan data."""
    assert serializers.cartan_from_json({"cartan": [[2, -1], [-1, 2]]}) == ([[2, -1], [-1, 2]], [1, 1])
    with pytest.raises(InputFormatError):
        serializers.cartan_from_json({"cartan": [[2, -2], [-1, 2]]})
    with pytest.raises(InputFormatError):
        serializers.cartan_from_json({"cartan": [[2, "x"], [-1, 2]]})


def test_element_format():
    """Test words are listed by degree and duplicate words are rejected."""
    element = FreeElement.from_terms(2, {(2, 1): "q", (): 1}, dual=True)
    assert serializers.element_to_json(element) == {
        "dim": 2,
        "dual": True,
        "terms": [{"word": [], "coeff": "1"}, {"word": [2, 1], "coeff": "q"}],
    }
    with pytest.raises(InputFormatError):
        serializers.element_from_json({"dim": 2, "terms": [
            {"word": [1], "coeff": "1"}, {"word": [1], "coeff": "2"},
        ]})
    with pytest.raises(InputFormatError):
        serializers.element_from_json({"dim": 2, "terms": [{"word": [3], "coeff": "1"}]})


def test_relation_set_format():
    """Test multidegrees appear for letter-preserving kernels."""
    relations = graded_kernel(2, from_bilinear_form([[2, 0], [0, 2]]))
    payload = serializers.relation_set_to_json(relations, [1, 2, 3])
    assert payload["kernel_dim"] == 1
    assert payload["multidegrees"] == [[1, 1]]
    decoded = serializers.relation_set_from_json(payload)
    assert decoded.generators == relations.generators
    assert decoded.multidegrees == [(1, 1)]


def test_lie_bialgebra_cobracket_from_r():
    """Test a file with r and no cobracket gets delta = ad r."""
    bialgebra = serializers.lie_bialgebra_from_json(SL2)
    assert bialgebra.cobracket[1] == {(1, 0): Fraction(1, 2), (0, 1): Fraction(-1, 2)}
    payload = serializers.lie_bialgebra_to_json(bialgebra)
    assert [1, 0, 1, "-1/2"] in payload["cobracket"]
    assert payload["r"] == [[0, 0, "1/4"], [1, 2, "1"]]


@pytest.mark.parametrize("broken", [
    {**SL2, "bracket": [[0, 1, 5, "1"]]},
    {**SL2, "bracket": [[0, 1, "1"]]},
    {**SL2, "basis": ["h", "h", "f"]},
    {key: value for key, value in SL2.items() if key != "r"},
])
def test_lie_bialgebra_rejects_bad_files(broken):
    """Test malformed Lie bialgebra files raise input errors."""
    with pytest.raises(InputFormatError):
        serializers.lie_bialgebra_from_json(broken)


def test_representation_labels():
    """Test action matrices are matched to basis labels."""
    algebra = serializers.lie_bialgebra_from_json(SL2).algebra
    rows = {"h": [["1", "0"], ["0", "-1"]], "e": [["0", "1"], ["0", "0"]], "f": [["0", "0"], ["1", "0"]]}
    rep = serializers.representation_from_json({"carrier_dim": 2, "action": rows}, algebra)
    assert serializers.representation_to_json(rep, algebra.labels)["action"] == rows
    with pytest.raises(InputFormatError):
        serializers.representation_from_json({"carrier_dim": 2, "action": {**rows, "k": rows["h"]}}, algebra)
    with pytest.raises(InputFormatError):
        serializers.representation_from_json({"carrier_dim": 2, "action": {"h": rows["h"]}}, algebra)
    with pytest.raises(InputFormatError):
        serializers.representation_from_json({"carrier_dim": 3, "action": rows}, algebra)


def test_report_format():
    """Test check reports list every named check."""
    report = CheckReport("demo")
    report.add("jacobi", None)
    report.add("cybe", (0, 1, 2))
    assert serializers.report_to_json(report) == {
        "title": "demo",
        "passed": False,
        "checks": {
            "jacobi": {"passed": True, "detail": ""},
            "cybe": {"passed": False, "detail": "first violation at (0, 1, 2)"},
        },
    }
