"""Tests for DataFactory service."""

import json

import pytest
from src.core.errors import InputFormatError
from src.services.data_factory import DataFactory


@pytest.fixture
def factory() -> DataFactory:
    """Create a DataFactory over the bundled data directory."""
    return DataFactory()


def test_resolve_by_name_and_suffix(factory, tmp_path):
    """Test names resolve under the data directory, with or without .json."""
    assert factory.resolve("sl2").name == "sl2.json"
    assert factory.resolve("sl2.json") == factory.resolve("sl2")
    path = tmp_path / "line.json"
    path.write_text(json.dumps({"dim": 1, "entries": [["q"]]}))
    assert factory.resolve(str(path)) == path


def test_missing_file(factory):
    """Test an unknown name raises an input error."""
    with pytest.raises(InputFormatError):
        factory.resolve("no_such_file")


def test_invalid_json(tmp_path):
    """Test a malformed file raises an input error naming the file."""
    (tmp_path / "broken.json").write_text("{\"dim\": 1,")
    factory = DataFactory(str(tmp_path))
    with pytest.raises(InputFormatError) as info:
        factory.load_json("broken")
    assert "broken.json" in str(info.value)


def test_load_rmatrix(factory):
    """Test entries files and bilinear-form files."""
    line = factory.load_rmatrix("braided_line")
    assert line.dim == 1
    assert not line.checked
    a2 = factory.load_rmatrix("beta_a2")
    assert a2.dim == 2
    assert a2.checked


def test_load_cartan(factory):
    """Test Cartan data with symmetrizers."""
    cartan, symmetrizers = factory.load_cartan("cartan_b2")
    assert cartan == [[2, -2], [-1, 2]]
    assert symmetrizers == [1, 2]


def test_load_sl2_and_representation(factory):
    """Test sl2 gets its cobracket from r and loads its modules by label."""
    sl2 = factory.load_lie_bialgebra("sl2")
    assert sl2.labels == ("h", "e", "f")
    assert 0 not in sl2.cobracket
    c3 = factory.load_representation("rep_c3", sl2.algebra)
    assert c3.carrier_dim == 3
    assert c3.homomorphism_violation(sl2.algebra) is None


def test_load_element(factory, tmp_path):
    """Test an element file decodes its words."""
    path = tmp_path / "element.json"
    path.write_text(json.dumps({"dim": 2, "dual": True, "terms": [{"word": [1, 2], "coeff": "q"}]}))
    element = factory.load_element(str(path))
    assert element.dual
    assert element.coefficient((1, 2)) == element.coefficient([1, 2])
    assert str(element.coefficient((1, 2))) == "q"
