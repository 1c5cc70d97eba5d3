"""Tests for CommandRunner service."""

import json
from pathlib import Path

import pytest
from src.core.scalars import parse_scalar
from src.services.command_runner import CommandResult, CommandRunner, CommandStatus
from src.services.settings import Settings


@pytest.fixture
def runner() -> CommandRunner:
    """Create a CommandRunner with default settings."""
    return CommandRunner()


def test_status_codes():
    """Test exit codes and labels of each status."""
    assert [s.value for s in CommandStatus] == [0, 1, 2]
    assert CommandStatus.PROPERTY_VIOLATED.label == "property_violated"
    result = CommandResult("serre", CommandStatus.INPUT_ERROR, {"error": "x"})
    assert result.exit_code == 2
    assert result.document() == {"command": "serre", "status": "input_error", "payload": {"error": "x"}}


def test_ybe_check_passes(runner):
    """Test the braided line solves Yang-Baxter."""
    result = runner.ybe_check("braided_line")
    assert result.status == CommandStatus.OK
    assert result.payload == {"dim": 1, "passed": True, "braid_relation": True}


def test_ybe_check_reports_component(runner):
    """Test the perturbed identity fails with its first component."""
    result = runner.ybe_check("perturbed_identity")
    assert result.status == CommandStatus.PROPERTY_VIOLATED
    assert result.payload["component"] == {"row": [1, 1, 1], "col": [1, 2, 2], "lhs": "1", "rhs": "2"}


def test_missing_file_is_input_error(runner):
    """Test an unknown file maps to the input error status."""
    result = runner.ybe_check("no_such_file")
    assert result.status == CommandStatus.INPUT_ERROR
    assert result.payload["error"] == "InputFormatError"


def test_serre_a2(runner):
    """Test A2 relations match PBW and include the cubic q-Serre relations."""
    result = runner.serre("cartan_a2", 3)
    assert result.status == CommandStatus.OK
    assert result.payload["ranks_by_degree"] == [1, 2, 4, 6]
    assert result.payload["matches_pbw"]
    assert result.payload["sound"]
    cubic = result.payload["relations"][3]
    assert cubic["kernel_dim"] == 2
    assert cubic["multidegrees"] == [[1, 2], [2, 1]]


def test_serre_degree_cap(runner):
    """Test degrees above the cap are refused with advice."""
    result = runner.serre("cartan_a2", 7)
    assert result.status == CommandStatus.INPUT_ERROR
    assert "--degree-cap" in result.payload["message"]


def test_serre_rejects_bad_cartan(runner, tmp_path):
    """Test non-symmetrizable Cartan data is an input error."""
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"cartan": [[2, -2], [-1, 2]], "symmetrizers": [1, 1]}))
    assert runner.serre(str(path), 2).status == CommandStatus.INPUT_ERROR


def test_unbalanced_scalar_is_input_error(runner, tmp_path):
    """Test an R-matrix entry with an unclosed parenthesis is an input error."""
    path = tmp_path / "unbalanced.json"
    path.write_text(json.dumps({"dim": 1, "entries": [["(q+1"]]}))
    result = runner.ybe_check(str(path))
    assert result.status == CommandStatus.INPUT_ERROR
    assert result.exit_code == 2


def test_ranks_b2(runner):
    """Test B2 ranks agree with PBW through degree 4."""
    result = runner.ranks(4, cartan_file="cartan_b2")
    assert result.status == CommandStatus.OK
    assert result.payload["ranks_by_degree"] == [1, 2, 4, 7, 11]


def test_ranks_needs_one_source(runner):
    """Test giving both or neither source is an input error."""
    assert runner.ranks(2).status == CommandStatus.INPUT_ERROR
    assert runner.ranks(2, "beta_a2", "cartan_a2").status == CommandStatus.INPUT_ERROR


def test_ranks_refuses_non_solution(runner):
    """Test an R-matrix failing Yang-Baxter is a property violation."""
    result = runner.ranks(2, rmatrix_file="perturbed_identity")
    assert result.status == CommandStatus.PROPERTY_VIOLATED
    assert result.payload["component"]["row"] == [1, 1, 1]


def test_ranks_side_cap():
    """Test the operator side cap yields an input error."""
    runner = CommandRunner(Settings(max_side=8))
    assert runner.ranks(4, rmatrix_file="beta_a2").status == CommandStatus.INPUT_ERROR


def test_exp_line(runner):
    """Test the truncated exponential of the braided line."""
    result = runner.exp("braided_line", 3)
    assert result.status == CommandStatus.OK
    assert result.payload["eigenfunction"]
    terms = {
        (tuple(t["left"]), tuple(t["right"])): parse_scalar(t["coeff"])
        for t in result.payload["series"]["terms"]
    }
    assert terms[((1, 1), (1, 1))] == parse_scalar("1/(1 + q)")


def test_exp_a2_singular(runner):
    """Test the A2 factorial is singular at degree 3."""
    result = runner.exp("beta_a2", 4)
    assert result.status == CommandStatus.PROPERTY_VIOLATED
    assert result.payload == {"singular_degree": 3, "kernel_dim": 2}


def test_lie_check_sl2(runner):
    """Test the standard sl2 structure passes every check."""
    result = runner.lie_check("sl2")
    assert result.status == CommandStatus.OK
    assert result.payload["passed"]
    assert result.payload["checks"]["cybe"]["passed"]


def test_lie_check_dimension_cap():
    """Test the Lie dimension cap."""
    result = CommandRunner(Settings(max_lie_dim=2)).lie_check("sl2")
    assert result.status == CommandStatus.INPUT_ERROR


def test_transmute_sl2(runner):
    """Test the braided cobracket of h is 2 (f (x) e - e (x) f)."""
    result = runner.transmute("sl2")
    assert result.status == CommandStatus.OK
    rows = result.payload["braided_cobracket"]
    assert [0, 1, 2, "-2"] in rows
    assert [0, 2, 1, "2"] in rows
    assert result.payload["report"]["passed"]


def test_lie_induct_fundamental(runner):
    """Test one induction step from sl2 and C^2."""
    result = runner.lie_induct("sl2", "rep_c2")
    assert result.status == CommandStatus.OK
    assert result.payload["certificates"]["dim"] == 8
    assert result.payload["certificates"]["toral_rank"] == 2
    assert result.payload["stages"][0]["central_charge"] == "3/4"
    assert result.payload["bialgebra"]["dim"] == 8
    assert result.payload["next_module"]["carrier_dim"] == 3


def test_lie_induct_two_steps(runner):
    """Test the chain sl2 -> 8 -> 15 dimensions."""
    result = runner.lie_induct("sl2", "rep_c2", steps=2)
    assert result.status == CommandStatus.OK
    assert [stage["dim"] for stage in result.payload["stages"]] == [8, 15]


def test_lie_induct_mixed_module(runner):
    """Test a non-isotypical module reports its minimal polynomial."""
    result = runner.lie_induct("sl2", "rep_mixed")
    assert result.status == CommandStatus.PROPERTY_VIOLATED
    assert result.payload["error"] == "NotIsotypicalError"
    assert result.payload["minimal_polynomial"][-1] == "1"


def test_lie_induct_trivial_module_is_degenerate(runner):
    """Test a trivial module fails the output stage."""
    result = runner.lie_induct("sl2", "rep_trivial")
    assert result.status == CommandStatus.PROPERTY_VIOLATED
    assert result.payload["error"] == "AxiomViolationError"
    assert result.payload["stage"] == "output"


def test_lie_induct_rejects_zero_steps(runner):
    """Test steps below 1 are an input error."""
    assert runner.lie_induct("sl2", "rep_c2", steps=0).status == CommandStatus.INPUT_ERROR


def test_factory_follows_data_dir(tmp_path):
    """Test the default factory is rooted at the configured data directory."""
    runner = CommandRunner(Settings(data_dir=Path(tmp_path)))
    assert runner.factory.data_dir == Path(tmp_path)
