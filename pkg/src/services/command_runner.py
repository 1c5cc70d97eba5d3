"""Runs each command-line computation and packages its outcome."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from ..core.calculus import (
    braided_exp,
    exp_eigenfunction_check,
    graded_kernel,
    pbw_dimensions,
    symmetrized_form,
)
from ..core.combinatorics import braided_factorial, require_checked
from ..core.errors import (
    CartanDataError,
    DimensionMismatchError,
    InputFormatError,
    LieStructureError,
    NotIsotypicalError,
    ScalarError,
    SingularFactorialError,
    TruncationCapError,
    YangBaxterError,
)
from ..core.lie import LieBialgebra, check_lie_bialgebra, check_quasitriangular
from ..core.lie_constructions import (
    braided_lie_axiom_check,
    extend_module,
    induction_step,
    transmute,
)
from ..core.tensor_ops import RMatrix, braid_relation_check, from_bilinear_form, yang_baxter_check
from . import serializers
from .data_factory import DataFactory
from .settings import Settings

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class CommandStatus(Enum):
    """Outcome of a command, with its process exit code as value."""

    OK = 0
    PROPERTY_VIOLATED = 1
    INPUT_ERROR = 2

    @property
    def label(self) -> str:
        return self.name.lower()


@dataclass
class CommandResult:
    """Machine-readable payload plus a short human summary."""

    command: str
    status: CommandStatus
    payload: Dict[str, Any] = field(default_factory=dict)
    summary: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return self.status.value

    def document(self) -> Dict[str, Any]:
        return {"command": self.command, "status": self.status.label, "payload": self.payload}


INPUT_ERRORS = (
    InputFormatError,
    TruncationCapError,
    ScalarError,
    CartanDataError,
    DimensionMismatchError,
)


class CommandRunner:
    """Executes commands against data loaded through a DataFactory."""

    def __init__(self, settings: Optional[Settings] = None, factory: Optional[DataFactory] = None) -> None:
        """Initialize the runner.

        Args:
            settings: Limits and switches; defaults are used when omitted
            factory: Data loader; one rooted at settings.data_dir when omitted
        """
        self.settings = settings or Settings()
        self.factory = factory or DataFactory(str(self.settings.data_dir))

    def _run(self, command: str, body: Callable[[], CommandResult]) -> CommandResult:
        """Run body, mapping input problems to input_error results."""
        try:
            return body()
        except INPUT_ERRORS as exc:
            logger.error("%s: %s", command, exc)
            return CommandResult(
                command,
                CommandStatus.INPUT_ERROR,
                {"error": type(exc).__name__, "message": str(exc)},
                [("error", str(exc))],
            )

    def _checked(self, R: RMatrix) -> RMatrix:
        return require_checked(R) if self.settings.check_ybe else R.mark_checked()

    def _degree_cap(self, max_degree: int) -> None:
        if max_degree < 0:
            raise InputFormatError("max degree must be non-negative")
        if max_degree > self.settings.max_degree:
            raise InputFormatError(
                f"max degree {max_degree} exceeds the cap of {self.settings.max_degree}; "
                "raise it with --degree-cap"
            )

    def ybe_check(self, rmatrix_file: PathLike) -> CommandResult:
        """Check the Yang-Baxter equation and report the first failing component."""

        def body() -> CommandResult:
            R = self.factory.load_rmatrix(rmatrix_file)
            result = yang_baxter_check(R)
            braid = braid_relation_check(R)
            payload: Dict[str, Any] = {
                "dim": R.dim,
                "passed": result.passed,
                "braid_relation": braid.passed,
            }
            summary = [("dimension", str(R.dim)), ("yang-baxter", "pass" if result else "FAIL")]
            if not result:
                payload["component"] = {
                    "row": list(result.row or ()),
                    "col": list(result.col or ()),
                    "lhs": str(result.lhs),
                    "rhs": str(result.rhs),
                }
                summary.append(("first failure", f"row {list(result.row or ())}, col {list(result.col or ())}"))
            status = CommandStatus.OK if result else CommandStatus.PROPERTY_VIOLATED
            return CommandResult("ybe-check", status, payload, summary)

        return self._run("ybe-check", body)

    def serre(self, cartan_file: PathLike, max_degree: int) -> CommandResult:
        """Kernel of the pairing per degree for U_q(n+) of the given Cartan data."""

        def body() -> CommandResult:
            self._degree_cap(max_degree)
            cartan, symmetrizers = self.factory.load_cartan(cartan_file)
            R = from_bilinear_form(symmetrized_form(cartan, symmetrizers))
            relation_sets = [graded_kernel(m, R, self.settings.max_side) for m in range(max_degree + 1)]
            ranks = [relations.rank for relations in relation_sets]
            sound = all(
                relations.is_sound(braided_factorial(relations.degree, R)) for relations in relation_sets
            )
            pbw = pbw_dimensions(cartan, max_degree)
            payload = {
                "cartan": cartan,
                "symmetrizers": symmetrizers,
                "ranks_by_degree": ranks,
                "pbw_dimensions": pbw,
                "matches_pbw": ranks == pbw,
                "relations": [serializers.relation_set_to_json(r, ranks) for r in relation_sets],
                "sound": sound,
            }
            summary = [("ranks", str(ranks)), ("pbw", str(pbw))]
            summary += [
                (f"degree {r.degree} kernel", str(r.kernel_dim)) for r in relation_sets if r.kernel_dim
            ]
            status = CommandStatus.OK if sound else CommandStatus.PROPERTY_VIOLATED
            return CommandResult("serre", status, payload, summary)

        return self._run("serre", body)

    def ranks(
        self,
        max_degree: int,
        rmatrix_file: Optional[PathLike] = None,
        cartan_file: Optional[PathLike] = None,
    ) -> CommandResult:
        """Graded ranks only, compared against PBW dimensions when Cartan data is given."""

        def body() -> CommandResult:
            self._degree_cap(max_degree)
            if (rmatrix_file is None) == (cartan_file is None):
                raise InputFormatError("give exactly one of --rmatrix or --cartan")
            cartan = None
            if cartan_file is not None:
                cartan, symmetrizers = self.factory.load_cartan(cartan_file)
                R = from_bilinear_form(symmetrized_form(cartan, symmetrizers))
            else:
                R = self._checked(self.factory.load_rmatrix(rmatrix_file))
            ranks = [graded_kernel(m, R, self.settings.max_side).rank for m in range(max_degree + 1)]
            payload: Dict[str, Any] = {"ranks_by_degree": ranks}
            summary = [("ranks", str(ranks))]
            status = CommandStatus.OK
            if cartan is not None:
                pbw = pbw_dimensions(cartan, max_degree)
                payload["pbw_dimensions"] = pbw
                payload["matches_pbw"] = ranks == pbw
                summary.append(("pbw", str(pbw)))
                if ranks != pbw:
                    status = CommandStatus.PROPERTY_VIOLATED
            return CommandResult("ranks", status, payload, summary)

        return self._run("ranks", self._guard_ybe("ranks", body))

    def exp(self, rmatrix_file: PathLike, truncation: Optional[int] = None) -> CommandResult:
        """Truncated braided exponential and its eigenfunction check."""
        degree = self.settings.truncation if truncation is None else truncation

        def body() -> CommandResult:
            self._degree_cap(degree)
            R = self._checked(self.factory.load_rmatrix(rmatrix_file))
            try:
                series = braided_exp(R, degree, self.settings.max_side)
            except SingularFactorialError as exc:
                return CommandResult(
                    "exp",
                    CommandStatus.PROPERTY_VIOLATED,
                    {"singular_degree": exc.degree, "kernel_dim": exc.kernel_dim},
                    [("singular at degree", str(exc.degree))],
                )
            eigen = exp_eigenfunction_check(R, degree, self.settings.max_side)
            payload = {
                "truncation": degree,
                "series": serializers.tensor_element_to_json(series),
                "eigenfunction": eigen,
            }
            summary = [("terms", str(len(series.terms))), ("eigenfunction", "pass" if eigen else "FAIL")]
            status = CommandStatus.OK if eigen else CommandStatus.PROPERTY_VIOLATED
            return CommandResult("exp", status, payload, summary)

        return self._run("exp", self._guard_ybe("exp", body))

    def _guard_ybe(self, command: str, body: Callable[[], CommandResult]) -> Callable[[], CommandResult]:
        def guarded() -> CommandResult:
            try:
                return body()
            except YangBaxterError as exc:
                component = exc.component
                return CommandResult(
                    command,
                    CommandStatus.PROPERTY_VIOLATED,
                    {"error": "YangBaxterError", "component": _plain_component(component)},
                    [("yang-baxter", "FAIL")],
                )
        return guarded

    def _load_lie(self, algebra_file: PathLike) -> LieBialgebra:
        bialgebra = self.factory.load_lie_bialgebra(algebra_file)
        if bialgebra.dim > self.settings.max_lie_dim:
            raise InputFormatError(
                f"dimension {bialgebra.dim} exceeds the Lie dimension cap {self.settings.max_lie_dim}"
            )
        return bialgebra

    def lie_check(self, algebra_file: PathLike) -> CommandResult:
        """Full quasitriangular report, or the bialgebra report when no r is given."""

        def body() -> CommandResult:
            bialgebra = self._load_lie(algebra_file)
            if bialgebra.r is None:
                report = check_lie_bialgebra(bialgebra)
            else:
                report = check_quasitriangular(bialgebra.algebra, bialgebra.cobracket, bialgebra.r)
            status = CommandStatus.OK if report else CommandStatus.PROPERTY_VIOLATED
            summary = [(item.name, "pass" if item.passed else f"FAIL {item.detail}") for item in report.items]
            return CommandResult("lie-check", status, serializers.report_to_json(report), summary)

        return self._run("lie-check", body)

    def transmute(self, algebra_file: PathLike) -> CommandResult:
        """Self-transmutation of a quasitriangular Lie bialgebra."""

        def body() -> CommandResult:
            bialgebra = self._load_lie(algebra_file)
            try:
                braided = transmute(bialgebra)
            except LieStructureError as exc:
                return _violation("transmute", exc)
            report = braided_lie_axiom_check(braided)
            labels = bialgebra.labels
            payload = {
                "basis": list(labels),
                "braided_cobracket": [
                    [i, a, b, serializers.rational_to_json(v)]
                    for i in sorted(braided.cobracket)
                    for (a, b), v in sorted(braided.cobracket[i].items())
                ],
                "report": serializers.report_to_json(report),
            }
            summary = [(labels[i], _format_tensor(braided.cobracket.get(i, {}), labels)) for i in range(len(labels))]
            status = CommandStatus.OK if report else CommandStatus.PROPERTY_VIOLATED
            return CommandResult("transmute", status, payload, summary)

        return self._run("transmute", body)

    def lie_induct(self, algebra_file: PathLike, rep_file: PathLike, steps: int = 1) -> CommandResult:
        """Adjoin nodes by repeated double-bosonisation, extending the module between steps."""

        def body() -> CommandResult:
            if steps < 1:
                raise InputFormatError("steps must be at least 1")
            bialgebra = self._load_lie(algebra_file)
            module = self.factory.load_representation(rep_file, bialgebra.algebra)
            mu = self.settings.central_scalar
            stages = []
            current, current_module = bialgebra, module
            result = None
            try:
                for step in range(steps):
                    if result is not None:
                        current_module = extend_module(result, current_module)
                        current = result.bialgebra
                    predicted = current.dim + 1 + 2 * current_module.carrier_dim
                    if predicted > self.settings.max_lie_dim:
                        raise InputFormatError(
                            f"output dimension {predicted} exceeds the Lie dimension cap "
                            f"{self.settings.max_lie_dim}"
                        )
                    result = induction_step(current, current_module, mu)
                    logger.info("induction step %d finished: dimension %d", step + 1, result.bialgebra.dim)
                    stages.append({
                        "dim": result.bialgebra.dim,
                        "central_charge": serializers.rational_to_json(result.extension.lam),
                        "certificates": result.certificates,
                    })
            except NotIsotypicalError as exc:
                payload = _violation("lie-induct", exc).payload
                payload["minimal_polynomial"] = [serializers.rational_to_json(c) for c in exc.minimal_polynomial]
                return CommandResult("lie-induct", CommandStatus.PROPERTY_VIOLATED, payload,
                                     [("not isotypical", str(exc))])
            except LieStructureError as exc:
                return _violation("lie-induct", exc)

            assert result is not None
            certificates = result.certificates
            payload = {
                "bialgebra": serializers.lie_bialgebra_to_json(result.bialgebra),
                "certificates": certificates,
                "stages": stages,
            }
            try:
                next_module = extend_module(result, current_module)
            except LieStructureError:
                next_module = None
            if next_module is not None:
                payload["next_module"] = serializers.representation_to_json(
                    next_module, result.bialgebra.labels
                )
            summary = [(key, str(value)) for key, value in sorted(certificates.items())]
            passed = all(
                certificates[key]
                for key in ("jacobi", "co_jacobi", "cybe", "factorisable", "killing_nondegenerate")
            )
            status = CommandStatus.OK if passed else CommandStatus.PROPERTY_VIOLATED
            return CommandResult("lie-induct", status, payload, summary)

        return self._run("lie-induct", body)


def _violation(command: str, exc: Exception) -> CommandResult:
    payload: Dict[str, Any] = {"error": type(exc).__name__, "message": str(exc)}
    stage = getattr(exc, "stage", None)
    if stage is not None:
        payload["stage"] = stage
        report = getattr(exc, "report", None)
        if hasattr(report, "items"):
            payload["report"] = serializers.report_to_json(report)
    return CommandResult(command, CommandStatus.PROPERTY_VIOLATED, payload, [("violation", str(exc))])


def _plain_component(component: Any) -> Any:
    if component is None:
        return None
    row, col, lhs, rhs = component
    return {"row": list(row), "col": list(col), "lhs": lhs, "rhs": rhs}


def _format_tensor(tensor: Dict[Tuple[int, int], Any], labels: Tuple[str, ...]) -> str:
    if not tensor:
        return "0"
    return " + ".join(f"({v}) {labels[a]}(x){labels[b]}" for (a, b), v in sorted(tensor.items()))
