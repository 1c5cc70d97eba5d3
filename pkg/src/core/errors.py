"""Exception hierarchy shared by the algebra core and the services layer."""

from typing import Any, Optional, Tuple


class BraidcalcError(Exception):
    """Base class for every error raised by the library."""


class ScalarError(BraidcalcError):
    """Errors from arithmetic in Q(q)."""


class DivisionByZeroError(ScalarError, ZeroDivisionError):
    """Division by the zero rational function."""


class PoleError(ScalarError):
    """A rational function was evaluated at one of its poles."""

    def __init__(self, value: Any, point: Any) -> None:
        super().__init__(f"pole of {value} at q = {point}")
        self.value = value
        self.point = point


class ScalarParseError(ScalarError, ValueError):
    """A scalar literal does not follow the literal grammar."""


class DimensionMismatchError(BraidcalcError, ValueError):
    """Operands live on spaces of different dimension or degree."""


class YangBaxterError(BraidcalcError):
    """An R-matrix failed the Yang-Baxter equation where one was required."""

    def __init__(self, component: Optional[Tuple[Any, ...]] = None) -> None:
        message = "R-matrix does not satisfy the Yang-Baxter equation"
        if component is not None:
            message += f" (first failure at {component})"
        super().__init__(message)
        self.component = component


class SingularFactorialError(BraidcalcError):
    """The braided factorial is not invertible in some degree."""

    def __init__(self, degree: int, kernel_dim: int) -> None:
        super().__init__(
            f"braided factorial singular at degree {degree} (kernel dimension {kernel_dim})"
        )
        self.degree = degree
        self.kernel_dim = kernel_dim


class TruncationCapError(BraidcalcError):
    """A requested computation would exceed the configured size cap."""

    def __init__(self, side: int, cap: int) -> None:
        super().__init__(f"operator side {side} exceeds the cap of {cap}")
        self.side = side
        self.cap = cap


class DualityFlagError(BraidcalcError, ValueError):
    """Primal x-words and dual y-words were mixed in one operation."""


class LieStructureError(BraidcalcError):
    """Errors raised while building Lie bialgebra structures."""


class NotHomomorphismError(LieStructureError):
    """A map between Lie bialgebras does not respect the structure."""


class NotIsotypicalError(LieStructureError):
    """The split Casimir does not act by a scalar on the antisymmetric square."""

    def __init__(self, minimal_polynomial: Tuple[Any, ...]) -> None:
        super().__init__(
            "antisymmetric square is not isotypical; "
            f"minimal polynomial coefficients {list(minimal_polynomial)}"
        )
        self.minimal_polynomial = minimal_polynomial


class DegeneratePairingError(LieStructureError):
    """The pairing between a module and its dual is degenerate."""


class AxiomViolationError(LieStructureError):
    """A construction stage produced a structure that failed its checks."""

    def __init__(self, stage: str, report: Any = None) -> None:
        super().__init__(f"checks failed at stage '{stage}'")
        self.stage = stage
        self.report = report


class InputFormatError(BraidcalcError, ValueError):
    """A data file is malformed or violates its schema."""


class CartanDataError(BraidcalcError, ValueError):
    """Cartan matrix or symmetrizers are not valid generalized Cartan data."""
