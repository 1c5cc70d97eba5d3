"""Shared R-matrix family for structural identity tests."""

import pytest
from src.core.tensor_ops import RMatrix, flip, from_bilinear_form

STRUCTURAL_BETAS = {
    "line": [[1]],
    "line_negative": [[-2]],
    "a2": [[2, -1], [-1, 2]],
    "a1xa1": [[2, 0], [0, 2]],
    "skew": [[0, 1], [-1, 2]],
    "lower": [[-2, 0], [1, 1]],
    "mixed": [[1, 2], [1, -1]],
    "a3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "generic3": [[1, -2, 1], [0, -1, 2], [2, 1, 0]],
}


def _family() -> dict:
    family = {name: from_bilinear_form(beta) for name, beta in STRUCTURAL_BETAS.items()}
    family["flip2"] = flip(2)
    family["transposition2"] = RMatrix.identity(2)
    return family


STRUCTURAL_RMATRICES = _family()


@pytest.fixture(params=sorted(STRUCTURAL_RMATRICES), ids=str)
def structural_r(request) -> RMatrix:
    """One member of the family: diagonal forms with entries in [-2, 2] for n <= 3, the flip and the transposition."""
    return STRUCTURAL_RMATRICES[request.param]
