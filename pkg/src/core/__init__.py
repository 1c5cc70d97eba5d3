"""Exact braided algebra: scalars, braided combinatorics, pairings and Lie bialgebras."""

from .scalars import RationalFunctionQ, LaurentPolyQ, parse_scalar
from .tensor_ops import RMatrix, GradedOperator, yang_baxter_check
from .free_algebra import FreeElement, TensorElement
from .calculus import RelationSet, graded_kernel, ranks_by_degree
from .lie import LieAlgebra, LieBialgebra, Representation, CheckReport
from .lie_constructions import BraidedLieBialgebra, InductionResult, induction_step

__all__ = [
    'RationalFunctionQ', 'LaurentPolyQ', 'parse_scalar',
    'RMatrix', 'GradedOperator', 'yang_baxter_check',
    'FreeElement', 'TensorElement',
    'RelationSet', 'graded_kernel', 'ranks_by_degree',
    'LieAlgebra', 'LieBialgebra', 'Representation', 'CheckReport',
    'BraidedLieBialgebra', 'InductionResult', 'induction_step',
]
