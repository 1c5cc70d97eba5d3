"""Braided differentiation, the evaluation pairing and its graded kernels.

A y-word W = (w_1, ..., w_m) pairs with x-words through the derivatives it
defines: ev(y^W, g) applies d^(w_m) first and d^(w_1) last, then takes the
constant term. Consequently ev(y^W, x_J) = [m;R]!^(rev W)_J.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import sympy

from .combinatorics import (
    braided_factorial,
    braided_factorial_inverse,
    braided_integer,
    braided_integer_right,
    check_side,
    require_checked,
)
from .errors import CartanDataError, DualityFlagError
from .free_algebra import FreeElement, TensorElement, _accumulate
from .scalars import ONE, ZERO, LaurentPolyQ, Q_SYMBOL, RationalFunctionQ
from .tensor_ops import (
    GradedOperator,
    RMatrix,
    block_kernel,
    from_bilinear_form,
    index_of_word,
    letter_blocks,
    word_of_index,
)

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


@lru_cache(maxsize=None)
def _columns(kind: str, m: int, R: RMatrix) -> Tuple[Dict[int, RationalFunctionQ], ...]:
    operator = braided_integer(m, R) if kind == "left" else braided_integer_right(m, R)
    return tuple(operator.columns())


def partial_left(i: int, f: FreeElement, R: RMatrix) -> FreeElement:
    """d^i x_(i_1..i_m) = x_(j_2..j_m) [m;R]^(i j_2..j_m)_(i_1..i_m); d^i(1) = 0."""
    R = require_checked(R)
    n = f.dim
    result: Dict[Word, RationalFunctionQ] = {}
    for word, coeff in f.terms.items():
        m = len(word)
        if m == 0:
            continue
        column = _columns("left", m, R)[index_of_word(word, n)]
        for row, value in column.items():
            image = word_of_index(row, n, m)
            if image[0] == i:
                _accumulate(result, image[1:], coeff * value)
    return FreeElement(n, result, f.dual)


def partial_right(i: int, f: FreeElement, R: RMatrix) -> FreeElement:
    """Right derivative f d<-^i, contracting the last letter after braiding it into place.

    x-words braid with Psi = P o R, y-words with the dual braiding P o R^T.
    """
    R = require_checked(R)
    braiding = R.transpose() if f.dual else R
    n = f.dim
    result: Dict[Word, RationalFunctionQ] = {}
    for word, coeff in f.terms.items():
        m = len(word)
        if m == 0:
            continue
        column = _columns("right", m, braiding)[index_of_word(word, n)]
        for row, value in column.items():
            image = word_of_index(row, n, m)
            if image[-1] == i:
                _accumulate(result, image[:-1], coeff * value)
    return FreeElement(n, result, f.dual)


def _require_pair(f: FreeElement, g: FreeElement) -> None:
    if not f.dual or g.dual:
        raise DualityFlagError("ev pairs a y-element with an x-element")


def ev_pairing(f: FreeElement, g: FreeElement, R: RMatrix) -> RationalFunctionQ:
    """ev(f(y), g(x)) = f(d) g(x) at x = 0."""
    _require_pair(f, g)
    total = ZERO
    for word, coeff in f.terms.items():
        current = g.homogeneous(len(word))
        for letter in reversed(word):
            if current.is_zero():
                break
            current = partial_left(letter, current, R)
        total = total + coeff * current.coefficient(())
    return total


def ev_right(f: FreeElement, g: FreeElement, R: RMatrix) -> RationalFunctionQ:
    """ev(f(y), g(x)) = f(y) g(d<-) at y = 0, letters of g acting first to last."""
    _require_pair(f, g)
    total = ZERO
    for word, coeff in g.terms.items():
        current = f.homogeneous(len(word))
        for letter in word:
            if current.is_zero():
                break
            current = partial_right(letter, current, R)
        total = total + coeff * current.coefficient(())
    return total


def ev_via_pi(f: FreeElement, g: FreeElement, R: RMatrix) -> RationalFunctionQ:
    """ev computed from the factorial matrix, sum of f_W g_J [m;R]!^(rev W)_J."""
    _require_pair(f, g)
    R = require_checked(R)
    total = ZERO
    for word, fc in f.terms.items():
        m = len(word)
        factorial = braided_factorial(m, R)
        row = index_of_word(tuple(reversed(word)), f.dim) if m else 0
        for target, gc in g.homogeneous(m).terms.items():
            col = index_of_word(target, g.dim) if m else 0
            total = total + fc * gc * factorial.entry(row, col)
    return total


def functional_value(phi: FreeElement, g: FreeElement) -> RationalFunctionQ:
    """Value of phi in the graded dual on g, with y^V dual to x_(rev V)."""
    _require_pair(phi, g)
    total = ZERO
    for word, coeff in phi.terms.items():
        total = total + coeff * g.coefficient(tuple(reversed(word)))
    return total


def gram_matrix(m: int, R: RMatrix) -> GradedOperator:
    """G[I, J] = ev(y^(rev I), x_J), computed by iterated left derivatives."""
    R = require_checked(R)
    n = R.dim
    entries: Dict[Tuple[int, int], RationalFunctionQ] = {}
    for col in range(n ** m):
        layer: Dict[Word, FreeElement] = {(): FreeElement.word(n, word_of_index(col, n, m))}
        for _ in range(m):
            next_layer: Dict[Word, FreeElement] = {}
            for prefix, element in layer.items():
                for letter in range(1, n + 1):
                    image = partial_left(letter, element, R)
                    if not image.is_zero():
                        next_layer[prefix + (letter,)] = image
            layer = next_layer
        for prefix, element in layer.items():
            value = element.coefficient(())
            if value:
                entries[(index_of_word(prefix, n) if m else 0, col)] = value
    return GradedOperator(n, m, entries)


def normalize_relation(
    vector: Mapping[int, RationalFunctionQ], order: Optional[Sequence[int]] = None
) -> Dict[int, RationalFunctionQ]:
    """Scale a kernel vector to its canonical representative.

    Denominators are cleared and the content removed; the leading entry (first
    in order, or lowest index when order is None) then has lowest q-exponent 0
    and all coefficients are coprime integers with the leading entry's first
    coefficient positive.
    """
    position = {k: p for p, k in enumerate(order)} if order is not None else {}
    items = sorted(((k, v) for k, v in vector.items() if v), key=lambda kv: position.get(kv[0], kv[0]))
    if not items:
        return {}
    common = reduce(sympy.lcm, (v.denominator.to_poly() for _, v in items))
    scale = RationalFunctionQ.from_laurent(LaurentPolyQ.from_poly(common))
    polys = {k: (v * scale).numerator for k, v in items}
    low = min(p.min_exponent for p in polys.values())
    shifted = {k: p.shift(-low).to_poly() for k, p in polys.items()}
    content = reduce(sympy.gcd, shifted.values())
    polys = {k: LaurentPolyQ.from_poly(p.exquo(content)).shift(low) for k, p in shifted.items()}
    lead = polys[items[0][0]]
    polys = {k: p.shift(-lead.min_exponent) for k, p in polys.items()}

    coefficients = [c for p in polys.values() for _, c in p.terms]
    denominator_lcm = math.lcm(*(c.denominator for c in coefficients))
    numerator_gcd = math.gcd(*((c * denominator_lcm).numerator for c in coefficients))
    factor = Fraction(denominator_lcm, numerator_gcd)
    if polys[items[0][0]].terms[0][1] < 0:
        factor = -factor
    return {k: RationalFunctionQ.from_laurent(p.scale(factor)) for k, p in polys.items()}


@dataclass
class RelationSet:
    """Kernel of the pairing in one degree."""

    degree: int
    generators: List[FreeElement]
    rank: int
    kernel_dim: int
    multidegrees: List[Tuple[int, ...]] = field(default_factory=list)

    def is_sound(self, gram: GradedOperator) -> bool:
        """Every generator is annihilated by the Gram matrix."""
        for generator in self.generators:
            vector = {
                index_of_word(word, gram.dim) if word else 0: coeff
                for word, coeff in generator.terms.items()
            }
            if gram.apply(vector):
                return False
        return True


def revlex_order(indices: Sequence[int], n: int, m: int) -> List[int]:
    """Word indices sorted reverse-lexicographically, comparing words from their last letter."""
    return sorted(indices, key=lambda k: tuple(reversed(word_of_index(k, n, m))))


def graded_kernel(m: int, R: RMatrix, max_side: Optional[int] = None) -> RelationSet:
    """Kernel of the degree-m pairing as normalized relations.

    Letter-preserving R-matrices are handled block by block on letter counts.
    Columns are eliminated in reverse-lexicographic word order, so each
    relation leads with its revlex-smallest word.

    Raises:
        TruncationCapError: If n^m exceeds max_side
    """
    R = require_checked(R)
    n = R.dim
    check_side(n, m, max_side)
    gram = braided_factorial(m, R)
    if R.is_letter_preserving():
        blocks = sorted(letter_blocks(n, m).items())
    else:
        blocks = [((), list(range(n ** m)))]
    generators: List[FreeElement] = []
    multidegrees: List[Tuple[int, ...]] = []
    for multidegree, indices in blocks:
        indices = revlex_order(indices, n, m)
        for vector in block_kernel(gram, indices):
            normalized = normalize_relation(vector, indices)
            generators.append(FreeElement(
                n, {word_of_index(k, n, m): v for k, v in normalized.items()}
            ))
            multidegrees.append(multidegree)
    kernel_dim = len(generators)
    logger.debug("degree %d kernel: %d of %d", m, kernel_dim, n ** m)
    return RelationSet(m, generators, n ** m - kernel_dim, kernel_dim, multidegrees)


def graded_rank(m: int, R: RMatrix, max_side: Optional[int] = None) -> int:
    return graded_kernel(m, R, max_side).rank


def ranks_by_degree(R: RMatrix, max_degree: int, max_side: Optional[int] = None) -> List[int]:
    return [graded_rank(m, R, max_side) for m in range(max_degree + 1)]


def validate_cartan(cartan: Sequence[Sequence[int]], symmetrizers: Sequence[int]) -> None:
    """Raise CartanDataError unless (cartan, symmetrizers) is symmetrizable Cartan data."""
    size = len(cartan)
    if size == 0 or any(len(row) != size for row in cartan):
        raise CartanDataError("Cartan matrix must be square and non-empty")
    if len(symmetrizers) != size:
        raise CartanDataError("need one symmetrizer per node")
    if any(d <= 0 for d in symmetrizers):
        raise CartanDataError("symmetrizers must be positive")
    for i in range(size):
        if cartan[i][i] != 2:
            raise CartanDataError(f"diagonal entry a_{i + 1}{i + 1} must be 2")
        for j in range(size):
            if i != j and cartan[i][j] > 0:
                raise CartanDataError("off-diagonal entries must be non-positive")
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise CartanDataError("a_ij = 0 must imply a_ji = 0")
            if symmetrizers[i] * cartan[i][j] != symmetrizers[j] * cartan[j][i]:
                raise CartanDataError("d_i a_ij must be symmetric")


def symmetrized_form(cartan: Sequence[Sequence[int]], symmetrizers: Sequence[int]) -> List[List[int]]:
    """beta_ij = d_i a_ij."""
    validate_cartan(cartan, symmetrizers)
    return [[symmetrizers[i] * cartan[i][j] for j in range(len(cartan))] for i in range(len(cartan))]


def serre_relations(
    cartan: Sequence[Sequence[int]],
    symmetrizers: Sequence[int],
    max_degree: int,
    max_side: Optional[int] = None,
) -> List[RelationSet]:
    """Relation sets of U_q(n+) for degrees 0..max_degree."""
    R = from_bilinear_form(symmetrized_form(cartan, symmetrizers))
    return [graded_kernel(m, R, max_side) for m in range(max_degree + 1)]


def serre_multidegree(cartan: Sequence[Sequence[int]], i: int, j: int) -> Tuple[int, ...]:
    """Letter counts of the q-Serre relation (1 - a_ij) alpha_i + alpha_j (0-based nodes)."""
    counts = [0] * len(cartan)
    counts[i] += 1 - cartan[i][j]
    counts[j] += 1
    return tuple(counts)


def positive_roots(cartan: Sequence[Sequence[int]], max_height: int) -> List[Tuple[int, ...]]:
    """Positive roots up to max_height in the simple-root basis, by root strings."""
    size = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(size)) for i in range(size)]
    roots = set(simple)
    layer = list(simple)
    for _ in range(max_height - 1):
        next_layer = []
        for root in layer:
            for i in range(size):
                if root == simple[i]:
                    continue
                down = 0
                probe = list(root)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in roots:
                        down += 1
                    else:
                        break
                pairing = sum(root[j] * cartan[i][j] for j in range(size))
                if down - pairing > 0:
                    raised = tuple(root[k] + (1 if k == i else 0) for k in range(size))
                    if raised not in roots:
                        roots.add(raised)
                        next_layer.append(raised)
        layer = next_layer
    return sorted(roots, key=lambda r: (sum(r), r))


def pbw_dimensions(cartan: Sequence[Sequence[int]], max_degree: int) -> List[int]:
    """Coefficients of prod over positive roots of 1/(1 - t^height), up to t^max_degree."""
    series = [1] + [0] * max_degree
    for root in positive_roots(cartan, max(max_degree, 1)):
        height = sum(root)
        for k in range(height, max_degree + 1):
            series[k] += series[k - height]
    return series


def braided_exp(R: RMatrix, truncation: int, max_side: Optional[int] = None) -> TensorElement:
    """Truncated coevaluation sum x_K (x) y^W ([m;R]!^-1)^K_(rev W) over m <= truncation.

    Raises:
        SingularFactorialError: At the first degree whose factorial is singular
        TruncationCapError: If n^truncation exceeds max_side
    """
    R = require_checked(R)
    n = R.dim
    check_side(n, truncation, max_side)
    terms: Dict[Tuple[Word, Word], RationalFunctionQ] = {((), ()): ONE}
    for m in range(1, truncation + 1):
        inverse_factorial = braided_factorial_inverse(m, R)
        for (row, col), value in inverse_factorial.entries.items():
            x_word = word_of_index(row, n, m)
            y_word = tuple(reversed(word_of_index(col, n, m)))
            terms[(x_word, y_word)] = value
    return TensorElement(n, terms, left_dual=False, right_dual=True)


def _map_leg(element: TensorElement, leg: int, fn) -> Dict[Tuple[Word, Word], RationalFunctionQ]:
    result: Dict[Tuple[Word, Word], RationalFunctionQ] = {}
    dual = element.right_dual if leg else element.left_dual
    for (left, right), coeff in element.terms.items():
        source = right if leg else left
        image = fn(FreeElement.word(element.dim, source, 1, dual))
        for word, value in image.terms.items():
            key = (left, word) if leg else (word, right)
            _accumulate(result, key, coeff * value)
    return result


def exp_eigenfunction_check(R: RMatrix, truncation: int, max_side: Optional[int] = None) -> bool:
    """Check the eigen-equations of the truncated exponential.

    d^i on the x-leg of exp_N equals exp_(N-1) with y^i appended to the y-leg,
    and d<-^j on the y-leg equals exp_(N-1) with x_j prepended to the x-leg.
    """
    if truncation <= 0:
        return True
    R = require_checked(R)
    full = braided_exp(R, truncation, max_side)
    shorter = braided_exp(R, truncation - 1, max_side)
    for letter in range(1, R.dim + 1):
        lhs = _map_leg(full, 0, lambda f: partial_left(letter, f, R))
        rhs = {(x, y + (letter,)): c for (x, y), c in shorter.terms.items()}
        if lhs != rhs:
            logger.debug("left eigen-equation fails for letter %d", letter)
            return False
        lhs = _map_leg(full, 1, lambda f: partial_right(letter, f, R))
        rhs = {((letter,) + x, y): c for (x, y), c in shorter.terms.items()}
        if lhs != rhs:
            logger.debug("right eigen-equation fails for letter %d", letter)
            return False
    return True
