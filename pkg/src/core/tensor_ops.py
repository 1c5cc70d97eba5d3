"""R-matrices and linear operators on tensor powers of V = span(x_1..x_n).

Index conventions
-----------------
An R-matrix stores R^a_i^b_j at row (a, b), column (i, j); the braiding is
Psi(x_i (x) x_j) = sum x_b (x) x_a R^a_i^b_j. A word (i_1, ..., i_m) over
{1..n} has composite index sum (i_k - 1) n^(m-k), so words are ordered
big-endian.
"""

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import sympy

from .errors import DimensionMismatchError, SingularFactorialError
from .scalars import ONE, ZERO, RationalFunctionQ, ScalarLike, coerce

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
Vector = Tuple[RationalFunctionQ, ...]
SparseRow = Dict[int, RationalFunctionQ]


def index_of_word(word: Sequence[int], dim: int) -> int:
    """Composite index of a 1-based word."""
    index = 0
    for letter in word:
        if not 1 <= letter <= dim:
            raise DimensionMismatchError(f"letter {letter} outside 1..{dim}")
        index = index * dim + (letter - 1)
    return index


def word_of_index(index: int, dim: int, degree: int) -> Word:
    """Inverse of index_of_word."""
    letters = []
    for _ in range(degree):
        index, digit = divmod(index, dim)
        letters.append(digit + 1)
    return tuple(reversed(letters))


def all_words(dim: int, degree: int) -> List[Word]:
    """Every word of the given length, in composite-index order."""
    return [tuple(w) for w in product(range(1, dim + 1), repeat=degree)]


@dataclass(frozen=True)
class RMatrix:
    """An n^2 x n^2 matrix R^a_i^b_j over Q(q).

    ``checked`` records that the Yang-Baxter equation was verified; it does
    not take part in equality.
    """

    dim: int
    entries: Tuple[Tuple[RationalFunctionQ, ...], ...]
    checked: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        side = self.dim * self.dim
        if self.dim < 1:
            raise DimensionMismatchError("R-matrix dimension must be positive")
        if len(self.entries) != side or any(len(row) != side for row in self.entries):
            raise DimensionMismatchError(
                f"R-matrix of dimension {self.dim} needs {side}x{side} entries"
            )

    @classmethod
    def from_rows(
        cls, dim: int, rows: Sequence[Sequence[ScalarLike]], checked: bool = False
    ) -> "RMatrix":
        return cls(dim, tuple(tuple(coerce(v) for v in row) for row in rows), checked)

    @classmethod
    def identity(cls, dim: int) -> "RMatrix":
        side = dim * dim
        rows = [[ONE if r == c else ZERO for c in range(side)] for r in range(side)]
        return cls.from_rows(dim, rows, checked=True)

    def entry(self, a: int, i: int, b: int, j: int) -> RationalFunctionQ:
        """R^a_i^b_j with 1-based letters."""
        n = self.dim
        return self.entries[(a - 1) * n + (b - 1)][(i - 1) * n + (j - 1)]

    def transpose(self) -> "RMatrix":
        side = self.dim * self.dim
        rows = [[self.entries[c][r] for c in range(side)] for r in range(side)]
        return RMatrix(self.dim, tuple(tuple(row) for row in rows), self.checked)

    def mark_checked(self) -> "RMatrix":
        return replace(self, checked=True)

    def is_letter_preserving(self) -> bool:
        """True when every nonzero entry has {a, b} = {i, j} as multisets."""
        n = self.dim
        for row in range(n * n):
            a, b = divmod(row, n)
            for col in range(n * n):
                if self.entries[row][col]:
                    i, j = divmod(col, n)
                    if sorted((a, b)) != sorted((i, j)):
                        return False
        return True

    def local_operator(self, braided: bool = True) -> Dict[Tuple[int, int], List[Tuple[Tuple[int, int], RationalFunctionQ]]]:
        """Columns of Psi = P o R (or of R) on V (x) V, with 0-based letters.

        Maps an input pair (i, j) to the list of (output pair, coefficient).
        """
        n = self.dim
        columns: Dict[Tuple[int, int], List[Tuple[Tuple[int, int], RationalFunctionQ]]] = {}
        for col in range(n * n):
            i, j = divmod(col, n)
            outputs = []
            for row in range(n * n):
                value = self.entries[row][col]
                if value:
                    a, b = divmod(row, n)
                    outputs.append(((b, a) if braided else (a, b), value))
            columns[(i, j)] = outputs
        return columns


def flip(dim: int) -> RMatrix:
    """The permutation solution R^a_i^b_j = delta^a_j delta^b_i, whose braiding is the identity."""
    side = dim * dim
    rows = [[ZERO] * side for _ in range(side)]
    for a in range(dim):
        for b in range(dim):
            rows[a * dim + b][b * dim + a] = ONE
    return RMatrix.from_rows(dim, rows, checked=True)


def from_bilinear_form(beta: Sequence[Sequence[int]]) -> RMatrix:
    """Diagonal R with R^i_j^k_l = delta^i_j delta^k_l q^(beta_jl).

    Args:
        beta: Square integer matrix

    Returns:
        A checked RMatrix; diagonal matrices always solve Yang-Baxter
    """
    dim = len(beta)
    if dim == 0 or any(len(row) != dim for row in beta):
        raise DimensionMismatchError("bilinear form must be a non-empty square matrix")
    side = dim * dim
    rows = [[ZERO] * side for _ in range(side)]
    for i in range(dim):
        for j in range(dim):
            rows[i * dim + j][i * dim + j] = RationalFunctionQ.q(int(beta[i][j]))
    return RMatrix.from_rows(dim, rows, checked=True)


@dataclass(frozen=True, eq=True)
class GradedOperator:
    """Sparse n^m x n^m matrix acting on the degree-m tensor power.

    ``entries`` maps (row, col) to a nonzero scalar; absent keys are zero.
    """

    dim: int
    degree: int
    entries: Mapping[Tuple[int, int], RationalFunctionQ]

    __hash__ = None  # type: ignore[assignment]

    @property
    def side(self) -> int:
        return self.dim ** self.degree

    @classmethod
    def from_entries(
        cls, dim: int, degree: int, entries: Mapping[Tuple[int, int], ScalarLike]
    ) -> "GradedOperator":
        cleaned = {}
        for key, value in entries.items():
            value = coerce(value)
            if value:
                cleaned[key] = value
        return cls(dim, degree, cleaned)

    @classmethod
    def from_dense(
        cls, dim: int, degree: int, rows: Sequence[Sequence[ScalarLike]]
    ) -> "GradedOperator":
        side = dim ** degree
        if len(rows) != side or any(len(row) != side for row in rows):
            raise DimensionMismatchError(f"expected a {side}x{side} matrix")
        return cls.from_entries(
            dim, degree, {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row)}
        )

    def entry(self, row: int, col: int) -> RationalFunctionQ:
        return self.entries.get((row, col), ZERO)

    def word_entry(self, row_word: Sequence[int], col_word: Sequence[int]) -> RationalFunctionQ:
        return self.entry(index_of_word(row_word, self.dim), index_of_word(col_word, self.dim))

    def rows(self) -> List[SparseRow]:
        result: List[SparseRow] = [dict() for _ in range(self.side)]
        for (r, c), value in self.entries.items():
            result[r][c] = value
        return result

    def columns(self) -> List[SparseRow]:
        result: List[SparseRow] = [dict() for _ in range(self.side)]
        for (r, c), value in self.entries.items():
            result[c][r] = value
        return result

    def to_dense(self) -> List[List[RationalFunctionQ]]:
        dense = [[ZERO] * self.side for _ in range(self.side)]
        for (r, c), value in self.entries.items():
            dense[r][c] = value
        return dense

    def transpose(self) -> "GradedOperator":
        return GradedOperator(self.dim, self.degree, {(c, r): v for (r, c), v in self.entries.items()})

    def is_identity(self) -> bool:
        return self == identity(self.dim, self.degree)

    def __add__(self, other: "GradedOperator") -> "GradedOperator":
        _require_same_shape(self, other)
        result = dict(self.entries)
        for key, value in other.entries.items():
            total = result.get(key, ZERO) + value
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return GradedOperator(self.dim, self.degree, result)

    def __sub__(self, other: "GradedOperator") -> "GradedOperator":
        return self + other.scale(-1)

    def scale(self, factor: ScalarLike) -> "GradedOperator":
        factor = coerce(factor)
        if not factor:
            return GradedOperator(self.dim, self.degree, {})
        return GradedOperator(
            self.dim, self.degree, {k: v * factor for k, v in self.entries.items()}
        )

    def apply(self, vector: Mapping[int, RationalFunctionQ]) -> SparseRow:
        """Matrix times a sparse column vector."""
        columns = self.columns()
        result: SparseRow = {}
        for col, coeff in vector.items():
            for row, value in columns[col].items():
                total = result.get(row, ZERO) + value * coeff
                if total:
                    result[row] = total
                else:
                    result.pop(row, None)
        return result


def _require_same_shape(a: GradedOperator, b: GradedOperator) -> None:
    if a.dim != b.dim or a.degree != b.degree:
        raise DimensionMismatchError(
            f"operator shapes differ: (n={a.dim}, m={a.degree}) vs (n={b.dim}, m={b.degree})"
        )


def identity(dim: int, degree: int) -> GradedOperator:
    return GradedOperator(dim, degree, {(k, k): ONE for k in range(dim ** degree)})


def zero(dim: int, degree: int) -> GradedOperator:
    return GradedOperator(dim, degree, {})


def compose(a: GradedOperator, b: GradedOperator) -> GradedOperator:
    """The product a o b (apply b first)."""
    _require_same_shape(a, b)
    b_rows = b.rows()
    result: Dict[Tuple[int, int], RationalFunctionQ] = {}
    for (r, k), left in a.entries.items():
        for c, right in b_rows[k].items():
            key = (r, c)
            result[key] = result.get(key, ZERO) + left * right
    return GradedOperator(a.dim, a.degree, {k: v for k, v in result.items() if v})


def compose_all(operators: Iterable[GradedOperator]) -> GradedOperator:
    """Compose left to right: compose_all([A, B, C]) = A o B o C."""
    operators = list(operators)
    if not operators:
        raise ValueError("nothing to compose")
    result = operators[0]
    for op in operators[1:]:
        result = compose(result, op)
    return result


def embed_at(R: RMatrix, position: int, degree: int, braided: bool = True) -> GradedOperator:
    """Place Psi = P o R (or R itself) on slots position, position + 1.

    Args:
        R: The R-matrix
        position: 1-based slot of the left factor, 1 <= position <= degree - 1
        degree: Number of tensor factors
        braided: Embed the braiding Psi when True, the bare R otherwise
    """
    if not 1 <= position <= degree - 1:
        raise DimensionMismatchError(f"slot {position} invalid for degree {degree}")
    n = R.dim
    local = R.local_operator(braided)
    left = n ** (position - 1)
    right = n ** (degree - position - 1)
    entries: Dict[Tuple[int, int], RationalFunctionQ] = {}
    for head in range(left):
        for (i, j), outputs in local.items():
            for tail in range(right):
                col = ((head * n + i) * n + j) * right + tail
                for (x, y), value in outputs:
                    row = ((head * n + x) * n + y) * right + tail
                    entries[(row, col)] = value
    return GradedOperator(n, degree, entries)


def tensor_product(a: GradedOperator, b: GradedOperator) -> GradedOperator:
    """Kronecker product a (x) b acting on degree a.degree + b.degree."""
    if a.dim != b.dim:
        raise DimensionMismatchError("tensor factors must share the dimension")
    side_b = b.side
    entries = {}
    for (ra, ca), va in a.entries.items():
        for (rb, cb), vb in b.entries.items():
            entries[(ra * side_b + rb, ca * side_b + cb)] = va * vb
    return GradedOperator(a.dim, a.degree + b.degree, entries)


def tensor_id(a: GradedOperator, left: int, right: int) -> GradedOperator:
    """id^(left) (x) a (x) id^(right)."""
    result = a
    if left:
        result = tensor_product(identity(a.dim, left), result)
    if right:
        result = tensor_product(result, identity(a.dim, right))
    return result


def rmatrix_as_operator(R: RMatrix) -> GradedOperator:
    """R itself as a degree-2 operator."""
    return embed_at(R, 1, 2, braided=False)


@dataclass
class YangBaxterResult:
    """Outcome of a Yang-Baxter (or braid relation) check."""

    passed: bool
    row: Optional[Word] = None
    col: Optional[Word] = None
    lhs: Optional[RationalFunctionQ] = None
    rhs: Optional[RationalFunctionQ] = None

    def __bool__(self) -> bool:
        return self.passed

    @property
    def component(self) -> Optional[Tuple[Word, Word, str, str]]:
        if self.passed:
            return None
        return (self.row, self.col, str(self.lhs), str(self.rhs))


def _first_difference(lhs: GradedOperator, rhs: GradedOperator) -> YangBaxterResult:
    keys = sorted(set(lhs.entries) | set(rhs.entries))
    for row, col in keys:
        left, right = lhs.entry(row, col), rhs.entry(row, col)
        if left != right:
            return YangBaxterResult(
                False,
                word_of_index(row, lhs.dim, lhs.degree),
                word_of_index(col, lhs.dim, lhs.degree),
                left,
                right,
            )
    return YangBaxterResult(True)


def _r13(R: RMatrix) -> GradedOperator:
    n = R.dim
    base = rmatrix_as_operator(R)
    entries = {}
    for (row, col), value in base.entries.items():
        a, b = divmod(row, n)
        i, j = divmod(col, n)
        for middle in range(n):
            entries[((a * n + middle) * n + b, (i * n + middle) * n + j)] = value
    return GradedOperator(n, 3, entries)


def yang_baxter_check(R: RMatrix) -> YangBaxterResult:
    """Compare R12 R13 R23 with R23 R13 R12 on V (x) V (x) V.

    Returns:
        YangBaxterResult; on failure it carries the first differing
        component in (row, column) order with both side values
    """
    r12 = embed_at(R, 1, 3, braided=False)
    r23 = embed_at(R, 2, 3, braided=False)
    r13 = _r13(R)
    lhs = compose_all([r12, r13, r23])
    rhs = compose_all([r23, r13, r12])
    result = _first_difference(lhs, rhs)
    logger.debug("Yang-Baxter check on n=%d: %s", R.dim, result.passed)
    return result


def braid_relation_check(R: RMatrix) -> YangBaxterResult:
    """Compare Psi1 Psi2 Psi1 with Psi2 Psi1 Psi2 in degree 3."""
    psi1 = embed_at(R, 1, 3)
    psi2 = embed_at(R, 2, 3)
    return _first_difference(compose_all([psi1, psi2, psi1]), compose_all([psi2, psi1, psi2]))


# Exact elimination over Q(q)


def _pick_pivot(rows: List[SparseRow], candidates: List[int], col: int) -> int:
    return min(candidates, key=lambda r: (rows[r][col].term_count(), r))


def row_reduce(rows: List[SparseRow], ncols: int) -> Tuple[List[SparseRow], List[int]]:
    """Reduced row echelon form of a sparse matrix over Q(q).

    Pivots within a column are chosen by fewest stored monomials.

    Returns:
        (pivot rows normalized to 1 at their pivot, pivot columns)
    """
    work = [dict(row) for row in rows if row]
    pivots: List[int] = []
    reduced: List[SparseRow] = []
    for col in range(ncols):
        candidates = [r for r, row in enumerate(work) if col in row]
        if not candidates:
            continue
        chosen = _pick_pivot(work, candidates, col)
        pivot_row = work.pop(chosen)
        inverse = pivot_row[col].inverse()
        pivot_row = {c: v * inverse for c, v in pivot_row.items()}
        for r, row in enumerate(work):
            factor = row.get(col)
            if factor:
                work[r] = _axpy(row, pivot_row, -factor)
        for r, row in enumerate(reduced):
            factor = row.get(col)
            if factor:
                reduced[r] = _axpy(row, pivot_row, -factor)
        reduced.append(pivot_row)
        pivots.append(col)
        work = [row for row in work if row]
    return reduced, pivots


def _axpy(target: SparseRow, source: SparseRow, factor: RationalFunctionQ) -> SparseRow:
    result = dict(target)
    for c, v in source.items():
        total = result.get(c, ZERO) + factor * v
        if total:
            result[c] = total
        else:
            result.pop(c, None)
    return result


def _kernel_of_rows(rows: List[SparseRow], ncols: int) -> List[SparseRow]:
    reduced, pivots = row_reduce(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector: SparseRow = {free: ONE}
        for row, pivot in zip(reduced, pivots):
            value = row.get(free)
            if value:
                vector[pivot] = -value
        basis.append(vector)
    return basis


def rank_over_field(a: GradedOperator) -> int:
    """Exact rank over Q(q) for generic q."""
    _, pivots = row_reduce(a.rows(), a.side)
    return len(pivots)


def kernel_basis(a: GradedOperator) -> List[Vector]:
    """Kernel vectors, one per free column of the reduced echelon form."""
    return [_densify(v, a.side) for v in _kernel_of_rows(a.rows(), a.side)]


def _densify(vector: Mapping[int, RationalFunctionQ], length: int) -> Vector:
    return tuple(vector.get(k, ZERO) for k in range(length))


def submatrix_rows(a: GradedOperator, indices: Sequence[int]) -> List[SparseRow]:
    """Rows and columns of a restricted to indices, relabelled 0..len-1."""
    position = {index: k for k, index in enumerate(indices)}
    rows = a.rows()
    return [
        {position[c]: v for c, v in rows[r].items() if c in position}
        for r in indices
    ]


def letter_blocks(dim: int, degree: int) -> Dict[Tuple[int, ...], List[int]]:
    """Group word indices by letter counts (the multidegree)."""
    blocks: Dict[Tuple[int, ...], List[int]] = {}
    for index, word in enumerate(all_words(dim, degree)):
        counts = tuple(word.count(letter) for letter in range(1, dim + 1))
        blocks.setdefault(counts, []).append(index)
    return blocks


def block_kernel(a: GradedOperator, indices: Sequence[int]) -> List[SparseRow]:
    """Kernel of the diagonal block on indices, as sparse vectors in global indexing."""
    local = _kernel_of_rows(submatrix_rows(a, indices), len(indices))
    return [{indices[k]: v for k, v in vector.items()} for vector in local]


def inverse(a: GradedOperator, blocks: Optional[Iterable[Sequence[int]]] = None) -> GradedOperator:
    """Exact inverse, optionally block by block.

    Args:
        a: Square operator
        blocks: Index sets on which a is block diagonal, or None for one block

    Raises:
        SingularFactorialError: If a is singular, carrying its degree and kernel dimension
    """
    if blocks is None:
        blocks = [list(range(a.side))]
    entries: Dict[Tuple[int, int], RationalFunctionQ] = {}
    kernel_dim = 0
    for indices in blocks:
        size = len(indices)
        augmented = [
            {**row, **{size + k: ONE}}
            for k, row in enumerate(submatrix_rows(a, indices))
        ]
        reduced, pivots = row_reduce(augmented, size)
        if len(pivots) < size:
            kernel_dim += size - len(pivots)
            continue
        for row, pivot in zip(reduced, pivots):
            for c, v in row.items():
                if c >= size:
                    entries[(indices[pivot], indices[c - size])] = v
    if kernel_dim:
        raise SingularFactorialError(a.degree, kernel_dim)
    return GradedOperator(a.dim, a.degree, entries)


def specialize(a: GradedOperator, point: Fraction) -> Dict[Tuple[int, int], Fraction]:
    """Evaluate every entry at q = point."""
    return {key: value.evaluate_at(point) for key, value in a.entries.items()}


def specialized_rank(a: GradedOperator, point: Fraction) -> int:
    """Rank of the operator at q = point, computed by sympy over QQ."""
    matrix = sympy.zeros(a.side, a.side)
    for (r, c), value in specialize(a, point).items():
        matrix[r, c] = sympy.Rational(value.numerator, value.denominator)
    return int(matrix.rank())
