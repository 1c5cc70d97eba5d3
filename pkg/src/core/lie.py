"""Finite-dimensional Lie bialgebras over Q and their structural checks."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import sympy

logger = logging.getLogger(__name__)

Vector = Dict[int, Fraction]
Tensor2 = Dict[Tuple[int, int], Fraction]
Tensor3 = Dict[Tuple[int, int, int], Fraction]
Rational = Union[int, Fraction]


def _add(target: Dict, key, value: Fraction) -> None:
    total = target.get(key, Fraction(0)) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def to_sympy(value: Fraction) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value: sympy.Expr) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def add_tensors(*tensors: Dict) -> Dict:
    result: Dict = {}
    for tensor in tensors:
        for key, value in tensor.items():
            _add(result, key, value)
    return result


def scale_tensor(tensor: Dict, factor: Rational) -> Dict:
    factor = Fraction(factor)
    if not factor:
        return {}
    return {key: value * factor for key, value in tensor.items()}


def flip_tensor(tensor: Tensor2) -> Tensor2:
    return {(b, a): value for (a, b), value in tensor.items()}


def outer(x: Vector, y: Vector) -> Tensor2:
    result: Tensor2 = {}
    for a, ca in x.items():
        for b, cb in y.items():
            _add(result, (a, b), ca * cb)
    return result


def basis_vector(index: int) -> Vector:
    return {index: Fraction(1)}


@dataclass
class LieAlgebra:
    """Structure constants [e_i, e_j] = sum_k c^k_ij e_k, stored for both orders."""

    dim: int
    structure: Dict[Tuple[int, int], Vector] = field(default_factory=dict)
    labels: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.labels:
            self.labels = tuple(f"e{k}" for k in range(self.dim))
        if len(self.labels) != self.dim:
            raise ValueError("need one label per basis element")

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Iterable[Tuple[int, int, int, Rational]],
        labels: Sequence[str] = (),
    ) -> "LieAlgebra":
        """Build from entries (i, j, k, c) meaning [e_i, e_j] has c e_k; [e_j, e_i] is implied.

        Raises:
            ValueError: On out-of-range indices, [e_i, e_i] entries or both orders given
        """
        structure: Dict[Tuple[int, int], Vector] = {}
        given = set()
        for i, j, k, coeff in brackets:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise ValueError(f"bracket index out of range: {(i, j, k)}")
            if i == j:
                raise ValueError(f"[e_{i}, e_{i}] must vanish")
            if (j, i, k) in given:
                raise ValueError(f"bracket ({i}, {j}) -> {k} given in both orders")
            given.add((i, j, k))
            coeff = Fraction(coeff)
            _add(structure.setdefault((i, j), {}), k, coeff)
            _add(structure.setdefault((j, i), {}), k, -coeff)
        structure = {key: value for key, value in structure.items() if value}
        return cls(dim, structure, tuple(labels))

    @classmethod
    def abelian(cls, dim: int, labels: Sequence[str] = ()) -> "LieAlgebra":
        return cls(dim, {}, tuple(labels))

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.structure.get((i, j), {})

    def bracket(self, x: Vector, y: Vector) -> Vector:
        result: Vector = {}
        for i, ci in x.items():
            for j, cj in y.items():
                for k, ck in self.bracket_basis(i, j).items():
                    _add(result, k, ci * cj * ck)
        return result

    def bracket_entries(self) -> List[Tuple[int, int, int, Fraction]]:
        """Entries with i < j, the inverse of from_brackets."""
        return sorted(
            (i, j, k, c)
            for (i, j), vector in self.structure.items()
            if i < j
            for k, c in vector.items()
        )

    def ad_matrix(self, x: Union[int, Vector]) -> sympy.Matrix:
        """Matrix of ad_x; column j holds [x, e_j]."""
        vector = basis_vector(x) if isinstance(x, int) else x
        matrix = sympy.zeros(self.dim, self.dim)
        for j in range(self.dim):
            for k, value in self.bracket(vector, basis_vector(j)).items():
                matrix[k, j] = to_sympy(value)
        return matrix

    def ad_tensor(self, x: Vector, tensor: Tensor2) -> Tensor2:
        """ad_x on g (x) g: [x, a] (x) b + a (x) [x, b]."""
        result: Tensor2 = {}
        for (a, b), value in tensor.items():
            for k, c in self.bracket(x, basis_vector(a)).items():
                _add(result, (k, b), value * c)
            for k, c in self.bracket(x, basis_vector(b)).items():
                _add(result, (a, k), value * c)
        return result


Cobracket = Dict[int, Tensor2]


@dataclass
class LieBialgebra:
    """A Lie algebra with cobracket and, when quasitriangular, its r-matrix."""

    algebra: LieAlgebra
    cobracket: Cobracket = field(default_factory=dict)
    r: Optional[Tensor2] = None
    metadata: Dict[str, object] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.algebra.labels

    def delta(self, x: Vector) -> Tensor2:
        result: Tensor2 = {}
        for i, ci in x.items():
            for key, value in self.cobracket.get(i, {}).items():
                _add(result, key, ci * value)
        return result

    def casimir(self) -> Tensor2:
        """2 r_+ = r + tau(r)."""
        r = self.r or {}
        return add_tensors(r, flip_tensor(r))

    def r_plus(self) -> Tensor2:
        return scale_tensor(self.casimir(), Fraction(1, 2))


def cobracket_from_r(algebra: LieAlgebra, r: Tensor2) -> Cobracket:
    """delta(x) = ad_x(r) on each basis element."""
    cobracket: Cobracket = {}
    for i in range(algebra.dim):
        value = algebra.ad_tensor(basis_vector(i), r)
        if value:
            cobracket[i] = value
    return cobracket


@dataclass
class Representation:
    """Action matrices rho(e_i) over Q, one per basis element of the algebra."""

    carrier_dim: int
    matrices: List[sympy.Matrix]

    def __post_init__(self) -> None:
        for matrix in self.matrices:
            if matrix.shape != (self.carrier_dim, self.carrier_dim):
                raise ValueError(
                    f"action matrix of shape {matrix.shape} on a {self.carrier_dim}-dim carrier"
                )

    @classmethod
    def from_rows(cls, carrier_dim: int, rows: Sequence[Sequence[Sequence[Rational]]]) -> "Representation":
        return cls(
            carrier_dim,
            [sympy.Matrix([[to_sympy(v) for v in row] for row in matrix]) if carrier_dim
             else sympy.zeros(0, 0) for matrix in rows],
        )

    @classmethod
    def adjoint(cls, algebra: LieAlgebra) -> "Representation":
        return cls(algebra.dim, [algebra.ad_matrix(i) for i in range(algebra.dim)])

    @classmethod
    def trivial(cls, algebra_dim: int, carrier_dim: int = 1) -> "Representation":
        return cls(carrier_dim, [sympy.zeros(carrier_dim, carrier_dim) for _ in range(algebra_dim)])

    def action_matrix(self, x: Vector) -> sympy.Matrix:
        matrix = sympy.zeros(self.carrier_dim, self.carrier_dim)
        for i, c in x.items():
            matrix += to_sympy(c) * self.matrices[i]
        return matrix

    def act(self, i: int, v: Vector) -> Vector:
        """rho(e_i) applied to a sparse carrier vector."""
        matrix = self.matrices[i]
        result: Vector = {}
        for j, cj in v.items():
            for k in range(self.carrier_dim):
                entry = matrix[k, j]
                if entry != 0:
                    _add(result, k, cj * from_sympy(entry))
        return result

    def dual(self) -> "Representation":
        """The contragredient action -rho(e_i)^T on the dual basis."""
        return Representation(self.carrier_dim, [-m.T for m in self.matrices])

    def homomorphism_violation(self, algebra: LieAlgebra) -> Optional[Tuple[int, int]]:
        """First basis pair (i, j) with rho([e_i, e_j]) != [rho(e_i), rho(e_j)]."""
        if len(self.matrices) != algebra.dim:
            return (-1, -1)
        for i, j in combinations(range(algebra.dim), 2):
            lhs = self.action_matrix(algebra.bracket_basis(i, j))
            rhs = self.matrices[i] * self.matrices[j] - self.matrices[j] * self.matrices[i]
            if lhs != rhs:
                return (i, j)
        return None


@dataclass
class CheckItem:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CheckReport:
    """Named verification results; constructions raise, checks report."""

    title: str
    items: List[CheckItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def __bool__(self) -> bool:
        return self.passed

    def add(self, name: str, violation: object, describe=None) -> None:
        if violation is None:
            self.items.append(CheckItem(name, True))
        else:
            detail = describe(violation) if describe else f"first violation at {violation}"
            self.items.append(CheckItem(name, False, detail))

    def failures(self) -> List[CheckItem]:
        return [item for item in self.items if not item.passed]

    def get(self, name: str) -> CheckItem:
        for item in self.items:
            if item.name == name:
                return item
        raise KeyError(name)

    def merge(self, other: "CheckReport", prefix: str = "") -> None:
        for item in other.items:
            self.items.append(CheckItem(prefix + item.name, item.passed, item.detail))


# Individual checks return None when they pass, or the first failing component.


def antisymmetry_violation(algebra: LieAlgebra) -> Optional[Tuple[int, int]]:
    for (i, j), vector in algebra.structure.items():
        if i == j and vector:
            return (i, j)
        if add_tensors(vector, algebra.bracket_basis(j, i)):
            return (i, j)
    return None


def jacobi_violation(algebra: LieAlgebra) -> Optional[Tuple[int, int, int]]:
    for i, j, k in combinations(range(algebra.dim), 3):
        ei, ej, ek = basis_vector(i), basis_vector(j), basis_vector(k)
        total = add_tensors(
            algebra.bracket(ei, algebra.bracket(ej, ek)),
            algebra.bracket(ej, algebra.bracket(ek, ei)),
            algebra.bracket(ek, algebra.bracket(ei, ej)),
        )
        if total:
            return (i, j, k)
    return None


def co_antisymmetry_violation(cobracket: Cobracket) -> Optional[int]:
    for i, tensor in sorted(cobracket.items()):
        if add_tensors(tensor, flip_tensor(tensor)):
            return i
    return None


def _cyclic_sum(tensor: Tensor3) -> Tensor3:
    result: Tensor3 = {}
    for (a, b, c), value in tensor.items():
        _add(result, (a, b, c), value)
        _add(result, (c, a, b), value)
        _add(result, (b, c, a), value)
    return result


def co_jacobi_violation(dim: int, cobracket: Cobracket) -> Optional[int]:
    """First basis index where the cyclic sum of (delta (x) id) delta is nonzero."""
    for i in range(dim):
        iterated: Tensor3 = {}
        for (a, b), value in cobracket.get(i, {}).items():
            for (p, q), inner in cobracket.get(a, {}).items():
                _add(iterated, (p, q, b), value * inner)
        if _cyclic_sum(iterated):
            return i
    return None


def cybe_tensor(algebra: LieAlgebra, r: Tensor2) -> Tensor3:
    """[r12, r13] + [r12, r23] + [r13, r23]."""
    result: Tensor3 = {}
    for (i, j), a in r.items():
        for (k, l), b in r.items():
            for m, c in algebra.bracket_basis(i, k).items():
                _add(result, (m, j, l), a * b * c)
            for m, c in algebra.bracket_basis(j, k).items():
                _add(result, (i, m, l), a * b * c)
            for m, c in algebra.bracket_basis(j, l).items():
                _add(result, (i, k, m), a * b * c)
    return result


def cybe_violation(algebra: LieAlgebra, r: Tensor2) -> Optional[Tuple[Tuple[int, int, int], Fraction]]:
    tensor = cybe_tensor(algebra, r)
    if not tensor:
        return None
    key = min(tensor)
    return key, tensor[key]


def coboundary_violation(algebra: LieAlgebra, cobracket: Cobracket, r: Tensor2) -> Optional[int]:
    expected = cobracket_from_r(algebra, r)
    for i in range(algebra.dim):
        if add_tensors(cobracket.get(i, {}), scale_tensor(expected.get(i, {}), -1)):
            return i
    return None


def invariance_violation(algebra: LieAlgebra, tensor: Tensor2) -> Optional[int]:
    """First basis element x with ad_x(tensor) != 0."""
    for i in range(algebra.dim):
        if algebra.ad_tensor(basis_vector(i), tensor):
            return i
    return None


def compatibility_violation(algebra: LieAlgebra, cobracket: Cobracket) -> Optional[Tuple[int, int]]:
    """First pair with delta([x, y]) != ad_x delta(y) - ad_y delta(x)."""
    bialgebra = LieBialgebra(algebra, cobracket)
    for i, j in combinations(range(algebra.dim), 2):
        x, y = basis_vector(i), basis_vector(j)
        lhs = bialgebra.delta(algebra.bracket(x, y))
        rhs = add_tensors(
            algebra.ad_tensor(x, cobracket.get(j, {})),
            scale_tensor(algebra.ad_tensor(y, cobracket.get(i, {})), -1),
        )
        if add_tensors(lhs, scale_tensor(rhs, -1)):
            return (i, j)
    return None


def check_lie_bialgebra(bialgebra: LieBialgebra, title: str = "lie bialgebra") -> CheckReport:
    """Jacobi, co-Jacobi and cocycle compatibility."""
    algebra = bialgebra.algebra
    report = CheckReport(title)
    report.add("antisymmetry", antisymmetry_violation(algebra))
    report.add("jacobi", jacobi_violation(algebra))
    report.add("co_antisymmetry", co_antisymmetry_violation(bialgebra.cobracket))
    report.add("co_jacobi", co_jacobi_violation(algebra.dim, bialgebra.cobracket))
    report.add("compatibility", compatibility_violation(algebra, bialgebra.cobracket))
    return report


def check_quasitriangular(
    algebra: LieAlgebra, cobracket: Cobracket, r: Optional[Tensor2]
) -> CheckReport:
    """Verify the Lie bialgebra axioms plus CYBE, delta = ad r and invariance of r + tau(r)."""
    r = r or {}
    report = check_lie_bialgebra(LieBialgebra(algebra, cobracket, r), "quasitriangular")
    report.add(
        "cybe",
        cybe_violation(algebra, r),
        lambda v: f"component {v[0]} equals {v[1]}",
    )
    report.add("coboundary", coboundary_violation(algebra, cobracket, r))
    report.add(
        "casimir_invariance",
        invariance_violation(algebra, add_tensors(r, flip_tensor(r))),
        lambda i: f"ad_{algebra.labels[i]} does not annihilate r + tau(r)",
    )
    logger.debug("quasitriangular check on dim %d: %s", algebra.dim, report.passed)
    return report


def tensor_matrix(tensor: Tensor2, dim: int) -> sympy.Matrix:
    matrix = sympy.zeros(dim, dim)
    for (a, b), value in tensor.items():
        matrix[a, b] = to_sympy(value)
    return matrix


def killing_form(algebra: LieAlgebra) -> sympy.Matrix:
    """K_ij = tr(ad_i ad_j)."""
    ads = [algebra.ad_matrix(i) for i in range(algebra.dim)]
    form = sympy.zeros(algebra.dim, algebra.dim)
    for i in range(algebra.dim):
        for j in range(i, algebra.dim):
            value = (ads[i] * ads[j]).trace()
            form[i, j] = value
            form[j, i] = value
    return form


def is_semisimple_operator(matrix: sympy.Matrix) -> bool:
    """True when the minimal polynomial is squarefree (diagonalizable over C)."""
    t = sympy.Symbol("t")
    squarefree = sympy.Poly(matrix.charpoly(t).as_expr(), t).sqf_part()
    value = sympy.zeros(*matrix.shape)
    for coeff in squarefree.all_coeffs():
        value = value * matrix + coeff * sympy.eye(matrix.shape[0])
    return value.is_zero_matrix


def toral_rank(algebra: LieAlgebra) -> int:
    """Size of a commuting family of ad-semisimple basis elements, chosen greedily in basis order."""
    chosen: List[int] = []
    for i in range(algebra.dim):
        if any(algebra.bracket_basis(i, j) for j in chosen):
            continue
        ad = algebra.ad_matrix(i)
        if ad.is_zero_matrix:
            continue
        if is_semisimple_operator(ad):
            chosen.append(i)
    return len(chosen)


def lie_bialgebra_certificates(bialgebra: LieBialgebra) -> Dict[str, object]:
    """Computable certificates for a quasitriangular output."""
    algebra = bialgebra.algebra
    killing = killing_form(algebra)
    r_plus = tensor_matrix(bialgebra.r_plus(), algebra.dim)
    return {
        "dim": algebra.dim,
        "killing_rank": int(killing.rank()),
        "killing_nondegenerate": killing.det() != 0,
        "toral_rank": toral_rank(algebra),
        "jacobi": jacobi_violation(algebra) is None,
        "co_jacobi": co_jacobi_violation(algebra.dim, bialgebra.cobracket) is None,
        "cybe": cybe_violation(algebra, bialgebra.r or {}) is None,
        "factorisable": r_plus.det() != 0,
    }
