"""The free braided Hopf algebra C<x_i> and its graded dual on the y^i."""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Tuple

from .combinatorics import braided_binomial, braided_factorial, require_checked
from .errors import DimensionMismatchError, DualityFlagError
from .scalars import ONE, ZERO, RationalFunctionQ, ScalarLike, coerce
from .tensor_ops import RMatrix, all_words, index_of_word, word_of_index

Word = Tuple[int, ...]
WordPair = Tuple[Word, Word]


def _accumulate(target: Dict, key, value: RationalFunctionQ) -> None:
    total = target.get(key, ZERO) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


@dataclass(frozen=True)
class FreeElement:
    """Linear combination of words over {1..n}.

    With ``dual`` set the words are read as y-monomials, y^W = y^(w_1) ... y^(w_m).
    """

    dim: int
    terms: Mapping[Word, RationalFunctionQ] = field(default_factory=dict)
    dual: bool = False

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def from_terms(
        cls, dim: int, terms: Mapping[Iterable[int], ScalarLike], dual: bool = False
    ) -> "FreeElement":
        cleaned: Dict[Word, RationalFunctionQ] = {}
        for word, coeff in terms.items():
            word = tuple(int(letter) for letter in word)
            if any(not 1 <= letter <= dim for letter in word):
                raise DimensionMismatchError(f"word {word} uses letters outside 1..{dim}")
            _accumulate(cleaned, word, coerce(coeff))
        return cls(dim, cleaned, dual)

    @classmethod
    def word(cls, dim: int, word: Iterable[int], coeff: ScalarLike = 1, dual: bool = False) -> "FreeElement":
        return cls.from_terms(dim, {tuple(word): coeff}, dual)

    @classmethod
    def one(cls, dim: int, dual: bool = False) -> "FreeElement":
        return cls(dim, {(): ONE}, dual)

    @classmethod
    def generator(cls, dim: int, index: int, dual: bool = False) -> "FreeElement":
        return cls.word(dim, (index,), 1, dual)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Length of the longest word present; -1 for zero."""
        return max((len(word) for word in self.terms), default=-1)

    def homogeneous(self, degree: int) -> "FreeElement":
        return FreeElement(
            self.dim, {w: c for w, c in self.terms.items() if len(w) == degree}, self.dual
        )

    def coefficient(self, word: Iterable[int]) -> RationalFunctionQ:
        return self.terms.get(tuple(word), ZERO)

    def _check_compatible(self, other: "FreeElement") -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dimensions differ: {self.dim} vs {other.dim}")
        if self.dual != other.dual:
            raise DualityFlagError("cannot combine x-words with y-words")

    def __add__(self, other: "FreeElement") -> "FreeElement":
        self._check_compatible(other)
        result = dict(self.terms)
        for word, coeff in other.terms.items():
            _accumulate(result, word, coeff)
        return FreeElement(self.dim, result, self.dual)

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + other.scale(-1)

    def scale(self, factor: ScalarLike) -> "FreeElement":
        factor = coerce(factor)
        if not factor:
            return FreeElement(self.dim, {}, self.dual)
        return FreeElement(self.dim, {w: c * factor for w, c in self.terms.items()}, self.dual)

    def __mul__(self, other: "FreeElement") -> "FreeElement":
        return multiply(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        symbol = "y" if self.dual else "x"
        parts = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            monomial = symbol + "".join(str(letter) for letter in word) if word else "1"
            parts.append(f"({self.terms[word]})*{monomial}")
        return " + ".join(parts)


@dataclass(frozen=True)
class TensorElement:
    """Linear combination of word pairs, an element of B (x) B."""

    dim: int
    terms: Mapping[WordPair, RationalFunctionQ] = field(default_factory=dict)
    left_dual: bool = False
    right_dual: bool = False

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def from_terms(
        cls,
        dim: int,
        terms: Mapping[Tuple[Iterable[int], Iterable[int]], ScalarLike],
        left_dual: bool = False,
        right_dual: bool = False,
    ) -> "TensorElement":
        cleaned: Dict[WordPair, RationalFunctionQ] = {}
        for (left, right), coeff in terms.items():
            _accumulate(cleaned, (tuple(left), tuple(right)), coerce(coeff))
        return cls(dim, cleaned, left_dual, right_dual)

    @classmethod
    def pure(cls, left: FreeElement, right: FreeElement) -> "TensorElement":
        """left (x) right."""
        if left.dim != right.dim:
            raise DimensionMismatchError("tensor factors must share the dimension")
        terms: Dict[WordPair, RationalFunctionQ] = {}
        for a, ca in left.terms.items():
            for b, cb in right.terms.items():
                _accumulate(terms, (a, b), ca * cb)
        return cls(left.dim, terms, left.dual, right.dual)

    def coefficient(self, left: Iterable[int], right: Iterable[int]) -> RationalFunctionQ:
        return self.terms.get((tuple(left), tuple(right)), ZERO)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        result = dict(self.terms)
        for key, coeff in other.terms.items():
            _accumulate(result, key, coeff)
        return TensorElement(self.dim, result, self.left_dual, self.right_dual)

    def scale(self, factor: ScalarLike) -> "TensorElement":
        factor = coerce(factor)
        return TensorElement(
            self.dim,
            {k: c * factor for k, c in self.terms.items()} if factor else {},
            self.left_dual,
            self.right_dual,
        )

    def total_degree_at_most(self, degree: int) -> "TensorElement":
        return TensorElement(
            self.dim,
            {k: c for k, c in self.terms.items() if len(k[0]) + len(k[1]) <= degree},
            self.left_dual,
            self.right_dual,
        )


def multiply(f: FreeElement, g: FreeElement) -> FreeElement:
    """Concatenation product, extended bilinearly."""
    f._check_compatible(g)
    result: Dict[Word, RationalFunctionQ] = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            _accumulate(result, a + b, ca * cb)
    return FreeElement(f.dim, result, f.dual)


def _apply_psi(
    vector: Mapping[Word, RationalFunctionQ], slot: int, local: Mapping
) -> Dict[Word, RationalFunctionQ]:
    """Apply the braiding to letters slot, slot + 1 (1-based) of every word."""
    result: Dict[Word, RationalFunctionQ] = {}
    for word, coeff in vector.items():
        i, j = word[slot - 1] - 1, word[slot] - 1
        for (x, y), value in local[(i, j)]:
            new_word = word[: slot - 1] + (x + 1, y + 1) + word[slot + 1:]
            _accumulate(result, new_word, coeff * value)
    return result


def braid_words(left: Word, right: Word, R: RMatrix) -> Dict[WordPair, RationalFunctionQ]:
    """Psi(x_left (x) x_right) on words, each letter of right braided leftward in turn.

    Returns:
        Mapping (new_left, new_right) -> coefficient, where new_left has the
        length of ``right`` and new_right the length of ``left``
    """
    s, p = len(left), len(right)
    vector: Dict[Word, RationalFunctionQ] = {left + right: ONE}
    if s and p:
        local = R.local_operator(braided=True)
        for k in range(1, p + 1):
            for slot in range(s + k - 1, k - 1, -1):
                vector = _apply_psi(vector, slot, local)
    return {(word[:p], word[p:]): coeff for word, coeff in vector.items()}


def braided_tensor_multiply(a: TensorElement, b: TensorElement, R: RMatrix) -> TensorElement:
    """(a1 (x) a2)(b1 (x) b2) = a1 Psi(a2 (x) b1) b2."""
    if a.dim != b.dim:
        raise DimensionMismatchError("tensor factors must share the dimension")
    R = require_checked(R)
    result: Dict[WordPair, RationalFunctionQ] = {}
    for (a1, a2), ca in a.terms.items():
        for (b1, b2), cb in b.terms.items():
            for (moved, stayed), value in braid_words(a2, b1, R).items():
                _accumulate(result, (a1 + moved, stayed + b2), ca * cb * value)
    return TensorElement(a.dim, result, a.left_dual, b.right_dual)


def _primitive(dim: int, index: int) -> TensorElement:
    return TensorElement(dim, {((index,), ()): ONE, ((), (index,)): ONE})


def coproduct(f: FreeElement, R: RMatrix) -> TensorElement:
    """Multiplicative coproduct with every x_i primitive."""
    if f.dual:
        raise DualityFlagError("coproduct is defined on x-words; use dual_coproduct")
    R = require_checked(R)
    result: Dict[WordPair, RationalFunctionQ] = {}
    for word, coeff in f.terms.items():
        delta = TensorElement(f.dim, {((), ()): ONE})
        for letter in word:
            delta = braided_tensor_multiply(delta, _primitive(f.dim, letter), R)
        for key, value in delta.terms.items():
            _accumulate(result, key, coeff * value)
    return TensorElement(f.dim, result)


def counit(f: FreeElement) -> RationalFunctionQ:
    return f.coefficient(())


def coproduct_from_binomials(f: FreeElement, R: RMatrix) -> TensorElement:
    """Sum over r of x_(J[:r]) (x) x_(J[r:]) [m r;R]^J_I for each word I of f."""
    R = require_checked(R)
    result: Dict[WordPair, RationalFunctionQ] = {}
    for word, coeff in f.terms.items():
        m = len(word)
        col = index_of_word(word, f.dim)
        for r in range(m + 1):
            for (row, c), value in braided_binomial(m, r, R).entries.items():
                if c != col:
                    continue
                image = word_of_index(row, f.dim, m)
                _accumulate(result, (image[:r], image[r:]), coeff * value)
    return TensorElement(f.dim, result)


def binomial_formula_check(word: Iterable[int], R: RMatrix) -> bool:
    """True when the coproduct of a word matches its braided-binomial expansion."""
    element = FreeElement.word(R.dim, tuple(word))
    return coproduct(element, R) == coproduct_from_binomials(element, R)


def _apply_left(element: TensorElement, R: RMatrix) -> Dict[Tuple[Word, Word, Word], RationalFunctionQ]:
    result: Dict[Tuple[Word, Word, Word], RationalFunctionQ] = {}
    for (left, right), coeff in element.terms.items():
        for (a, b), value in coproduct(FreeElement.word(element.dim, left), R).terms.items():
            _accumulate(result, (a, b, right), coeff * value)
    return result


def _apply_right(element: TensorElement, R: RMatrix) -> Dict[Tuple[Word, Word, Word], RationalFunctionQ]:
    result: Dict[Tuple[Word, Word, Word], RationalFunctionQ] = {}
    for (left, right), coeff in element.terms.items():
        for (a, b), value in coproduct(FreeElement.word(element.dim, right), R).terms.items():
            _accumulate(result, (left, a, b), coeff * value)
    return result


def is_coassociative(f: FreeElement, R: RMatrix) -> bool:
    """(Delta (x) id) Delta f == (id (x) Delta) Delta f."""
    delta = coproduct(f, R)
    return _apply_left(delta, R) == _apply_right(delta, R)


def _require_dual(*elements: FreeElement) -> None:
    for element in elements:
        if not element.dual:
            raise DualityFlagError("expected y-words (dual elements)")


def shuffle_product(f: FreeElement, g: FreeElement, R: RMatrix) -> FreeElement:
    """Braided shuffle product of y-words.

    y^A . y^B = sum_J [m r;R]^I_J y^(rev J) with I = rev(A + B), r = |B|.
    """
    _require_dual(f, g)
    f._check_compatible(g)
    R = require_checked(R)
    result: Dict[Word, RationalFunctionQ] = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            m, r = len(a) + len(b), len(b)
            row = index_of_word(tuple(reversed(a + b)), f.dim) if m else 0
            binomial = braided_binomial(m, r, R)
            for (rr, col), value in binomial.entries.items():
                if rr == row:
                    image = tuple(reversed(word_of_index(col, f.dim, m)))
                    _accumulate(result, image, ca * cb * value)
    return FreeElement(f.dim, result, dual=True)


def pi_map(f: FreeElement, R: RMatrix) -> FreeElement:
    """pi(y^W) = sum_J [m;R]!^(rev W)_J y^(rev J), degree by degree."""
    _require_dual(f)
    R = require_checked(R)
    result: Dict[Word, RationalFunctionQ] = {}
    for word, coeff in f.terms.items():
        m = len(word)
        row = index_of_word(tuple(reversed(word)), f.dim) if m else 0
        for (rr, col), value in braided_factorial(m, R).entries.items():
            if rr == row:
                image = tuple(reversed(word_of_index(col, f.dim, m)))
                _accumulate(result, image, coeff * value)
    return FreeElement(f.dim, result, dual=True)


def dual_coproduct(f: FreeElement) -> TensorElement:
    """Deconcatenation of y-words, the coproduct of the shuffle algebra."""
    _require_dual(f)
    result: Dict[WordPair, RationalFunctionQ] = {}
    for word, coeff in f.terms.items():
        for k in range(len(word) + 1):
            _accumulate(result, (word[:k], word[k:]), coeff)
    return TensorElement(f.dim, result, left_dual=True, right_dual=True)


def words_of_degree(dim: int, degree: int) -> List[Word]:
    return all_words(dim, degree)
