"""Tests for R-matrices, graded operators and exact elimination."""

from fractions import Fraction

import pytest
from src.core.errors import DimensionMismatchError, SingularFactorialError
from src.core.scalars import ONE, ZERO, RationalFunctionQ, parse_scalar
from src.core.tensor_ops import (
    GradedOperator,
    RMatrix,
    braid_relation_check,
    compose,
    compose_all,
    embed_at,
    flip,
    from_bilinear_form,
    identity,
    index_of_word,
    inverse,
    kernel_basis,
    letter_blocks,
    rank_over_field,
    specialized_rank,
    tensor_id,
    word_of_index,
    yang_baxter_check,
    zero,
)

A2_BETA = [[2, -1], [-1, 2]]


@pytest.fixture
def perturbed_identity() -> RMatrix:
    """Identity on V (x) V, n=2, with R^1_1^1_2 = 1 added."""
    rows = [[1 if r == c else 0 for c in range(4)] for r in range(4)]
    rows[0][1] = 1
    return RMatrix.from_rows(2, rows)


@pytest.fixture
def a2() -> RMatrix:
    """Diagonal R for the symmetrized A2 Cartan matrix."""
    return from_bilinear_form(A2_BETA)


def test_word_indexing_is_big_endian():
    """Test composite indices of words."""
    assert index_of_word((1, 2), 2) == 1
    assert index_of_word((2, 1, 1), 2) == 4
    assert word_of_index(4, 2, 3) == (2, 1, 1)
    with pytest.raises(DimensionMismatchError):
        index_of_word((3,), 2)


def test_bilinear_form_entries(a2):
    """Test the diagonal of from_bilinear_form."""
    q = RationalFunctionQ.q
    assert from_bilinear_form([[2]]).entries == ((q(2),),)
    assert [a2.entries[k][k] for k in range(4)] == [q(2), q(-1), q(-1), q(2)]
    assert from_bilinear_form([[0, 0], [0, 0]]) == RMatrix.identity(2)


def test_rmatrix_shape_is_validated():
    """Test wrongly sized entries raise."""
    with pytest.raises(DimensionMismatchError):
        RMatrix.from_rows(2, [[1, 0], [0, 1]])


def test_yang_baxter_passes_on_diagonal_and_flip(a2):
    """Test diagonal and flip solutions satisfy Yang-Baxter."""
    assert yang_baxter_check(a2)
    assert yang_baxter_check(flip(3))
    assert yang_baxter_check(from_bilinear_form([[1, -2, 0], [2, 0, 1], [-1, 1, 2]]))


def test_yang_baxter_reports_first_failure(perturbed_identity):
    """Test the perturbed identity fails with a cited component."""
    result = yang_baxter_check(perturbed_identity)
    assert not result
    assert result.row == (1, 1, 1)
    assert result.col == (1, 2, 2)
    assert result.lhs == 1
    assert result.rhs == 2
    assert result.component == ((1, 1, 1), (1, 2, 2), "1", "2")


def test_braid_relation_agrees_with_yang_baxter(a2, perturbed_identity):
    """Test both formulations agree."""
    for R in (a2, flip(2), RMatrix.identity(2), perturbed_identity):
        assert bool(braid_relation_check(R)) == bool(yang_baxter_check(R))


def test_embed_identity_and_braided_line():
    """Test embedding examples."""
    assert embed_at(flip(2), 1, 3).is_identity()
    line = from_bilinear_form([[1]])
    assert embed_at(line, 1, 2).entry(0, 0) == RationalFunctionQ.q()
    with pytest.raises(DimensionMismatchError):
        embed_at(line, 2, 2)


def test_embed_braids_letters(a2):
    """Test Psi(x_1 (x) x_2) = q^-1 x_2 (x) x_1 for A2."""
    psi = embed_at(a2, 1, 2)
    assert psi.word_entry((2, 1), (1, 2)) == RationalFunctionQ.q(-1)
    assert psi.word_entry((1, 2), (1, 2)) == ZERO


def test_compose_with_identity(a2):
    """Test compose(A, id) = A and associativity."""
    psi = embed_at(a2, 1, 3)
    psi2 = embed_at(a2, 2, 3)
    assert compose(psi, identity(2, 3)) == psi
    assert compose(compose(psi, psi2), psi) == compose(psi, compose(psi2, psi))
    assert compose_all([psi, psi2, psi]) == compose(psi, compose(psi2, psi))


def test_compose_shape_mismatch():
    """Test composing different degrees raises."""
    with pytest.raises(DimensionMismatchError):
        compose(identity(2, 2), identity(2, 3))


def test_tensor_id_matches_embedding(a2):
    """Test id (x) Psi equals Psi embedded in the second slot."""
    psi = embed_at(a2, 1, 2)
    assert tensor_id(psi, 1, 0) == embed_at(a2, 2, 3)
    assert tensor_id(psi, 0, 1) == embed_at(a2, 1, 3)


def test_rank_examples():
    """Test ranks of identity, zero and symmetrizer."""
    assert rank_over_field(identity(2, 2)) == 4
    assert kernel_basis(identity(2, 2)) == []
    assert rank_over_field(zero(2, 1)) == 0
    assert len(kernel_basis(zero(2, 1))) == 2
    symmetrizer = identity(2, 2) + embed_at(RMatrix.identity(2), 1, 2)
    assert rank_over_field(symmetrizer) == 3
    (vector,) = kernel_basis(symmetrizer)
    assert vector[0] == ZERO and vector[3] == ZERO
    assert vector[1] == -vector[2]


def test_rank_matches_specialization():
    """Test the exact rank equals the rank at a random rational point."""
    q = parse_scalar("q")
    operator = GradedOperator.from_dense(2, 1, [[q, q * q], [ONE, q]])
    assert rank_over_field(operator) == 1
    assert specialized_rank(operator, Fraction(3, 7)) == 1
    full = GradedOperator.from_dense(2, 1, [[q, ONE], [ONE, q]])
    assert rank_over_field(full) == specialized_rank(full, Fraction(5, 3)) == 2


def test_inverse_round_trip():
    """Test an exact inverse over Q(q)."""
    q = parse_scalar("q")
    operator = GradedOperator.from_dense(2, 1, [[q, ONE], [ONE, q]])
    assert compose(operator, inverse(operator)).is_identity()


def test_inverse_of_singular_reports_kernel():
    """Test a singular operator raises with its kernel dimension."""
    with pytest.raises(SingularFactorialError) as info:
        inverse(zero(2, 2))
    assert info.value.kernel_dim == 4


def test_letter_blocks_partition():
    """Test multidegree blocks cover every word once."""
    blocks = letter_blocks(2, 3)
    assert sorted(sum(blocks.values(), [])) == list(range(8))
    assert blocks[(2, 1)] == [index_of_word(w, 2) for w in [(1, 1, 2), (1, 2, 1), (2, 1, 1)]]


def test_transpose_rmatrix_is_involution(perturbed_identity):
    """Test transposing twice gives back R."""
    assert perturbed_identity.transpose().transpose() == perturbed_identity
    assert perturbed_identity.transpose().entry(1, 1, 2, 1) == 1
