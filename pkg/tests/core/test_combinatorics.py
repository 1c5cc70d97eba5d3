"""Tests for braided integers, factorials and binomials."""

import pytest
from src.core.combinatorics import (
    binomial_theorem_holds,
    braided_binomial,
    braided_factorial,
    braided_factorial_inverse,
    braided_integer,
    braided_integer_right,
    braided_integer_series,
    require_checked,
)
from src.core.errors import SingularFactorialError, YangBaxterError
from src.core.scalars import RationalFunctionQ, evaluate_at, parse_scalar, q_binomial, q_factorial
from src.core.tensor_ops import (
    RMatrix,
    flip,
    from_bilinear_form,
    identity,
    rank_over_field,
)

A2_BETA = [[2, -1], [-1, 2]]


@pytest.fixture
def line() -> RMatrix:
    """The braided line, n=1 and R=(q)."""
    return from_bilinear_form([[1]])


@pytest.fixture
def sample_rmatrices() -> list:
    """Diagonal R-matrices, the flip and the identity."""
    return [
        from_bilinear_form([[1]]),
        from_bilinear_form(A2_BETA),
        from_bilinear_form([[2, -2], [-2, 4]]),
        from_bilinear_form([[0, 1], [-1, 2]]),
        flip(2),
        RMatrix.identity(2),
    ]


def test_braided_integer_line(line):
    """Test [3;R] is 1 + q + q^2 on the braided line."""
    assert braided_integer(3, line).entry(0, 0) == parse_scalar("1 + q + q^2")


def test_braided_integer_of_flip_is_multiple_of_identity():
    """Test Psi = id gives [m;R] = m id."""
    for m in range(1, 4):
        assert braided_integer(m, flip(2)) == identity(2, m).scale(m)


def test_braided_integer_a2_column():
    """Test [2;R](x_1 x_2) = x_1 x_2 + q^-1 x_2 x_1 for A2."""
    op = braided_integer(2, from_bilinear_form(A2_BETA))
    assert op.word_entry((1, 2), (1, 2)) == 1
    assert op.word_entry((2, 1), (1, 2)) == RationalFunctionQ.q(-1)


def test_recursion_matches_series(sample_rmatrices):
    """Test the recursive and series forms of [m;R] agree."""
    for R in sample_rmatrices:
        for m in range(1, 4):
            assert braided_integer(m, R) == braided_integer_series(m, R)


def test_factorial_line(line):
    """Test [3;R]! = [3]_q! on the braided line."""
    assert braided_factorial(3, line).entry(0, 0) == RationalFunctionQ.from_laurent(q_factorial(3))
    assert braided_factorial(1, line).is_identity()


def test_factorial_of_transposition_is_symmetrizer():
    """Test Psi = P gives id + P of rank 3 in degree 2."""
    factorial = braided_factorial(2, RMatrix.identity(2))
    assert rank_over_field(factorial) == 3


def test_binomial_line(line):
    """Test braided binomials reduce to Gaussian binomials."""
    for m in range(5):
        for r in range(m + 1):
            assert braided_binomial(m, r, line).entry(0, 0) == q_binomial(m, r)


def test_binomial_edges(sample_rmatrices):
    """Test [m 0] and [m m] are identities."""
    for R in sample_rmatrices:
        assert braided_binomial(3, 0, R).is_identity()
        assert braided_binomial(3, 3, R).is_identity()


def test_binomial_of_flip_is_classical():
    """Test Psi = id gives [2 1] = 2 on the line."""
    assert braided_binomial(2, 1, flip(1)).entry(0, 0) == 2


def test_binomial_theorem(sample_rmatrices):
    """Test [m;R]! = ([r;R]! (x) [m-r;R]!) o [m r;R] through degree 4."""
    for R in sample_rmatrices[:4]:
        for m in range(5):
            for r in range(m + 1):
                assert binomial_theorem_holds(m, r, R)


def test_factorial_at_q_one_is_classical_symmetrizer():
    """Test specializing A2 factorial entries at q=1 gives multinomial counts."""
    factorial = braided_factorial(3, from_bilinear_form(A2_BETA))
    column = (1, 1, 2)
    values = {
        row: evaluate_at(factorial.word_entry(row, column), 1)
        for row in [(1, 1, 2), (1, 2, 1), (2, 1, 1), (1, 1, 1)]
    }
    assert values == {(1, 1, 2): 2, (1, 2, 1): 2, (2, 1, 1): 2, (1, 1, 1): 0}


def test_factorial_inverse_line(line):
    """Test [2;R]!^-1 = 1/(1 + q)."""
    assert braided_factorial_inverse(2, line).entry(0, 0) == parse_scalar("1/(1 + q)")
    assert braided_factorial_inverse(1, line).is_identity()


def test_factorial_inverse_a2_singular():
    """Test the A2 factorial is singular in degree 3 with kernel dimension 2."""
    with pytest.raises(SingularFactorialError) as info:
        braided_factorial_inverse(3, from_bilinear_form(A2_BETA))
    assert info.value.degree == 3
    assert info.value.kernel_dim == 2


def test_unchecked_rmatrix_must_pass_yang_baxter():
    """Test operations refuse an R-matrix failing Yang-Baxter."""
    rows = [[1 if r == c else 0 for c in range(4)] for r in range(4)]
    rows[0][1] = 1
    with pytest.raises(YangBaxterError):
        require_checked(RMatrix.from_rows(2, rows))
    with pytest.raises(YangBaxterError):
        braided_factorial(2, RMatrix.from_rows(2, rows))


def test_binomial_theorem_on_family(structural_r):
    """Test the factorial splits through the binomials in every degree up to 4."""
    for m in range(5):
        for r in range(m + 1):
            assert binomial_theorem_holds(m, r, structural_r)


def test_binomial_top_split_keeps_identity(line):
    """Test [2 1;R] = 1 + q and [3 2;R] = 1 + q + q^2 on the braided line."""
    assert braided_binomial(2, 1, line).entry(0, 0) == parse_scalar("1 + q")
    assert braided_binomial(3, 2, line).entry(0, 0) == parse_scalar("1 + q + q^2")


def test_right_integer_requires_yang_baxter():
    """Test the mirror integer refuses an R-matrix failing Yang-Baxter."""
    rows = [[1 if r == c else 0 for c in range(4)] for r in range(4)]
    rows[0][1] = 1
    with pytest.raises(YangBaxterError):
        braided_integer_right(2, RMatrix.from_rows(2, rows))
