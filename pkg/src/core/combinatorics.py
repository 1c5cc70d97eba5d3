"""Braided integers, factorials and binomials as graded operators."""

import logging
from functools import lru_cache
from typing import Optional

from .errors import TruncationCapError, YangBaxterError
from .tensor_ops import (
    GradedOperator,
    RMatrix,
    compose,
    compose_all,
    embed_at,
    identity,
    inverse,
    letter_blocks,
    tensor_id,
    tensor_product,
    yang_baxter_check,
)

logger = logging.getLogger(__name__)


def require_checked(R: RMatrix) -> RMatrix:
    """Return R tagged as checked, running the Yang-Baxter check if needed.

    Raises:
        YangBaxterError: If R fails the check
    """
    if R.checked:
        return R
    result = yang_baxter_check(R)
    if not result:
        raise YangBaxterError(result.component)
    return R.mark_checked()


def check_side(dim: int, degree: int, max_side: Optional[int]) -> None:
    if max_side is not None and dim ** degree > max_side:
        raise TruncationCapError(dim ** degree, max_side)


def _psi_chain(R: RMatrix, first: int, last: int, degree: int) -> GradedOperator:
    """Psi_first o Psi_(first+1) o ... o Psi_last, identity when first > last."""
    if first > last:
        return identity(R.dim, degree)
    return compose_all(embed_at(R, k, degree) for k in range(first, last + 1))


@lru_cache(maxsize=None)
def braided_integer(m: int, R: RMatrix) -> GradedOperator:
    """[m;R] = id + Psi_1 + Psi_1 Psi_2 + ... + Psi_1 ... Psi_(m-1).

    Computed by the recursion [m;R] = id + Psi_1 o (id (x) [m-1;R]).
    """
    if m < 1:
        raise ValueError("braided integers start at m = 1")
    R = require_checked(R)
    if m == 1:
        return identity(R.dim, 1)
    rest = tensor_id(braided_integer(m - 1, R), 1, 0)
    return identity(R.dim, m) + compose(embed_at(R, 1, m), rest)


def braided_integer_series(m: int, R: RMatrix) -> GradedOperator:
    """[m;R] summed term by term from its defining series."""
    R = require_checked(R)
    total = identity(R.dim, m)
    for length in range(1, m):
        total = total + _psi_chain(R, 1, length, m)
    return total


@lru_cache(maxsize=None)
def braided_integer_right(m: int, R: RMatrix) -> GradedOperator:
    """Mirror integer id + Psi_(m-1) + Psi_(m-1) Psi_(m-2) + ... + Psi_(m-1) ... Psi_1.

    Moves a letter from any slot to the last one; used by right derivatives.
    """
    if m < 1:
        raise ValueError("braided integers start at m = 1")
    R = require_checked(R)
    if m == 1:
        return identity(R.dim, 1)
    rest = tensor_id(braided_integer_right(m - 1, R), 0, 1)
    return identity(R.dim, m) + compose(embed_at(R, m - 1, m), rest)


@lru_cache(maxsize=None)
def braided_factorial(m: int, R: RMatrix) -> GradedOperator:
    """[m;R]! = (id (x) [m-1;R]!) o [m;R], with [1;R]! = id.

    This is the full braid symmetrizer and the Gram matrix of the pairing.
    """
    if m < 0:
        raise ValueError("braided factorials need m >= 0")
    R = require_checked(R)
    if m <= 1:
        return identity(R.dim, m)
    result = compose(tensor_id(braided_factorial(m - 1, R), 1, 0), braided_integer(m, R))
    logger.debug("braided factorial n=%d m=%d: %d nonzero entries", R.dim, m, len(result.entries))
    return result


@lru_cache(maxsize=None)
def braided_binomial(m: int, r: int, R: RMatrix) -> GradedOperator:
    """[m r;R], the degree-(r, m-r) component of the coproduct on degree m.

    Built from Delta(w x) = Delta(w) Delta(x) with x primitive:
    [m r] = (id_(r-1) (x) Psi_r ... Psi_(m-1)) o ([m-1 r-1] (x) id) + [m-1 r] (x) id.
    """
    if not 0 <= r <= m:
        raise ValueError(f"braided binomial needs 0 <= r <= m, got m={m}, r={r}")
    R = require_checked(R)
    if r == 0 or r == m:
        return identity(R.dim, m)
    moved = compose(
        _psi_chain(R, r, m - 1, m),
        tensor_id(braided_binomial(m - 1, r - 1, R), 0, 1),
    )
    stayed = tensor_id(braided_binomial(m - 1, r, R), 0, 1)
    return moved + stayed


def binomial_theorem_holds(m: int, r: int, R: RMatrix) -> bool:
    """Check [m;R]! = ([r;R]! (x) [m-r;R]!) o [m r;R]."""
    left = braided_factorial(r, R)
    right = braided_factorial(m - r, R)
    if r == 0:
        split = right
    elif r == m:
        split = left
    else:
        split = tensor_product(left, right)
    return braided_factorial(m, R) == compose(split, braided_binomial(m, r, R))


@lru_cache(maxsize=None)
def braided_factorial_inverse(m: int, R: RMatrix) -> GradedOperator:
    """Exact inverse of [m;R]!.

    Letter-preserving R-matrices keep the factorial block diagonal by letter
    counts, so those blocks are inverted separately.

    Raises:
        SingularFactorialError: Carrying the degree and the kernel dimension
    """
    R = require_checked(R)
    factorial = braided_factorial(m, R)
    blocks = None
    if R.is_letter_preserving():
        blocks = list(letter_blocks(R.dim, m).values())
    return inverse(factorial, blocks)
