"""Exact arithmetic in the field Q(q) of rational functions in the symbol q."""

import math
import re
import tokenize
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from .errors import DivisionByZeroError, PoleError, ScalarParseError

Number = Union[int, Fraction]
ScalarLike = Union[int, Fraction, str, "LaurentPolyQ", "RationalFunctionQ"]

Q_SYMBOL = sympy.Symbol("q")
_LITERAL_CHARS = re.compile(r"^[0-9q+\-*/^() ]+$")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


@dataclass(frozen=True)
class LaurentPolyQ:
    """Laurent polynomial in q with rational coefficients.

    Terms are stored as a tuple of ``(exponent, coefficient)`` pairs sorted by
    exponent, with no zero coefficients, so equal polynomials compare and hash
    equal.
    """

    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Number]) -> "LaurentPolyQ":
        """Build a polynomial from an exponent -> coefficient mapping."""
        return cls(tuple(
            (int(exp), Fraction(coeff))
            for exp, coeff in sorted(mapping.items())
            if coeff != 0
        ))

    @classmethod
    def constant(cls, value: Number) -> "LaurentPolyQ":
        return cls.from_mapping({0: value})

    @classmethod
    def monomial(cls, exponent: int, coefficient: Number = 1) -> "LaurentPolyQ":
        return cls.from_mapping({exponent: coefficient})

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def constant_term(self) -> Fraction:
        return self.as_dict().get(0, Fraction(0))

    @property
    def min_exponent(self) -> int:
        return self.terms[0][0] if self.terms else 0

    @property
    def max_exponent(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    @property
    def leading_coefficient(self) -> Fraction:
        return self.terms[-1][1] if self.terms else Fraction(0)

    def shift(self, amount: int) -> "LaurentPolyQ":
        """Multiply by q^amount."""
        return LaurentPolyQ(tuple((exp + amount, coeff) for exp, coeff in self.terms))

    def scale(self, factor: Number) -> "LaurentPolyQ":
        factor = Fraction(factor)
        if factor == 0:
            return LaurentPolyQ()
        return LaurentPolyQ(tuple((exp, coeff * factor) for exp, coeff in self.terms))

    def __add__(self, other: "LaurentPolyQ") -> "LaurentPolyQ":
        result = self.as_dict()
        for exp, coeff in other.terms:
            result[exp] = result.get(exp, Fraction(0)) + coeff
        return LaurentPolyQ.from_mapping(result)

    def __neg__(self) -> "LaurentPolyQ":
        return self.scale(-1)

    def __sub__(self, other: "LaurentPolyQ") -> "LaurentPolyQ":
        return self + (-other)

    def __mul__(self, other: "LaurentPolyQ") -> "LaurentPolyQ":
        if not self.terms or not other.terms:
            return LaurentPolyQ()
        result: Dict[int, Fraction] = {}
        for exp_a, coeff_a in self.terms:
            for exp_b, coeff_b in other.terms:
                key = exp_a + exp_b
                result[key] = result.get(key, Fraction(0)) + coeff_a * coeff_b
        return LaurentPolyQ.from_mapping(result)

    def evaluate(self, point: Number) -> Fraction:
        """Evaluate at q = point.

        Raises:
            PoleError: If point is 0 and a negative power of q is present
        """
        point = Fraction(point)
        if point == 0:
            if self.min_exponent < 0:
                raise PoleError(self, point)
            return self.constant_term()
        return sum((coeff * point ** exp for exp, coeff in self.terms), Fraction(0))

    def to_poly(self) -> sympy.Poly:
        """Convert to a sympy polynomial; the caller must clear negative powers first."""
        if self.min_exponent < 0:
            raise ValueError("negative exponents present; shift before converting")
        mapping = {(exp,): sympy.Rational(coeff.numerator, coeff.denominator)
                   for exp, coeff in self.terms}
        return sympy.Poly.from_dict(mapping or {(0,): 0}, Q_SYMBOL, domain="QQ")

    @classmethod
    def from_poly(cls, poly: sympy.Poly) -> "LaurentPolyQ":
        mapping: Dict[int, Fraction] = {}
        for (exp,), coeff in poly.terms():
            coeff = sympy.Rational(coeff)
            mapping[int(exp)] = Fraction(int(coeff.p), int(coeff.q))
        return cls.from_mapping(mapping)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp, coeff in self.terms:
            pieces.append(_format_term(exp, coeff))
        text = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                text += " - " + piece[1:]
            else:
                text += " + " + piece
        return text


def _format_term(exponent: int, coefficient: Fraction) -> str:
    if exponent == 0:
        return str(coefficient)
    power = "q" if exponent == 1 else f"q^{exponent}"
    if coefficient == 1:
        return power
    if coefficient == -1:
        return "-" + power
    return f"{coefficient}*{power}"


def _canonical_pair(
    numerator: LaurentPolyQ, denominator: LaurentPolyQ
) -> Tuple[LaurentPolyQ, LaurentPolyQ]:
    """Reduce a fraction to its canonical representative."""
    if denominator.is_zero():
        raise DivisionByZeroError("denominator is zero")
    if numerator.is_zero():
        return LaurentPolyQ(), LaurentPolyQ.constant(1)

    offset = denominator.min_exponent
    numerator = numerator.shift(-offset)
    denominator = denominator.shift(-offset)

    if denominator.is_constant():
        return numerator.scale(1 / denominator.constant_term()), LaurentPolyQ.constant(1)

    # q never divides the shifted denominator, so the gcd ignores powers of q.
    low = min(0, numerator.min_exponent)
    num_poly = numerator.shift(-low).to_poly()
    den_poly = denominator.to_poly()
    common = sympy.gcd(num_poly, den_poly)
    if common.degree() > 0:
        num_poly = num_poly.exquo(common)
        den_poly = den_poly.exquo(common)
    numerator = LaurentPolyQ.from_poly(num_poly).shift(low)
    denominator = LaurentPolyQ.from_poly(den_poly)

    if denominator.is_constant():
        return numerator.scale(1 / denominator.constant_term()), LaurentPolyQ.constant(1)

    # Integer coefficients, jointly coprime, with a positive leading denominator one.
    coeffs = [coeff for _, coeff in numerator.terms + denominator.terms]
    lcm = math.lcm(*(coeff.denominator for coeff in coeffs))
    content = math.gcd(*((coeff * lcm).numerator for coeff in coeffs))
    factor = Fraction(lcm, content)
    if denominator.leading_coefficient < 0:
        factor = -factor
    return numerator.scale(factor), denominator.scale(factor)


class RationalFunctionQ:
    """Element of Q(q), kept in reduced canonical form.

    Instances are immutable. Arithmetic accepts ints and Fractions on either
    side, and equality against plain numbers compares the constant value.
    """

    __slots__ = ("numerator", "denominator")

    numerator: LaurentPolyQ
    denominator: LaurentPolyQ

    def __init__(
        self,
        numerator: Union[LaurentPolyQ, Number] = 0,
        denominator: Union[LaurentPolyQ, Number] = 1,
        _canonical: bool = False,
    ) -> None:
        if not isinstance(numerator, LaurentPolyQ):
            numerator = LaurentPolyQ.constant(numerator)
        if not isinstance(denominator, LaurentPolyQ):
            denominator = LaurentPolyQ.constant(denominator)
        if not _canonical:
            numerator, denominator = _canonical_pair(numerator, denominator)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RationalFunctionQ is immutable")

    @classmethod
    def _raw(cls, numerator: LaurentPolyQ) -> "RationalFunctionQ":
        return cls(numerator, LaurentPolyQ.constant(1), _canonical=True)

    @classmethod
    def q(cls, exponent: int = 1) -> "RationalFunctionQ":
        """The monomial q^exponent."""
        return cls._raw(LaurentPolyQ.monomial(exponent))

    @classmethod
    def from_laurent(cls, poly: LaurentPolyQ) -> "RationalFunctionQ":
        return cls._raw(poly)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_one(self) -> bool:
        return self.is_polynomial() and self.numerator.terms == ((0, Fraction(1)),)

    def is_polynomial(self) -> bool:
        """True when the denominator reduced to 1, i.e. a Laurent polynomial."""
        return self.denominator.terms == ((0, Fraction(1)),)

    def as_constant(self) -> Fraction:
        """Return the rational value of a constant function.

        Raises:
            ValueError: If the function depends on q
        """
        if not (self.is_polynomial() and self.numerator.is_constant()):
            raise ValueError(f"{self} is not a constant")
        return self.numerator.constant_term()

    def term_count(self) -> int:
        """Number of stored monomials, used as a pivot complexity measure."""
        return len(self.numerator.terms) + len(self.denominator.terms)

    def __add__(self, other: ScalarLike) -> "RationalFunctionQ":
        other = coerce(other)
        if self.is_polynomial() and other.is_polynomial():
            return RationalFunctionQ._raw(self.numerator + other.numerator)
        if self.denominator == other.denominator:
            return RationalFunctionQ(self.numerator + other.numerator, self.denominator)
        return RationalFunctionQ(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunctionQ":
        return RationalFunctionQ(-self.numerator, self.denominator, _canonical=True)

    def __sub__(self, other: ScalarLike) -> "RationalFunctionQ":
        return self + (-coerce(other))

    def __rsub__(self, other: ScalarLike) -> "RationalFunctionQ":
        return coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "RationalFunctionQ":
        other = coerce(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.is_polynomial() and other.is_polynomial():
            return RationalFunctionQ._raw(self.numerator * other.numerator)
        return RationalFunctionQ(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunctionQ":
        """Multiplicative inverse.

        Raises:
            DivisionByZeroError: If self is zero
        """
        if self.is_zero():
            raise DivisionByZeroError("inverse of zero")
        return RationalFunctionQ(self.denominator, self.numerator)

    def __truediv__(self, other: ScalarLike) -> "RationalFunctionQ":
        return self * coerce(other).inverse()

    def __rtruediv__(self, other: ScalarLike) -> "RationalFunctionQ":
        return coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunctionQ":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def evaluate_at(self, point: Number) -> Fraction:
        """Exact value at q = point.

        Raises:
            PoleError: If the denominator vanishes at point
        """
        point = Fraction(point)
        denominator = self.denominator.evaluate(point)
        if denominator == 0:
            raise PoleError(self, point)
        try:
            return self.numerator.evaluate(point) / denominator
        except PoleError:
            raise PoleError(self, point) from None

    def to_sympy(self) -> sympy.Expr:
        return sympy.sympify(str(self).replace("^", "**"), locals={"q": Q_SYMBOL})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunctionQ(other)
        if not isinstance(other, RationalFunctionQ):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self) -> int:
        if self.is_polynomial() and self.numerator.is_constant():
            return hash(self.numerator.constant_term())
        return hash((self.numerator, self.denominator))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"

    def __repr__(self) -> str:
        return f"RationalFunctionQ('{self}')"


ZERO = RationalFunctionQ._raw(LaurentPolyQ())
ONE = RationalFunctionQ._raw(LaurentPolyQ.constant(1))


def parse_scalar(text: str) -> RationalFunctionQ:
    """Parse a scalar literal such as ``"q^2 - 1"`` or ``"1/(q+1)"``.

    Args:
        text: Literal built from integers, q, + - * / ^ and parentheses

    Returns:
        The canonical rational function

    Raises:
        ScalarParseError: If the literal is malformed
        DivisionByZeroError: If the literal divides by zero
    """
    if not isinstance(text, str) or not text.strip() or not _LITERAL_CHARS.match(text):
        raise ScalarParseError(f"invalid scalar literal: {text!r}")
    try:
        expr = parse_expr(text, local_dict={"q": Q_SYMBOL}, transformations=_TRANSFORMATIONS)
    except (SyntaxError, TypeError, ValueError, tokenize.TokenError, sympy.SympifyError) as exc:
        raise ScalarParseError(f"invalid scalar literal: {text!r}") from exc
    except ZeroDivisionError as exc:
        raise DivisionByZeroError(f"division by zero in {text!r}") from exc
    expr = sympy.sympify(expr)
    if expr.has(sympy.zoo, sympy.nan, sympy.oo):
        raise DivisionByZeroError(f"division by zero in {text!r}")
    num_expr, den_expr = sympy.fraction(sympy.cancel(sympy.together(expr)))
    try:
        num = sympy.Poly(num_expr, Q_SYMBOL, domain="QQ")
        den = sympy.Poly(den_expr, Q_SYMBOL, domain="QQ")
    except sympy.PolynomialError as exc:
        raise ScalarParseError(f"not a rational function of q: {text!r}") from exc
    if den.is_zero:
        raise DivisionByZeroError(f"division by zero in {text!r}")
    return RationalFunctionQ(LaurentPolyQ.from_poly(num), LaurentPolyQ.from_poly(den))


def coerce(value: ScalarLike) -> RationalFunctionQ:
    """Turn ints, Fractions, literals and Laurent polynomials into Q(q) elements."""
    if isinstance(value, RationalFunctionQ):
        return value
    if isinstance(value, LaurentPolyQ):
        return RationalFunctionQ.from_laurent(value)
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        if value == 0:
            return ZERO
        if value == 1:
            return ONE
        return RationalFunctionQ._raw(LaurentPolyQ.constant(value))
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def field_arithmetic(a: ScalarLike, b: ScalarLike, op: str) -> RationalFunctionQ:
    """Apply one of ``add``, ``sub``, ``mul``, ``div`` to two scalars."""
    a, b = coerce(a), coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def evaluate_at(a: ScalarLike, point: Number) -> Fraction:
    return coerce(a).evaluate_at(point)


def q_integer(m: int) -> LaurentPolyQ:
    """[m]_q = 1 + q + ... + q^(m-1); [0]_q = 0."""
    if m < 0:
        raise ValueError("q-integers are defined for m >= 0")
    return LaurentPolyQ.from_mapping({k: 1 for k in range(m)})


@lru_cache(maxsize=None)
def q_factorial(m: int) -> LaurentPolyQ:
    if m < 0:
        raise ValueError("q-factorials are defined for m >= 0")
    result = LaurentPolyQ.constant(1)
    for k in range(2, m + 1):
        result = result * q_integer(k)
    return result


def q_binomial(m: int, r: int) -> RationalFunctionQ:
    """Gaussian binomial [m choose r]_q.

    Raises:
        ValueError: Unless 0 <= r <= m
    """
    if not 0 <= r <= m:
        raise ValueError(f"q_binomial needs 0 <= r <= m, got m={m}, r={r}")
    return RationalFunctionQ(q_factorial(m), q_factorial(r) * q_factorial(m - r))


def sum_scalars(values: Iterable[RationalFunctionQ]) -> RationalFunctionQ:
    total = ZERO
    for value in values:
        total = total + value
    return total
