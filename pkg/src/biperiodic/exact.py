"""Exact rational scalars and 2x2 rational matrices.

``Rational`` is :class:`fractions.Fraction`: arbitrary precision, always in
lowest terms with a positive denominator, so values compare structurally and
``==`` is exact equality of rationals.  :class:`Mat2` wraps four rationals
with exact matrix arithmetic on top.  Nothing in this package ever touches
floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "OpCounter",
    "SingularMatrixError",
    "as_rational",
    "parse_rational",
    "rat_pow",
    "Mat2",
    "mat_mul",
    "mat_pow",
    "mat_det",
    "mat_inv",
]

_EXACT_LITERAL = re.compile(r"[+-]?\d+(?:\s*/\s*\d+)?")


class SingularMatrixError(ZeroDivisionError):
    """Inversion (or negative power) of a matrix whose determinant is zero."""


@dataclass
class OpCounter:
    """Tally of rational multiplications/divisions performed.

    Create one counter per measurement and pass it to the operations that
    accept it.  There is no global state, so concurrent measurements can
    never interleave.
    """

    muls: int = 0

    def add(self, n: int = 1) -> None:
        self.muls += n


def as_rational(value: Rational | int | str) -> Rational:
    """Coerce an int/str/Fraction to ``Rational``; floats are refused.

    Floats carry binary rounding dust, so accepting them would silently break
    the exactness contract.  Callers holding a float must decide for
    themselves what exact value they meant.
    """
    if isinstance(value, float):
        raise TypeError(
            f"float {value!r} is not exact; pass int, Fraction, or a 'p/q' string"
        )
    return Fraction(value)


def parse_rational(text: str) -> Rational:
    """Parse an exact rational literal: ``'42'``, ``'-7'``, or ``'9/4'``.

    Decimal and exponent notation is rejected on purpose: ``0.1`` does not
    name the rational 1/10 to a float-minded caller, and this library never
    guesses.
    """
    cleaned = text.strip()
    if not _EXACT_LITERAL.fullmatch(cleaned):
        raise ValueError(
            f"not an exact rational literal: {text!r} (write 'p' or 'p/q', no decimals)"
        )
    try:
        return Fraction(cleaned.replace(" ", ""))
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational literal {text!r}") from None


def rat_pow(base: Rational | int, exponent: int) -> Rational:
    """Exact integer power of a rational; ``base ** 0 == 1`` including base 0."""
    if exponent < 0 and base == 0:
        raise ZeroDivisionError("cannot raise zero to a negative power")
    return as_rational(base) ** exponent


@dataclass(frozen=True)
class Mat2:
    """Immutable 2x2 matrix of rationals, row-major entries m11 m12 / m21 m22."""

    m11: Rational
    m12: Rational
    m21: Rational
    m22: Rational

    def __post_init__(self) -> None:
        for name in ("m11", "m12", "m21", "m22"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @staticmethod
    def identity() -> "Mat2":
        return Mat2(1, 0, 0, 1)

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.m11 + other.m11,
            self.m12 + other.m12,
            self.m21 + other.m21,
            self.m22 + other.m22,
        )

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.m11 - other.m11,
            self.m12 - other.m12,
            self.m21 - other.m21,
            self.m22 - other.m22,
        )

    def __mul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def scaled(self, factor: Rational | int) -> "Mat2":
        f = as_rational(factor)
        return Mat2(f * self.m11, f * self.m12, f * self.m21, f * self.m22)


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    """Exact matrix product (eight scalar multiplications)."""
    return Mat2(
        x.m11 * y.m11 + x.m12 * y.m21,
        x.m11 * y.m12 + x.m12 * y.m22,
        x.m21 * y.m11 + x.m22 * y.m21,
        x.m21 * y.m12 + x.m22 * y.m22,
    )


def mat_det(m: Mat2) -> Rational:
    return m.m11 * m.m22 - m.m12 * m.m21


def mat_inv(m: Mat2) -> Mat2:
    """Exact inverse; a zero determinant raises :class:`SingularMatrixError`."""
    d = mat_det(m)
    if d == 0:
        raise SingularMatrixError("matrix with zero determinant has no inverse")
    return Mat2(m.m22 / d, -m.m12 / d, -m.m21 / d, m.m11 / d)


def mat_pow(m: Mat2, exponent: int, counter: OpCounter | None = None) -> Mat2:
    """Binary (square-and-multiply) power, O(log |exponent|) matrix products.

    Negative exponents invert first, so they require a nonzero determinant.
    When ``counter`` is given it accrues 8 scalar multiplications per matrix
    product and 6 for an inversion.
    """
    if exponent < 0:
        if counter is not None:
            counter.add(6)
        return mat_pow(mat_inv(m), -exponent, counter)
    result = Mat2.identity()
    base = m
    e = exponent
    while e:
        if e & 1:
            result = mat_mul(result, base)
            if counter is not None:
                counter.add(8)
        e >>= 1
        if e:
            base = mat_mul(base, base)
            if counter is not None:
                counter.add(8)
    return result
