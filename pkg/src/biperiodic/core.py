"""Sequence parameters, parity coefficients, and the linear-time term engine.

The family computed throughout this package is the two-periodic second-order
recurrence

    w(n) = chi(n) * w(n-1) + c * w(n-2)      for n >= 2,

where the linear coefficient alternates with the parity of the index:
chi(n) = a when n is even, b when n is odd.  Running the recurrence backward
extends every sequence to negative indices:

    w(n) = (w(n+2) - chi(n+2) * w(n+1)) / c.

Three initial-value conventions are distinguished by :class:`SequenceKind`;
everything else about an instance lives in :class:`Params`.

This module is the slow, obviously-correct route: terms are produced by
stepping the recurrence |n| times.  The logarithmic-time routes in
:mod:`biperiodic.fastpath` are checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact import OpCounter, Rational, as_rational, rat_pow

__all__ = [
    "SequenceKind",
    "Params",
    "DegenerateParametersError",
    "chi",
    "zeta",
    "initial_pair",
    "table_notation",
    "discriminant",
    "term_naive",
    "term_range",
    "w_from_u",
    "v_from_u",
    "w_from_u_terms",
    "v_from_u_terms",
    "reflect_u",
    "reflect_v",
    "reflect_w",
    "negative_term",
]


class DegenerateParametersError(ValueError):
    """A parameter point violates a nonzero-discriminant precondition."""


class SequenceKind(Enum):
    """Initial-value convention for a sequence instance.

    U starts (0, 1); V starts (2, b), where b is taken from the parameters;
    W starts at the explicit (w0, w1) pair carried by :class:`Params`.
    """

    U = "u"
    V = "v"
    W = "w"


@dataclass(frozen=True)
class Params:
    """Defining data (a, b, c, w0, w1) of one sequence instance.

    a, b, c must all be nonzero; w0, w1 are arbitrary and default to (0, 1).
    Degenerate combinations such as a zero discriminant are allowed here;
    the operations that cannot tolerate them reject them individually.
    """

    a: Rational
    b: Rational
    c: Rational
    w0: Rational = Fraction(0)
    w1: Rational = Fraction(1)

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "w0", "w1"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.a == 0 or self.b == 0 or self.c == 0:
            raise ValueError("parameters a, b, c must all be nonzero")


def table_notation(p: Params) -> str:
    """Compact display form ``w(w0,w1;a,b,c)`` of a parameter point."""
    return f"w({p.w0},{p.w1};{p.a},{p.b},{p.c})"


def zeta(n: int) -> int:
    """Parity indicator: 0 for even n, 1 for odd n, for every integer n."""
    return n % 2


def chi(p: Params, n: int) -> Rational:
    """The alternating linear coefficient: a at even indices, b at odd ones."""
    return p.a if n % 2 == 0 else p.b


def initial_pair(p: Params, kind: SequenceKind) -> tuple[Rational, Rational]:
    """Terms at indices 0 and 1 for the given initial-value convention."""
    if kind is SequenceKind.U:
        return Fraction(0), Fraction(1)
    if kind is SequenceKind.V:
        return Fraction(2), p.b
    return p.w0, p.w1


def discriminant(p: Params) -> Rational:
    """The quantity a^2 b^2 + 4abc separating the generic and degenerate cases."""
    ab = p.a * p.b
    return ab * ab + 4 * ab * p.c


def term_naive(
    p: Params, kind: SequenceKind, n: int, counter: OpCounter | None = None
) -> Rational:
    """Term at index n by stepping the recurrence |n| times.

    This is the oracle path: deliberately simple, linear time, used to anchor
    every faster route.  Negative indices run the recurrence backward, which
    divides by c at each step (c is nonzero by construction).
    """
    t0, t1 = initial_pair(p, kind)
    if n == 0:
        return t0
    if n > 0:
        prev, cur = t0, t1
        for k in range(2, n + 1):
            prev, cur = cur, chi(p, k) * cur + p.c * prev
            if counter is not None:
                counter.add(2)
        return cur
    lower, upper = t0, t1
    for k in range(-1, n - 1, -1):
        stepped = (upper - chi(p, k + 2) * lower) / p.c
        lower, upper = stepped, lower
        if counter is not None:
            counter.add(2)
    return lower


def term_range(p: Params, kind: SequenceKind, lo: int, hi: int) -> list[Rational]:
    """Terms at indices lo..hi inclusive, in one recurrence walk per direction."""
    if lo > hi:
        raise ValueError(f"empty index range: {lo}..{hi}")
    t0, t1 = initial_pair(p, kind)
    terms = {0: t0, 1: t1}
    prev, cur = t0, t1
    for k in range(2, hi + 1):
        prev, cur = cur, chi(p, k) * cur + p.c * prev
        terms[k] = cur
    lower, upper = t0, t1
    for k in range(-1, lo - 1, -1):
        stepped = (upper - chi(p, k + 2) * lower) / p.c
        lower, upper = stepped, lower
        terms[k] = lower
    return [terms[k] for k in range(lo, hi + 1)]


def w_from_u_terms(p: Params, n: int, u_n: Rational, u_prev: Rational) -> Rational:
    """Combine u(n) and u(n-1) into w(n): w1 * u(n) + c (b/a)^zeta(n) w0 * u(n-1)."""
    ratio = p.b / p.a if zeta(n) else Fraction(1)
    return u_n * p.w1 + p.c * ratio * u_prev * p.w0


def v_from_u_terms(p: Params, n: int, u_n: Rational, u_prev: Rational) -> Rational:
    """Combine u(n) and u(n-1) into v(n): b * u(n) + 2c (b/a)^zeta(n) * u(n-1)."""
    ratio = p.b / p.a if zeta(n) else Fraction(1)
    return p.b * u_n + 2 * p.c * ratio * u_prev


def w_from_u(p: Params, n: int) -> Rational:
    """w(n) for n >= 1 assembled from u-terms instead of the w recurrence."""
    if n < 1:
        raise ValueError("w_from_u is defined for n >= 1")
    u_prev, u_n = term_range(p, SequenceKind.U, n - 1, n)
    return w_from_u_terms(p, n, u_n, u_prev)


def v_from_u(p: Params, n: int) -> Rational:
    """v(n) for n >= 1 assembled from u-terms instead of the v recurrence."""
    if n < 1:
        raise ValueError("v_from_u is defined for n >= 1")
    u_prev, u_n = term_range(p, SequenceKind.U, n - 1, n)
    return v_from_u_terms(p, n, u_n, u_prev)


def reflect_u(p: Params, n: int, u_n: Rational) -> Rational:
    """u(-n) from u(n) for n >= 1: u(-n) = (-1)^(n+1) u(n) / c^n."""
    if n < 1:
        raise ValueError("reflection is defined for n >= 1")
    sign = 1 if n % 2 else -1
    return sign * u_n / rat_pow(p.c, n)


def reflect_v(p: Params, n: int, v_n: Rational) -> Rational:
    """v(-n) from v(n) for n >= 1: v(-n) = (-1)^n v(n) / c^n."""
    if n < 1:
        raise ValueError("reflection is defined for n >= 1")
    sign = -1 if n % 2 else 1
    return sign * v_n / rat_pow(p.c, n)


def reflect_w(p: Params, n: int, u_n: Rational, u_next: Rational) -> Rational:
    """w(-n) from u(n), u(n+1) for n >= 1.

    (-c)^n w(-n) = (b/a)^zeta(n) w0 u(n+1) - w1 u(n).
    """
    if n < 1:
        raise ValueError("reflection is defined for n >= 1")
    ratio = p.b / p.a if zeta(n) else Fraction(1)
    return (ratio * p.w0 * u_next - p.w1 * u_n) / rat_pow(-p.c, n)


def negative_term(p: Params, kind: SequenceKind, n: int) -> Rational:
    """Term at index -n (n >= 1) via the closed negative-index forms.

    Independent of the backward recurrence, so the two negative-index routes
    cross-check each other.
    """
    if n < 1:
        raise ValueError("negative_term expects n >= 1 and returns the term at -n")
    if kind is SequenceKind.U:
        return reflect_u(p, n, term_naive(p, SequenceKind.U, n))
    if kind is SequenceKind.V:
        return reflect_v(p, n, term_naive(p, SequenceKind.V, n))
    u_n, u_next = term_range(p, SequenceKind.U, n, n + 1)
    return reflect_w(p, n, u_n, u_next)
