"""Exact verification of the sequence identities.

Every check evaluates both sides of one identity at a concrete parameter
point and index tuple, entirely in rational arithmetic, and reports exact
structural equality.  There is no tolerance anywhere.

Families:

==========  =================================================================
L1.1-L1.4   quadratic, addition, subtraction, and convolution identities of
            the u-sequence alone
L2.1-L2.7   mixed u/v identities; require a nonzero discriminant
SUM.u/.v    weighted partial sums along an arithmetic index progression,
            checked three ways: direct summation, the matrix geometric
            series, and the scalar closed form with the determinant-derived
            constant.  A simplified variant of the constant (the "printed
            form", which drops the (ab)^floor(m/2) weight and flips one
            sign) is evaluated alongside for comparison only: its mismatches
            are expected and reported as warnings, never failures.
BINOM.u/.v  binomial expansion of the term at index mn+r in powers of u(m)
            and u(m-1)
CASSINI_W   Cassini-style quadratic for w
ADDITION    w(n+q) decomposed through u(n), u(n-1)
CATALAN     Catalan-style product difference for w
PRODSUM     product-sum symmetry for w
COR31       sum-of-squares specialization of PRODSUM at m = n+1
T34         difference-of-squares companion of COR31
==========  =================================================================

``run_suite`` samples parameter points and index tuples deterministically
from a seed and runs any subset of the families, recording skips whenever a
precondition (nonzero discriminant, nonzero series constant) fails.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction

from .core import (
    DegenerateParametersError,
    Params,
    SequenceKind,
    discriminant,
    term_naive,
    term_range,
    zeta,
)
from .exact import Mat2, Rational, mat_det, mat_inv, mat_mul, mat_pow, rat_pow
from .matforms import MatrixTag, build

__all__ = [
    "Family",
    "IdentityId",
    "IdentityReport",
    "SumConstants",
    "SingularSeriesError",
    "SuiteConfig",
    "SkipRecord",
    "SuiteSummary",
    "check_u_identity",
    "check_uv_identity",
    "check_cassini",
    "check_addition",
    "check_catalan",
    "check_product_sum",
    "check_square_sum",
    "check_square_difference",
    "sum_constants",
    "sum_oracle",
    "sum_direct",
    "sum_closed",
    "check_partial_sum",
    "delta_weight",
    "check_binomial",
    "run_suite",
]


class SingularSeriesError(ValueError):
    """The partial-sum constant det(I - K^m) vanishes at this step length."""


class Family(Enum):
    L1 = "L1"
    L2 = "L2"
    SUM = "SUM"
    BINOM = "BINOM"
    CASSINI_W = "CASSINI_W"
    ADDITION = "ADDITION"
    CATALAN = "CATALAN"
    PRODSUM = "PRODSUM"
    COR31 = "COR31"
    T34 = "T34"


_FAMILY_ORDER = {f: i for i, f in enumerate(Family)}


@dataclass(frozen=True)
class IdentityId:
    """One verifiable identity: a family plus an optional sub-identity tag."""

    family: Family
    sub: int | str | None = None

    def __str__(self) -> str:
        if self.sub is None:
            return self.family.value
        return f"{self.family.value}.{self.sub}"

    @property
    def sort_key(self) -> tuple[int, str]:
        return _FAMILY_ORDER[self.family], "" if self.sub is None else str(self.sub)


def _params_dict(p: Params) -> dict[str, str]:
    return {"a": str(p.a), "b": str(p.b), "c": str(p.c), "w0": str(p.w0), "w1": str(p.w1)}


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check at one parameter/index point.

    ``passed`` means exact equality of the sides (for SUM: three-way equality
    of direct sum, matrix oracle, and corrected closed form).  The printed
    form fields are populated for SUM only; ``printed_form_matches`` compares
    the simplified-constant value against the true sum and is informational.
    """

    id: IdentityId
    params: Params
    indices: dict[str, int]
    lhs: Rational
    rhs: Rational
    passed: bool
    printed_form_value: Rational | None = None
    printed_form_matches: bool | None = None
    sample: int | None = None

    def to_dict(self) -> dict:
        payload: dict = {
            "id": str(self.id),
            "params": _params_dict(self.params),
            "indices": dict(self.indices),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "pass": self.passed,
        }
        if self.printed_form_value is not None:
            payload["printed_form_value"] = str(self.printed_form_value)
        if self.printed_form_matches is not None:
            payload["printed_form_matches"] = self.printed_form_matches
        return payload


@dataclass(frozen=True)
class SumConstants:
    """The two normalizing constants of the partial-sum closed form.

    ``d_corrected`` equals det(I - K^m) and is the constant that actually
    normalizes the sum; ``d_printed`` is the simplified variant kept for
    comparison.
    """

    d_printed: Rational
    d_corrected: Rational


def _ba(p: Params, e: int) -> Rational:
    """(b/a)^e for small parity-product exponents."""
    return rat_pow(p.b / p.a, e)


def _ab(p: Params, e: int) -> Rational:
    """(a/b)^e for small parity-product exponents."""
    return rat_pow(p.a / p.b, e)


def _u(p: Params, i: int) -> Rational:
    return term_naive(p, SequenceKind.U, i)


def _v(p: Params, i: int) -> Rational:
    return term_naive(p, SequenceKind.V, i)


def _w(p: Params, i: int) -> Rational:
    return term_naive(p, SequenceKind.W, i)


def _report(
    family: Family,
    sub: int | str | None,
    p: Params,
    indices: dict[str, int],
    lhs: Rational,
    rhs: Rational,
) -> IdentityReport:
    return IdentityReport(IdentityId(family, sub), p, indices, lhs, rhs, lhs == rhs)


def check_u_identity(p: Params, sub: int, m: int, n: int) -> IdentityReport:
    """One of the four single-sequence identities of u (family L1).

    Sub-identity 1 uses only n; the others use m and n, both >= 1.
    """
    if sub not in (1, 2, 3, 4):
        raise ValueError(f"L1 has sub-identities 1..4, not {sub!r}")
    if n < 1 or (sub != 1 and m < 1):
        raise ValueError("indices must be >= 1")
    if sub == 1:
        lhs = _ab(p, zeta(n)) * _u(p, n) ** 2 - _ab(p, zeta(n + 1)) * _u(p, n - 1) * _u(p, n + 1)
        rhs = (p.a / p.b) * rat_pow(-p.c, n - 1)
        return _report(Family.L1, sub, p, {"n": n}, lhs, rhs)
    if sub == 2:
        lhs = _ba(p, zeta(m * n + n)) * _u(p, m) * _u(p, n + 1) + _ba(
            p, zeta(m * n + m)
        ) * p.c * _u(p, n) * _u(p, m - 1)
        rhs = _u(p, n + m)
    elif sub == 3:
        # exponents from comparing U^n (U^m)^-1 = U^(n-m) entrywise
        lhs = _ba(p, zeta(m * n + m)) * _u(p, n) * _u(p, m + 1) - _ba(
            p, zeta(m * n + n)
        ) * _u(p, m) * _u(p, n + 1)
        rhs = rat_pow(-p.c, m) * _u(p, n - m)
    else:
        lhs = _ba(p, zeta(m * n + n)) * _u(p, m) * _u(p, n - m + 1) + p.c * _ba(
            p, zeta(m * n)
        ) * _u(p, m - 1) * _u(p, n - m)
        rhs = _u(p, n)
    return _report(Family.L1, sub, p, {"m": m, "n": n}, lhs, rhs)


def check_uv_identity(p: Params, sub: int, m: int, n: int) -> IdentityReport:
    """One of the seven mixed u/v identities (family L2).

    All of them live in the generic case, so a zero discriminant raises
    :class:`DegenerateParametersError`.  Sub-identity 1 uses only n.
    """
    if sub not in (1, 2, 3, 4, 5, 6, 7):
        raise ValueError(f"L2 has sub-identities 1..7, not {sub!r}")
    if n < 1 or (sub != 1 and m < 1):
        raise ValueError("indices must be >= 1")
    if discriminant(p) == 0:
        raise DegenerateParametersError("discriminant is zero for these parameters")
    q = discriminant(p) / (p.a * p.a)
    if sub == 1:
        lhs = _v(p, n) ** 2 - q * _u(p, n) ** 2
        rhs = 4 * _ba(p, zeta(n)) * rat_pow(-p.c, n)
        return _report(Family.L2, sub, p, {"n": n}, lhs, rhs)
    zz = zeta(n) * zeta(m)
    if sub == 2:
        lhs = _v(p, m) * _v(p, n) + q * _u(p, m) * _u(p, n)
        rhs = 2 * _ba(p, zz) * _v(p, n + m)
    elif sub == 3:
        lhs = _u(p, m) * _v(p, n) + _u(p, n) * _v(p, m)
        rhs = 2 * _ba(p, zz) * _u(p, n + m)
    elif sub == 4:
        lhs = _v(p, m) * _v(p, n) - q * _u(p, m) * _u(p, n)
        rhs = 2 * rat_pow(-p.c, m) * _ba(p, zz) * _v(p, n - m)
    elif sub == 5:
        lhs = _u(p, n) * _v(p, m) - _u(p, m) * _v(p, n)
        rhs = 2 * rat_pow(-p.c, m) * _ba(p, zz) * _u(p, n - m)
    elif sub == 6:
        lhs = _v(p, n + m) + rat_pow(-p.c, m) * _v(p, n - m)
        rhs = _ab(p, zz) * _v(p, m) * _v(p, n)
    else:
        lhs = _u(p, n + m) + rat_pow(-p.c, m) * _u(p, n - m)
        rhs = _ab(p, zz) * _u(p, n) * _v(p, m)
    return _report(Family.L2, sub, p, {"m": m, "n": n}, lhs, rhs)


def _w_invariant(p: Params) -> Rational:
    """The initial-value quadratic w1^2 - b w0 w1 - c (b/a) w0^2."""
    return p.w1 * p.w1 - p.b * p.w0 * p.w1 - p.c * (p.b / p.a) * p.w0 * p.w0


def check_cassini(p: Params, n: int) -> IdentityReport:
    """Cassini-style quadratic for w at index n >= 1 (family CASSINI_W)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = _ba(p, zeta(n)) * _w(p, n - 1) * _w(p, n + 1) - _ba(p, zeta(n + 1)) * _w(p, n) ** 2
    rhs = rat_pow(Fraction(-1), n) * rat_pow(p.c, n - 1) * _w_invariant(p)
    return _report(Family.CASSINI_W, None, p, {"n": n}, lhs, rhs)


def check_addition(p: Params, n: int, q: int) -> IdentityReport:
    """Index-addition rule w(n+q) = f(u(n), u(n-1), w(q), w(q+1)); n, q >= 1."""
    if n < 1 or q < 1:
        raise ValueError("indices must be >= 1")
    lhs = _w(p, n + q)
    rhs = _ba(p, zeta(n + 1) * zeta(q)) * _u(p, n) * _w(p, q + 1) + p.c * _ba(
        p, zeta(n) * zeta(q + 1)
    ) * _u(p, n - 1) * _w(p, q)
    return _report(Family.ADDITION, None, p, {"n": n, "q": q}, lhs, rhs)


def check_catalan(p: Params, n: int, pp: int, q: int) -> IdentityReport:
    """Catalan-style product difference for w; all three indices >= 1."""
    if n < 1 or pp < 1 or q < 1:
        raise ValueError("indices must be >= 1")
    zpq = zeta(pp) * zeta(q)
    lhs = _ba(p, zeta(n) * zpq) * _w(p, n + pp) * _w(p, n + q) - _ba(
        p, zeta(n + 1) * zpq
    ) * _w(p, n) * _w(p, n + pp + q)
    rhs = (
        _ba(p, zeta(n) * zeta(pp + 1) * zeta(q + 1))
        * rat_pow(-p.c, n)
        * _u(p, pp)
        * _u(p, q)
        * _w_invariant(p)
    )
    return _report(Family.CATALAN, None, p, {"n": n, "pp": pp, "q": q}, lhs, rhs)


def check_product_sum(p: Params, m: int, n: int) -> IdentityReport:
    """Product-sum symmetry for w; m, n >= 1 (family PRODSUM)."""
    if m < 1 or n < 1:
        raise ValueError("indices must be >= 1")
    lhs = _ba(p, zeta(m * n + n)) * _w(p, n + 1) * _w(p, m) + _ba(
        p, zeta(m * n + m)
    ) * p.c * _w(p, n) * _w(p, m - 1)
    rhs = p.w1 * _w(p, m + n) + _ba(p, zeta(m + n)) * p.c * p.w0 * _w(p, m + n - 1)
    return _report(Family.PRODSUM, None, p, {"m": m, "n": n}, lhs, rhs)


def check_square_sum(p: Params, n: int) -> IdentityReport:
    """Sum-of-squares specialization of PRODSUM at m = n+1 (family COR31)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = _ba(p, zeta(n)) * _w(p, n + 1) ** 2 + _ba(p, zeta(n + 1)) * p.c * _w(p, n) ** 2
    rhs = p.w1 * _w(p, 2 * n + 1) + (p.b / p.a) * p.c * p.w0 * _w(p, 2 * n)
    return _report(Family.COR31, None, p, {"n": n}, lhs, rhs)


def check_square_difference(p: Params, n: int) -> IdentityReport:
    """Difference-of-squares companion of COR31; n >= 1 (family T34)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = _w(p, n + 1) ** 2 - p.c * p.c * _w(p, n - 1) ** 2
    rhs = (
        rat_pow(p.a, zeta(n))
        * rat_pow(p.b, zeta(n + 1))
        * (p.w1 * _w(p, 2 * n) + p.c * p.w0 * _w(p, 2 * n - 1))
    )
    return _report(Family.T34, None, p, {"n": n}, lhs, rhs)


def sum_constants(p: Params, m: int) -> SumConstants:
    """Both normalizing constants of the partial-sum closed form at step m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    v_m = _v(p, m)
    z = zeta(m)
    printed = 1 - rat_pow(p.a, z) * v_m + rat_pow(p.a * p.b, z) * rat_pow(-p.c, m)
    corrected = (
        1
        - rat_pow(p.a * p.b, m // 2) * rat_pow(p.a, z) * v_m
        + rat_pow(-(p.a * p.b * p.c), m)
    )
    return SumConstants(printed, corrected)


def _validate_sum_indices(m: int, n: int, r: int) -> None:
    if m < 1 or n < 0 or r < 0:
        raise ValueError("partial sums need m >= 1, n >= 0, r >= 0")


def sum_oracle(p: Params, m: int, n: int, r: int) -> tuple[Rational, Rational]:
    """Both weighted partial sums read off the matrix geometric series.

    Evaluates (I - K^m)^-1 (K^r - K^(m(n+1)+r)) exactly and doubles the
    (2,1) and (1,1) entries to obtain the u- and v-sums.  Requires a nonzero
    discriminant and a nonsingular I - K^m.
    """
    _validate_sum_indices(m, n, r)
    if discriminant(p) == 0:
        raise DegenerateParametersError("discriminant is zero for these parameters")
    k = build(MatrixTag.K, p)
    k_m = mat_pow(k, m)
    resolvent = Mat2.identity() - k_m
    if mat_det(resolvent) == 0:
        raise SingularSeriesError("partial-sum constant det(I - K^m) is zero for this m")
    k_r = mat_pow(k, r)
    k_top = mat_mul(mat_pow(k_m, n + 1), k_r)
    total = mat_mul(mat_inv(resolvent), k_r - k_top)
    return 2 * total.m21, 2 * total.m11


def sum_direct(p: Params, m: int, n: int, r: int) -> tuple[Rational, Rational]:
    """Both weighted partial sums by plain term-by-term addition.

    u-sum: sum over j = 0..n of (ab)^floor((mj+r)/2) a^(zeta(mj+r)-1) u(mj+r);
    the v-sum carries a^zeta(mj+r) instead.
    """
    _validate_sum_indices(m, n, r)
    hi = m * n + r
    us = term_range(p, SequenceKind.U, 0, hi)
    vs = term_range(p, SequenceKind.V, 0, hi)
    total_u = Fraction(0)
    total_v = Fraction(0)
    for j in range(n + 1):
        t = m * j + r
        scale = rat_pow(p.a * p.b, t // 2)
        total_u += scale * rat_pow(p.a, zeta(t) - 1) * us[t]
        total_v += scale * rat_pow(p.a, zeta(t)) * vs[t]
    return total_u, total_v


def sum_closed(
    p: Params, m: int, n: int, r: int, corrected: bool = True
) -> tuple[Rational, Rational] | None:
    """Both partial sums from the scalar closed form.

    With ``corrected=True`` the determinant-derived constant and the
    (ab)^floor(m/2)-weighted brackets are used; this is the form that equals
    the true sums (a zero constant raises :class:`SingularSeriesError`).
    With ``corrected=False`` the simplified variant is evaluated verbatim:
    no bracket weight and a flipped sign on the closing bracket.  Its
    constant can vanish; that case returns None instead of dividing by zero.
    """
    _validate_sum_indices(m, n, r)
    consts = sum_constants(p, m)
    d = consts.d_corrected if corrected else consts.d_printed
    if d == 0:
        if corrected:
            raise SingularSeriesError(
                "partial-sum constant det(I - K^m) is zero for this m"
            )
        return None
    bracket_weight = rat_pow(p.a * p.b, m // 2) if corrected else Fraction(1)
    tail_sign = -1 if corrected else 1
    top = m * n + m + r
    lo = min(r - m, 0)
    us = term_range(p, SequenceKind.U, lo, top)
    vs = term_range(p, SequenceKind.V, lo, top)
    zm = zeta(m)

    def closed(values: list[Rational], diag_shift: int) -> Rational:
        def bracket(t: int, sign: int) -> Rational:
            weight = (
                rat_pow(-p.c, m)
                * rat_pow(p.a, zm * zeta(t + 1))
                * rat_pow(p.b, zm * zeta(t))
            )
            return values[t - lo] + sign * bracket_weight * weight * values[t - m - lo]

        def outer(t: int) -> Rational:
            return rat_pow(p.a * p.b, t // 2) * rat_pow(p.a, zeta(t) + diag_shift)

        return (outer(r) * bracket(r, -1) - outer(top) * bracket(top, tail_sign)) / d

    return closed(us, -1), closed(vs, 0)


def check_partial_sum(p: Params, m: int, n: int, r: int, seq: str = "u") -> IdentityReport:
    """Three-way check of one weighted partial sum (family SUM).

    ``passed`` requires the direct sum, the matrix-series oracle, and the
    corrected closed form to agree exactly.  The simplified-constant value
    rides along in ``printed_form_value`` and is compared informally.
    """
    if seq not in ("u", "v"):
        raise ValueError(f"seq must be 'u' or 'v', not {seq!r}")
    _validate_sum_indices(m, n, r)
    pick = 0 if seq == "u" else 1
    oracle = sum_oracle(p, m, n, r)[pick]
    direct = sum_direct(p, m, n, r)[pick]
    closed_value = sum_closed(p, m, n, r, corrected=True)[pick]
    printed_pair = sum_closed(p, m, n, r, corrected=False)
    printed_value = None if printed_pair is None else printed_pair[pick]
    matches = None if printed_value is None else printed_value == direct
    return IdentityReport(
        IdentityId(Family.SUM, seq),
        p,
        {"m": m, "n": n, "r": r},
        direct,
        closed_value,
        direct == oracle == closed_value,
        printed_value,
        matches,
    )


def delta_weight(p: Params, m: int, n: int, r: int, i: int) -> Rational:
    """The parity bookkeeping weight of one binomial summand.

    (ab)^(floor((i+r)/2) + n*floor(m/2)) * a^(-zeta(m+1)*i - 1 + zeta(i+r))
    * b^(zeta(m)*(n-i)), defined for m >= 2 and 0 <= i <= n.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    e_ab = (i + r) // 2 + n * (m // 2)
    e_a = -zeta(m + 1) * i - 1 + zeta(i + r)
    e_b = zeta(m) * (n - i)
    return rat_pow(p.a * p.b, e_ab) * rat_pow(p.a, e_a) * rat_pow(p.b, e_b)


def check_binomial(p: Params, m: int, n: int, r: int, seq: str = "u") -> IdentityReport:
    """Binomial expansion of the term at index mn+r (family BINOM).

    The right side is a weighted binomial sum in powers of u(m) and u(m-1),
    each summand carrying :func:`delta_weight`; m >= 2, n >= 0, r >= 0.
    """
    if seq not in ("u", "v"):
        raise ValueError(f"seq must be 'u' or 'v', not {seq!r}")
    if m < 2 or n < 0 or r < 0:
        raise ValueError("binomial expansion needs m >= 2, n >= 0, r >= 0")
    target = m * n + r
    hi = max(target, m)
    us = term_range(p, SequenceKind.U, 0, hi)
    xs = us if seq == "u" else term_range(p, SequenceKind.V, 0, hi)
    total = Fraction(0)
    for i in range(n + 1):
        total += (
            math.comb(n, i)
            * rat_pow(p.c, n - i)
            * rat_pow(us[m], i)
            * rat_pow(us[m - 1], n - i)
            * xs[i + r]
            * delta_weight(p, m, n, r, i)
        )
    prefactor = rat_pow(p.a, 1 - zeta(target)) / rat_pow(p.a * p.b, target // 2)
    return _report(
        Family.BINOM, seq, p, {"m": m, "n": n, "r": r}, xs[target], prefactor * total
    )


@dataclass(frozen=True)
class SuiteConfig:
    """Sampling plan for :func:`run_suite`.

    Parameters are drawn from the rational grid with numerators in
    [-numerator_bound, numerator_bound] (nonzero for a, b, c) and
    denominators in [1, denominator_bound]; indices are drawn up to
    ``max_index``.  Passing ``params`` pins the parameter points (cycled
    through) instead of drawing them, which the index draws still follow
    deterministically.
    """

    families: tuple[Family, ...] = tuple(Family)
    samples: int = 100
    seed: int = 0
    max_index: int = 8
    numerator_bound: int = 5
    denominator_bound: int = 5
    params: tuple[Params, ...] | None = None


@dataclass(frozen=True)
class SkipRecord:
    """One sub-identity skipped at one sample because a precondition failed."""

    id: IdentityId
    sample: int
    reason: str
    params: Params

    def to_dict(self) -> dict:
        return {
            "id": str(self.id),
            "sample": self.sample,
            "reason": self.reason,
            "params": _params_dict(self.params),
        }


@dataclass
class SuiteSummary:
    """All reports and skips of one suite run, with aggregate counts."""

    families: tuple[Family, ...]
    seed: int
    samples: int
    results: list[IdentityReport] = field(default_factory=list)
    skipped: list[SkipRecord] = field(default_factory=list)
    passed: int = 0
    failed: int = 0

    def to_dict(self) -> dict:
        return {
            "suite": "+".join(f.value for f in self.families),
            "seed": self.seed,
            "samples": self.samples,
            "results": [r.to_dict() for r in self.results],
            "skipped": [s.to_dict() for s in self.skipped],
            "passed": self.passed,
            "failed": self.failed,
        }


def _draw_params(rng: random.Random, cfg: SuiteConfig) -> Params:
    def nonzero() -> Fraction:
        num = 0
        while num == 0:
            num = rng.randint(-cfg.numerator_bound, cfg.numerator_bound)
        return Fraction(num, rng.randint(1, cfg.denominator_bound))

    def any_value() -> Fraction:
        return Fraction(
            rng.randint(-cfg.numerator_bound, cfg.numerator_bound),
            rng.randint(1, cfg.denominator_bound),
        )

    return Params(nonzero(), nonzero(), nonzero(), any_value(), any_value())


def _plan(
    family: Family, rng: random.Random, bound: int
) -> list[tuple[int | str | None, dict[str, int]]]:
    """Index draws for every sub-identity of a family, in a fixed order."""
    if family in (Family.L1, Family.L2):
        subs = (1, 2, 3, 4) if family is Family.L1 else (1, 2, 3, 4, 5, 6, 7)
        return [
            (s, {"m": rng.randint(1, bound), "n": rng.randint(1, bound)}) for s in subs
        ]
    if family is Family.SUM:
        return [
            (
                seq,
                {
                    "m": rng.randint(1, bound),
                    "n": rng.randint(0, bound),
                    "r": rng.randint(0, bound),
                },
            )
            for seq in ("u", "v")
        ]
    if family is Family.BINOM:
        return [
            (
                seq,
                {
                    "m": rng.randint(2, max(2, bound)),
                    "n": rng.randint(0, bound),
                    "r": rng.randint(0, bound),
                },
            )
            for seq in ("u", "v")
        ]
    if family is Family.ADDITION:
        return [(None, {"n": rng.randint(1, bound), "q": rng.randint(1, bound)})]
    if family is Family.CATALAN:
        return [
            (
                None,
                {
                    "n": rng.randint(1, bound),
                    "pp": rng.randint(1, bound),
                    "q": rng.randint(1, bound),
                },
            )
        ]
    if family is Family.PRODSUM:
        return [(None, {"m": rng.randint(1, bound), "n": rng.randint(1, bound)})]
    return [(None, {"n": rng.randint(1, bound)})]


def _execute(
    family: Family, sub: int | str | None, p: Params, idx: dict[str, int]
) -> IdentityReport:
    if family is Family.L1:
        return check_u_identity(p, sub, idx["m"], idx["n"])
    if family is Family.L2:
        return check_uv_identity(p, sub, idx["m"], idx["n"])
    if family is Family.SUM:
        return check_partial_sum(p, idx["m"], idx["n"], idx["r"], sub)
    if family is Family.BINOM:
        return check_binomial(p, idx["m"], idx["n"], idx["r"], sub)
    if family is Family.CASSINI_W:
        return check_cassini(p, idx["n"])
    if family is Family.ADDITION:
        return check_addition(p, idx["n"], idx["q"])
    if family is Family.CATALAN:
        return check_catalan(p, idx["n"], idx["pp"], idx["q"])
    if family is Family.PRODSUM:
        return check_product_sum(p, idx["m"], idx["n"])
    if family is Family.COR31:
        return check_square_sum(p, idx["n"])
    return check_square_difference(p, idx["n"])


def run_suite(config: SuiteConfig) -> SuiteSummary:
    """Run the configured families over deterministically sampled points.

    A fixed seed reproduces the identical summary, byte for byte, because
    parameter and index draws happen in a fixed order and reports are sorted
    by (identity, sample).  Precondition failures (zero discriminant, zero
    series constant) become skip records, never failures.
    """
    if config.samples < 1:
        raise ValueError("samples must be >= 1")
    if config.max_index < 1:
        raise ValueError("max_index must be >= 1")
    if config.numerator_bound < 1 or config.denominator_bound < 1:
        raise ValueError("sampling bounds must be >= 1")
    families = tuple(f for f in Family if f in set(config.families))
    rng = random.Random(config.seed)
    results: list[IdentityReport] = []
    skipped: list[SkipRecord] = []
    for sample in range(config.samples):
        if config.params:
            p = config.params[sample % len(config.params)]
        else:
            p = _draw_params(rng, config)
        for family in families:
            for sub, idx in _plan(family, rng, config.max_index):
                try:
                    report = _execute(family, sub, p, idx)
                except (DegenerateParametersError, SingularSeriesError) as exc:
                    skipped.append(SkipRecord(IdentityId(family, sub), sample, str(exc), p))
                    continue
                results.append(replace(report, sample=sample))
    results.sort(key=lambda rep: (rep.id.sort_key, rep.sample))
    skipped.sort(key=lambda rec: (rec.id.sort_key, rec.sample))
    passed = sum(1 for rep in results if rep.passed)
    return SuiteSummary(
        families,
        config.seed,
        config.samples,
        results,
        skipped,
        passed,
        len(results) - passed,
    )
