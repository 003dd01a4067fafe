"""Configurable-precision real arithmetic and a dense LU solver.

Reals are ``gmpy2.mpfr`` values (MPFR, correctly rounded).  A
:class:`PrecisionContext` fixes the number of significant decimal digits and
is activated with ``with ctx.local(): ...``; every routine in the package that
takes a context evaluates inside it.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import gmpy2
from gmpy2 import mpfr

__all__ = [
    "Real",
    "PrecisionContext",
    "DenseSystem",
    "LUFactors",
    "SingularMatrix",
    "GUARD_DIGITS",
    "lu_factor",
    "lu_substitute",
    "lu_solve",
    "residual_inf",
    "to_real",
    "to_decimal_string",
    "from_decimal_string",
]

Real = type(mpfr(0))

#: Guard-digit budget ``g`` used by the pivot threshold and residual bound.
GUARD_DIGITS = 10

MIN_DIGITS = 30


class SingularMatrix(ArithmeticError):
    """Raised when a pivot vanishes at working precision."""

    def __init__(self, message: str, column: int | None = None):
        super().__init__(message)
        self.column = column


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision expressed in significant decimal digits.

    The binary precision is the largest one for which a ``digits``-digit
    decimal string identifies every representable value uniquely, so
    :func:`to_decimal_string` / :func:`from_decimal_string` round-trip
    exactly.
    """

    digits: int = 50

    def __post_init__(self):
        if not isinstance(self.digits, int) or isinstance(self.digits, bool):
            raise TypeError("digits must be an int")
        if self.digits < MIN_DIGITS:
            raise ValueError(f"digits must be >= {MIN_DIGITS}, got {self.digits}")

    @property
    def bits(self) -> int:
        return int((self.digits - 1) * math.log2(10))

    @property
    def eps(self) -> Real:
        return mpfr(2) ** (1 - self.bits)

    @contextmanager
    def local(self) -> Iterator[None]:
        with gmpy2.context(precision=self.bits):
            yield

    def real(self, value) -> Real:
        with self.local():
            return to_real(value)

    def pi(self) -> Real:
        with self.local():
            return gmpy2.const_pi()


def to_real(value) -> Real:
    """Convert ``value`` to an mpfr at the active precision.

    Strings are parsed as decimals (``"0.25"``) or fractions (``"1/3"``);
    :class:`fractions.Fraction` is divided out at working precision.
    """
    if isinstance(value, Fraction):
        return mpfr(value.numerator) / value.denominator
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            return to_real(Fraction(text))
        return mpfr(text)
    if isinstance(value, Real):
        # re-round to the active precision
        return +value
    return mpfr(value)


def to_decimal_string(x: Real, digits: int) -> str:
    """Render ``x`` with ``digits`` significant digits.

    Plain positional notation for ``1e-6 <= |x| < 1e9``, scientific
    notation (``d.ddd...e-07``) otherwise; zero renders as ``"0"``.
    """
    if not gmpy2.is_finite(x):
        if gmpy2.is_nan(x):
            return "nan"
        return "inf" if x > 0 else "-inf"
    if x == 0:
        return "0"
    mantissa, exp, _ = x.digits(10, digits)
    sign = ""
    if mantissa[0] == "-":
        sign, mantissa = "-", mantissa[1:]
    # value = 0.mantissa * 10**exp; the leading digit sits at 10**(exp - 1)
    lead = exp - 1
    if -6 <= lead < 9:
        if exp <= 0:
            body = "0." + "0" * (-exp) + mantissa
        elif exp >= len(mantissa):
            body = mantissa + "0" * (exp - len(mantissa))
        else:
            body = mantissa[:exp] + "." + mantissa[exp:]
        return sign + body
    frac = mantissa[1:]
    body = mantissa[0] + ("." + frac if frac else "")
    return f"{sign}{body}e{lead:+03d}"


def from_decimal_string(text: str, ctx: PrecisionContext) -> Real:
    with ctx.local():
        return mpfr(text.strip())


@dataclass(frozen=True)
class DenseSystem:
    """Square linear system ``A x = b`` with mpfr entries."""

    matrix: tuple[tuple[Real, ...], ...]
    rhs: tuple[Real, ...]

    def __init__(self, matrix: Sequence[Sequence], rhs: Sequence):
        rows = tuple(tuple(row) for row in matrix)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        if len(rhs) != n:
            raise ValueError(f"rhs has length {len(rhs)}, expected {n}")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "rhs", tuple(rhs))

    @property
    def size(self) -> int:
        return len(self.rhs)


@dataclass
class LUFactors:
    """Packed ``P A = L U`` factorization (unit lower ``L`` below the diagonal)."""

    lu: list[list[Real]]
    perm: list[int]
    multipliers_max: Real | None = None

    @property
    def size(self) -> int:
        return len(self.perm)


def lu_factor(matrix: Sequence[Sequence[Real]], ctx: PrecisionContext) -> LUFactors:
    """Gaussian elimination with partial pivoting.

    The singularity test is scale-relative: column ``k``'s pivot must exceed
    ``10**(g - digits)`` times the largest entry of the original column.
    Collocation columns differ in scale by hundreds of orders of magnitude,
    so an absolute threshold would reject healthy systems.
    """
    n = len(matrix)
    with ctx.local():
        a = [[+v for v in row] for row in matrix]
        perm = list(range(n))
        tol = mpfr(10) ** (GUARD_DIGITS - ctx.digits)
        colmax = [max((abs(a[i][k]) for i in range(n)), default=mpfr(0)) for k in range(n)]
        mmax = mpfr(0)
        for k in range(n):
            p = max(range(k, n), key=lambda i: abs(a[i][k]))
            pivot = a[p][k]
            if not gmpy2.is_finite(pivot) or abs(pivot) <= tol * colmax[k] or pivot == 0:
                raise SingularMatrix(f"pivot {k} vanishes at working precision", column=k)
            if p != k:
                a[k], a[p] = a[p], a[k]
                perm[k], perm[p] = perm[p], perm[k]
            rk = a[k]
            tail = rk[k + 1:]
            for i in range(k + 1, n):
                ri = a[i]
                m = ri[k] / pivot
                ri[k] = m
                if m:
                    if abs(m) > mmax:
                        mmax = abs(m)
                    ri[k + 1:] = [u - m * v for u, v in zip(ri[k + 1:], tail)]
    return LUFactors(a, perm, mmax)


def lu_substitute(factors: LUFactors, rhs: Sequence[Real], ctx: PrecisionContext) -> list[Real]:
    lu, perm = factors.lu, factors.perm
    n = factors.size
    with ctx.local():
        y = [+rhs[perm[i]] for i in range(n)]
        for i in range(n):
            row = lu[i]
            y[i] = y[i] - gmpy2.fsum(row[j] * y[j] for j in range(i)) if i else y[i]
        x = [mpfr(0)] * n
        for i in range(n - 1, -1, -1):
            row = lu[i]
            s = gmpy2.fsum(row[j] * x[j] for j in range(i + 1, n)) if i < n - 1 else mpfr(0)
            x[i] = (y[i] - s) / row[i]
    return x


def _exact_residual(matrix, x, rhs, ctx: PrecisionContext) -> list[Real]:
    # p-bit by p-bit products are exact at 2p bits; fsum adds them exactly
    with gmpy2.context(precision=2 * ctx.bits + 2):
        r = [gmpy2.fsum([b, *(-a * v for a, v in zip(row, x))]) for row, b in zip(matrix, rhs)]
    with ctx.local():
        return [+v for v in r]


def residual_inf(matrix, x, rhs, ctx: PrecisionContext) -> Real:
    """``max_i |(A x - b)_i|``, computed exactly and rounded once."""
    r = _exact_residual(matrix, x, rhs, ctx)
    with ctx.local():
        return max((abs(v) for v in r), default=mpfr(0))


def lu_solve(system: DenseSystem, ctx: PrecisionContext, refine: int = 2) -> list[Real]:
    """Solve ``A x = b``; raises :class:`SingularMatrix` on a vanishing pivot.

    ``refine`` rounds of iterative refinement follow the direct solve, each
    driven by an exactly computed residual, so the node residual drops to
    working precision even when ``A`` is badly conditioned.
    """
    factors = lu_factor(system.matrix, ctx)
    x = lu_substitute(factors, system.rhs, ctx)
    for _ in range(refine):
        r = _exact_residual(system.matrix, x, system.rhs, ctx)
        if not any(r):
            break
        d = lu_substitute(factors, r, ctx)
        with ctx.local():
            x = [u + v for u, v in zip(x, d)]
    return x
