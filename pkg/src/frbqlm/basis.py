"""Truncated Bessel polynomials and fractional rational Bessel functions.

The Bessel polynomial of index ``n`` belonging to a family truncated at ``N``
is the finite sum

    B_n(t) = sum_{r=0}^{floor((N-n)/2)} (-1)^r / (r! (n+r)!) * (t/2)^(2r+n)

and the fractional rational Bessel (FRB) function composes it with the
algebraic map ``t(x) = x^alpha / (x^alpha + L)`` taking ``[0, inf)`` onto
``[0, 1)``.  Derivatives in ``x`` follow from the chain rule.

All evaluation happens at the active gmpy2 precision; callers wrap calls in
``PrecisionContext.local()``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import gmpy2
from gmpy2 import mpfr

from .bigreal import Real, to_real

__all__ = [
    "DomainError",
    "FrbBasis",
    "MapPoint",
    "bessel_coefficients",
    "bessel_poly",
    "bessel_poly_deriv",
    "bessel_bound",
    "map_point",
    "frb_eval",
    "frb_values",
]

INF = mpfr("inf")


class DomainError(ValueError):
    """Evaluation requested outside the domain where a quantity is finite."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(str(value).strip()) if isinstance(value, str) else Fraction(value)


@dataclass(frozen=True)
class FrbBasis:
    """The family ``FB_0 .. FB_N`` for map exponent ``alpha`` and scale ``L``.

    ``alpha`` and ``L`` are held as exact fractions ("1/2", 0.5, Fraction)
    so exponent bookkeeping near the origin stays exact.
    """

    N: int
    alpha: Fraction = Fraction(1, 2)
    L: Fraction = Fraction(1)

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 0:
            raise ValueError(f"N must be a non-negative int, got {self.N!r}")
        object.__setattr__(self, "alpha", _as_fraction(self.alpha))
        object.__setattr__(self, "L", _as_fraction(self.L))
        if self.alpha <= 0:
            raise ValueError("alpha must be > 0")
        if self.L <= 0:
            raise ValueError("L must be > 0")

    def size(self) -> int:
        return self.N + 1


@dataclass(frozen=True)
class MapPoint:
    """Image of ``x`` under the map, with first and second map derivatives.

    ``dt_dx`` is the weight ``alpha L x^(alpha-1) / (x^alpha + L)^2``.  At
    ``x = 0`` a derivative that blows up is stored as ``+inf``/``-inf`` and
    flagged in ``singular``; nothing overflows silently.
    """

    x: Real
    t: Real
    dt_dx: Real
    d2t_dx2: Real
    singular: bool = False


@lru_cache(maxsize=64)
def _exact_coefficients(N: int) -> tuple[tuple[tuple[Fraction, int], ...], ...]:
    # factorials up to N + floor(N/2) + 1 cover every (n + r)!
    table = []
    for n in range(N + 1):
        terms = []
        for r in range((N - n) // 2 + 1):
            p = 2 * r + n
            terms.append((Fraction((-1) ** r, factorial(r) * factorial(n + r) * 2**p), p))
        table.append(tuple(terms))
    return tuple(table)


@lru_cache(maxsize=64)
def _real_coefficients(N: int, bits: int):
    with gmpy2.context(precision=bits):
        return tuple(
            tuple((mpfr(c.numerator) / c.denominator, p) for c, p in terms)
            for terms in _exact_coefficients(N)
        )


def bessel_coefficients(N: int):
    """Per-index lists of ``(coefficient, power)`` pairs in ``t`` at the active precision."""
    return _real_coefficients(N, gmpy2.get_context().precision)


def bessel_poly(n: int, N: int, t) -> Real:
    """``B_n(t)`` for the family truncated at ``N``; zero when ``n > N``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > N:
        return mpfr(0)
    t = to_real(t)
    return gmpy2.fsum(c * t**p for c, p in bessel_coefficients(N)[n])


def bessel_poly_deriv(n: int, N: int, t, order: int = 1) -> Real:
    """Exact ``order``-th derivative of ``B_n`` in ``t`` (order 1 or 2)."""
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > N:
        return mpfr(0)
    t = to_real(t)
    if order == 1:
        return gmpy2.fsum(c * p * t ** (p - 1) for c, p in bessel_coefficients(N)[n] if p >= 1)
    return gmpy2.fsum(c * p * (p - 1) * t ** (p - 2) for c, p in bessel_coefficients(N)[n] if p >= 2)


def bessel_bound(n: int, N: int) -> Real:
    """``sum_r |coefficient|``: bounds ``|B_n(t)|`` on ``[0, 1]``."""
    return gmpy2.fsum(abs(c) for c, _ in bessel_coefficients(N)[n])


def _power_at_zero(exponent: Fraction) -> Real:
    # lim_{x->0+} x**exponent
    if exponent > 0:
        return mpfr(0)
    if exponent == 0:
        return mpfr(1)
    return INF


def map_point(x, basis: FrbBasis) -> MapPoint:
    x = to_real(x)
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    a, L = basis.alpha, to_real(basis.L)
    ar = to_real(a)
    if x == 0:
        # t'  = a L x^(a-1) / (x^a + L)^2
        # t'' = a L [(a-1) x^(a-2) / (x^a+L)^2 - 2 a x^(2a-2) / (x^a+L)^3]
        d1 = ar / L * _power_at_zero(a - 1)
        first = (ar - 1) / L * _power_at_zero(a - 2) if a != 1 else mpfr(0)
        second = 2 * ar / (L * L) * _power_at_zero(2 * a - 2)
        d2 = ar * (first - second)
        singular = not (gmpy2.is_finite(d1) and gmpy2.is_finite(d2))
        return MapPoint(x, mpfr(0), d1, d2, singular)
    xa = gmpy2.sqrt(x) if a == Fraction(1, 2) else x**ar
    d = xa + L
    t = xa / d
    # x^(a-1) = xa / x keeps a single pow evaluation
    d1 = ar * L * xa / (x * d * d)
    d2 = ar * L * xa / (x * x * d * d) * ((ar - 1) - 2 * ar * xa / d)
    return MapPoint(x, t, d1, d2, False)


def _check_finite(mp: MapPoint, order: int, basis: FrbBasis) -> None:
    bad = (order >= 1 and not gmpy2.is_finite(mp.dt_dx)) or (
        order >= 2 and not gmpy2.is_finite(mp.d2t_dx2)
    )
    if bad:
        raise DomainError(
            f"order-{order} derivative is undefined at x = 0 for alpha = {basis.alpha}"
        )


def frb_values(basis: FrbBasis, x, orders: int = 2):
    """All members at one abscissa.

    Returns ``(values, first, second)`` lists over ``n = 0..N``; lists for
    orders above ``orders`` are ``None``.  Powers of ``t`` are shared across
    members so the cost is one pass over the coefficient table.
    """
    mp = x if isinstance(x, MapPoint) else map_point(x, basis)
    _check_finite(mp, orders, basis)
    N = basis.N
    t = mp.t
    powers = [mpfr(1)]
    for _ in range(N):
        powers.append(powers[-1] * t)
    coeffs = bessel_coefficients(N)
    v0, v1, v2 = [], [], []
    for terms in coeffs:
        v0.append(gmpy2.fsum(c * powers[p] for c, p in terms))
        if orders >= 1:
            b1 = gmpy2.fsum(c * p * powers[p - 1] for c, p in terms if p >= 1)
            v1.append(b1 * mp.dt_dx)
            if orders >= 2:
                b2 = gmpy2.fsum(c * (p * (p - 1)) * powers[p - 2] for c, p in terms if p >= 2)
                v2.append(b2 * mp.dt_dx * mp.dt_dx + b1 * mp.d2t_dx2)
    return v0, (v1 if orders >= 1 else None), (v2 if orders >= 2 else None)


def frb_eval(n: int, x, basis: FrbBasis, order: int = 0) -> Real:
    """``d^order/dx^order FB_n^alpha(x, L)`` for ``order`` in 0, 1, 2."""
    if order not in (0, 1, 2):
        raise ValueError("order must be 0, 1 or 2")
    if not 0 <= n <= basis.N:
        raise ValueError(f"index {n} outside 0..{basis.N}")
    mp = map_point(x, basis)
    if order == 0:
        return bessel_poly(n, basis.N, mp.t)
    _check_finite(mp, order, basis)
    b1 = bessel_poly_deriv(n, basis.N, mp.t, 1)
    if order == 1:
        return b1 * mp.dt_dx
    b2 = bessel_poly_deriv(n, basis.N, mp.t, 2)
    return b2 * mp.dt_dx * mp.dt_dx + b1 * mp.d2t_dx2
