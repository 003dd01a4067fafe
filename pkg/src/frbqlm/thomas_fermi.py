"""The Thomas-Fermi problem ``y'' = y^(3/2) / sqrt(x)``, ``y(0) = 1``, ``y(inf) = 0``.

Trial function (boundary conditions hold for every coefficient vector)::

    y_N(x) = 1/(x^2 + 1) + x/(x^2 + 1) * sum_n c_n FB_n(x)

Quasilinearized about ``y_r`` the equation becomes

    y'' - 3/(2 sqrt x) * sqrt(y_r) * y = -1/(2 sqrt x) * y_r^(3/2).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import gmpy2
from gmpy2 import mpfr

from .basis import DomainError, FrbBasis, bessel_poly, frb_values
from .bigreal import PrecisionContext, Real, from_decimal_string, to_decimal_string, to_real
from .grid import build_grid
from .qlm import DEFAULT_ITERATIONS, LinearizedBvp, NonFiniteCoefficient, qlm_iterate

__all__ = [
    "TABLE_ABSCISSAS",
    "TfAnsatz",
    "SpectralSolution",
    "ThomasFermi",
    "default_digits",
    "linearize",
    "evaluate",
    "slope_at_origin",
    "energy",
    "residual_profile",
    "solve",
    "solution_to_json",
    "solution_from_json",
]

#: Abscissas of the standard y(x) / y'(x) tables (52 values).
TABLE_ABSCISSAS = (
    [f"{k / 4:.2f}" for k in range(1, 21)]
    + ["6", "7", "8", "9", "10", "20"]
    + [str(v) for v in range(30, 101, 10)]
    + [str(v) for v in range(200, 1001, 100)]
    + [str(v) for v in range(2000, 10001, 1000)]
)


def default_digits(N: int) -> int:
    """Working digits for a basis of size ``N + 1``.

    The collocation matrix condition number grows roughly like
    ``10**(0.9 N)``; this keeps about 30 digits above it while leaving the
    default ``N = 50`` run at 50 digits.
    """
    return max(50, (6 * N) // 5 - 10)


class TfAnsatz:
    """``g(x) + h(x) * sum_n c_n FB_n(x)`` with ``g = 1/(x^2+1)``, ``h = x/(x^2+1)``."""

    def __init__(self, basis: FrbBasis):
        self.basis = basis

    def size(self) -> int:
        return self.basis.size()

    @staticmethod
    def boundary_part(x):
        x = to_real(x)
        d = x * x + 1
        return 1 / d, -2 * x / (d * d), (6 * x * x - 2) / (d * d * d)

    @staticmethod
    def envelope(x):
        x = to_real(x)
        d = x * x + 1
        return x / d, (1 - x * x) / (d * d), 2 * x * (x * x - 3) / (d * d * d)

    def term_rows(self, x):
        h0, h1, h2 = self.envelope(x)
        b0, b1, b2 = frb_values(self.basis, x, 2)
        return (
            [h0 * v for v in b0],
            [h1 * v + h0 * w for v, w in zip(b0, b1)],
            [h2 * v + 2 * h1 * w + h0 * z for v, w, z in zip(b0, b1, b2)],
        )

    def __eq__(self, other):
        return isinstance(other, TfAnsatz) and other.basis == self.basis

    def __hash__(self):
        return hash(self.basis)


@dataclass(frozen=True)
class SpectralSolution:
    coeffs: tuple[Real, ...]
    ansatz: TfAnsatz
    iterations: int
    digits: int

    def __post_init__(self):
        if len(self.coeffs) != self.ansatz.size():
            raise ValueError(f"{len(self.coeffs)} coefficients for a basis of size {self.ansatz.size()}")

    @property
    def basis(self) -> FrbBasis:
        return self.ansatz.basis

    @property
    def ctx(self) -> PrecisionContext:
        return PrecisionContext(self.digits)

    def _series(self, x, orders):
        vals = frb_values(self.basis, x, orders)
        return [
            gmpy2.fsum(c * v for c, v in zip(self.coeffs, vals[k])) if k <= orders else None
            for k in range(3)
        ]

    def __call__(self, x) -> Real:
        with self.ctx.local():
            x = to_real(x)
            s0, _, _ = self._series(x, 0)
            g0 = self.ansatz.boundary_part(x)[0]
            h0 = self.ansatz.envelope(x)[0]
            return g0 + h0 * s0

    def derivative(self, x) -> Real:
        with self.ctx.local():
            x = to_real(x)
            if x == 0:
                return slope_at_origin(self)
            s0, s1, _ = self._series(x, 1)
            g = self.ansatz.boundary_part(x)
            h = self.ansatz.envelope(x)
            return g[1] + h[1] * s0 + h[0] * s1

    def second_derivative(self, x) -> Real:
        with self.ctx.local():
            x = to_real(x)
            if x <= 0:
                raise DomainError("second derivative is evaluated for x > 0 only")
            s0, s1, s2 = self._series(x, 2)
            g = self.ansatz.boundary_part(x)
            h = self.ansatz.envelope(x)
            return g[2] + h[2] * s0 + 2 * h[1] * s1 + h[0] * s2


class _Constant:
    def __init__(self, value):
        self.value = value

    def __call__(self, x):
        return to_real(self.value)

    def derivative(self, x):
        return mpfr(0)


def _zero(x):
    return mpfr(0)


def linearize(iterate, clamp: bool = True) -> LinearizedBvp:
    """Coefficients ``p = 0``, ``q = -3 sqrt(y_r) / (2 sqrt x)``, ``f = -y_r^(3/2) / (2 sqrt x)``.

    Negative iterate values are clamped to zero (counted in ``clamped``)
    unless ``clamp`` is False, in which case they raise
    :class:`NonFiniteCoefficient`.
    """
    lin = LinearizedBvp(p=_zero, q=None, f=None)
    cache = {}

    def yr(x):
        try:
            return cache[x]
        except KeyError:
            pass
        v = iterate(x)
        if v < 0:
            if not clamp:
                raise NonFiniteCoefficient(f"iterate is negative ({v}) at x = {x}", x)
            lin.clamped += 1
            v = mpfr(0)
        cache[x] = v
        return v

    def q(x):
        return -3 * gmpy2.sqrt(yr(x)) / (2 * gmpy2.sqrt(x))

    def f(x):
        v = yr(x)
        return -v * gmpy2.sqrt(v) / (2 * gmpy2.sqrt(x))

    lin.q, lin.f = q, f
    return lin


def slope_at_origin(sol: SpectralSolution) -> Real:
    """``lim_{x->0+} y'(x)``, taken term by term.

    Near the origin ``t(x) = sum_{k>=1} (-1)^(k-1) (x^alpha / L)^k``, so the
    series ``S = sum_n c_n FB_n`` is ``S(0) + sum_k s_k x^(alpha k)``.  With
    ``g'(0) = 0``, ``h(0) = 0`` and ``h'(0) = 1`` the derivative of the trial
    function tends to ``S(0)`` plus terms of order ``x^(alpha k)``; the limit
    exists when every such exponent is positive.
    """
    basis = sol.basis
    exponents = [basis.alpha * k for k in range(1, basis.N + 1)]
    if any(e <= 0 for e in exponents):
        raise DomainError(f"y'(0) does not exist for alpha = {basis.alpha}")
    with sol.ctx.local():
        zero = mpfr(0)
        s0 = gmpy2.fsum(c * bessel_poly(n, basis.N, zero) for n, c in enumerate(sol.coeffs))
        g1 = TfAnsatz.boundary_part(zero)[1]
        h1 = TfAnsatz.envelope(zero)[1]
        slope = g1 + h1 * s0
        # FB_n(0) vanishes for n >= 1, leaving c_0
        if slope != sol.coeffs[0]:
            raise ArithmeticError("slope limit disagrees with its closed form c_0")
        return slope


def evaluate(sol: SpectralSolution, x, order: int = 0) -> Real:
    if order == 0:
        return sol(x)
    if order == 1:
        return sol.derivative(x)
    raise ValueError("order must be 0 or 1")


def energy(Z, slope, ctx: PrecisionContext) -> Real:
    """Neutral-atom energy ``(6/7) (4 pi / 3)^(2/3) Z^(7/3) y'(0)``."""
    with ctx.local():
        Z = to_real(Z)
        if Z <= 0:
            raise ValueError("Z must be > 0")
        pi = gmpy2.const_pi()
        return (
            mpfr(6) / 7
            * gmpy2.cbrt(4 * pi / 3) ** 2
            * gmpy2.cbrt(Z) ** 7
            * to_real(slope)
        )


def residual_profile(sol: SpectralSolution, probe: Sequence) -> list[Real]:
    """``|y'' - y^(3/2) / sqrt(x)|`` of the nonlinear equation at each probe point."""
    out = []
    with sol.ctx.local():
        for x in probe:
            x = to_real(x)
            if x <= 0:
                raise DomainError(f"probe points must be > 0, got {x}")
            y = max(sol(x), mpfr(0))
            out.append(abs(sol.second_derivative(x) - y * gmpy2.sqrt(y) / gmpy2.sqrt(x)))
    return out


class ThomasFermi:
    """Problem descriptor consumed by :func:`frbqlm.qlm.qlm_iterate`."""

    def __init__(self, basis: FrbBasis, clamp: bool = True):
        self.basis = basis
        self.ansatz = TfAnsatz(basis)
        self.clamp = clamp

    def initial_iterate(self):
        return _Constant(1)

    def linearize(self, iterate) -> LinearizedBvp:
        return linearize(iterate, self.clamp)

    def make_solution(self, coeffs, iterations, ctx) -> SpectralSolution:
        return SpectralSolution(tuple(coeffs), self.ansatz, iterations, ctx.digits)

    def slope_at_origin(self, solution) -> Real:
        return slope_at_origin(solution)


def solve(
    N: int,
    alpha=Fraction(1, 2),
    L=Fraction(1),
    iterations: int = DEFAULT_ITERATIONS,
    ctx: PrecisionContext | None = None,
    initial=None,
    warm_start: int | None = None,
    clamp: bool = True,
):
    """Solve on an ``N + 1`` member basis.  Returns ``(solution, trace)``.

    ``warm_start=N0`` first solves with ``N0`` members (same iteration count)
    and starts from that solution instead of ``y_0 = 1``.
    """
    ctx = ctx or PrecisionContext(default_digits(N))
    basis = FrbBasis(N, alpha, L)
    if warm_start is not None and initial is None:
        initial, _ = solve(warm_start, alpha, L, iterations, ctx, clamp=clamp)
    grid = build_grid(N, ctx)
    return qlm_iterate(ThomasFermi(basis, clamp), iterations, grid, ctx, initial=initial)


def solution_at(trace, r: int, basis: FrbBasis, ctx: PrecisionContext) -> SpectralSolution:
    """Rebuild the iteration-``r`` solution from a trace."""
    rec = trace.at(r)
    return SpectralSolution(rec.coeffs, TfAnsatz(basis), rec.r, ctx.digits)


def _fraction_text(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def solution_to_json(sol: SpectralSolution) -> str:
    doc = {
        "N": sol.basis.N,
        "alpha": _fraction_text(sol.basis.alpha),
        "L": _fraction_text(sol.basis.L),
        "digits": sol.digits,
        "iterations": sol.iterations,
        "coeffs": [to_decimal_string(c, sol.digits) for c in sol.coeffs],
    }
    return json.dumps(doc, indent=1) + "\n"


def solution_from_json(text: str) -> SpectralSolution:
    """Load a persisted solution and re-check its invariants."""
    doc = json.loads(text)
    missing = {"N", "alpha", "L", "digits", "iterations", "coeffs"} - doc.keys()
    if missing:
        raise ValueError(f"solution document lacks {sorted(missing)}")
    basis = FrbBasis(int(doc["N"]), doc["alpha"], doc["L"])
    ctx = PrecisionContext(int(doc["digits"]))
    coeffs = doc["coeffs"]
    if not all(isinstance(c, str) for c in coeffs):
        raise ValueError("coefficients must be decimal strings")
    values = tuple(from_decimal_string(c, ctx) for c in coeffs)
    if not all(gmpy2.is_finite(v) for v in values):
        raise ValueError("coefficients must be finite")
    iterations = int(doc["iterations"])
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    sol = SpectralSolution(values, TfAnsatz(basis), iterations, ctx.digits)
    if sol(0) != 1:
        raise ValueError("boundary value y(0) = 1 violated")
    return sol
