"""Quasilinearization driver for second-order BVPs solved by collocation.

A nonlinear problem ``u'' = F(u', u, x)`` is replaced by the sequence of
linear problems

    u_{r+1}'' + p(x) u_{r+1}' + q(x) u_{r+1} = f(x)

with ``p = -F_u'``, ``q = -F_u`` and ``f = F - u_r F_u - u_r' F_u'``, all
evaluated on the previous iterate ``u_r``.  Each linear problem is solved by
forcing its residual to vanish at the collocation nodes; the boundary
conditions live in the trial function (the *ansatz*) so the system is square.

The engine is problem-agnostic.  A problem object provides

* ``ansatz`` with ``basis``, ``size()``, ``boundary_part(x) -> (g, g', g'')``
  and ``term_rows(x) -> (phi, phi', phi'')`` (lists over the unknowns),
* ``initial_iterate()`` returning a callable ``y_0``,
* ``linearize(iterate) -> LinearizedBvp``,
* ``make_solution(coeffs, iterations, ctx)`` returning an evaluable solution,
* ``slope_at_origin(solution)``.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Callable, Sequence

import gmpy2
from gmpy2 import mpfr

from .bigreal import (
    DenseSystem,
    PrecisionContext,
    Real,
    SingularMatrix,
    lu_solve,
    residual_inf,
    to_decimal_string,
)
from .grid import CollocationGrid

__all__ = [
    "NonFiniteCoefficient",
    "LinearizedBvp",
    "IterationRecord",
    "IterationTrace",
    "NodeTable",
    "NodalIterate",
    "assemble_system",
    "qlm_iterate",
]

log = logging.getLogger(__name__)

DEFAULT_ITERATIONS = 45


class NonFiniteCoefficient(ArithmeticError):
    """A linearized coefficient is not finite at a node (iterate left the admissible region)."""

    def __init__(self, message: str, x: Real | None = None, iteration: int | None = None):
        super().__init__(message)
        self.x = x
        self.iteration = iteration


@dataclass
class LinearizedBvp:
    """``u'' + p u' + q u = f`` with coefficient callables.

    ``clamped`` counts evaluations where the problem had to project the
    iterate back into its admissible region.
    """

    p: Callable[[Real], Real]
    q: Callable[[Real], Real]
    f: Callable[[Real], Real]
    clamped: int = 0


@dataclass(frozen=True)
class IterationRecord:
    r: int
    coeffs: tuple[Real, ...]
    delta_sup: Real
    slope: Real
    max_residual: Real
    clamped: int = 0


@dataclass
class IterationTrace:
    records: list[IterationRecord] = field(default_factory=list)

    def __len__(self):
        return len(self.records)

    def __getitem__(self, i):
        return self.records[i]

    def __iter__(self):
        return iter(self.records)

    def at(self, r: int) -> IterationRecord:
        """Record of iteration ``r`` (1-based)."""
        for rec in self.records:
            if rec.r == r:
                return rec
        raise KeyError(r)

    def to_dict(self, digits: int) -> dict:
        def s(v):
            return to_decimal_string(v, digits)

        return {
            "digits": digits,
            "iterations": [
                {
                    "r": rec.r,
                    "delta_sup": s(rec.delta_sup),
                    "slope": s(rec.slope),
                    "max_residual": s(rec.max_residual),
                    "clamped": rec.clamped,
                    "coeffs": [s(c) for c in rec.coeffs],
                }
                for rec in self.records
            ],
        }

    def to_json(self, digits: int) -> str:
        return json.dumps(self.to_dict(digits), indent=1) + "\n"


class NodeTable:
    """Ansatz data at the collocation nodes; fixed across iterations."""

    def __init__(self, ansatz, grid: CollocationGrid, ctx: PrecisionContext):
        if len(grid) != ansatz.size():
            raise ValueError(f"grid has {len(grid)} nodes but the ansatz has {ansatz.size()} unknowns")
        self.nodes = grid.points
        with ctx.local():
            self.boundary = [ansatz.boundary_part(x) for x in self.nodes]
            self.rows = [ansatz.term_rows(x) for x in self.nodes]

    def values(self, coeffs: Sequence[Real], order: int = 0) -> list[Real]:
        return [
            g[order] + gmpy2.fsum(a * c for a, c in zip(rows[order], coeffs))
            for g, rows in zip(self.boundary, self.rows)
        ]


class NodalIterate:
    """An iterate that answers from a cache at the nodes.

    Off-node calls fall through to ``fallback`` (value) and
    ``fallback_derivative``.
    """

    def __init__(self, nodes, values, fallback=None, derivatives=None, fallback_derivative=None):
        self._values = dict(zip(nodes, values))
        self._derivs = dict(zip(nodes, derivatives)) if derivatives is not None else {}
        self._fallback = fallback
        self._fallback_derivative = fallback_derivative

    def __call__(self, x):
        try:
            return self._values[x]
        except (KeyError, TypeError):
            if self._fallback is None:
                raise
            return self._fallback(x)

    def derivative(self, x):
        try:
            return self._derivs[x]
        except (KeyError, TypeError):
            if self._fallback_derivative is None:
                raise
            return self._fallback_derivative(x)


def _finite(v, name, x, iteration):
    if v is None or not gmpy2.is_finite(v):
        raise NonFiniteCoefficient(
            f"coefficient {name} is not finite at x = {x} (iteration {iteration})", x, iteration
        )
    return v


def assemble_system(
    lin: LinearizedBvp,
    ansatz,
    grid: CollocationGrid,
    ctx: PrecisionContext,
    table: NodeTable | None = None,
    iteration: int | None = None,
) -> DenseSystem:
    """Collocation rows of ``L[u] = f`` in the unknown coefficients.

    Row ``i``: ``A[i][n] = phi_n'' + p phi_n' + q phi_n`` at ``x_i`` and
    ``b[i] = f - (g'' + p g' + q g)`` where ``g`` is the ansatz part that
    carries the boundary data.
    """
    table = table or NodeTable(ansatz, grid, ctx)
    matrix, rhs = [], []
    with ctx.local():
        for x, (g0, g1, g2), (r0, r1, r2) in zip(table.nodes, table.boundary, table.rows):
            p = _finite(lin.p(x), "p", x, iteration)
            q = _finite(lin.q(x), "q", x, iteration)
            f = _finite(lin.f(x), "f", x, iteration)
            if p:
                matrix.append([a2 + p * a1 + q * a0 for a0, a1, a2 in zip(r0, r1, r2)])
                rhs.append(f - (g2 + p * g1 + q * g0))
            else:
                matrix.append([a2 + q * a0 for a0, a2 in zip(r0, r2)])
                rhs.append(f - (g2 + q * g0))
    return DenseSystem(matrix, rhs)


def qlm_iterate(
    problem,
    iterations: int,
    grid: CollocationGrid,
    ctx: PrecisionContext,
    initial: Callable | None = None,
    stop: Callable[[IterationRecord], bool] | None = None,
):
    """Run ``iterations`` linearize-assemble-solve cycles.

    ``initial`` overrides the problem's own starting iterate (e.g. a solution
    from a coarser basis).  ``stop`` may end the loop early; it receives each
    new record.  Returns ``(solution, trace)``.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    ansatz = problem.ansatz
    table = NodeTable(ansatz, grid, ctx)
    start = initial if initial is not None else problem.initial_iterate()
    with ctx.local():
        prev_values = [+start(x) for x in table.nodes]
        prev_derivs = None
        if hasattr(start, "derivative"):
            try:
                prev_derivs = [+start.derivative(x) for x in table.nodes]
            except Exception:  # derivative not available everywhere
                prev_derivs = None
    iterate = NodalIterate(table.nodes, prev_values, start, prev_derivs,
                           getattr(start, "derivative", None))
    trace = IterationTrace()
    solution = None
    for r in range(1, iterations + 1):
        lin = problem.linearize(iterate)
        system = assemble_system(lin, ansatz, grid, ctx, table, iteration=r)
        try:
            coeffs = lu_solve(system, ctx)
        except SingularMatrix as exc:
            raise SingularMatrix(f"{exc} (iteration {r})", exc.column) from exc
        solution = problem.make_solution(coeffs, r, ctx)
        with ctx.local():
            values = table.values(coeffs, 0)
            derivs = table.values(coeffs, 1)
            delta = max(abs(a - b) for a, b in zip(values, prev_values))
            res = residual_inf(system.matrix, coeffs, system.rhs, ctx)
            slope = problem.slope_at_origin(solution)
        rec = IterationRecord(r, tuple(coeffs), delta, slope, res, lin.clamped)
        trace.records.append(rec)
        log.debug("iteration %d: delta_sup=%s residual=%s", r, delta, res)
        iterate = NodalIterate(table.nodes, values, solution, derivs, solution.derivative)
        prev_values = values
        if stop is not None and stop(rec):
            break
    return solution, trace
