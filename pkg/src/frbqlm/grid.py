"""Collocation abscissas: roots of the rational Chebyshev function of order N+1.

    x_i = (1 - cos(theta_i)) / (1 + cos(theta_i)),  theta_i = (2i - 1) pi / (2N + 2),

for ``i = 1 .. N+1``.  The same value is ``tan(theta_i / 2)**2``, which avoids
the cancellation in ``1 - cos`` for the smallest nodes.  Nodes pair up as
``x_i * x_{N+2-i} = 1``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

from .bigreal import PrecisionContext, Real, to_decimal_string

__all__ = ["CollocationGrid", "build_grid", "grid_to_csv"]


@dataclass(frozen=True)
class CollocationGrid:
    points: tuple[Real, ...]
    N: int

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]


def build_grid(N: int, ctx: PrecisionContext) -> CollocationGrid:
    if N < 0:
        raise ValueError("N must be >= 0")
    count = N + 1
    with ctx.local():
        pi = gmpy2.const_pi()
        lower = []
        for i in range(1, count // 2 + 1):
            half_angle = (2 * i - 1) * pi / (4 * N + 4)
            lower.append(gmpy2.tan(half_angle) ** 2)
        # the middle node of an odd-sized grid sits at angle pi/2, i.e. x = 1
        middle = [mpfr(1)] if count % 2 else []
        upper = [1 / x for x in reversed(lower)]
        points = tuple(lower + middle + upper)
    return CollocationGrid(points, N)


def grid_to_csv(grid: CollocationGrid, digits: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "x"])
    for i, x in enumerate(grid.points, start=1):
        writer.writerow([i, to_decimal_string(x, digits)])
    return buf.getvalue()
