"""Finite metric spaces: validated distance matrices, open balls, gaps.

All threshold comparisons in this package are strict (<), so a distance
exactly equal to a radius falls outside the ball.  Distances are plain
64-bit floats; the zoo generators emit dyadic or small-denominator
rationals so ties against thresholds are reproducible.  Matrices loaded
from user configs are accepted as-is (same caveat applies to their ties).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AsymmetricMetric,
    BadParams,
    InvalidPoint,
    NegativeDistance,
    NonzeroDiagonal,
    TriangleViolation,
    ZeroOffDiagonal,
)

# Absolute slack for float round-off when checking d(i,k) <= d(i,j) + d(j,k).
TRIANGLE_SLACK = 1e-12


@dataclass(frozen=True)
class FiniteMetricSpace:
    """Points 0..n-1 with a validated distance matrix.

    Immutable after construction; safe for unsynchronized concurrent reads.
    Construct through :func:`validate_metric`.
    """

    dist: tuple[tuple[float, ...], ...]
    labels: tuple[str, ...]
    coords: tuple[float, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.dist)

    def check_point(self, p) -> None:
        if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < self.n:
            raise InvalidPoint(f"point {p!r} not in 0..{self.n - 1}")

    def distance(self, i: int, j: int) -> float:
        self.check_point(i)
        self.check_point(j)
        return self.dist[i][j]

    def open_ball(self, center: int, r: float) -> frozenset[int]:
        """All points strictly closer than r to center; empty for r <= 0."""
        self.check_point(center)
        row = self.dist[center]
        return frozenset(p for p in range(self.n) if row[p] < r)

    def ball_mask(self, center: int, r: float) -> int:
        """Bitmask form of :meth:`open_ball` (bit p set iff d(center,p) < r)."""
        self.check_point(center)
        row = self.dist[center]
        mask = 0
        for p in range(self.n):
            if row[p] < r:
                mask |= 1 << p
        return mask

    def min_gap(self) -> float:
        """Smallest off-diagonal distance; +inf for a one-point space.

        Below this threshold every delta-pseudo-orbit collapses to the
        true orbit.
        """
        if self.n == 1:
            return math.inf
        return min(
            self.dist[i][j] for i in range(self.n) for j in range(self.n) if i != j
        )

    def diameter(self) -> float:
        return max(self.dist[i][j] for i in range(self.n) for j in range(self.n))

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidPoint(f"unknown point label {label!r}") from None


def validate_metric(matrix, labels=None, coords=None) -> FiniteMetricSpace:
    """Validate a square distance matrix and wrap it as a space.

    Axioms are checked in a fixed order -- symmetry, zero diagonal,
    positivity of off-diagonal entries, triangle inequality -- and the
    first violation is reported with its indices.  The triangle check
    tolerates TRIANGLE_SLACK of float round-off.
    """
    rows = [tuple(float(v) for v in row) for row in matrix]
    n = len(rows)
    if n < 1:
        raise BadParams("distance matrix must have at least one point")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise BadParams(f"row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not math.isfinite(v):
                raise BadParams(f"entry ({i},{j}) is not finite: {v!r}")

    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise AsymmetricMetric(
                    f"dist[{i}][{j}]={rows[i][j]!r} != dist[{j}][{i}]={rows[j][i]!r}",
                    i, j,
                )
    for i in range(n):
        if rows[i][i] != 0.0:
            raise NonzeroDiagonal(f"dist[{i}][{i}]={rows[i][i]!r} must be 0", i)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] < 0.0:
                raise NegativeDistance(f"dist[{i}][{j}]={rows[i][j]!r} < 0", i, j)
            if rows[i][j] == 0.0:
                raise ZeroOffDiagonal(f"dist[{i}][{j}]=0 for distinct points", i, j)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if rows[i][k] > rows[i][j] + rows[j][k] + TRIANGLE_SLACK:
                    raise TriangleViolation(
                        f"dist[{i}][{k}]={rows[i][k]!r} > "
                        f"dist[{i}][{j}]+dist[{j}][{k}]="
                        f"{rows[i][j] + rows[j][k]!r}",
                        i, j, k,
                    )

    if labels is None:
        labels = tuple(str(i) for i in range(n))
    else:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise BadParams(f"{len(labels)} labels for {n} points")
        if len(set(labels)) != n:
            raise BadParams("point labels must be distinct")
    if coords is not None:
        coords = tuple(float(c) for c in coords)
        if len(coords) != n:
            raise BadParams(f"{len(coords)} coords for {n} points")
    return FiniteMetricSpace(tuple(rows), labels, coords)
