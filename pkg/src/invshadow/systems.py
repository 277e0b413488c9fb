"""Self-maps on finite metric spaces, orbit traces, and the example zoo.

Zoo families cover contrasting regimes: circle rotations (isometric,
single cycle), circle doubling (locally expanding), identity maps, and
two-point fixtures (a fixed pair and a swapped pair).  Bi-infinite-time
operations are enabled exactly when the map is a bijection; on a finite
discrete space every bijection is a homeomorphism and every map is
continuous.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParams, NegativeTimeOnNonInvertible
from .metric import FiniteMetricSpace, validate_metric


@dataclass(frozen=True)
class SystemMap:
    """A total self-map on a finite metric space. Immutable."""

    space: FiniteMetricSpace
    map_table: tuple[int, ...]
    bijective: bool
    name: str

    @classmethod
    def build(cls, space: FiniteMetricSpace, map_table, name: str = "custom") -> "SystemMap":
        table = tuple(int(v) for v in map_table)
        if len(table) != space.n:
            raise BadParams(f"map table has {len(table)} entries for {space.n} points")
        for i, img in enumerate(table):
            if not 0 <= img < space.n:
                raise BadParams(f"map sends point {i} to invalid point {img}")
        bijective = len(set(table)) == space.n
        return cls(space, table, bijective, name)

    @property
    def n(self) -> int:
        return self.space.n

    def apply(self, p: int) -> int:
        self.space.check_point(p)
        return self.map_table[p]


@dataclass(frozen=True)
class OrbitTrace:
    """Forward orbit with minimal preperiod p and period q.

    points holds x, f(x), ..., f^(p+q)(x); the final entry closes the
    cycle (points[p+q] == points[p]), so one full period past the
    preperiod is always covered.
    """

    start: int
    points: tuple[int, ...]
    preperiod: int
    period: int

    def at(self, k: int) -> int:
        """f^k(start) in O(1) via (p, q) folding.

        Negative k is resolved through the cycle and requires a purely
        periodic trace (preperiod 0), which is automatic for orbits of
        bijections.
        """
        p, q = self.preperiod, self.period
        if k >= 0:
            if k < len(self.points):
                return self.points[k]
            return self.points[p + (k - p) % q]
        if p != 0:
            raise NegativeTimeOnNonInvertible(
                f"orbit of {self.start} has preperiod {p}; no time {k}"
            )
        return self.points[k % q]

    def orbit_set(self) -> frozenset[int]:
        return frozenset(self.points)


def orbit_trace(system: SystemMap, x: int, max_len: int | None = None) -> OrbitTrace:
    """Iterate f from x until the first repeat; (p, q) are minimal.

    On an n-point space the repeat arrives within n steps, so max_len
    (when given) must be at least n + 1.
    """
    system.space.check_point(x)
    if max_len is not None and max_len < system.n + 1:
        raise BadParams(f"max_len {max_len} cannot cover a space of {system.n} points")
    table = system.map_table
    seen: dict[int, int] = {}
    seq: list[int] = []
    cur = x
    while cur not in seen:
        seen[cur] = len(seq)
        seq.append(cur)
        cur = table[cur]
    p = seen[cur]
    q = len(seq) - p
    seq.append(cur)  # close the cycle: seq[p + q] == seq[p]
    return OrbitTrace(x, tuple(seq), p, q)


def point_at_time(trace: OrbitTrace, k: int) -> int:
    """Alias for OrbitTrace.at(k)."""
    return trace.at(k)


# --------------------------------------------------------------------------
# zoo


def circle_space(n: int) -> FiniteMetricSpace:
    """n points at i/n on the unit circle, d(i,j) = min(|i-j|, n-|i-j|)/n."""
    if n < 1:
        raise BadParams(f"circle space needs n >= 1, got {n}")
    dist = [
        [min(abs(i - j), n - abs(i - j)) / n for j in range(n)] for i in range(n)
    ]
    return validate_metric(
        dist,
        labels=[str(i) for i in range(n)],
        coords=[i / n for i in range(n)],
    )


def two_point_space(gap: float) -> FiniteMetricSpace:
    if not gap > 0:
        raise BadParams(f"gap must be positive, got {gap}")
    return validate_metric([[0.0, gap], [gap, 0.0]])


def _rotation(n: int, r: int) -> SystemMap:
    n, r = int(n), int(r)
    if n < 1 or not 0 <= r < n:
        raise BadParams(f"rotation needs n >= 1 and 0 <= r < n, got ({n},{r})")
    return SystemMap.build(circle_space(n), [(i + r) % n for i in range(n)],
                           name=f"rotation({n},{r})")


def _doubling(n: int) -> SystemMap:
    n = int(n)
    if n < 1:
        raise BadParams(f"doubling needs n >= 1, got {n}")
    return SystemMap.build(circle_space(n), [(2 * i) % n for i in range(n)],
                           name=f"doubling({n})")


def _identity(n: int) -> SystemMap:
    n = int(n)
    if n < 1:
        raise BadParams(f"identity needs n >= 1, got {n}")
    return SystemMap.build(circle_space(n), list(range(n)), name=f"identity({n})")


def _two_fixed_points(gap: float) -> SystemMap:
    return SystemMap.build(two_point_space(gap), [0, 1],
                           name=f"two_fixed_points({gap})")


def _swap_pair(gap: float) -> SystemMap:
    return SystemMap.build(two_point_space(gap), [1, 0], name=f"swap_pair({gap})")


ZOO_FAMILIES = {
    "rotation": (_rotation, "rotation:n,r  --  i -> i+r mod n on the n-point circle"),
    "doubling": (_doubling, "doubling:n  --  i -> 2i mod n on the n-point circle"),
    "identity": (_identity, "identity:n  --  i -> i on the n-point circle"),
    "two_fixed_points": (_two_fixed_points,
                         "two_fixed_points:gap  --  two fixed points at distance gap"),
    "swap_pair": (_swap_pair, "swap_pair:gap  --  two points at distance gap, swapped"),
}


def make_zoo_system(family: str, *params) -> SystemMap:
    """Build a named zoo system; see ZOO_FAMILIES for the parameter forms."""
    if family not in ZOO_FAMILIES:
        raise BadParams(
            f"unknown family {family!r}; known: {', '.join(sorted(ZOO_FAMILIES))}"
        )
    builder, _ = ZOO_FAMILIES[family]
    try:
        return builder(*params)
    except TypeError as exc:
        raise BadParams(f"bad parameters for {family}: {exc}") from None
