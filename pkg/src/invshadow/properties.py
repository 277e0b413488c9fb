"""Resolution-bounded dynamical property moduli.

The classical qualitative definitions trivialize on a finite space (below
the minimum gap no distinct nearby point exists), so every quantity here
is parameterized by a resolution eta and a horizon N and computed exactly
by enumeration.  Separation thresholds are non-strict (>=); closeness is
strict (<), matching the conventions used by the deciders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadParams
from .graph import build_graph, is_chain_transitive
from .systems import SystemMap, orbit_trace


def sensitivity_modulus(system: SystemMap, eta: float, N: int) -> float:
    """Largest separation reachable from every eta-ball within N steps.

    min over x of max over y in B_eta(x), 1 <= k <= N of d(f^k(x), f^k(y)).
    Zero when every eta-ball is a singleton.
    """
    if not eta > 0 or N < 1:
        raise BadParams("sensitivity_modulus needs eta > 0 and N >= 1")
    space = system.space
    dist = space.dist
    traces = [orbit_trace(system, x) for x in range(system.n)]
    worst = math.inf
    for x in range(system.n):
        tx = traces[x]
        best = 0.0
        for y in space.open_ball(x, eta):
            ty = traces[y]
            for k in range(1, N + 1):
                d = dist[tx.at(k)][ty.at(k)]
                if d > best:
                    best = d
        worst = min(worst, best)
    return worst


def eventual_sensitivity_modulus(system: SystemMap, eta: float, N: int) -> float:
    """Like sensitivity but the perturbation may enter at any orbit time:

    min over x of max over n + k <= N, y in B_eta(f^n(x)) of
    d(f^(n+k)(x), f^k(y)).
    """
    if not eta > 0 or N < 1:
        raise BadParams("eventual_sensitivity_modulus needs eta > 0 and N >= 1")
    space = system.space
    dist = space.dist
    traces = [orbit_trace(system, x) for x in range(system.n)]
    worst = math.inf
    for x in range(system.n):
        tx = traces[x]
        best = 0.0
        for n in range(N + 1):
            fn_x = tx.at(n)
            for y in space.open_ball(fn_x, eta):
                ty = traces[y]
                for k in range(N - n + 1):
                    d = dist[tx.at(n + k)][ty.at(k)]
                    if d > best:
                        best = d
        worst = min(worst, best)
    return worst


def equicontinuity_modulus(system: SystemMap, eps: float, N: int) -> float:
    """Largest delta keeping all orbits of delta-close pairs eps-close up to N.

    Computed exactly as the smallest pair distance among pairs that reach
    separation >= eps at some time 0 <= k <= N; when no pair separates the
    sentinel diameter + min_gap is returned (+inf for a one-point space).
    """
    if not eps > 0 or N < 0:
        raise BadParams("equicontinuity_modulus needs eps > 0 and N >= 0")
    space = system.space
    dist = space.dist
    traces = [orbit_trace(system, x) for x in range(system.n)]
    best = None
    for i in range(system.n):
        ti = traces[i]
        for j in range(i + 1, system.n):
            tj = traces[j]
            if any(dist[ti.at(k)][tj.at(k)] >= eps for k in range(N + 1)):
                if best is None or dist[i][j] < best:
                    best = dist[i][j]
    if best is None:
        return space.diameter() + space.min_gap()
    return best


def expansivity_constant(system: SystemMap, N: int) -> float:
    """min over pairs x != y of max over 0 <= k <= N of d(f^k(x), f^k(y)).

    The system is expansive at horizon N for any threshold up to this
    value; sentinel +inf when there is only one point.
    """
    if N < 0:
        raise BadParams("expansivity_constant needs N >= 0")
    if system.n < 2:
        return math.inf
    dist = system.space.dist
    traces = [orbit_trace(system, x) for x in range(system.n)]
    worst = math.inf
    for i in range(system.n):
        ti = traces[i]
        for j in range(i + 1, system.n):
            tj = traces[j]
            peak = max(dist[ti.at(k)][tj.at(k)] for k in range(N + 1))
            worst = min(worst, peak)
    return worst


def minimality_defect(system: SystemMap, x: int) -> float:
    """Farthest any point lies from the orbit of x; 0 iff the orbit is dense."""
    system.space.check_point(x)
    dist = system.space.dist
    orbit = orbit_trace(system, x).orbit_set()
    return max(min(dist[z][o] for o in orbit) for z in range(system.n))


@dataclass(frozen=True)
class PropertyReport:
    """Resolution-bounded property measurements for one system."""

    system: str
    horizon: int
    eta: float
    sensitivity: float
    eventual_sensitivity: float
    equicontinuity: tuple[tuple[float, float], ...]  # (eps, delta*) pairs
    expansivity: float
    minimality_defect: float
    chain_transitive_at: tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "horizon": self.horizon,
            "eta": self.eta,
            "sensitivity_modulus": _num_doc(self.sensitivity),
            "eventual_sensitivity_modulus": _num_doc(self.eventual_sensitivity),
            "equicontinuity_modulus": [
                {"eps": e, "delta": _num_doc(d)} for e, d in self.equicontinuity
            ],
            "expansivity_constant": _num_doc(self.expansivity),
            "minimality_defect": _num_doc(self.minimality_defect),
            "chain_transitive_at": list(self.chain_transitive_at),
        }


def _num_doc(v: float):
    return "inf" if v == math.inf else v


def measure_properties(
    system: SystemMap,
    eta: float,
    N: int,
    eps_grid=(0.15, 0.2, 0.3),
    delta_grid=(0.1, 0.12, 0.13),
) -> PropertyReport:
    """Assemble the full report over the given threshold grids.

    The reported minimality defect is the maximum over start points, so it
    is 0 exactly when the system is minimal.
    """
    transitive = tuple(
        d for d in delta_grid if is_chain_transitive(build_graph(system, d))
    )
    return PropertyReport(
        system=system.name,
        horizon=N,
        eta=eta,
        sensitivity=sensitivity_modulus(system, eta, N),
        eventual_sensitivity=eventual_sensitivity_modulus(system, eta, N),
        equicontinuity=tuple(
            (eps, equicontinuity_modulus(system, eps, N)) for eps in eps_grid
        ),
        expansivity=expansivity_constant(system, N),
        minimality_defect=max(
            minimality_defect(system, x) for x in range(system.n)
        ),
        chain_transitive_at=transitive,
    )
