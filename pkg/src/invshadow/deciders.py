"""Inverse-shadowing deciders for method classes T0 and Th.

A query fixes one (eps, delta) pair, a horizon (finite or FULL), a mode
(positive or bi-infinite), and a method class.  The central primitive is
the tube scan: level sets grown from a candidate witness must stay inside
the eps-balls along the target orbit.  Level sets are path-complete --
every level point lies on a pseudo-orbit segment from the start and vice
versa -- so tube containment decides the quantifier over all delta-methods
at once.  A brute-force path enumerator (oracle_path_enum) re-checks the
same question by enumerating pseudo-orbit paths directly; the theorem
suites cross-validate the two.

Candidate witnesses for a target x are restricted to the open eps-ball
around x: a method's sequence starts at its argument, so the k = 0 tube
condition already forces the witness into that ball.

FULL-horizon verdicts are proved by stabilization: the pair (level mask,
orbit phase) evolves deterministically on a finite state space, so a
repeat with containment holding throughout shows containment holds
forever.  If no repeat is found within the cap the verdict is
undetermined (None), never guessed.  In bi-infinite mode forward and
backward branches of a pseudo-orbit through the witness are independent
constraints and are checked independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    BackwardOnNonInvertible,
    BadParams,
    BudgetExceeded,
    InvalidQuery,
    NonpositiveDelta,
)
from .graph import (
    BACKWARD,
    FORWARD,
    TransitionGraph,
    bits_tuple,
    build_graph,
    is_pseudo_orbit,
    iter_bits,
    mask_of,
    reachable_mask,
)
from .systems import OrbitTrace, SystemMap, orbit_trace

FULL = "full"
INF = math.inf
POSITIVE = "positive"
BI = "bi"
CLASS_T0 = "t0"
CLASS_TH = "th"
# On a finite discrete space every map into the sequence space is
# continuous, so the continuous-method class coincides with T0.
CLASS_TC = "tc"

DEFAULT_BIJECTION_LIMIT = 10**6
DEFAULT_PATH_BUDGET = 10**6


def default_cap(n: int, period: int) -> int:
    """Stabilization cap for FULL-horizon scans against an orbit of period q."""
    return 4 * n * period


@dataclass(frozen=True)
class ISQuery:
    """One inverse-shadowing question: system, thresholds, horizon, mode, class."""

    system: SystemMap
    eps: float
    delta: float
    horizon: int | str = FULL
    mode: str = POSITIVE
    method_class: str = CLASS_T0
    cap: int | None = None
    bijection_limit: int = DEFAULT_BIJECTION_LIMIT

    def __post_init__(self):
        if self.method_class == CLASS_TC:
            object.__setattr__(self, "method_class", CLASS_T0)
        if self.method_class not in (CLASS_T0, CLASS_TH):
            raise InvalidQuery(f"unknown method class {self.method_class!r}")
        if not self.eps > 0:
            raise InvalidQuery(f"eps must be positive, got {self.eps}")
        if not self.delta > 0:
            raise NonpositiveDelta(f"delta must be positive, got {self.delta}")
        if self.horizon != FULL and (
            not isinstance(self.horizon, int)
            or isinstance(self.horizon, bool)
            or self.horizon < 1
        ):
            raise InvalidQuery(f"horizon must be a positive int or FULL, got {self.horizon!r}")
        if self.mode not in (POSITIVE, BI):
            raise InvalidQuery(f"unknown mode {self.mode!r}")
        if self.mode == BI and not self.system.bijective:
            raise InvalidQuery(
                f"bi-infinite mode requires a bijective map; {self.system.name} is not"
            )
        if self.cap is not None and self.cap < 1:
            raise InvalidQuery(f"cap must be positive, got {self.cap}")
        if self.bijection_limit < 1:
            raise InvalidQuery(f"bijection_limit must be positive, got {self.bijection_limit}")


@dataclass(frozen=True)
class Counterexample:
    """A concrete pseudo-orbit segment violating the queried condition.

    kind: "tube" (point witness), "ball" (ball witness), "th" (bijection
    method, recorded in `bijection`), or "weak" (escape from the orbit
    neighborhood).  path is in chronological order; path[0] sits at time
    start_time (negative for backward branches) and the violation happens
    at time fail_time.
    """

    kind: str
    x: int
    y: int
    path: tuple[int, ...]
    start_time: int
    fail_time: int
    bijection: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        doc = {
            "kind": self.kind,
            "x": self.x,
            "y": self.y,
            "path": list(self.path),
            "start_time": self.start_time,
            "fail_time": self.fail_time,
        }
        if self.bijection is not None:
            doc["bijection"] = list(self.bijection)
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "Counterexample":
        return cls(
            kind=doc["kind"],
            x=doc["x"],
            y=doc["y"],
            path=tuple(doc["path"]),
            start_time=doc["start_time"],
            fail_time=doc["fail_time"],
            bijection=tuple(doc["bijection"]) if doc.get("bijection") is not None else None,
        )


def counterexample_valid(
    system: SystemMap, eps: float, delta: float, cex: Counterexample
) -> bool:
    """Re-check a counterexample against the real predicates.

    Returns True iff the path is a genuine delta-pseudo-orbit that starts
    where its kind demands and realizes the claimed eps-violation.
    """
    if not cex.path:
        return False
    if not is_pseudo_orbit(system, cex.path, delta):
        return False
    dist = system.space.dist
    trace = orbit_trace(system, cex.x)
    anchor = -cex.start_time  # chronological index of time 0
    if not 0 <= anchor < len(cex.path):
        return False
    if cex.kind in ("tube", "th", "weak"):
        if cex.path[anchor] != cex.y:
            return False
    elif cex.kind == "ball":
        if dist[cex.path[anchor]][cex.y] >= delta:
            return False
    else:
        return False
    if cex.kind == "th":
        h = cex.bijection
        if h is None or sorted(h) != list(range(system.n)):
            return False
        if any(dist[system.map_table[z]][h[z]] >= delta for z in range(system.n)):
            return False
        hinv = [0] * system.n
        for i, v in enumerate(h):
            hinv[v] = i
        for idx in range(len(cex.path) - 1):
            t = cex.start_time + idx
            expected = h[cex.path[idx]] if t >= 0 else cex.path[idx + 1]
            if t >= 0 and cex.path[idx + 1] != expected:
                return False
            if t < 0 and cex.path[idx] != hinv[cex.path[idx + 1]]:
                return False
    idx = cex.fail_time - cex.start_time
    if not 0 <= idx < len(cex.path):
        return False
    if cex.kind == "weak":
        v = cex.path[idx]
        return min(dist[v][o] for o in trace.orbit_set()) >= eps
    return dist[cex.path[idx]][trace.at(cex.fail_time)] >= eps


# --------------------------------------------------------------------------
# tube scans

_OK = "ok"
_FAIL = "fail"
_INF = "inf"
_UNDET = "undet"


def _phase(trace: OrbitTrace, t: int) -> int:
    """Canonical index of f^t(x) inside the trace; determines all later phases."""
    p, q = trace.preperiod, trace.period
    if t >= 0:
        return t if t < p + q else p + (t - p) % q
    return t % q  # negative times occur only on purely periodic traces


@dataclass
class _DirScan:
    status: str
    fail_k: int | None
    levels: list[int] = field(repr=False)


def _scan_direction(
    graph: TransitionGraph,
    trace: OrbitTrace,
    start_mask: int,
    eps: float,
    horizon,
    direction: str,
    cap: int,
) -> _DirScan:
    space = graph.system.space
    step = graph.image if direction == FORWARD else graph.preimage
    sign = 1 if direction == FORWARD else -1
    balls: dict[int, int] = {}
    levels = [start_mask]
    seen: dict[tuple[int, int], int] = {}
    mask = start_mask
    k = 0
    while True:
        pt = trace.at(sign * k)
        ball = balls.get(pt)
        if ball is None:
            ball = space.ball_mask(pt, eps)
            balls[pt] = ball
        if mask & ~ball:
            return _DirScan(_FAIL, k, levels)
        if horizon != FULL:
            if k == horizon:
                return _DirScan(_OK, None, levels)
        else:
            state = (mask, _phase(trace, sign * k))
            if state in seen:
                return _DirScan(_INF, None, levels)
            seen[state] = k
            if k >= cap:
                return _DirScan(_UNDET, None, levels)
        mask = step(mask)
        levels.append(mask)
        k += 1


@dataclass
class _CandScan:
    ok: bool | None              # passes the queried horizon (None: undetermined)
    nstar: int | float | None    # largest verified horizon; INF or None as above
    fail: tuple[str, int, list[int]] | None  # (direction, k, levels) of first violation


def _scan_candidate(
    graph: TransitionGraph,
    trace: OrbitTrace,
    start_mask: int,
    eps: float,
    horizon,
    mode: str,
    cap: int,
) -> _CandScan:
    scans = [(FORWARD, _scan_direction(graph, trace, start_mask, eps, horizon, FORWARD, cap))]
    if mode == BI:
        scans.append(
            (BACKWARD, _scan_direction(graph, trace, start_mask, eps, horizon, BACKWARD, cap))
        )
    fails = [(s.fail_k, name, s) for name, s in scans if s.status == _FAIL]
    if fails:
        k, name, s = min(fails, key=lambda t: (t[0], t[1] != FORWARD))
        return _CandScan(False, max(0, k - 1), (name, k, s.levels))
    if any(s.status == _UNDET for _, s in scans):
        return _CandScan(None, None, None)
    if horizon == FULL:
        return _CandScan(True, INF, None)
    return _CandScan(True, horizon, None)


def tube_ok(
    graph: TransitionGraph,
    x: int,
    y: int,
    eps: float,
    horizon=FULL,
    mode: str = POSITIVE,
    cap: int | None = None,
):
    """Level-set tube containment from y along the orbit of x.

    Returns (ok, fail_index): ok is True/False, or None when a FULL scan
    hit its cap without stabilizing.  fail_index is the signed time of the
    first violation (negative for the backward branch), or None.
    """
    space = graph.system.space
    space.check_point(x)
    space.check_point(y)
    if mode == BI and not graph.system.bijective:
        raise BackwardOnNonInvertible(
            f"{graph.system.name} is not bijective; bi-infinite tube undefined"
        )
    trace = orbit_trace(graph.system, x)
    if cap is None:
        cap = default_cap(graph.n, trace.period)
    sc = _scan_candidate(graph, trace, 1 << y, eps, horizon, mode, cap)
    if sc.ok is True:
        return True, None
    if sc.ok is None:
        return None, None
    name, k, _ = sc.fail
    return False, (k if name == FORWARD else -k)


def robust_tube_ok(
    graph: TransitionGraph,
    x: int,
    y: int,
    eps: float,
    horizon=FULL,
    mode: str = POSITIVE,
    cap: int | None = None,
):
    """Like tube_ok but the start set is the whole delta-ball around y."""
    space = graph.system.space
    space.check_point(x)
    space.check_point(y)
    if mode == BI and not graph.system.bijective:
        raise BackwardOnNonInvertible(
            f"{graph.system.name} is not bijective; bi-infinite tube undefined"
        )
    trace = orbit_trace(graph.system, x)
    if cap is None:
        cap = default_cap(graph.n, trace.period)
    start = space.ball_mask(y, graph.delta)
    sc = _scan_candidate(graph, trace, start, eps, horizon, mode, cap)
    if sc.ok is True:
        return True, None
    if sc.ok is None:
        return None, None
    name, k, _ = sc.fail
    return False, (k if name == FORWARD else -k)


# --------------------------------------------------------------------------
# verdicts

@dataclass(frozen=True)
class PointVerdict:
    """Per-start-point outcome: a witness or a counterexample.

    tube_horizon is N*(x): the largest horizon at which some candidate
    witness works (INF when proven for all horizons, None when a cap was
    hit).  For finite-horizon queries it is truncated at the queried
    horizon.
    """

    x: int
    witness: int | None
    tube_horizon: int | float | None
    counterexample: Counterexample | None = None

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "witness": self.witness,
            "tube_horizon": _horizon_doc(self.tube_horizon),
            "counterexample": None
            if self.counterexample is None
            else self.counterexample.to_dict(),
        }


def _horizon_doc(value):
    if value is None:
        return "undetermined"
    if value == INF:
        return "inf"
    return value


@dataclass(frozen=True)
class ISVerdict:
    """Decision result for one query; overall None means undetermined."""

    system: str
    eps: float
    delta: float
    horizon: int | str
    mode: str
    method_class: str
    overall: bool | None
    points: tuple[PointVerdict, ...]
    diagnostics: tuple[str, ...] = ()

    @property
    def witness_count(self) -> int:
        return sum(1 for p in self.points if p.witness is not None)

    def min_tube_horizon(self):
        """Min over x of N*(x); None if any point is undetermined."""
        values = [p.tube_horizon for p in self.points]
        if any(v is None for v in values):
            return None
        return min(values, default=INF)

    def counterexamples(self) -> tuple[Counterexample, ...]:
        return tuple(p.counterexample for p in self.points if p.counterexample is not None)

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "eps": self.eps,
            "delta": self.delta,
            "horizon": self.horizon,
            "mode": self.mode,
            "method_class": self.method_class,
            "overall": "undetermined" if self.overall is None else self.overall,
            "witness_count": self.witness_count,
            "points": [p.to_dict() for p in self.points],
            "diagnostics": list(self.diagnostics),
        }


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _reconstruct_path(
    graph: TransitionGraph,
    trace: OrbitTrace,
    eps: float,
    fail: tuple[str, int, list[int]],
) -> tuple[tuple[int, ...], int, int]:
    """Rebuild a violating pseudo-orbit segment from stored levels.

    Returns (chronological path, start_time, fail_time).  The violating
    point is the smallest-index point of the failing level outside the
    tube ball; ancestors are picked smallest-index first, so certificates
    are deterministic.
    """
    direction, k, levels = fail
    sign = 1 if direction == FORWARD else -1
    ball = graph.system.space.ball_mask(trace.at(sign * k), eps)
    pts = [_lowest_bit(levels[k] & ~ball)]
    back = graph.pred if direction == FORWARD else graph.succ
    for j in range(k - 1, -1, -1):
        allowed = levels[j] & back[pts[-1]]
        pts.append(_lowest_bit(allowed))
    if direction == FORWARD:
        pts.reverse()
        return tuple(pts), 0, k
    return tuple(pts), -k, -k


def _decide_tube(query: ISQuery, robust: bool) -> ISVerdict:
    system = query.system
    space = system.space
    graph = build_graph(system, query.delta)
    kind = "ball" if robust else "tube"
    points = []
    overall_false = False
    overall_undet = False
    for x in range(system.n):
        trace = orbit_trace(system, x)
        cap = query.cap if query.cap is not None else default_cap(system.n, trace.period)
        witness = None
        wit_nstar = None
        best = None  # (nstar, y, fail_info), maximal nstar, earliest y wins ties
        any_undet = False
        for y in iter_bits(space.ball_mask(x, query.eps)):
            start = space.ball_mask(y, query.delta) if robust else 1 << y
            sc = _scan_candidate(graph, trace, start, query.eps, query.horizon, query.mode, cap)
            if sc.ok is True:
                witness, wit_nstar = y, sc.nstar
                break
            if sc.ok is None:
                any_undet = True
            elif best is None or sc.nstar > best[0]:
                best = (sc.nstar, y, sc.fail)
        if witness is not None:
            points.append(PointVerdict(x, witness, wit_nstar))
        elif any_undet:
            overall_undet = True
            points.append(PointVerdict(x, None, None))
        else:
            overall_false = True
            nstar, y, fail = best
            path, t0, tf = _reconstruct_path(graph, trace, query.eps, fail)
            cex = Counterexample(kind, x, y, path, t0, tf)
            points.append(PointVerdict(x, None, nstar, cex))
    overall = False if overall_false else (None if overall_undet else True)
    diagnostics = ()
    if overall is None:
        diagnostics = ("stabilization cap hit before a repeat; raise cap to resolve",)
    return ISVerdict(
        system.name, query.eps, query.delta, query.horizon, query.mode,
        query.method_class, overall, tuple(points), diagnostics,
    )


def decide_T0_IS(query: ISQuery) -> ISVerdict:
    """Decide T0 inverse shadowing at the queried horizon via level sets."""
    if query.method_class != CLASS_T0:
        raise InvalidQuery("decide_T0_IS requires method class t0")
    return _decide_tube(query, robust=False)


def decide_robust_IS(query: ISQuery) -> ISVerdict:
    """Ball-witness variant: the whole delta-ball around y must stay in the tube."""
    if query.method_class != CLASS_T0:
        raise InvalidQuery("decide_robust_IS requires method class t0")
    return _decide_tube(query, robust=True)


def decide_weak_IS(query: ISQuery) -> ISVerdict:
    """Weak inverse shadowing: the reach cone of the witness must stay in
    the eps-neighborhood of the orbit of x (as a set, not tracked in time).

    Horizonless: the cone is the full reachability fixpoint, and in
    bi-infinite mode the backward cone is included and the orbit is the
    full orbit.  tube_horizon is INF for witnessed points by convention.
    """
    if query.method_class != CLASS_T0:
        raise InvalidQuery("decide_weak_IS requires method class t0")
    system = query.system
    space = system.space
    graph = build_graph(system, query.delta)
    points = []
    overall = True
    for x in range(system.n):
        trace = orbit_trace(system, x)
        nbhd = 0
        for o in trace.orbit_set():
            nbhd |= space.ball_mask(o, query.eps)
        witness = None
        first_fail = None  # (y, direction, escape level index, levels)
        for y in iter_bits(space.ball_mask(x, query.eps)):
            cone = reachable_mask(graph, 1 << y, FORWARD)
            if query.mode == BI:
                cone |= reachable_mask(graph, 1 << y, BACKWARD)
            if cone & ~nbhd == 0:
                witness = y
                break
            if first_fail is None:
                first_fail = y
        if witness is not None:
            points.append(PointVerdict(x, witness, INF))
        else:
            overall = False
            cex = _weak_counterexample(graph, trace, query, first_fail, nbhd)
            points.append(PointVerdict(x, None, 0, cex))
    return ISVerdict(
        system.name, query.eps, query.delta, query.horizon, query.mode,
        query.method_class, overall, tuple(points),
    )


def _weak_counterexample(graph, trace, query, y, nbhd) -> Counterexample:
    """Shortest escaping segment from y, smallest-index choices throughout."""
    for direction in (FORWARD, BACKWARD) if query.mode == BI else (FORWARD,):
        step = graph.image if direction == FORWARD else graph.preimage
        levels = [1 << y]
        seen = {levels[0]}
        while levels[-1] & ~nbhd == 0:
            nxt = step(levels[-1])
            if nxt in seen and nxt & ~nbhd == 0:
                break  # cone closed without escaping in this direction
            seen.add(nxt)
            levels.append(nxt)
        k = len(levels) - 1
        if levels[k] & ~nbhd == 0:
            continue
        pts = [_lowest_bit(levels[k] & ~nbhd)]
        back = graph.pred if direction == FORWARD else graph.succ
        for j in range(k - 1, -1, -1):
            pts.append(_lowest_bit(levels[j] & back[pts[-1]]))
        if direction == FORWARD:
            pts.reverse()
            return Counterexample("weak", trace.start, y, tuple(pts), 0, k)
        return Counterexample("weak", trace.start, y, tuple(pts), -k, -k)
    raise AssertionError("cone escaped but no escape level found")


# --------------------------------------------------------------------------
# class Th: methods induced by bijections delta-close to f

def enumerate_delta_bijections(
    system: SystemMap, delta: float, limit: int = DEFAULT_BIJECTION_LIMIT
):
    """All bijections h with d(f(i), h(i)) < delta for every point i.

    Backtracking over per-point candidate sets with distinctness (a
    system-of-distinct-representatives search).  Returns (bijections,
    truncated): bijections in lexicographic order; truncated is True when
    the limit stopped the search with results missing.
    """
    if not delta > 0:
        raise NonpositiveDelta(f"delta must be positive, got {delta}")
    if limit < 1:
        raise BadParams(f"limit must be positive, got {limit}")
    space = system.space
    n = system.n
    cands = [bits_tuple(space.ball_mask(system.map_table[i], delta)) for i in range(n)]
    if any(not c for c in cands):
        return (), False
    found: list[tuple[int, ...]] = []
    truncated = False

    def rec(i: int, used: int, acc: list[int]) -> bool:
        nonlocal truncated
        if i == n:
            if len(found) >= limit:
                truncated = True
                return False
            found.append(tuple(acc))
            return True
        for v in cands[i]:
            if not used & (1 << v):
                acc.append(v)
                keep_going = rec(i + 1, used | (1 << v), acc)
                acc.pop()
                if not keep_going:
                    return False
        return True

    rec(0, 0, [])
    return tuple(found), truncated


def _th_first_fail(system, trace, h, hinv, y, eps, direction) -> int | float:
    """First time |k| where d(h^k(y), f^k(x)) >= eps along one direction; INF if never.

    The pair (h^k(y), orbit phase of x) is deterministic on a finite state
    space, so the scan is exact: it stops at the first repeat.
    """
    dist = system.space.dist
    sign = 1 if direction == FORWARD else -1
    table = h if direction == FORWARD else hinv
    a = y
    k = 0
    seen = set()
    while True:
        if dist[a][trace.at(sign * k)] >= eps:
            return k
        state = (a, _phase(trace, sign * k))
        if state in seen:
            return INF
        seen.add(state)
        a = table[a]
        k += 1


def decide_Th_IS(query: ISQuery) -> ISVerdict:
    """Decide Th inverse shadowing by direct iteration of each admissible
    bijection: a witness y must track the orbit of x under every h.

    With no admissible bijection the condition is vacuous and every point
    is witnessed.  A truncated enumeration yields an undetermined verdict.
    """
    if query.method_class != CLASS_TH:
        raise InvalidQuery("decide_Th_IS requires method class th")
    system = query.system
    space = system.space
    hs, truncated = enumerate_delta_bijections(system, query.delta, query.bijection_limit)
    if truncated:
        return ISVerdict(
            system.name, query.eps, query.delta, query.horizon, query.mode,
            query.method_class, None, (),
            (f"bijection enumeration truncated at limit {query.bijection_limit}",),
        )
    inverses = []
    for h in hs:
        hinv = [0] * system.n
        for i, v in enumerate(h):
            hinv[v] = i
        inverses.append(tuple(hinv))
    directions = (FORWARD, BACKWARD) if query.mode == BI else (FORWARD,)
    points = []
    overall = True
    for x in range(system.n):
        trace = orbit_trace(system, x)
        witness = None
        wit_nstar = None
        best = None  # (nstar, y, h index, direction, fail k)
        for y in iter_bits(space.ball_mask(x, query.eps)):
            first = INF
            first_info = None
            for hi, h in enumerate(hs):
                for direction in directions:
                    k = _th_first_fail(system, trace, h, inverses[hi], y, query.eps, direction)
                    if k < first:
                        first = k
                        first_info = (hi, direction, k)
            ok = first == INF if query.horizon == FULL else first > query.horizon
            if ok:
                witness = y
                wit_nstar = INF if first == INF else min(first - 1, _finite(query.horizon))
                break
            nstar = max(0, int(first) - 1)
            if best is None or nstar > best[0]:
                best = (nstar, y, *first_info)
        if witness is not None:
            points.append(PointVerdict(x, witness, wit_nstar))
        else:
            overall = False
            nstar, y, hi, direction, k = best
            cex = _th_counterexample(system, trace, hs[hi], inverses[hi], y, direction, k)
            points.append(PointVerdict(x, None, nstar, cex))
    diagnostics = (f"admissible bijections: {len(hs)}",)
    return ISVerdict(
        system.name, query.eps, query.delta, query.horizon, query.mode,
        query.method_class, overall, tuple(points), diagnostics,
    )


def _finite(horizon):
    return INF if horizon == FULL else horizon


def _th_counterexample(system, trace, h, hinv, y, direction, k) -> Counterexample:
    if direction == FORWARD:
        path = [y]
        for _ in range(k):
            path.append(h[path[-1]])
        return Counterexample("th", trace.start, y, tuple(path), 0, k, bijection=h)
    path = [y]
    for _ in range(k):
        path.append(hinv[path[-1]])
    path.reverse()
    return Counterexample("th", trace.start, y, tuple(path), -k, -k, bijection=h)


# --------------------------------------------------------------------------
# brute-force oracle

def oracle_path_enum(
    graph: TransitionGraph,
    x: int,
    y: int,
    eps: float,
    horizon: int,
    mode: str = POSITIVE,
    budget: int = DEFAULT_PATH_BUDGET,
) -> bool:
    """Enumerate every pseudo-orbit path from y up to the horizon and check
    each against the orbit of x with the pointwise predicate.

    Independent of the level-set machinery; must agree with tube_ok
    wherever both run.  Raises BudgetExceeded past `budget` complete paths
    per direction.
    """
    return oracle_escape_path(graph, x, y, eps, horizon, mode, budget) is None


def oracle_escape_path(
    graph: TransitionGraph,
    x: int,
    y: int,
    eps: float,
    horizon: int,
    mode: str = POSITIVE,
    budget: int = DEFAULT_PATH_BUDGET,
) -> Counterexample | None:
    """First (lexicographically) enumerated path violating the tube, or None."""
    if not isinstance(horizon, int) or isinstance(horizon, bool) or horizon < 0:
        raise BadParams(f"oracle horizon must be a nonnegative int, got {horizon!r}")
    space = graph.system.space
    space.check_point(x)
    space.check_point(y)
    if mode == BI and not graph.system.bijective:
        raise BackwardOnNonInvertible(
            f"{graph.system.name} is not bijective; bi-infinite oracle undefined"
        )
    dist = space.dist
    trace = orbit_trace(graph.system, x)
    directions = (FORWARD, BACKWARD) if mode == BI else (FORWARD,)
    for direction in directions:
        sign = 1 if direction == FORWARD else -1
        target = [trace.at(sign * j) for j in range(horizon + 1)]
        nexts = graph.succ if direction == FORWARD else graph.pred
        options = [bits_tuple(nexts[u]) for u in range(graph.n)]
        paths_seen = 0
        stack = [(y,)]
        while stack:
            path = stack.pop()
            if len(path) == horizon + 1:
                paths_seen += 1
                if paths_seen > budget:
                    raise BudgetExceeded(
                        f"more than {budget} paths at horizon {horizon}"
                    )
                bad = next(
                    (j for j in range(horizon + 1) if dist[path[j]][target[j]] >= eps),
                    None,
                )
                if bad is not None:
                    chron = path[: bad + 1]
                    if direction == FORWARD:
                        return Counterexample("tube", x, y, chron, 0, bad)
                    return Counterexample("tube", x, y, tuple(reversed(chron)), -bad, -bad)
                continue
            # push in reverse so the smallest extension is explored first
            for v in reversed(options[path[-1]]):
                stack.append(path + (v,))
    return None


# --------------------------------------------------------------------------
# horizon tables

def max_tube_horizon(
    graph: TransitionGraph,
    x: int,
    eps: float,
    mode: str = POSITIVE,
    cap: int | None = None,
):
    """Per-candidate N*(x, y) for y in B_eps(x), plus N*(x) = max over them.

    Values are nonnegative ints, INF (stabilization-proved), or None
    (cap hit before a repeat).
    """
    space = graph.system.space
    space.check_point(x)
    if mode == BI and not graph.system.bijective:
        raise BackwardOnNonInvertible(
            f"{graph.system.name} is not bijective; bi-infinite horizons undefined"
        )
    trace = orbit_trace(graph.system, x)
    if cap is None:
        cap = default_cap(graph.n, trace.period)
    table: dict[int, int | float | None] = {}
    for y in iter_bits(space.ball_mask(x, eps)):
        sc = _scan_candidate(graph, trace, 1 << y, eps, FULL, mode, cap)
        table[y] = sc.nstar
    values = list(table.values())
    if any(v == INF for v in values):
        best = INF
    elif any(v is None for v in values):
        best = None
    else:
        best = max(values, default=0)
    return table, best
