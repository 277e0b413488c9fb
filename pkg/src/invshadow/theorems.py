"""Executable theorem suites.

Each core statement becomes a grid of checks producing PASS / FAIL / SKIP
/ UNDETERMINED cells; every FAIL carries a machine-checkable certificate
(a concrete pseudo-orbit, pair, or parameter tuple violating the asserted
inequality).  Statements whose qualitative forms are vacuous at finite
scale are tested through quantitative inequalities extracted from their
derivations; such suites carry a `derived_form` note.

A suite result is FAIL if any cell fails, else UNDETERMINED if any cell
is undetermined, else PASS.  SKIP (hypothesis unmet) only affects the
reported coverage.  All suites are deterministic: identical inputs yield
identical serializations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import deciders
from .deciders import BI, CLASS_T0, CLASS_TH, FULL, INF, ISQuery, POSITIVE
from .graph import build_graph, is_chain_transitive, iter_bits
from .properties import (
    equicontinuity_modulus,
    eventual_sensitivity_modulus,
    expansivity_constant,
    minimality_defect,
)
from .systems import SystemMap, make_zoo_system, orbit_trace

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"
UNDETERMINED = "UNDETERMINED"

REFORM = "REFORM"
REFORM_CTD = "REFORM_CTD"
REFORM_WEAK = "REFORM_WEAK"
NOT_EV_SENS = "NOT_EV_SENS"
MINIMAL_IFF_WIS = "MINIMAL_IFF_WIS"
EQUICONT = "EQUICONT"
FINITE_EQ_FULL = "FINITE_EQ_FULL"
PERIODIC_EXPANSIVE_REMARK = "PERIODIC_EXPANSIVE_REMARK"

THEOREM_IDS = (
    REFORM,
    REFORM_CTD,
    REFORM_WEAK,
    NOT_EV_SENS,
    MINIMAL_IFF_WIS,
    EQUICONT,
    FINITE_EQ_FULL,
    PERIODIC_EXPANSIVE_REMARK,
)

DEFAULT_EPS_GRID = (0.15, 0.2, 0.3)
DEFAULT_DELTA_GRID = (0.1, 0.12, 0.13)
DEFAULT_HORIZONS = (1, 2, 3)


def default_zoo() -> tuple[SystemMap, ...]:
    return (
        make_zoo_system("rotation", 8, 1),
        make_zoo_system("rotation", 9, 1),
        make_zoo_system("doubling", 9),
        make_zoo_system("swap_pair", 0.5),
        make_zoo_system("two_fixed_points", 1.0),
        make_zoo_system("identity", 1),
    )


def modes_for(system: SystemMap) -> tuple[str, ...]:
    return (POSITIVE, BI) if system.bijective else (POSITIVE,)


@dataclass
class SuiteCell:
    params: tuple[tuple[str, object], ...]
    outcome: str
    note: str = ""
    certificates: tuple[dict, ...] = ()

    def to_dict(self) -> dict:
        return {
            "params": dict(self.params),
            "outcome": self.outcome,
            "note": self.note,
            "certificates": list(self.certificates),
        }


@dataclass
class TheoremSuiteResult:
    theorem_id: str
    systems: tuple[str, ...]
    grid: dict
    cells: list[SuiteCell] = field(default_factory=list)
    derived_form: str = ""

    @property
    def outcome(self) -> str:
        outcomes = {c.outcome for c in self.cells}
        if FAIL in outcomes:
            return FAIL
        if UNDETERMINED in outcomes:
            return UNDETERMINED
        return PASS

    @property
    def coverage(self) -> float:
        if not self.cells:
            return 0.0
        live = sum(1 for c in self.cells if c.outcome != SKIP)
        return live / len(self.cells)

    def passed(self) -> bool:
        return self.outcome == PASS

    def certificates(self) -> tuple[dict, ...]:
        out = []
        for c in self.cells:
            out.extend(c.certificates)
        return tuple(out)

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "systems": list(self.systems),
            "grid": self.grid,
            "outcome": self.outcome,
            "coverage": round(self.coverage, 6),
            "derived_form": self.derived_form,
            "cells": [c.to_dict() for c in self.cells],
        }


def _params(**kwargs) -> tuple[tuple[str, object], ...]:
    return tuple(sorted(kwargs.items()))


def _grid_doc(systems, **kwargs) -> dict:
    doc = {"systems": [s.name for s in systems]}
    doc.update({k: list(v) for k, v in kwargs.items()})
    return doc


# --------------------------------------------------------------------------
# REFORM: the level-set decider vs the per-method brute-force oracle

def suite_reform(
    systems=None, eps_grid=DEFAULT_EPS_GRID, delta_grid=DEFAULT_DELTA_GRID,
    horizons=DEFAULT_HORIZONS,
) -> TheoremSuiteResult:
    """Agreement of tube containment with exhaustive path enumeration,
    per (x, y) pair and aggregated, plus eps-monotonicity sub-checks."""
    systems = default_zoo() if systems is None else tuple(systems)
    result = TheoremSuiteResult(
        REFORM, tuple(s.name for s in systems),
        _grid_doc(systems, eps=eps_grid, delta=delta_grid, horizons=horizons),
    )
    for system in systems:
        for mode in modes_for(system):
            for delta in delta_grid:
                graph = build_graph(system, delta)
                for N in horizons:
                    by_pair: dict[tuple[int, int], list[bool]] = {}
                    for eps in eps_grid:
                        certs = []
                        exists_tube = []
                        exists_oracle = []
                        for x in range(system.n):
                            tube_any = False
                            oracle_any = False
                            for y in iter_bits(system.space.ball_mask(x, eps)):
                                t, _ = deciders.tube_ok(graph, x, y, eps, N, mode)
                                o = deciders.oracle_path_enum(graph, x, y, eps, N, mode)
                                by_pair.setdefault((x, y), []).append(bool(t))
                                if bool(t) != o:
                                    esc = deciders.oracle_escape_path(
                                        graph, x, y, eps, N, mode
                                    )
                                    certs.append({
                                        "kind": "reform-mismatch",
                                        "system": system.name, "mode": mode,
                                        "eps": eps, "delta": delta, "horizon": N,
                                        "x": x, "y": y,
                                        "tube": bool(t), "oracle": o,
                                        "escape": None if esc is None else esc.to_dict(),
                                    })
                                tube_any = tube_any or bool(t)
                                oracle_any = oracle_any or o
                            exists_tube.append(tube_any)
                            exists_oracle.append(oracle_any)
                        if exists_tube != exists_oracle:
                            certs.append({
                                "kind": "reform-exists-mismatch",
                                "system": system.name, "mode": mode,
                                "eps": eps, "delta": delta, "horizon": N,
                                "tube_exists": exists_tube,
                                "oracle_exists": exists_oracle,
                            })
                        dec = deciders.decide_T0_IS(ISQuery(
                            system, eps, delta, horizon=N, mode=mode
                        ))
                        if dec.overall is not all(exists_oracle):
                            certs.append({
                                "kind": "reform-decider-mismatch",
                                "system": system.name, "mode": mode,
                                "eps": eps, "delta": delta, "horizon": N,
                                "decider": dec.overall,
                                "oracle": all(exists_oracle),
                            })
                        result.cells.append(SuiteCell(
                            _params(system=system.name, mode=mode, eps=eps,
                                    delta=delta, horizon=N),
                            FAIL if certs else PASS,
                            certificates=tuple(certs),
                        ))
                    mono_certs = []
                    for (x, y), row in sorted(by_pair.items()):
                        # verdicts along increasing eps may only switch False -> True
                        if any(a and not b for a, b in zip(row, row[1:])):
                            mono_certs.append({
                                "kind": "eps-monotonicity",
                                "system": system.name, "mode": mode,
                                "delta": delta, "horizon": N,
                                "x": x, "y": y, "verdicts": row,
                                "eps_grid": list(eps_grid),
                            })
                    result.cells.append(SuiteCell(
                        _params(system=system.name, mode=mode, delta=delta,
                                horizon=N, check="eps-monotone"),
                        FAIL if mono_certs else PASS,
                        certificates=tuple(mono_certs),
                    ))
    return result


# --------------------------------------------------------------------------
# REFORM_CTD: ball witnesses

def suite_reform_robust(
    systems=None, eps_grid=DEFAULT_EPS_GRID, delta_grid=DEFAULT_DELTA_GRID,
    horizons=DEFAULT_HORIZONS,
) -> TheoremSuiteResult:
    """Ball-start tube containment vs the oracle run from every point of
    the delta-ball, plus the robust => plain implication."""
    systems = default_zoo() if systems is None else tuple(systems)
    result = TheoremSuiteResult(
        REFORM_CTD, tuple(s.name for s in systems),
        _grid_doc(systems, eps=eps_grid, delta=delta_grid, horizons=horizons),
    )
    for system in systems:
        for mode in modes_for(system):
            for delta in delta_grid:
                graph = build_graph(system, delta)
                for eps in eps_grid:
                    for N in horizons:
                        certs = []
                        for x in range(system.n):
                            for y in iter_bits(system.space.ball_mask(x, eps)):
                                r, _ = deciders.robust_tube_ok(graph, x, y, eps, N, mode)
                                ball = system.space.open_ball(y, delta)
                                o = all(
                                    deciders.oracle_path_enum(graph, x, z, eps, N, mode)
                                    for z in sorted(ball)
                                )
                                if bool(r) != o:
                                    certs.append({
                                        "kind": "robust-mismatch",
                                        "system": system.name, "mode": mode,
                                        "eps": eps, "delta": delta, "horizon": N,
                                        "x": x, "y": y, "robust": bool(r), "oracle": o,
                                    })
                                t, _ = deciders.tube_ok(graph, x, y, eps, N, mode)
                                if r and not t:
                                    certs.append({
                                        "kind": "robust-implies-plain",
                                        "system": system.name, "mode": mode,
                                        "eps": eps, "delta": delta, "horizon": N,
                                        "x": x, "y": y,
                                    })
                        result.cells.append(SuiteCell(
                            _params(system=system.name, mode=mode, eps=eps,
                                    delta=delta, horizon=N),
                            FAIL if certs else PASS,
                            certificates=tuple(certs),
                        ))
    return result


# --------------------------------------------------------------------------
# REFORM_WEAK: cone containment vs independent reachability

def _dfs_cone(graph, y, backward: bool) -> set[int]:
    # plain set/stack reachability, independent of the bitmask fixpoint
    edges = graph.pred_set if backward else graph.succ_set
    seen = {y}
    stack = [y]
    while stack:
        u = stack.pop()
        for v in sorted(edges(u)):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def suite_reform_weak(
    systems=None, eps_grid=DEFAULT_EPS_GRID, delta_grid=DEFAULT_DELTA_GRID,
) -> TheoremSuiteResult:
    """Weak decider vs a set-based reachability check, plus the remark
    that plain inverse shadowing implies the weak variant."""
    systems = default_zoo() if systems is None else tuple(systems)
    result = TheoremSuiteResult(
        REFORM_WEAK, tuple(s.name for s in systems),
        _grid_doc(systems, eps=eps_grid, delta=delta_grid),
    )
    for system in systems:
        for mode in modes_for(system):
            for delta in delta_grid:
                graph = build_graph(system, delta)
                for eps in eps_grid:
                    certs = []
                    weak = deciders.decide_weak_IS(ISQuery(
                        system, eps, delta, mode=mode
                    ))
                    dist = system.space.dist
                    exists_direct = []
                    for x in range(system.n):
                        orbit = orbit_trace(system, x).orbit_set()
                        found = False
                        for y in iter_bits(system.space.ball_mask(x, eps)):
                            cone = _dfs_cone(graph, y, backward=False)
                            if mode == BI:
                                cone |= _dfs_cone(graph, y, backward=True)
                            if all(
                                min(dist[v][o] for o in orbit) < eps for v in cone
                            ):
                                found = True
                                break
                        exists_direct.append(found)
                        verdict_x = weak.points[x].witness is not None
                        if verdict_x != found:
                            certs.append({
                                "kind": "weak-mismatch",
                                "system": system.name, "mode": mode,
                                "eps": eps, "delta": delta, "x": x,
                                "decider": verdict_x, "direct": found,
                            })
                    if weak.overall is not all(exists_direct):
                        certs.append({
                            "kind": "weak-overall-mismatch",
                            "system": system.name, "mode": mode,
                            "eps": eps, "delta": delta,
                            "decider": weak.overall, "direct": all(exists_direct),
                        })
                    plain = deciders.decide_T0_IS(ISQuery(
                        system, eps, delta, horizon=FULL, mode=mode
                    ))
                    if plain.overall is True and weak.overall is not True:
                        certs.append({
                            "kind": "is-implies-weak",
                            "system": system.name, "mode": mode,
                            "eps": eps, "delta": delta,
                            "plain": plain.overall, "weak": weak.overall,
                        })
                    result.cells.append(SuiteCell(
                        _params(system=system.name, mode=mode, eps=eps, delta=delta),
                        FAIL if certs else PASS,
                        certificates=tuple(certs),
                    ))
    return result


# --------------------------------------------------------------------------
# NOT_EV_SENS: witnesses forbid eventual sensitivity at scale 2 eps

def suite_not_eventually_sensitive(
    systems=None, eps_grid=DEFAULT_EPS_GRID, delta_grid=DEFAULT_DELTA_GRID,
    check_n: int = 6,
) -> TheoremSuiteResult:
    """On FULL-true cells every witness satisfies the 2-eps separation
    bound; conversely an eventual-sensitivity modulus >= 2 eps at
    resolution delta forces a false verdict."""
    systems = default_zoo() if systems is None else tuple(systems)
    result = TheoremSuiteResult(
        NOT_EV_SENS, tuple(s.name for s in systems),
        _grid_doc(systems, eps=eps_grid, delta=delta_grid),
        derived_form=(
            "quantitative 2*eps bound along witness orbits; contrapositive "
            "tested against the FULL-horizon verdict"
        ),
    )
    for system in systems:
        space = system.space
        dist = space.dist
        for delta in delta_grid:
            ev_mod = eventual_sensitivity_modulus(system, delta, check_n)
            for eps in eps_grid:
                certs = []
                dec = deciders.decide_T0_IS(ISQuery(system, eps, delta, horizon=FULL))
                if dec.overall is None:
                    result.cells.append(SuiteCell(
                        _params(system=system.name, eps=eps, delta=delta),
                        UNDETERMINED, note="decider hit its cap",
                    ))
                    continue
                if dec.overall:
                    for pv in dec.points:
                        ty = orbit_trace(system, pv.witness)
                        for n in range(check_n):
                            anchor = ty.at(n + 1)
                            for z in sorted(space.open_ball(anchor, delta)):
                                tz = orbit_trace(system, z)
                                for k in range(check_n - n):
                                    d = dist[tz.at(k)][ty.at(n + k + 1)]
                                    if d >= 2 * eps:
                                        certs.append({
                                            "kind": "two-eps-violation",
                                            "system": system.name,
                                            "eps": eps, "delta": delta,
                                            "x": pv.x, "witness": pv.witness,
                                            "n": n, "k": k, "z": z,
                                            "separation": d, "bound": 2 * eps,
                                        })
                    if ev_mod >= 2 * eps:
                        certs.append({
                            "kind": "contrapositive",
                            "system": system.name, "eps": eps, "delta": delta,
                            "eventual_modulus": ev_mod, "bound": 2 * eps,
                            "verdict": dec.overall,
                        })
                result.cells.append(SuiteCell(
                    _params(system=system.name, eps=eps, delta=delta),
                    FAIL if certs else PASS,
                    note="" if dec.overall else "verdict false; bound vacuous",
                    certificates=tuple(certs),
                ))
    return result


# --------------------------------------------------------------------------
# MINIMAL_IFF_WIS

def suite_minimal_iff_weak_is(
    systems=None, eps_grid=DEFAULT_EPS_GRID, delta_grid=DEFAULT_DELTA_GRID,
) -> TheoremSuiteResult:
    """On chain-transitive cells: weak inverse shadowing forces every
    orbit eps-dense, and minimality forces weak inverse shadowing."""
    systems = default_zoo() if systems is None else tuple(systems)
    result = TheoremSuiteResult(
        MINIMAL_IFF_WIS, tuple(s.name for s in systems),
        _grid_doc(systems, eps=eps_grid, delta=delta_grid),
        derived_form="quantitative direction: defect < eps instead of closure density",
    )
    for system in systems:
        defects = [minimality_defect(system, x) for x in range(system.n)]
        for delta in delta_grid:
            transitive = is_chain_transitive(build_graph(system, delta))
            for eps in eps_grid:
                if not transitive:
                    result.cells.append(SuiteCell(
                        _params(system=system.name, eps=eps, delta=delta),
                        SKIP, note="not chain transitive at this delta",
                    ))
                    continue
                certs = []
                weak = deciders.decide_weak_IS(ISQuery(system, eps, delta))
                if weak.overall is True:
                    for x, defect in enumerate(defects):
                        if defect >= eps:
                            certs.append({
                                "kind": "weak-but-not-dense",
                                "system": system.name, "eps": eps, "delta": delta,
                                "x": x, "defect": defect,
                            })
                if max(defects) == 0.0 and weak.overall is not True:
                    cexs = [c.to_dict() for c in weak.counterexamples()]
                    certs.append({
                        "kind": "minimal-but-not-weak",
                        "system": system.name, "eps": eps, "delta": delta,
                        "weak": weak.overall, "counterexamples": cexs,
                    })
                result.cells.append(SuiteCell(
                    _params(system=system.name, eps=eps, delta=delta),
                    FAIL if certs else PASS,
                    certificates=tuple(certs),
                ))
    return result


# --------------------------------------------------------------------------
# EQUICONT

def suite_equicontinuity(
    systems=None, eps_grid=DEFAULT_EPS_GRID, delta_grid=DEFAULT_DELTA_GRID,
    horizons=(1, 2, 3, 4, 5, 6),
) -> TheoremSuiteResult:
    """Chain transitivity + FULL-true inverse shadowing at (eps, delta)
    must make the equicontinuity modulus at 2*eps at least delta."""
    systems = default_zoo() if systems is None else tuple(systems)
    result = TheoremSuiteResult(
        EQUICONT, tuple(s.name for s in systems),
        _grid_doc(systems, eps=eps_grid, delta=delta_grid, horizons=horizons),
        derived_form=(
            "2*eps constant derived from the ball-witness argument, not "
            "stated explicitly in the source statements"
        ),
    )
    for system in systems:
        for delta in delta_grid:
            transitive = is_chain_transitive(build_graph(system, delta))
            for eps in eps_grid:
                if not transitive:
                    result.cells.append(SuiteCell(
                        _params(system=system.name, eps=eps, delta=delta),
                        SKIP, note="not chain transitive at this delta",
                    ))
                    continue
                dec = deciders.decide_T0_IS(ISQuery(system, eps, delta, horizon=FULL))
                if dec.overall is None:
                    result.cells.append(SuiteCell(
                        _params(system=system.name, eps=eps, delta=delta),
                        UNDETERMINED, note="decider hit its cap",
                    ))
                    continue
                if not dec.overall:
                    result.cells.append(SuiteCell(
                        _params(system=system.name, eps=eps, delta=delta),
                        SKIP, note="no inverse shadowing at this cell",
                    ))
                    continue
                certs = []
                for N in horizons:
                    modulus = equicontinuity_modulus(system, 2 * eps, N)
                    if not modulus >= delta:
                        pair = _separating_pair(system, 2 * eps, N)
                        certs.append({
                            "kind": "equicontinuity-gap",
                            "system": system.name, "eps": eps, "delta": delta,
                            "horizon": N, "modulus": modulus, "pair": pair,
                        })
                result.cells.append(SuiteCell(
                    _params(system=system.name, eps=eps, delta=delta),
                    FAIL if certs else PASS,
                    certificates=tuple(certs),
                ))
    return result


def _separating_pair(system, eps, N):
    """Closest pair reaching separation >= eps within N steps, as evidence."""
    dist = system.space.dist
    best = None
    for i in range(system.n):
        ti = orbit_trace(system, i)
        for j in range(i + 1, system.n):
            tj = orbit_trace(system, j)
            for k in range(N + 1):
                if dist[ti.at(k)][tj.at(k)] >= eps:
                    if best is None or dist[i][j] < best[2]:
                        best = (i, j, dist[i][j], k)
                    break
    if best is None:
        return None
    return {"i": best[0], "j": best[1], "distance": best[2], "k": best[3]}


# --------------------------------------------------------------------------
# FINITE_EQ_FULL

def suite_finite_eq_full(
    systems=None, eps_grid=DEFAULT_EPS_GRID, delta_grid=DEFAULT_DELTA_GRID,
    probes=(1, 2, 3, 4, 5), classes=(CLASS_T0, CLASS_TH),
) -> TheoremSuiteResult:
    """decide(FULL) must agree with the family of finite-horizon verdicts:
    every finite probe true when FULL is true, and some finite horizon
    false when FULL is false."""
    systems = default_zoo() if systems is None else tuple(systems)
    result = TheoremSuiteResult(
        FINITE_EQ_FULL, tuple(s.name for s in systems),
        _grid_doc(systems, eps=eps_grid, delta=delta_grid, probes=probes,
                  classes=classes),
    )
    for system in systems:
        for mode in modes_for(system):
            for method_class in classes:
                decide = (deciders.decide_T0_IS if method_class == CLASS_T0
                          else deciders.decide_Th_IS)
                for delta in delta_grid:
                    for eps in eps_grid:
                        cell_params = _params(
                            system=system.name, mode=mode, method_class=method_class,
                            eps=eps, delta=delta,
                        )
                        full = decide(ISQuery(
                            system, eps, delta, horizon=FULL, mode=mode,
                            method_class=method_class,
                        ))
                        if full.overall is None:
                            result.cells.append(SuiteCell(
                                cell_params, UNDETERMINED,
                                note="FULL verdict undetermined",
                            ))
                            continue
                        certs = []
                        probe_verdicts = {}
                        for N in probes:
                            probe_verdicts[N] = decide(ISQuery(
                                system, eps, delta, horizon=N, mode=mode,
                                method_class=method_class,
                            )).overall
                        if full.overall:
                            bad = [N for N, v in probe_verdicts.items() if v is not True]
                            if bad:
                                certs.append({
                                    "kind": "full-true-finite-false",
                                    "system": system.name, "mode": mode,
                                    "method_class": method_class,
                                    "eps": eps, "delta": delta, "horizons": bad,
                                })
                        else:
                            fail_bound = max(
                                (pv.tube_horizon for pv in full.points
                                 if pv.counterexample is not None),
                                default=0,
                            )
                            probe_n = int(fail_bound) + 1
                            witness_false = decide(ISQuery(
                                system, eps, delta, horizon=probe_n, mode=mode,
                                method_class=method_class,
                            )).overall
                            if witness_false is not False:
                                certs.append({
                                    "kind": "full-false-finite-true",
                                    "system": system.name, "mode": mode,
                                    "method_class": method_class,
                                    "eps": eps, "delta": delta,
                                    "probe_horizon": probe_n,
                                    "probe_verdict": witness_false,
                                })
                        flags = [probe_verdicts[N] for N in probes]
                        if all(isinstance(f, bool) for f in flags) and any(
                            not a and b for a, b in zip(flags, flags[1:])
                        ):
                            certs.append({
                                "kind": "horizon-monotonicity",
                                "system": system.name, "mode": mode,
                                "method_class": method_class,
                                "eps": eps, "delta": delta,
                                "verdicts": flags, "horizons": list(probes),
                            })
                        result.cells.append(SuiteCell(
                            cell_params,
                            FAIL if certs else PASS,
                            certificates=tuple(certs),
                        ))
    return result


# --------------------------------------------------------------------------
# PERIODIC_EXPANSIVE_REMARK

def suite_periodic_expansive_remark(
    sizes=(1, 2, 5, 8), eps_grid=(0.05, 0.2), horizons=(0, 1, 2, 3, 4, 5, 6),
) -> TheoremSuiteResult:
    """A single periodic orbit both inverse-shadows (below the gap) and is
    expansive with constant at least the gap."""
    systems = tuple(
        make_zoo_system("rotation", n, 1 if n > 1 else 0) for n in sizes
    )
    result = TheoremSuiteResult(
        PERIODIC_EXPANSIVE_REMARK, tuple(s.name for s in systems),
        _grid_doc(systems, eps=eps_grid, horizons=horizons, sizes=sizes),
    )
    for system in systems:
        gap = system.space.min_gap()
        delta = 0.99 * gap if math.isfinite(gap) else 1.0
        certs = []
        for eps in eps_grid:
            dec = deciders.decide_T0_IS(ISQuery(system, eps, delta, horizon=FULL))
            if dec.overall is not True:
                certs.append({
                    "kind": "periodic-shadowing",
                    "system": system.name, "eps": eps, "delta": delta,
                    "verdict": dec.overall,
                })
        for N in horizons:
            expansivity = expansivity_constant(system, N)
            if not expansivity >= gap:
                certs.append({
                    "kind": "periodic-expansivity",
                    "system": system.name, "horizon": N,
                    "expansivity": expansivity, "min_gap": gap,
                })
        result.cells.append(SuiteCell(
            _params(system=system.name, delta=delta),
            FAIL if certs else PASS,
            certificates=tuple(certs),
        ))
    return result


# --------------------------------------------------------------------------

SUITE_RUNNERS = {
    REFORM: suite_reform,
    REFORM_CTD: suite_reform_robust,
    REFORM_WEAK: suite_reform_weak,
    NOT_EV_SENS: suite_not_eventually_sensitive,
    MINIMAL_IFF_WIS: suite_minimal_iff_weak_is,
    EQUICONT: suite_equicontinuity,
    FINITE_EQ_FULL: suite_finite_eq_full,
    PERIODIC_EXPANSIVE_REMARK: suite_periodic_expansive_remark,
}


def run_suites(ids=None) -> tuple[TheoremSuiteResult, ...]:
    """Run the requested suites (all of them by default) on the default grid."""
    ids = THEOREM_IDS if ids is None else tuple(ids)
    for i in ids:
        if i not in SUITE_RUNNERS:
            raise KeyError(f"unknown theorem id {i!r}; known: {', '.join(THEOREM_IDS)}")
    return tuple(SUITE_RUNNERS[i]() for i in ids)
