import math
from itertools import product

import pytest

from invshadow import (
    BI,
    FULL,
    INF,
    ISQuery,
    POSITIVE,
    build_graph,
    counterexample_valid,
    decide_robust_IS,
    decide_T0_IS,
    decide_weak_IS,
    is_pseudo_orbit,
    make_zoo_system,
    max_tube_horizon,
    oracle_path_enum,
    orbit_trace,
    robust_tube_ok,
    tube_ok,
)
from invshadow.deciders import oracle_escape_path
from invshadow.errors import (
    BackwardOnNonInvertible,
    BadParams,
    BudgetExceeded,
    InvalidQuery,
)


# --------------------------------------------------------------------------
# query validation

def test_query_validation(rotation8, doubling8):
    with pytest.raises(InvalidQuery):
        ISQuery(rotation8, eps=0.0, delta=0.1)
    with pytest.raises(Exception):
        ISQuery(rotation8, eps=0.1, delta=0.0)
    with pytest.raises(InvalidQuery):
        ISQuery(rotation8, eps=0.1, delta=0.1, horizon=0)
    with pytest.raises(InvalidQuery):
        ISQuery(doubling8, eps=0.1, delta=0.1, mode=BI)
    with pytest.raises(InvalidQuery):
        ISQuery(rotation8, eps=0.1, delta=0.1, method_class="bogus")


def test_tc_is_alias_of_t0(rotation8):
    query = ISQuery(rotation8, eps=0.2, delta=0.12, method_class="tc")
    assert query.method_class == "t0"
    assert decide_T0_IS(query).overall is True


# --------------------------------------------------------------------------
# tube_ok

def test_tube_ok_horizon1(rotation8):
    graph = build_graph(rotation8, 0.13)
    assert tube_ok(graph, 0, 0, 0.2, 1) == (True, None)


def test_tube_fails_at_two(rotation8):
    graph = build_graph(rotation8, 0.13)
    ok, fail = tube_ok(graph, 0, 0, 0.2, 2)
    assert not ok and fail == 2


def test_tube_trivial_below_gap(rotation8):
    graph = build_graph(rotation8, 0.12)
    for x in range(8):
        assert tube_ok(graph, x, x, 0.01, FULL) == (True, None)
        assert tube_ok(graph, x, x, 0.01, 7, mode=BI) == (True, None)


def test_tube_bi_needs_bijective(doubling8):
    graph = build_graph(doubling8, 0.1)
    with pytest.raises(BackwardOnNonInvertible):
        tube_ok(graph, 0, 0, 0.2, 3, mode=BI)


def test_tube_backward_fail_index(rotation9):
    # backward levels grow just like forward ones on a rotation
    graph = build_graph(rotation9, 0.12)
    ok, fail = tube_ok(graph, 0, 0, 0.3, FULL, mode=BI)
    assert not ok and fail in (3, -3)


# --------------------------------------------------------------------------
# decide_T0_IS

def test_decide_full_true_below_gap(rotation8):
    verdict = decide_T0_IS(ISQuery(rotation8, 0.2, 0.12, horizon=FULL))
    assert verdict.overall is True
    assert all(p.tube_horizon == INF for p in verdict.points)
    # y = x itself passes the tube at every x
    graph = build_graph(rotation8, 0.12)
    for x in range(8):
        assert tube_ok(graph, x, x, 0.2, FULL) == (True, None)


def test_decide_full_false_above_gap(rotation8):
    verdict = decide_T0_IS(ISQuery(rotation8, 0.2, 0.13, horizon=FULL))
    assert verdict.overall is False
    assert all(p.tube_horizon == 1 for p in verdict.points)
    for p in verdict.points:
        cex = p.counterexample
        assert cex is not None
        assert counterexample_valid(rotation8, 0.2, 0.13, cex)


def test_decide_identity1(identity1):
    verdict = decide_T0_IS(ISQuery(identity1, 0.5, 0.5, horizon=FULL))
    assert verdict.overall is True
    assert verdict.points[0].witness == 0


def test_decide_no_undetermined_at_default_cap(zoo):
    for system in zoo:
        for eps, delta in product((0.15, 0.2, 0.3), (0.1, 0.12, 0.13)):
            verdict = decide_T0_IS(ISQuery(system, eps, delta, horizon=FULL))
            assert verdict.overall is not None
            assert all(p.tube_horizon is not None for p in verdict.points)


def test_decide_witness_is_smallest_index(rotation8):
    verdict = decide_T0_IS(ISQuery(rotation8, 0.2, 0.12, horizon=FULL))
    # candidates around x=1 are {0, 1, 2}; y=0 also works by isometry
    assert verdict.points[1].witness == 0


def test_decide_finite_horizon(rotation8):
    assert decide_T0_IS(ISQuery(rotation8, 0.2, 0.13, horizon=1)).overall is True
    assert decide_T0_IS(ISQuery(rotation8, 0.2, 0.13, horizon=2)).overall is False


def test_counterexample_is_checkable_pseudo_orbit(rotation9):
    verdict = decide_T0_IS(ISQuery(rotation9, 0.15, 0.13, horizon=FULL))
    assert verdict.overall is False
    for cex in verdict.counterexamples():
        assert is_pseudo_orbit(rotation9, cex.path, 0.13)
        trace = orbit_trace(rotation9, cex.x)
        idx = cex.fail_time - cex.start_time
        assert rotation9.space.dist[cex.path[idx]][trace.at(cex.fail_time)] >= 0.15


def test_decide_bi_mode(rotation8):
    assert decide_T0_IS(ISQuery(rotation8, 0.2, 0.12, horizon=FULL, mode=BI)).overall is True
    assert decide_T0_IS(ISQuery(rotation8, 0.2, 0.13, horizon=FULL, mode=BI)).overall is False


# --------------------------------------------------------------------------
# robust

def test_robust_below_gap(rotation8):
    verdict = decide_robust_IS(ISQuery(rotation8, 0.2, 0.12, horizon=FULL))
    assert verdict.overall is True


def test_robust_ball_level_growth(rotation8):
    # ball around x has radius one index; one step grows it to radius two
    graph = build_graph(rotation8, 0.13)
    for x in range(8):
        assert robust_tube_ok(graph, x, x, 0.3, 1) == (True, None)
        ok, fail = robust_tube_ok(graph, x, x, 0.25, 1)
        assert not ok and fail == 1


def test_robust_implies_plain(zoo):
    for system in zoo:
        for eps, delta, n in product((0.15, 0.3), (0.1, 0.13), (1, 3)):
            graph = build_graph(system, delta)
            for x in range(system.n):
                for y in sorted(system.space.open_ball(x, eps)):
                    r, _ = robust_tube_ok(graph, x, y, eps, n)
                    t, _ = tube_ok(graph, x, y, eps, n)
                    assert not r or t, (system.name, eps, delta, n, x, y)


def test_robust_k0_requires_ball_in_eps_ball(rotation8):
    # at k = 0 the whole delta-ball must sit inside the eps-ball
    graph = build_graph(rotation8, 0.3)
    ok, fail = robust_tube_ok(graph, 0, 0, 0.2, 1)
    assert not ok and fail == 0


# --------------------------------------------------------------------------
# weak

def test_weak_rotation_trivially_true(rotation8):
    verdict = decide_weak_IS(ISQuery(rotation8, 0.05, 0.13))
    assert verdict.overall is True


def test_weak_two_fixed(two_fixed):
    verdict = decide_weak_IS(ISQuery(two_fixed, 0.1, 0.05))
    assert verdict.overall is True
    assert verdict.points[0].witness == 0


def test_weak_doubling_positive(doubling8):
    verdict = decide_weak_IS(ISQuery(doubling8, 0.1, 0.05))
    assert verdict.overall is True
    assert verdict.points[1].witness == 1


def test_weak_false_with_certificate(doubling9):
    # at delta above the gap the cone covers the circle but orbits are sparse
    verdict = decide_weak_IS(ISQuery(doubling9, 0.15, 0.12))
    assert verdict.overall is False
    cexs = verdict.counterexamples()
    assert cexs
    for cex in cexs:
        assert cex.kind == "weak"
        assert counterexample_valid(doubling9, 0.15, 0.12, cex)


def test_weak_requires_t0(rotation8):
    with pytest.raises(InvalidQuery):
        decide_weak_IS(ISQuery(rotation8, 0.1, 0.1, method_class="th"))


# --------------------------------------------------------------------------
# oracle

def test_oracle_examples(rotation8):
    graph = build_graph(rotation8, 0.13)
    assert oracle_path_enum(graph, 0, 0, 0.2, 1) is True
    assert oracle_path_enum(graph, 0, 0, 0.2, 2) is False
    graph_tight = build_graph(rotation8, 0.12)
    assert oracle_path_enum(graph_tight, 0, 0, 0.05, 6) is True


def test_oracle_escape_path_validates(rotation8):
    graph = build_graph(rotation8, 0.13)
    cex = oracle_escape_path(graph, 0, 0, 0.2, 2)
    assert cex is not None
    assert counterexample_valid(rotation8, 0.2, 0.13, cex)


def test_oracle_budget(rotation8):
    graph = build_graph(rotation8, 0.2)
    with pytest.raises(BudgetExceeded):
        oracle_path_enum(graph, 0, 0, 5.0, 10, budget=100)


def test_oracle_bad_horizon(rotation8):
    graph = build_graph(rotation8, 0.1)
    with pytest.raises(BadParams):
        oracle_path_enum(graph, 0, 0, 0.2, -1)


# --------------------------------------------------------------------------
# horizons

def test_max_tube_horizon_rotation9(rotation9):
    graph = build_graph(rotation9, 0.12)
    table, best = max_tube_horizon(graph, 0, 0.3)
    assert table[0] == 2
    assert best == 2


def test_max_tube_horizon_doubling9(doubling9):
    graph = build_graph(doubling9, 0.12)
    table, best = max_tube_horizon(graph, 0, 0.3)
    assert table[0] == 1
    assert best == 1


def test_max_tube_horizon_inf(rotation9):
    graph = build_graph(rotation9, 0.11)
    table, best = max_tube_horizon(graph, 0, 0.3)
    assert table[0] == INF
    assert best == INF


def test_horizon_zero_when_k0_fails(rotation9):
    # candidates outside the eps-ball are not tabulated, so force a k=0
    # failure through the scan on a y whose ball misses x
    graph = build_graph(rotation9, 0.11)
    ok, fail = tube_ok(graph, 0, 4, 0.3, FULL)
    assert not ok and fail == 0


# --------------------------------------------------------------------------
# invariant sweeps (small grids; the full acceptance sweep lives in
# test_acceptance.py)

def test_oracle_agreement_small_grid(rotation8, doubling9):
    for system in (rotation8, doubling9):
        for eps, delta, n in product((0.15, 0.3), (0.12, 0.13), (1, 2, 3)):
            graph = build_graph(system, delta)
            for x in range(system.n):
                for y in sorted(system.space.open_ball(x, eps)):
                    t, _ = tube_ok(graph, x, y, eps, n)
                    assert t == oracle_path_enum(graph, x, y, eps, n), (
                        system.name, eps, delta, n, x, y,
                    )


def test_monotone_in_eps_delta_horizon(rotation9):
    eps_grid = (0.15, 0.2, 0.3, 0.4)
    delta_grid = (0.1, 0.12, 0.13)
    horizons = (1, 2, 3, 4)
    verdicts = {}
    for eps, delta, n in product(eps_grid, delta_grid, horizons):
        verdicts[eps, delta, n] = decide_T0_IS(
            ISQuery(rotation9, eps, delta, horizon=n)
        ).overall
    for (i, e1), (_, e2) in zip(enumerate(eps_grid), enumerate(eps_grid[1:])):
        for delta, n in product(delta_grid, horizons):
            assert verdicts[e1, delta, n] <= verdicts[e2, delta, n]
    for d1, d2 in zip(delta_grid, delta_grid[1:]):
        for eps, n in product(eps_grid, horizons):
            assert verdicts[eps, d2, n] <= verdicts[eps, d1, n]
    for n1, n2 in zip(horizons, horizons[1:]):
        for eps, delta in product(eps_grid, delta_grid):
            assert verdicts[eps, delta, n2] <= verdicts[eps, delta, n1]


def test_full_iff_every_finite(zoo):
    for system in zoo:
        for eps, delta in product((0.2, 0.3), (0.1, 0.13)):
            full = decide_T0_IS(ISQuery(system, eps, delta, horizon=FULL)).overall
            finite = [
                decide_T0_IS(ISQuery(system, eps, delta, horizon=n)).overall
                for n in range(1, 7)
            ]
            if full:
                assert all(finite)
            else:
                table_max = max(
                    (p.tube_horizon for p in decide_T0_IS(
                        ISQuery(system, eps, delta, horizon=FULL)
                    ).points if p.counterexample is not None),
                )
                probe = int(table_max) + 1
                assert decide_T0_IS(
                    ISQuery(system, eps, delta, horizon=probe)
                ).overall is False


def test_two_eps_bound_along_witnesses(rotation8):
    # quantitative consequence of a FULL witness: a perturbed branch can
    # never separate from the witness orbit by 2 eps within the tube
    eps, delta = 0.55, 0.13
    verdict = decide_T0_IS(ISQuery(rotation8, eps, delta, horizon=FULL))
    assert verdict.overall is True  # diameter 0.5 < eps keeps everything inside
    space = rotation8.space
    for pv in verdict.points:
        ty = orbit_trace(rotation8, pv.witness)
        for n in range(4):
            for z in sorted(space.open_ball(ty.at(n + 1), delta)):
                tz = orbit_trace(rotation8, z)
                for k in range(4 - n):
                    assert space.dist[tz.at(k)][ty.at(n + k + 1)] < 2 * eps
