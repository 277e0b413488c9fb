import pytest

from invshadow import make_zoo_system, orbit_trace, point_at_time
from invshadow.errors import (
    BadParams,
    InvalidPoint,
    NegativeTimeOnNonInvertible,
)


def test_rotation_shape(rotation8):
    assert rotation8.n == 8
    assert rotation8.bijective
    assert rotation8.space.min_gap() == 0.125
    trace = orbit_trace(rotation8, 0)
    assert (trace.preperiod, trace.period) == (0, 8)


def test_doubling_even_not_bijective(doubling8):
    assert not doubling8.bijective
    assert set(doubling8.map_table) == {0, 2, 4, 6}


def test_doubling_odd_bijective(doubling9):
    assert doubling9.bijective


def test_identity_single_point(identity1):
    assert identity1.n == 1
    trace = orbit_trace(identity1, 0)
    assert (trace.preperiod, trace.period) == (0, 1)


def test_bad_zoo_params():
    with pytest.raises(BadParams):
        make_zoo_system("rotation", 0, 0)
    with pytest.raises(BadParams):
        make_zoo_system("rotation", 8, 8)
    with pytest.raises(BadParams):
        make_zoo_system("swap_pair", 0.0)
    with pytest.raises(BadParams):
        make_zoo_system("unknown_family")
    with pytest.raises(BadParams):
        make_zoo_system("rotation", 8)


def test_orbit_trace_rotation(rotation8):
    trace = orbit_trace(rotation8, 0)
    assert trace.points == (0, 1, 2, 3, 4, 5, 6, 7, 0)


def test_orbit_trace_doubling8(doubling8):
    trace = orbit_trace(doubling8, 1)
    assert trace.points[:4] == (1, 2, 4, 0)
    assert (trace.preperiod, trace.period) == (3, 1)


def test_orbit_trace_invalid_point(rotation8):
    with pytest.raises(InvalidPoint):
        orbit_trace(rotation8, 8)


def test_orbit_trace_max_len_too_small(rotation8):
    with pytest.raises(BadParams):
        orbit_trace(rotation8, 0, max_len=4)


def test_point_at_time_negative(rotation8):
    trace = orbit_trace(rotation8, 0)
    assert trace.at(-3) == 5
    assert point_at_time(trace, -3) == 5


def test_point_at_time_zero_is_start(doubling9):
    for x in range(9):
        assert orbit_trace(doubling9, x).at(0) == x


def test_point_at_time_absorbed(doubling8):
    trace = orbit_trace(doubling8, 1)
    assert trace.at(100) == 0


def test_negative_time_needs_pure_period(doubling8):
    trace = orbit_trace(doubling8, 1)
    with pytest.raises(NegativeTimeOnNonInvertible):
        trace.at(-1)


def test_round_trip_bijective(zoo):
    for system in zoo:
        if not system.bijective:
            continue
        for x in range(system.n):
            trace = orbit_trace(system, x)
            for k in range(-2 * system.n, 2 * system.n + 1):
                fwd = trace.at(k)
                back = orbit_trace(system, fwd).at(-k)
                assert back == x, (system.name, x, k)


def test_cycle_composition(zoo):
    # composing the map q times fixes every point of a period-q cycle
    for system in zoo:
        for x in range(system.n):
            trace = orbit_trace(system, x)
            p, q = trace.preperiod, trace.period
            on_cycle = trace.points[p]
            cur = on_cycle
            for _ in range(q):
                cur = system.map_table[cur]
            assert cur == on_cycle


def test_rotation_is_isometry(rotation9):
    d = rotation9.space.dist
    f = rotation9.map_table
    for i in range(9):
        for j in range(9):
            assert d[f[i]][f[j]] == d[i][j]
