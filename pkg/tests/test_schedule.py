from fractions import Fraction

import pytest

from asyncbool import (
    Network,
    NotProgressiveError,
    Schedule,
    ScheduleError,
    flow_at,
    flows_eventually_equal,
    is_progressive,
    missing_coordinates,
    omega_limit,
    orbit_trace,
    restrict_after,
    synchronous,
    translate,
)

F = Fraction


def mk(n, prefix, cycle, period, start):
    return Schedule(
        n,
        tuple((F(t), f) for t, f in prefix),
        tuple((F(o), f) for o, f in cycle),
        F(period),
        F(start),
    )


def test_schedule_validation():
    with pytest.raises(ScheduleError):
        mk(2, [], [], 1, 0)  # empty cycle
    with pytest.raises(ScheduleError):
        mk(2, [], [(0, 3)], 0, 0)  # zero period
    with pytest.raises(ScheduleError):
        mk(2, [], [(1, 3)], 1, 0)  # offset outside [0, period)
    with pytest.raises(ScheduleError):
        mk(2, [(0, 1), (0, 2)], [(0, 3)], 1, 1)  # non-increasing prefix
    with pytest.raises(ScheduleError):
        mk(2, [(2, 1)], [(0, 3)], 1, 1)  # cycle starts inside the prefix


def test_events_are_strictly_increasing():
    rho = mk(2, [(-1, 1), (0, 2)], [(0, 3), (F(1, 2), 1)], 2, 5)
    times = []
    for t, _ in rho.events():
        times.append(t)
        if len(times) > 10:
            break
    assert all(a < b for a, b in zip(times, times[1:]))


def test_progressiveness():
    assert is_progressive(synchronous(3))
    rho = mk(2, [], [(0, 0b10)], 1, 0)
    assert not is_progressive(rho)
    assert missing_coordinates(rho) == [2]


def test_flow_before_first_event_is_initial(net1):
    rho = synchronous(2)
    assert flow_at(net1, 0b00, rho, F(-1)) == 0b00
    assert flow_at(net1, 0b00, rho, F(0)) == 0b11


def test_flow_rejects_non_progressive(net1):
    rho = mk(2, [], [(0, 0b10)], 1, 0)
    with pytest.raises(NotProgressiveError):
        flow_at(net1, 0, rho, F(1))


def test_sync_omega_of_net1_cycle(net1):
    # 00 -> 11 -> 01 -> 11 -> ... under the synchronous schedule
    assert omega_limit(net1, 0b00, synchronous(2)) == {0b01, 0b11}
    assert omega_limit(net1, 0b10, synchronous(2)) == {0b10}


def test_orbit_trace_structure(net1):
    trace, orbit = orbit_trace(net1, 0b00, synchronous(2))
    assert trace.initial == 0b00
    assert orbit == {0b00, 0b11, 0b01}
    assert trace.loop_states == {0b01, 0b11}
    # dwell times of the loop sum to a whole number of periods
    assert sum((d for _, d in trace.loop), F(0)) % F(1) == 0


def test_trace_value_at_matches_flow(net1):
    rho = mk(2, [(0, 0b10)], [(0, 0b11), (F(1, 3), 0b01)], 1, 2)
    trace, _ = orbit_trace(net1, 0b00, rho)
    for t in [F(-1), F(0), F(1), F(2), F(7, 3), F(5, 2), F(3), F(10, 3), F(9)]:
        assert trace.value_at(t) == flow_at(net1, 0b00, rho, t), t


def test_fixed_point_orbit_is_singleton(net1):
    for rho in (synchronous(2), mk(2, [(0, 1)], [(0, 2), (F(1, 2), 1)], 1, 1)):
        trace, orbit = orbit_trace(net1, 0b10, rho)
        assert orbit == {0b10}
        assert trace.loop_states == {0b10}


def test_translate_shifts_flow(net1):
    rho = synchronous(2)
    shifted = translate(rho, F(7, 2))
    for t in [F(-1), F(0), F(1), F(5, 2)]:
        assert flow_at(net1, 0b00, shifted, t + F(7, 2)) == flow_at(net1, 0b00, rho, t)
    assert omega_limit(net1, 0b00, shifted) == omega_limit(net1, 0b00, rho)


def test_restrict_after_factors_flow(net1):
    rho = mk(2, [(0, 0b01)], [(0, 0b11), (F(1, 2), 0b10)], 2, 1)
    for t_prime in [F(-5), F(0), F(3, 2), F(2), F(17, 4)]:
        mid = flow_at(net1, 0b00, rho, t_prime)
        tail = restrict_after(rho, t_prime)
        assert is_progressive(tail)
        for dt in [F(0), F(1, 4), F(1), F(3)]:
            t = t_prime + dt
            assert flow_at(net1, mid, tail, t) == flow_at(net1, 0b00, rho, t)


def test_restrict_after_drops_past_events():
    rho = mk(2, [(0, 1), (1, 2)], [(0, 3)], 1, 2)
    tail = restrict_after(rho, F(1, 2))
    assert tail.prefix == ((F(1), 2),)
    tail2 = restrict_after(rho, F(10))
    assert tail2.prefix == ()
    assert tail2.cycle_start == F(11)


def test_flows_eventually_equal_same_flow(net1):
    ok, witness = flows_eventually_equal(net1, 0b00, synchronous(2), 0b00, synchronous(2))
    assert ok
    assert witness is not None


def test_flows_eventually_equal_different_fixed_points():
    net = Network(2, (0, 1, 2, 3))  # identity: flows are constant
    ok, _ = flows_eventually_equal(net, 0b00, synchronous(2), 0b01, synchronous(2))
    assert not ok


def test_flows_eventually_equal_after_transient(net1):
    # 00 and 01 both map to 11 at t=0 and stay in phase afterwards
    ok, witness = flows_eventually_equal(net1, 0b00, synchronous(2), 0b01, synchronous(2))
    assert ok
    trace1, _ = orbit_trace(net1, 0b00, synchronous(2))
    trace2, _ = orbit_trace(net1, 0b01, synchronous(2))
    assert trace1.value_at(witness) == trace2.value_at(witness)


def test_flows_eventually_equal_out_of_phase(net1):
    # 00 and 11 trace the same cycle in opposite phase: never equal
    ok, _ = flows_eventually_equal(net1, 0b00, synchronous(2), 0b11, synchronous(2))
    assert not ok
