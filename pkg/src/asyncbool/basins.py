"""Basins of attraction of sets, fixed points, orbits and omega-limit sets.

Existential ("p") basins come with constructive witness schedules: a
reported membership can always be replayed through the schedule module
and checked against the claimed omega-limit relation.  Universal ("n")
basins are decided by graph conditions alone and carry no witnesses.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from . import graph
from .core import Network, all_states, apply_fire_set, full_mask, is_fixed_point, stable_set
from .schedule import Schedule, omega_limit, orbit_trace


@dataclass(frozen=True)
class BasinResult:
    members: frozenset[int]
    witnesses: dict[int, Schedule] = field(default_factory=dict)

    def __contains__(self, mu: int) -> bool:
        return mu in self.members


@dataclass(frozen=True)
class AttractivityClass:
    p_class: str  # 'not' | 'partial' | 'total'
    n_class: str


def _classify(members: frozenset[int], n: int) -> str:
    if not members:
        return "not"
    if members == all_states(n):
        return "total"
    return "partial"


def _check_nonempty(states: frozenset[int]) -> None:
    if not states:
        raise ValueError("basins are defined for nonempty sets only")


def _bfs_path(net: Network, start: int, goals: frozenset[int], domain=None):
    """Shortest fire-set word from start into `goals`, edges restricted to
    `domain` when given.  Returns (word, end state) or None."""
    if start in goals:
        return [], start
    parent: dict[int, tuple[int, int]] = {start: (-1, -1)}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for fire, target in graph.proper_successors(net, state):
            if domain is not None and target not in domain:
                continue
            if target in parent:
                continue
            parent[target] = (state, fire)
            if target in goals:
                word = []
                node = target
                while node != start:
                    prev, f = parent[node]
                    word.append(f)
                    node = prev
                word.reverse()
                return word, target
            queue.append(target)
    return None


def covering_walk(net: Network, target: frozenset[int], anchor: int) -> list[int]:
    """A closed walk from `anchor` through every state of `target` that also
    traverses, for every coordinate unstable throughout `target`, an internal
    edge firing it.  Returns the fire-set word of the walk (possibly empty)."""
    assert anchor in target
    # coordinates stable somewhere in target are covered by co-firing
    fired_somewhere = 0
    for mu in target:
        fired_somewhere |= stable_set(net, mu)
    required_edges: list[tuple[int, int, int]] = []
    needed = full_mask(net.n) & ~fired_somewhere
    for mu in target:
        if not needed:
            break
        for fire, nxt in graph.proper_successors(net, mu):
            if nxt in target and fire & needed:
                required_edges.append((mu, fire, nxt))
                needed &= ~fire
                if not needed:
                    break
    if needed:
        raise ValueError("target set is not fair")

    word: list[int] = []
    current = anchor
    pending = set(target) - {anchor}
    for mu, fire, nxt in required_edges:
        step = _bfs_path(net, current, frozenset({mu}), domain=target)
        assert step is not None
        word.extend(step[0])
        word.append(fire)
        current = nxt
        pending.discard(mu)
        pending.discard(nxt)
    while pending:
        step = _bfs_path(net, current, frozenset(pending), domain=target)
        assert step is not None
        word.extend(step[0])
        current = step[1]
        pending.discard(current)
    if current != anchor:
        step = _bfs_path(net, current, frozenset({anchor}), domain=target)
        assert step is not None
        word.extend(step[0])
    return word


def _cycle_from_walk(net: Network, anchor: int, word: list[int]):
    """Timed cycle events replaying `word` from `anchor`, co-firing the
    coordinates stable at each source so that every coordinate appears."""
    if not word:
        return ((Fraction(0), full_mask(net.n)),), Fraction(1)
    events = []
    state = anchor
    for k, fire in enumerate(word):
        events.append((Fraction(k), fire | stable_set(net, state)))
        state = apply_fire_set(net, state, fire)
    return tuple(events), Fraction(len(word))


def witness_schedule(
    net: Network,
    mu_from: int,
    target: frozenset[int],
    align_to: tuple[int, Schedule] | None = None,
) -> Schedule:
    """An eventually periodic fair schedule driving mu_from to the
    omega-limit set `target`.

    Without alignment: walk to `target`, then repeat a closed covering
    walk of it forever.  With align_to=(mu, rho), where omega of (mu, rho)
    equals `target`, the witness is spliced so that its flow coincides
    pointwise with the (mu, rho) flow from some time on: reach a state the
    reference flow holds during one of its periodic segments, then copy
    the reference schedule verbatim.
    """
    if not graph.is_achievable_from(net, target, mu_from):
        raise ValueError("target is not achievable from the given state")

    if align_to is None:
        path = _bfs_path(net, mu_from, target)
        assert path is not None
        word, anchor = path
        prefix = tuple((Fraction(k), fire) for k, fire in enumerate(word))
        cycle, period = _cycle_from_walk(net, anchor, covering_walk(net, target, anchor))
        return Schedule(net.n, prefix, cycle, period, Fraction(len(word)))

    ref_mu, ref_rho = align_to
    trace, _ = orbit_trace(net, ref_mu, ref_rho)
    if trace.loop_states != target:
        raise ValueError("align_to flow does not have the target as omega-limit set")
    # pick a segment of the periodic tail and a time strictly inside it
    seg_start = trace.loop_entry
    seg_state, seg_dwell = trace.loop[0]
    t2 = seg_start + seg_dwell / 2
    path = _bfs_path(net, mu_from, frozenset({seg_state}))
    assert path is not None
    word, _ = path
    prefix = [(t2 - len(word) + k, fire) for k, fire in enumerate(word)]
    # copy the reference schedule after t2: whole occurrences become the new
    # cycle, the cut occurrence joins the prefix
    periods_past = (t2 - ref_rho.cycle_start) // ref_rho.period + 1
    new_start = ref_rho.cycle_start + periods_past * ref_rho.period
    for time, fire in ref_rho.events():
        if time >= new_start:
            break
        if time > t2:
            prefix.append((time, fire))
    return Schedule(net.n, tuple(prefix), ref_rho.cycle, ref_rho.period, new_start)


def basin_p(net: Network, attractor: frozenset[int], with_witnesses: bool = True) -> BasinResult:
    """States from which some fair schedule drives the omega-limit set
    inside `attractor`."""
    _check_nonempty(attractor)
    fair = graph.fair_sccs(net, attractor)
    targets = frozenset().union(*fair) if fair else frozenset()
    members = set()
    witnesses: dict[int, Schedule] = {}
    for mu in net.states():
        reach = graph.reachable_set(net, mu)
        hit = reach & targets
        if not hit:
            continue
        members.add(mu)
        if with_witnesses:
            chosen = next(f for f in fair if f & hit)
            witnesses[mu] = witness_schedule(net, mu, chosen)
    return BasinResult(frozenset(members), witnesses)


def basin_n(net: Network, attractor: frozenset[int]) -> BasinResult:
    """States from which every fair schedule drives the omega-limit set
    inside `attractor`."""
    _check_nonempty(attractor)
    members = frozenset(
        mu
        for mu in net.states()
        if all(scc <= attractor for scc in graph.reachable_fair_sccs(net, mu))
    )
    return BasinResult(members)


def attractivity_class(net: Network, attractor: frozenset[int]) -> AttractivityClass:
    _check_nonempty(attractor)
    return AttractivityClass(
        _classify(basin_p(net, attractor, with_witnesses=False).members, net.n),
        _classify(basin_n(net, attractor).members, net.n),
    )


def orbit_basin_p(
    net: Network, mu: int, rho: Schedule, with_witnesses: bool = True
) -> BasinResult:
    """States whose flow can be made to coincide pointwise with the given
    flow from some time on: the predecessors of its omega-limit set."""
    omega = omega_limit(net, mu, rho)
    members = set()
    witnesses: dict[int, Schedule] = {}
    for mu2 in net.states():
        if graph.reachable_set(net, mu2) & omega:
            members.add(mu2)
            if with_witnesses:
                witnesses[mu2] = witness_schedule(net, mu2, omega, align_to=(mu, rho))
    return BasinResult(frozenset(members), witnesses)


def orbit_basin_n(net: Network, mu: int, rho: Schedule) -> BasinResult:
    """Empty unless the flow is eventually constant; then the n-basin of
    its final value."""
    omega = omega_limit(net, mu, rho)
    if len(omega) > 1:
        return BasinResult(frozenset())
    return basin_n(net, omega)


def omega_basin_p(
    net: Network, mu: int, rho: Schedule, with_witnesses: bool = True
) -> BasinResult:
    """States from which some fair schedule reproduces the given
    omega-limit set exactly."""
    omega = omega_limit(net, mu, rho)
    # the exact-equality basin coincides with the subset basin of omega:
    # reaching any part of omega reaches all of it, after which a covering
    # cycle realizes equality
    return basin_p(net, omega, with_witnesses)


def omega_basin_n(net: Network, mu: int, rho: Schedule) -> BasinResult:
    """States from which every fair schedule reproduces the given
    omega-limit set exactly."""
    omega = omega_limit(net, mu, rho)
    if len(omega) == 1 and is_fixed_point(net, next(iter(omega))):
        return basin_n(net, omega)
    # nonempty only when omega is a maximal fair SCC admitting no proper
    # fair strongly connected subset
    sccs = graph.reachable_fair_sccs(net, next(iter(omega)))
    if omega not in sccs:
        return BasinResult(frozenset())
    if any(sub != omega for sub in graph.fair_subsets(net, omega)):
        return BasinResult(frozenset())
    members = frozenset(
        mu2
        for mu2 in net.states()
        if graph.reachable_fair_sccs(net, mu2) == [omega]
    )
    return BasinResult(members)
