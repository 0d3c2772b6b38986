"""Brute-force ground truth by bounded schedule enumeration.

Everything here recomputes omega-limit sets and basins directly from the
defining quantifications over schedules, restricted to integer event
times and bounded prefix/cycle lengths, and cross-checks the graph-based
algorithms against them.  Omega-limit sets depend only on the order of
the fire sets, not on the real timestamps, so integer times lose nothing
(the jitter check in verify_theorems exercises exactly that).

The enumeration is bounded, hence the explicit stabilization flag: a
result is only trusted by the test suite when growing both bounds by one
adds nothing.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from . import basins as basins_mod
from . import graph
from .core import (
    Network,
    all_states,
    apply_fire_set,
    fixed_points,
    format_bits,
    full_mask,
    is_fixed_point,
)
from .schedule import (
    Schedule,
    flow_at,
    is_progressive,
    omega_limit,
    orbit_trace,
    restrict_after,
    synchronous,
    translate,
)


@dataclass(frozen=True)
class OracleBounds:
    max_prefix_len: int
    max_cycle_len: int
    fire_alphabet: tuple[int, ...] | None = None  # None: all of B^n

    def __post_init__(self):
        if self.max_cycle_len < 1:
            raise ValueError("max_cycle_len must be at least 1")
        if self.max_prefix_len < 0:
            raise ValueError("max_prefix_len must be nonnegative")

    def alphabet(self, n: int) -> tuple[int, ...]:
        if self.fire_alphabet is not None:
            return self.fire_alphabet
        return tuple(range(1 << n))

    def grown(self) -> "OracleBounds":
        return OracleBounds(
            self.max_prefix_len + 1, self.max_cycle_len + 1, self.fire_alphabet
        )


def default_bounds(n: int) -> OracleBounds:
    # a covering closed walk of a fair set needs at most 2**n segments per
    # state; generous for n <= 3, far too generous to enumerate beyond that
    return OracleBounds(1 << n, n << n)


def _progressive_cycles(n: int, bounds: OracleBounds) -> list[tuple[int, ...]]:
    """All cycle words up to the bound whose fire sets jointly cover every
    coordinate."""
    alphabet = bounds.alphabet(n)
    full = full_mask(n)
    cycles = []
    for q in range(1, bounds.max_cycle_len + 1):
        for word in itertools.product(alphabet, repeat=q):
            union = 0
            for fire in word:
                union |= fire
            if union == full:
                cycles.append(word)
    return cycles


def enumerate_schedules(n: int, bounds: OracleBounds) -> Iterator[Schedule]:
    """Canonical integer-time schedules: prefix fires at t = 0..p-1, cycle
    offsets 0..q-1 with period q.  Anchoring the first event at 0 quotients
    away time translation."""
    cycles = _progressive_cycles(n, bounds)
    alphabet = bounds.alphabet(n)
    for p in range(bounds.max_prefix_len + 1):
        for prefix_word in itertools.product(alphabet, repeat=p):
            prefix = tuple((Fraction(k), fire) for k, fire in enumerate(prefix_word))
            for cycle_word in cycles:
                cycle = tuple(
                    (Fraction(k), fire) for k, fire in enumerate(cycle_word)
                )
                yield Schedule(n, prefix, cycle, Fraction(len(cycle_word)), Fraction(p))


def simulate_word_schedule(
    net: Network, mu: int, prefix_word: tuple[int, ...], cycle_word: tuple[int, ...]
) -> tuple[frozenset[int], frozenset[int]]:
    """(orbit, omega) of the discrete run: fold the prefix, then repeat the
    cycle until the state at a cycle boundary repeats."""
    state = mu
    orbit = {mu}
    for fire in prefix_word:
        state = apply_fire_set(net, state, fire)
        orbit.add(state)
    seen: dict[int, int] = {}
    visits: list[list[int]] = []
    while state not in seen:
        seen[state] = len(visits)
        occ = []
        for fire in cycle_word:
            state = apply_fire_set(net, state, fire)
            occ.append(state)
            orbit.add(state)
        visits.append(occ)
    m1 = seen[state]
    omega = frozenset(itertools.chain.from_iterable(visits[m1:]))
    return frozenset(orbit), omega


def _prefix_outcomes(
    net: Network, mu: int, bounds: OracleBounds
) -> set[tuple[int, frozenset[int]]]:
    """Distinct (state, visited set) pairs after any prefix word within
    bounds; collapsing identical pairs is what keeps the sweep tractable."""
    alphabet = bounds.alphabet(net.n)
    current: set[tuple[int, frozenset[int]]] = {(mu, frozenset({mu}))}
    outcomes = set(current)
    for _ in range(bounds.max_prefix_len):
        nxt = set()
        for state, visited in current:
            for fire in alphabet:
                s2 = apply_fire_set(net, state, fire)
                nxt.add((s2, visited | {s2}))
        nxt -= outcomes
        outcomes |= nxt
        current = nxt
    return outcomes


class _NetworkOracle:
    """Per-network cache of bounded-enumeration results."""

    def __init__(self, net: Network, bounds: OracleBounds):
        self.net = net
        self.bounds = bounds
        self.cycles = _progressive_cycles(net.n, bounds)
        self._loop: dict[tuple[int, tuple[int, ...]], tuple[frozenset[int], frozenset[int]]] = {}
        self._omegas: dict[int, frozenset[frozenset[int]]] = {}
        self._orbits: dict[int, frozenset[frozenset[int]]] = {}

    def loop_result(self, state: int, cycle: tuple[int, ...]):
        key = (state, cycle)
        if key not in self._loop:
            self._loop[key] = simulate_word_schedule(self.net, state, (), cycle)
        return self._loop[key]

    def runs(self, mu: int):
        """All distinct (orbit, omega) pairs over bounded schedules from mu."""
        seen = set()
        for state, visited in _prefix_outcomes(self.net, mu, self.bounds):
            for cycle in self.cycles:
                loop_orbit, omega = self.loop_result(state, cycle)
                pair = (visited | loop_orbit, omega)
                if pair not in seen:
                    seen.add(pair)
                    yield pair

    def achievable_omegas(self, mu: int) -> frozenset[frozenset[int]]:
        if mu not in self._omegas:
            found = set()
            for state, _ in _prefix_outcomes(self.net, mu, self.bounds):
                for cycle in self.cycles:
                    found.add(self.loop_result(state, cycle)[1])
            self._omegas[mu] = frozenset(found)
        return self._omegas[mu]

    def achievable_orbits(self, mu: int) -> frozenset[frozenset[int]]:
        if mu not in self._orbits:
            self._orbits[mu] = frozenset(orbit for orbit, _ in self.runs(mu))
        return self._orbits[mu]


def _bounded_reach(net: Network, mu: int, depth: int, alphabet) -> set[int]:
    """States reachable from mu by at most `depth` fire-set steps."""
    current = {mu}
    seen = {mu}
    for _ in range(depth):
        nxt = {
            apply_fire_set(net, s, fire)
            for s in current
            for fire in alphabet
        } - seen
        if not nxt:
            break
        seen |= nxt
        current = nxt
    return seen


def _anchored_omegas(net: Network, anchor: int, max_len: int) -> set[frozenset[int]]:
    """Visited sets of progressive closed walks of length <= max_len from
    `anchor` back to itself.

    Each such walk's fire word, placed as a schedule cycle and started at
    the anchor, returns to the anchor every occurrence, so its omega-limit
    set is exactly the walk's visited set.  Fire sets are canonicalized to
    (subset of unstable) | stable(source): co-firing every stable
    coordinate is free and only improves coordinate coverage.
    """
    full = full_mask(net.n)
    # breadth-first over (state, visited, coverage) triples; reaching a
    # triple earlier only ever allows more continuations under the length
    # cap, so a global seen-set is sound
    start = (anchor, frozenset({anchor}), 0)
    seen = {start}
    current = [start]
    found: set[frozenset[int]] = set()
    for _ in range(max_len):
        nxt = []
        for state, visited, coverage in current:
            unstable = state ^ net.table[state]
            stable = full & ~unstable
            lam = 0
            while True:
                s2 = apply_fire_set(net, state, lam)
                node = (s2, visited | {s2}, coverage | lam | stable)
                if node not in seen:
                    seen.add(node)
                    nxt.append(node)
                    if s2 == anchor and node[2] == full:
                        found.add(node[1])
                if lam == unstable:
                    break
                lam = (lam - unstable) & unstable
        current = nxt
    return found


def _walk_omegas_all(
    net: Network, bounds: OracleBounds
) -> dict[int, frozenset[frozenset[int]]]:
    alphabet = bounds.alphabet(net.n)
    per_anchor = {
        anchor: _anchored_omegas(net, anchor, bounds.max_cycle_len)
        for anchor in net.states()
    }
    results = {}
    for mu in net.states():
        anchors = _bounded_reach(net, mu, bounds.max_prefix_len, alphabet)
        results[mu] = frozenset().union(
            *(frozenset(per_anchor[a]) for a in anchors)
        )
    return results


def oracle_achievable_omegas(
    net: Network, mu: int, bounds: OracleBounds
) -> tuple[frozenset[frozenset[int]], bool]:
    """Omega-limit sets over bounded anchored schedules, with a
    stabilization flag: True iff growing both bounds by one adds nothing.

    The enumeration runs over the anchored canonical sub-family: schedules
    whose cycle word is a closed walk of the cycle-start state.  Every
    omega-limit set of *any* schedule with cycle length q is the visited
    set of such a closed walk of length at most 2**n * q, so the anchored
    family has the same bound-growth limit as raw word enumeration while
    staying enumerable at the lengths the limit actually needs; each
    reported set is still the replayable omega of one explicit schedule.
    """
    results, stabilized = oracle_achievable_omegas_all(net, bounds)
    return results[mu], stabilized[mu]


def oracle_achievable_omegas_all(
    net: Network, bounds: OracleBounds
) -> tuple[dict[int, frozenset[frozenset[int]]], dict[int, bool]]:
    """oracle_achievable_omegas for every state at once."""
    results = _walk_omegas_all(net, bounds)
    grown = _walk_omegas_all(net, bounds.grown())
    stabilized = {mu: grown[mu] == results[mu] for mu in net.states()}
    return results, stabilized


def oracle_basin(
    net: Network, attractor: frozenset[int], mode: str, bounds: OracleBounds
) -> frozenset[int]:
    """Basin membership decided by scanning the bounded omega sets."""
    if mode not in ("p", "n"):
        raise ValueError("mode must be 'p' or 'n'")
    if not attractor:
        raise ValueError("attractor must be nonempty")
    omegas = _walk_omegas_all(net, bounds)
    quantifier = any if mode == "p" else all
    return frozenset(
        mu
        for mu in net.states()
        if quantifier(om <= attractor for om in omegas[mu])
    )


# --- theorem verification -------------------------------------------------


@dataclass
class VerificationReport:
    checks: dict[str, list[int]] = field(default_factory=dict)  # name -> [pass, fail]
    counterexamples: list[dict] = field(default_factory=list)

    def record(self, name: str, passed: bool, payload: dict | None = None) -> None:
        entry = self.checks.setdefault(name, [0, 0])
        if passed:
            entry[0] += 1
        else:
            entry[1] += 1
            self.counterexamples.append({"check": name, **(payload or {})})

    @property
    def total_failures(self) -> int:
        return sum(fails for _, fails in self.checks.values())

    @property
    def ok(self) -> bool:
        return self.total_failures == 0

    def merge(self, other: "VerificationReport") -> None:
        for name, (p, f) in other.checks.items():
            entry = self.checks.setdefault(name, [0, 0])
            entry[0] += p
            entry[1] += f
        self.counterexamples.extend(other.counterexamples)


def _net_payload(net: Network, **extra) -> dict:
    payload = {"n": net.n, "table": [format_bits(r, net.n) for r in net.table]}
    payload.update(extra)
    return payload


def _sample_sets(net: Network, max_sets: int | None, rng: random.Random):
    universe = sorted(net.states())
    if max_sets is None:
        masks = range(1, 1 << len(universe))
        return [
            frozenset(s for i, s in enumerate(universe) if mask & (1 << i))
            for mask in masks
        ]
    chosen = {frozenset(universe)}
    chosen.update(frozenset({s}) for s in universe)
    eq = fixed_points(net)
    if eq:
        chosen.add(eq)
    while len(chosen) < max_sets:
        size = rng.randint(1, len(universe))
        chosen.add(frozenset(rng.sample(universe, size)))
    return sorted(chosen, key=lambda s: (len(s), sorted(s)))


def _sample_schedules(net: Network, count: int, rng: random.Random) -> list[Schedule]:
    """A few structurally varied fair schedules with rational times."""
    n = net.n
    out = [synchronous(n)]
    alphabet = list(range(1 << n))
    for _ in range(max(0, count - 1)):
        plen = rng.randint(0, 3)
        qlen = rng.randint(1, 4)
        cycle_fires = [rng.choice(alphabet) for _ in range(qlen)]
        cycle_fires[rng.randrange(qlen)] |= full_mask(n)  # force progressive
        denom = rng.choice([1, 2, 3, 4])
        prefix = tuple(
            (Fraction(k, denom) - plen, rng.choice(alphabet)) for k in range(plen)
        )
        period = Fraction(rng.randint(1, 5), denom)
        slots = rng.randint(qlen, qlen + 3)
        offsets = sorted(rng.sample(range(slots), qlen))
        cycle = tuple(
            (period * Fraction(off, slots), fire)
            for off, fire in zip(offsets, cycle_fires)
        )
        out.append(Schedule(n, prefix, cycle, period, Fraction(1)))
    return out


def _check_run(
    report: VerificationReport,
    net: Network,
    mu: int,
    orbit: frozenset[int],
    omega: frozenset[int],
    eq: frozenset[int],
    graph_ach: frozenset[frozenset[int]] | None,
    payload: dict,
) -> None:
    report.record("omega_nonempty", bool(omega), payload)
    report.record("omega_subset_orbit", omega <= orbit, payload)
    if len(omega) == 1:
        report.record(
            "singleton_omega_is_fixed_point",
            next(iter(omega)) in eq,
            payload,
        )
    hit = orbit & eq
    if hit:
        report.record(
            "fixed_point_in_orbit_forces_constant_tail",
            len(hit) == 1 and omega == hit,
            payload,
        )
    if mu in eq:
        report.record("fixed_point_orbit_is_singleton", orbit == {mu}, payload)
    if graph_ach is not None:
        report.record("omega_is_graph_achievable", omega in graph_ach, payload)


def verify_theorems(
    net: Network,
    bounds: OracleBounds,
    *,
    graph_only: bool = False,
    max_sets: int | None = None,
    schedule_samples: int = 3,
    replay_witnesses: bool = True,
    seed: int = 0,
) -> VerificationReport:
    """Check the invariance, omega-limit and basin theorems on one network.

    Oracle-side checks enumerate bounded integer-time schedules; set-level
    checks run over every nonempty state set unless `max_sets` caps them;
    `graph_only` skips the schedule enumeration entirely (used at n=4).
    Failures are data, not errors: each one lands in the report with a
    replayable payload.
    """
    rng = random.Random(seed)
    report = VerificationReport()
    eq = fixed_points(net)
    states = list(net.states())
    # sub-SCC enumeration is 2**|SCC| per SCC; past n=3 it dominates the
    # whole run, so the checks needing it are restricted to small nets
    enumerate_sub_sccs = net.n <= 3

    graph_ach = (
        {mu: graph.achievable_omegas_from(net, mu) for mu in states}
        if enumerate_sub_sccs
        else None
    )
    reach = {mu: graph.reachable_set(net, mu) for mu in states}

    # -- bounded schedule enumeration --------------------------------------
    cache = None
    if not graph_only:
        cache = _NetworkOracle(net, bounds)
        for mu in states:
            for orbit, omega in cache.runs(mu):
                _check_run(
                    report,
                    net,
                    mu,
                    orbit,
                    omega,
                    eq,
                    graph_ach[mu] if graph_ach is not None else None,
                    _net_payload(net, mu=format_bits(mu, net.n)),
                )
        # the walk oracle with both bounds inflated by 2**n * q dominates
        # raw word enumeration: a loop spanning k occurrences of a
        # length-q word is a closed walk of length k*q with k <= 2**n,
        # anchored at a state up to that many steps past the prefix
        inflation = (1 << net.n) * bounds.max_cycle_len
        walk = _walk_omegas_all(
            net,
            OracleBounds(
                bounds.max_prefix_len + inflation,
                inflation,
                bounds.fire_alphabet,
            ),
        )
        for mu in states:
            payload = _net_payload(net, mu=format_bits(mu, net.n))
            report.record(
                "word_omegas_within_walk_omegas",
                cache.achievable_omegas(mu) <= walk[mu],
                payload,
            )
            if graph_ach is not None:
                report.record(
                    "oracle_omegas_within_graph_omegas",
                    cache.achievable_omegas(mu) <= graph_ach[mu],
                    payload,
                )
                report.record(
                    "walk_omegas_within_graph_omegas",
                    walk[mu] <= graph_ach[mu],
                    payload,
                )

    # -- rational-time schedule laws ---------------------------------------
    for rho in _sample_schedules(net, schedule_samples, rng):
        for mu in states:
            payload = _net_payload(net, mu=format_bits(mu, net.n), schedule=str(rho))
            trace, orbit = orbit_trace(net, mu, rho)
            omega = omega_limit(net, mu, rho)
            _check_run(
                report, net, mu, orbit, omega, eq,
                graph_ach[mu] if graph_ach is not None else None, payload,
            )
            report.record(
                "orbit_is_p_invariant", graph.is_p_invariant(net, orbit), payload
            )
            report.record(
                "omega_is_p_invariant", graph.is_p_invariant(net, omega), payload
            )
            for d in (Fraction(5), Fraction(1, 2), Fraction(-3)):
                report.record(
                    "translation_preserves_omega",
                    omega_limit(net, mu, translate(rho, d)) == omega,
                    payload,
                )
            d = Fraction(7, 3)
            shifted = translate(rho, d)
            for t in (Fraction(-1), Fraction(1, 2), Fraction(3), Fraction(11, 2)):
                report.record(
                    "translated_flow_matches_shifted_time",
                    flow_at(net, mu, shifted, t + d) == flow_at(net, mu, rho, t),
                    payload,
                )
            for t_prime in (Fraction(-10), Fraction(1, 3), Fraction(2), Fraction(9, 2)):
                mu2 = flow_at(net, mu, rho, t_prime)
                tail = restrict_after(rho, t_prime)
                report.record(
                    "restriction_is_progressive", is_progressive(tail), payload
                )
                for t in (t_prime, t_prime + Fraction(1, 2), t_prime + 3):
                    report.record(
                        "flow_factors_through_restriction",
                        flow_at(net, mu2, tail, t) == flow_at(net, mu, rho, t),
                        payload,
                    )
                report.record(
                    "omega_cocycle",
                    omega_limit(net, mu2, tail) == omega,
                    payload,
                )

    # -- achievability and witness construction ----------------------------
    if graph_ach is not None:
        for mu in states:
            payload = _net_payload(net, mu=format_bits(mu, net.n))
            report.record("achievable_omegas_nonempty", bool(graph_ach[mu]), payload)
            for target in graph_ach[mu]:
                ok = graph.is_achievable_from(net, target, mu)
                if ok and replay_witnesses:
                    witness = basins_mod.witness_schedule(net, mu, target)
                    ok = omega_limit(net, mu, witness) == target
                report.record("achievable_omega_witness_replays", ok, payload)
    for mu in states:
        payload = _net_payload(net, mu=format_bits(mu, net.n))
        report.record(
            "reachable_set_is_n_invariant",
            graph.is_n_invariant(net, reach[mu]),
            payload,
        )
    if eq:
        report.record(
            "fixed_point_set_is_n_invariant",
            graph.is_n_invariant(net, eq),
            _net_payload(net),
        )
        for mu in eq:
            report.record(
                "fixed_point_singleton_is_n_invariant",
                graph.is_n_invariant(net, frozenset({mu})),
                _net_payload(net, mu=format_bits(mu, net.n)),
            )

    # -- set-quantified invariance and basin theorems ----------------------
    subsets = _sample_sets(net, max_sets, rng)
    info: dict[frozenset[int], tuple[bool, bool, frozenset[int], frozenset[int]]] = {}
    for a in subsets:
        p_inv = graph.is_p_invariant(net, a)
        n_inv = graph.is_n_invariant(net, a)
        w_p = basins_mod.basin_p(net, a, with_witnesses=False).members
        w_n = basins_mod.basin_n(net, a).members
        info[a] = (p_inv, n_inv, w_p, w_n)
        payload = _net_payload(net, A=sorted(format_bits(s, net.n) for s in a))
        report.record(
            "single_step_closure_matches_n_invariance",
            n_inv
            == all(
                apply_fire_set(net, mu, lam) in a
                for mu in a
                for lam in range(1 << net.n)
            ),
            payload,
        )
        report.record("n_invariant_implies_p_invariant", (not n_inv) or p_inv, payload)
        report.record(
            "p_invariant_set_inside_its_p_basin", (not p_inv) or a <= w_p, payload
        )
        report.record(
            "n_invariant_set_inside_its_n_basin", (not n_inv) or a <= w_n, payload
        )
        report.record("n_basin_inside_p_basin", w_n <= w_p, payload)
        report.record(
            "nonempty_p_basin_is_p_invariant",
            (not w_p) or graph.is_p_invariant(net, w_p),
            payload,
        )
        report.record(
            "nonempty_n_basin_is_n_invariant",
            (not w_n) or graph.is_n_invariant(net, w_n),
            payload,
        )
        if graph_ach is not None:
            report.record(
                "p_basin_matches_achievable_omegas",
                w_p
                == frozenset(
                    mu for mu in states if any(t <= a for t in graph_ach[mu])
                ),
                payload,
            )
            report.record(
                "n_basin_matches_achievable_omegas",
                w_n
                == frozenset(
                    mu for mu in states if all(t <= a for t in graph_ach[mu])
                ),
                payload,
            )
        if not graph_only and cache is not None:
            oracle_p = frozenset(
                mu
                for mu in states
                if any(om <= a for om in cache.achievable_omegas(mu))
            )
            oracle_n = frozenset(
                mu
                for mu in states
                if all(om <= a for om in cache.achievable_omegas(mu))
            )
            report.record("oracle_p_basin_subset_of_graph", oracle_p <= w_p, payload)
            report.record("oracle_n_basin_superset_of_graph", w_n <= oracle_n, payload)
            # oracle p-invariance: every member keeps some bounded orbit inside
            oracle_p_inv = all(
                any(orbit <= a for orbit in cache.achievable_orbits(mu)) for mu in a
            )
            report.record(
                "oracle_p_invariance_subset_of_graph", (not oracle_p_inv) or p_inv, payload
            )

    full = frozenset(net.states())
    p_full = info[full][2] if full in info else basins_mod.basin_p(net, full, False).members
    n_full = info[full][3] if full in info else basins_mod.basin_n(net, full).members
    report.record("full_space_p_basin_is_everything", p_full == full, _net_payload(net))
    report.record("full_space_n_basin_is_everything", n_full == full, _net_payload(net))

    ordered = sorted(info, key=len)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if a <= b:
                report.record(
                    "basin_monotonicity",
                    info[a][2] <= info[b][2] and info[a][3] <= info[b][3],
                    _net_payload(net),
                )

    for mu in states:
        single = frozenset({mu})
        w_p = info[single][2] if single in info else basins_mod.basin_p(net, single, False).members
        w_n = info[single][3] if single in info else basins_mod.basin_n(net, single).members
        payload = _net_payload(net, mu=format_bits(mu, net.n))
        fixed = mu in eq
        report.record(
            "point_basin_nonempty_iff_fixed",
            (bool(w_p) == fixed) and (bool(w_n) == fixed),
            payload,
        )
        if fixed:
            report.record(
                "fixed_point_basin_chain", single <= w_n <= w_p, payload
            )

    # -- orbit / omega basins ----------------------------------------------
    for rho in _sample_schedules(net, schedule_samples, rng):
        for mu in states:
            payload = _net_payload(net, mu=format_bits(mu, net.n), schedule=str(rho))
            _, orbit = orbit_trace(net, mu, rho)
            omega = omega_limit(net, mu, rho)
            ob_p = basins_mod.orbit_basin_p(net, mu, rho, with_witnesses=False).members
            ob_n = basins_mod.orbit_basin_n(net, mu, rho).members
            om_p = basins_mod.omega_basin_p(net, mu, rho, with_witnesses=False).members
            om_n_allowed = enumerate_sub_sccs
            om_n = (
                basins_mod.omega_basin_n(net, mu, rho).members if om_n_allowed else None
            )
            report.record("orbit_p_basin_equals_omega_p_basin", ob_p == om_p, payload)
            report.record("orbit_inside_orbit_p_basin", orbit <= ob_p, payload)
            report.record(
                "orbit_n_basin_nonempty_iff_constant_tail",
                bool(ob_n) == (len(omega) == 1),
                payload,
            )
            report.record(
                "orbit_p_basin_equals_set_basin_of_orbit",
                ob_p == basins_mod.basin_p(net, orbit, with_witnesses=False).members,
                payload,
            )
            report.record(
                "orbit_n_basin_inside_set_basin_of_orbit",
                ob_n <= basins_mod.basin_n(net, orbit).members,
                payload,
            )
            report.record(
                "omega_p_basin_equals_set_basin_of_omega",
                om_p == basins_mod.basin_p(net, omega, with_witnesses=False).members,
                payload,
            )
            report.record(
                "orbit_p_basin_is_p_invariant",
                graph.is_p_invariant(net, ob_p),
                payload,
            )
            if ob_n:
                report.record(
                    "orbit_n_basin_is_n_invariant",
                    graph.is_n_invariant(net, ob_n),
                    payload,
                )
            if om_n is not None:
                report.record("orbit_n_basin_inside_omega_n_basin", ob_n <= om_n, payload)
                report.record(
                    "omega_n_basin_inside_set_basin_of_omega",
                    om_n <= basins_mod.basin_n(net, omega).members,
                    payload,
                )
                if om_n:
                    report.record(
                        "omega_n_basin_is_n_invariant",
                        graph.is_n_invariant(net, om_n),
                        payload,
                    )
                if len(omega) == 1:
                    star = frozenset(omega)
                    w_n_star = basins_mod.basin_n(net, star).members
                    report.record(
                        "constant_tail_n_basins_collapse",
                        ob_n == om_n == w_n_star,
                        payload,
                    )
            if mu in eq:
                report.record(
                    "fixed_point_basins_all_coincide",
                    ob_p
                    == om_p
                    == basins_mod.basin_p(net, frozenset({mu}), False).members
                    and ob_n == basins_mod.basin_n(net, frozenset({mu})).members,
                    payload,
                )
    return report
