"""The labeled asynchronous transition graph and its fair components.

Every quantification over schedules reduces to graph conditions here: a
set T is an achievable omega-limit set from mu iff T is strongly
connected, fair (every coordinate can be fired along an internal edge,
counting no-op firings of coordinates that are stable at the source) and
reachable from mu.  The construction direction of this equivalence lives
in basins.witness_schedule; the oracle module validates both directions
by bounded schedule enumeration.
"""

from __future__ import annotations

from .core import (
    GRAPH_CAP,
    SUBSET_CAP,
    DimensionError,
    Network,
    apply_fire_set,
    full_mask,
    stable_set,
    unstable_set,
)


class CapExceededError(ValueError):
    pass


def _check_graph_cap(net: Network) -> None:
    if net.n > GRAPH_CAP:
        raise CapExceededError(
            f"graph-exhaustive operations are capped at n={GRAPH_CAP}, got n={net.n}"
        )


def _subsets_of_mask(mask: int):
    """All subsets of a bit mask, the empty set first."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def successors(net: Network, mu: int) -> list[tuple[int, int]]:
    """(fire set, target) pairs for every subset of the unstable coordinates.

    Firing a stable coordinate is a no-op, so fire sets are canonicalized
    to subsets of the unstable set; the empty subset is the self-loop that
    exists at every state.
    """
    _check_graph_cap(net)
    unstable = unstable_set(net, mu)
    return [(nu, apply_fire_set(net, mu, nu)) for nu in _subsets_of_mask(unstable)]


def proper_successors(net: Network, mu: int) -> list[tuple[int, int]]:
    return [(nu, target) for nu, target in successors(net, mu) if nu]


def reachable_set(net: Network, mu: int) -> frozenset[int]:
    """Forward closure of mu; the union of all orbits from mu."""
    _check_graph_cap(net)
    seen = {mu}
    stack = [mu]
    while stack:
        state = stack.pop()
        for _, target in proper_successors(net, state):
            if target not in seen:
                seen.add(target)
                stack.append(target)
    return frozenset(seen)


def is_n_invariant(net: Network, states: frozenset[int]) -> bool:
    """No fire set can take any member outside the set."""
    if not states:
        raise ValueError("invariance is defined for nonempty sets only")
    return all(
        target in states for mu in states for _, target in proper_successors(net, mu)
    )


def _tarjan_sccs(adjacency: dict[int, list[int]]) -> list[list[int]]:
    """Iterative Tarjan over an explicit adjacency map."""
    index: dict[int, int] = {}
    lowlink: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0
    for root in adjacency:
        if root in index:
            continue
        work = [(root, iter(adjacency[root]))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, edges = work[-1]
            advanced = False
            for target in edges:
                if target not in index:
                    index[target] = lowlink[target] = counter
                    counter += 1
                    stack.append(target)
                    on_stack.add(target)
                    work.append((target, iter(adjacency[target])))
                    advanced = True
                    break
                if target in on_stack:
                    lowlink[node] = min(lowlink[node], index[target])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index[node]:
                scc = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    scc.append(w)
                    if w == node:
                        break
                sccs.append(scc)
    return sccs


def _induced_adjacency(net: Network, domain: frozenset[int]) -> dict[int, list[int]]:
    return {
        mu: sorted(
            {target for _, target in proper_successors(net, mu) if target in domain}
        )
        for mu in sorted(domain)
    }


def _is_fair(net: Network, states: frozenset[int]) -> bool:
    """Every coordinate is coverable by an edge internal to `states`.

    Per-edge capability is fire | stable(source): a stable coordinate can
    always be co-fired as a no-op, which is what makes fairness decidable
    edge-locally.  The empty-fire self-loop contributes stable(source).
    """
    needed = full_mask(net.n)
    covered = 0
    for mu in states:
        covered |= stable_set(net, mu)
        if covered == needed:
            return True
    for mu in states:
        for nu, target in proper_successors(net, mu):
            if target in states:
                covered |= nu
                if covered == needed:
                    return True
    return covered == needed


def _is_strongly_connected(net: Network, states: frozenset[int]) -> bool:
    # singletons count via their empty-fire self-loop
    if len(states) == 1:
        return True
    adjacency = _induced_adjacency(net, states)
    return len(_tarjan_sccs(adjacency)) == 1


def is_fair_set(net: Network, states: frozenset[int]) -> bool:
    """Strongly connected and fair: a candidate omega-limit set."""
    if not states:
        return False
    return _is_strongly_connected(net, states) and _is_fair(net, states)


def fair_sccs(net: Network, domain: frozenset[int] | None = None) -> list[frozenset[int]]:
    """The fair SCCs of the subgraph induced on `domain` (default: all states)."""
    _check_graph_cap(net)
    if domain is None:
        domain = frozenset(net.states())
    if not domain:
        raise ValueError("domain must be nonempty")
    adjacency = _induced_adjacency(net, domain)
    result = [
        frozenset(scc)
        for scc in _tarjan_sccs(adjacency)
        if _is_fair(net, frozenset(scc))
    ]
    result.sort(key=lambda s: sorted(s))
    return result


def is_p_invariant(net: Network, states: frozenset[int]) -> bool:
    """Every member can stay inside forever under some fair schedule.

    Equivalent graph condition: every member reaches, by edges internal to
    the set, a fair SCC of the induced subgraph (a fair strongly connected
    subset is always contained in a fair SCC, so maximal SCCs suffice).
    """
    if not states:
        raise ValueError("invariance is defined for nonempty sets only")
    fair = fair_sccs(net, states)
    targets = set().union(*fair) if fair else set()
    if not targets:
        return False
    adjacency = _induced_adjacency(net, states)
    for mu in states:
        seen = {mu}
        stack = [mu]
        found = mu in targets
        while stack and not found:
            for target in adjacency[stack.pop()]:
                if target in targets:
                    found = True
                    break
                if target not in seen:
                    seen.add(target)
                    stack.append(target)
        if not found:
            return False
    return True


def fair_subsets(net: Network, scc: frozenset[int]) -> list[frozenset[int]]:
    """All fair strongly connected subsets of one SCC."""
    if len(scc) > (1 << SUBSET_CAP):
        raise CapExceededError(
            f"fair-subset enumeration capped at SCCs of {1 << SUBSET_CAP} states"
        )
    members = sorted(scc)
    found = []
    for mask in range(1, 1 << len(members)):
        subset = frozenset(members[i] for i in range(len(members)) if mask & (1 << i))
        if is_fair_set(net, subset):
            found.append(subset)
    return found


def achievable_omegas_from(net: Network, mu: int) -> frozenset[frozenset[int]]:
    """Every set arising as an omega-limit set of some fair schedule from mu:
    the fair strongly connected subsets (maximal SCCs and sub-SCCs)
    reachable from mu."""
    if net.n > SUBSET_CAP:
        raise CapExceededError(
            f"achievable-omega enumeration is capped at n={SUBSET_CAP}, got n={net.n}"
        )
    reach = reachable_set(net, mu)
    adjacency = _induced_adjacency(net, reach)
    result: set[frozenset[int]] = set()
    for scc in _tarjan_sccs(adjacency):
        result.update(fair_subsets(net, frozenset(scc)))
    return frozenset(result)


def reachable_fair_sccs(net: Network, mu: int) -> list[frozenset[int]]:
    """Fair maximal SCCs of the full graph intersecting reachable_set(mu)."""
    reach = reachable_set(net, mu)
    adjacency = _induced_adjacency(net, reach)
    # SCCs of the subgraph induced on a forward-closed set are SCCs of the
    # full graph restricted to it
    result = [
        frozenset(scc)
        for scc in _tarjan_sccs(adjacency)
        if _is_fair(net, frozenset(scc))
    ]
    result.sort(key=lambda s: sorted(s))
    return result


def is_achievable_from(net: Network, target: frozenset[int], mu: int) -> bool:
    """True iff `target` is strongly connected, fair and reachable from mu."""
    if not target:
        raise ValueError("target must be nonempty")
    if not is_fair_set(net, target):
        return False
    return bool(reachable_set(net, mu) & target)
