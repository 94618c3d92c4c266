"""Brzozowski-style minimisation of Moore automata through the dual automaton.

The dual automaton of M lives on predicates over M's states (total functions
X -> B, stored as value vectors).  Reading a letter precomposes a predicate
with the transition map, the initial predicate is M's output map, and a
predicate outputs its value at M's initial state.  The dual accepts the
reversed language, and applying the construction twice yields the reachable,
observable (hence minimal) automaton for the original language.

Only predicates reachable from the output map are ever materialised; a
hash-indexed frontier keeps each element of B^X to a single copy, and the
configurable state bound guards against the |B|^n worst case.
"""

from __future__ import annotations

from collections import deque

from .automata import MooreAutomaton
from .errors import StateGuardError, resolve_max_states


def _explore_dual(m: MooreAutomaton, max_states):
    limit = resolve_max_states(max_states)
    start = tuple(m.out)
    index = {start: 0}
    order = [start]
    trans: dict[str, list[int]] = {a: [] for a in m.alphabet}
    queue = deque([start])
    while queue:
        phi = queue.popleft()
        for a in m.alphabet:
            row = m.trans[a]
            psi = tuple(phi[row[x]] for x in range(m.n))
            if psi not in index:
                if len(order) >= limit:
                    raise StateGuardError(
                        f"dual automaton exceeds {limit} states; raise --max-states")
                index[psi] = len(order)
                order.append(psi)
                queue.append(psi)
            trans[a].append(index[psi])
    return order, trans


def _dual_names(m: MooreAutomaton, order) -> tuple[str, ...] | None:
    # For the Boolean case the predicates decode to subsets; name them so.
    # Member names that already contain '+' (a previous dual pass) are joined
    # with ',' instead, mirroring the usual {yz, xyz} style of nested subsets.
    if len(m.outputs) != 2:
        return None
    base = m.state_names or tuple(f"s{x}" for x in range(m.n))
    sep = "," if any("+" in name for name in base) else "+"
    names = []
    for phi in order:
        members = [x for x in range(m.n) if phi[x] == 1]
        names.append(sep.join(base[x] for x in members) if members else "empty")
    if len(set(names)) != len(names):  # a source state named "empty" can collide
        return None
    return tuple(names)


def dual_automaton(m: MooreAutomaton, max_states: int | None = None) -> MooreAutomaton:
    """The automaton on predicates B^X reachable from the output map.

    run(dual_automaton(m), w) = run(m, reversed(w)) for every word w.
    """
    order, trans = _explore_dual(m, max_states)
    out = tuple(phi[m.init] for phi in order)
    return MooreAutomaton(len(order), m.alphabet,
                          {a: tuple(ts) for a, ts in trans.items()},
                          0, out, m.outputs, _dual_names(m, order))


def brzozowski_minimise(m: MooreAutomaton, max_states: int | None = None) -> MooreAutomaton:
    """Double reversal: the dual applied twice.

    The first pass is reachable by construction, so the second pass is both
    reachable and observable, i.e. the minimal automaton for m's language.
    """
    return dual_automaton(dual_automaton(m, max_states), max_states)


def dual_state_sets(m: MooreAutomaton, max_states: int | None = None) -> frozenset[frozenset[int]]:
    """Dual states of a two-output automaton decoded as subsets of m's states."""
    if len(m.outputs) != 2:
        raise ValueError("dual_state_sets needs a two-element output set")
    order, _ = _explore_dual(m, max_states)
    return frozenset(frozenset(x for x in range(m.n) if phi[x] == 1) for phi in order)


__all__ = ["dual_automaton", "brzozowski_minimise", "dual_state_sets"]
