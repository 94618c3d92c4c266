"""Finite deterministic Moore automata (a DFA is the two-output case), NFAs for
classical reversal, and the baseline operations: evaluation, reachability,
subset construction, partition refinement, isomorphism and exact equivalence.

States are dense integer indices 0..n-1; human names only survive as optional
serialization metadata.  Reachability renumbers states in BFS order with
letters taken in alphabet order, so two automata are isomorphic exactly when
their reachable canonical forms compare equal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

DFA_OUTPUTS = ("reject", "accept")


def _check_alphabet(alphabet):
    if not alphabet:
        raise ValueError("alphabet must be nonempty")
    if len(set(alphabet)) != len(alphabet):
        raise ValueError("alphabet letters must be distinct")


@dataclass(frozen=True)
class MooreAutomaton:
    """Deterministic automaton with an output attached to every state.

    `outputs` is the ordered output set B; `out[s]` indexes into it.  For the
    DFA case B = ("reject", "accept") and output index 1 means accepting.
    """

    n: int
    alphabet: tuple[str, ...]
    trans: Mapping[str, tuple[int, ...]]
    init: int
    out: tuple[int, ...]
    outputs: tuple[str, ...] = DFA_OUTPUTS
    state_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        _check_alphabet(self.alphabet)
        if set(self.trans) != set(self.alphabet):
            raise ValueError("transition table letters differ from the alphabet")
        for a in self.alphabet:
            row = self.trans[a]
            if len(row) != self.n or any(not 0 <= t < self.n for t in row):
                raise ValueError(f"bad transition row for letter {a!r}")
        if not 0 <= self.init < self.n:
            raise ValueError("initial state out of range")
        if len(self.out) != self.n or any(not 0 <= o < len(self.outputs) for o in self.out):
            raise ValueError("output map must assign every state a valid output")
        if self.state_names is not None and len(self.state_names) != self.n:
            raise ValueError("state_names length mismatch")

    @classmethod
    def dfa(cls, n, alphabet, trans, init, accepting, state_names=None) -> "MooreAutomaton":
        out = tuple(1 if s in set(accepting) else 0 for s in range(n))
        return cls(n, tuple(alphabet), {a: tuple(t) for a, t in trans.items()},
                   init, out, DFA_OUTPUTS, tuple(state_names) if state_names else None)

    @property
    def is_dfa(self) -> bool:
        return self.outputs == DFA_OUTPUTS

    def accepting(self) -> frozenset[int]:
        if len(self.outputs) != 2:
            raise ValueError("accepting states need a two-element output set")
        return frozenset(s for s in range(self.n) if self.out[s] == 1)

    def step(self, s: int, a: str) -> int:
        try:
            return self.trans[a][s]
        except KeyError:
            raise ValueError(f"unknown letter {a!r}") from None


@dataclass(frozen=True)
class Nfa:
    n: int
    alphabet: tuple[str, ...]
    trans: Mapping[str, tuple[frozenset[int], ...]]
    inits: frozenset[int]
    finals: frozenset[int]
    state_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        _check_alphabet(self.alphabet)
        for a in self.alphabet:
            row = self.trans[a]
            if len(row) != self.n or any(not 0 <= t < self.n for ts in row for t in ts):
                raise ValueError(f"bad transition row for letter {a!r}")
        for s in self.inits | self.finals:
            if not 0 <= s < self.n:
                raise ValueError("initial/final state out of range")


@dataclass(frozen=True)
class Partition:
    """Map state -> block id with ids dense in 0..n_blocks-1."""

    block_of: tuple[int, ...]
    n_blocks: int

    def __post_init__(self):
        if sorted(set(self.block_of)) != list(range(self.n_blocks)):
            raise ValueError("block ids must be dense 0..k-1 and all used")

    @classmethod
    def from_signatures(cls, sigs: Iterable) -> "Partition":
        """Blocks by equal signature, numbered in order of first occurrence."""
        ids: dict = {}
        block_of = []
        for sig in sigs:
            if sig not in ids:
                ids[sig] = len(ids)
            block_of.append(ids[sig])
        return cls(tuple(block_of), len(ids))

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n_blocks)]
        for s, b in enumerate(self.block_of):
            out[b].append(s)
        return out

    def as_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(b) for b in self.blocks())


def words_up_to(alphabet: tuple[str, ...], max_len: int) -> Iterator[tuple[str, ...]]:
    """All words of length <= max_len, shortest first, letters in alphabet order."""
    layer: list[tuple[str, ...]] = [()]
    yield ()
    for _ in range(max_len):
        layer = [w + (a,) for w in layer for a in alphabet]
        yield from layer


def run(m: MooreAutomaton, word: Iterable[str]) -> int:
    """Output (index into m.outputs) of the state reached from init by the word."""
    s = m.init
    for a in word:
        s = m.step(s, a)
    return m.out[s]


def reverse(m: MooreAutomaton) -> Nfa:
    """Classical reversal of a DFA: flip arcs, swap initial and final states."""
    finals = m.accepting()  # demands a two-element output set
    rev: dict[str, list[set[int]]] = {a: [set() for _ in range(m.n)] for a in m.alphabet}
    for a in m.alphabet:
        for s, t in enumerate(m.trans[a]):
            rev[a][t].add(s)
    trans = {a: tuple(frozenset(ts) for ts in rev[a]) for a in m.alphabet}
    return Nfa(m.n, m.alphabet, trans, inits=finals, finals=frozenset({m.init}),
               state_names=m.state_names)


def nfa_step(n: Nfa, subset: frozenset[int], a: str) -> frozenset[int]:
    try:
        row = n.trans[a]
    except KeyError:
        raise ValueError(f"unknown letter {a!r}") from None
    out: set[int] = set()
    for s in subset:
        out |= row[s]
    return frozenset(out)


def _subset_name(subset: frozenset[int], names: tuple[str, ...] | None) -> str:
    if not subset:
        return "empty"
    members = sorted(subset)
    return "+".join(names[s] if names else f"s{s}" for s in members)


def determinise(n: Nfa) -> MooreAutomaton:
    """Subset construction restricted to subsets reachable from the initial set.

    A subset is accepting iff it meets the final states; empty initial set
    yields the one-state rejecting sink.
    """
    start = frozenset(n.inits)
    index: dict[frozenset[int], int] = {start: 0}
    order = [start]
    trans: dict[str, list[int]] = {a: [] for a in n.alphabet}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for a in n.alphabet:
            nxt = nfa_step(n, cur, a)
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            trans[a].append(index[nxt])
    out = tuple(1 if subset & n.finals else 0 for subset in order)
    names = tuple(_subset_name(subset, n.state_names) for subset in order)
    if len(set(names)) != len(names):  # a source state named "empty" can collide
        names = None
    return MooreAutomaton(len(order), n.alphabet, {a: tuple(ts) for a, ts in trans.items()},
                          0, out, DFA_OUTPUTS, names)


def reach(m: MooreAutomaton) -> MooreAutomaton:
    """Restriction to states reachable from init, renumbered in BFS order."""
    order = [m.init]
    seen = {m.init: 0}
    queue = deque([m.init])
    while queue:
        s = queue.popleft()
        for a in m.alphabet:
            t = m.trans[a][s]
            if t not in seen:
                seen[t] = len(order)
                order.append(t)
                queue.append(t)
    trans = {a: tuple(seen[m.trans[a][s]] for s in order) for a in m.alphabet}
    names = tuple(m.state_names[s] for s in order) if m.state_names else None
    return MooreAutomaton(len(order), m.alphabet, trans, 0,
                          tuple(m.out[s] for s in order), m.outputs, names)


def partition_refinement_minimise(m: MooreAutomaton) -> MooreAutomaton:
    """Moore-style partition refinement on the reachable part.

    Blocks start from output values and split on letter-successor blocks until
    stable; the quotient is the canonical minimal automaton.
    """
    m = reach(m)
    part = Partition.from_signatures(m.out)
    while True:
        sigs = [(part.block_of[s],) + tuple(part.block_of[m.trans[a][s]] for a in m.alphabet)
                for s in range(m.n)]
        refined = Partition.from_signatures(sigs)
        if refined.n_blocks == part.n_blocks:
            break
        part = refined
    reps = [min(b) for b in part.blocks()]
    trans = {a: tuple(part.block_of[m.trans[a][reps[b]]] for b in range(part.n_blocks))
             for a in m.alphabet}
    out = tuple(m.out[reps[b]] for b in range(part.n_blocks))
    quotient = MooreAutomaton(part.n_blocks, m.alphabet, trans,
                              part.block_of[m.init], out, m.outputs)
    return reach(quotient)


def canonical_form(m: MooreAutomaton) -> MooreAutomaton:
    """BFS-canonical representative (drops state names)."""
    r = reach(m)
    return MooreAutomaton(r.n, r.alphabet, dict(r.trans), r.init, r.out, r.outputs)


def iso_check(m1: MooreAutomaton, m2: MooreAutomaton) -> bool:
    """True iff a bijection respecting init, transitions and outputs exists.

    Both automata are reduced to BFS-canonical form first, so the check is a
    structural equality.
    """
    return canonical_form(m1) == canonical_form(m2)


def equiv_exact(m1: MooreAutomaton, m2: MooreAutomaton) -> bool:
    """Exact language equivalence via BFS over the reachable product."""
    if m1.alphabet != m2.alphabet:
        raise ValueError("equiv_exact: alphabets differ")
    if m1.outputs != m2.outputs:
        raise ValueError("equiv_exact: output sets differ")
    start = (m1.init, m2.init)
    seen = {start}
    queue = deque([start])
    while queue:
        s1, s2 = queue.popleft()
        if m1.out[s1] != m2.out[s2]:
            return False
        for a in m1.alphabet:
            nxt = (m1.trans[a][s1], m2.trans[a][s2])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True
