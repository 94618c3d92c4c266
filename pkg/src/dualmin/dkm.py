"""Deterministic Kripke models: trace-formula semantics, the definable-subset
closure, the atoms of the Boolean algebra it generates, and the bisimulation
quotient obtained from those atoms.

A trace formula is a modality word followed by a single observation,
<a1>...<ak> w; its extension is computed right to left by taking transition
preimages of the observation's extension.  The closure of all trace-definable
subsets is a finite family whose membership signatures partition the states
exactly as the coarsest bisimulation does, which is what the quotient uses.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping

from .automata import DFA_OUTPUTS, MooreAutomaton, Partition
from .errors import NonCongruenceError


@dataclass(frozen=True)
class Dkm:
    n: int
    alphabet: tuple[str, ...]
    obs: tuple[str, ...]
    gamma: tuple[frozenset[str], ...]
    delta: Mapping[str, tuple[int, ...]]
    init: int | None = None
    state_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.alphabet or len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet must be nonempty with distinct letters")
        if len(set(self.obs)) != len(self.obs):
            raise ValueError("observations must be distinct")
        if len(self.gamma) != self.n or any(not g <= set(self.obs) for g in self.gamma):
            raise ValueError("gamma must assign every state a subset of the observations")
        if set(self.delta) != set(self.alphabet):
            raise ValueError("delta must cover exactly the alphabet")
        for a, row in self.delta.items():
            if len(row) != self.n or any(not 0 <= t < self.n for t in row):
                raise ValueError(f"bad delta row for letter {a!r}")
        if self.init is not None and not 0 <= self.init < self.n:
            raise ValueError("initial state out of range")

    @classmethod
    def from_dfa(cls, m: MooreAutomaton, obs_name: str = "p") -> "Dkm":
        """A DFA as a single-observation model: the observation holds at accepting states."""
        gamma = tuple(frozenset({obs_name}) if m.out[s] == 1 else frozenset()
                      for s in range(m.n))
        return cls(m.n, m.alphabet, (obs_name,), gamma, dict(m.trans), m.init, m.state_names)

    def to_dfa(self) -> MooreAutomaton:
        """Decode a single-observation model with an initial state back to a DFA."""
        if len(self.obs) != 1 or self.init is None:
            raise ValueError("to_dfa needs one observation and an initial state")
        p = self.obs[0]
        out = tuple(1 if p in g else 0 for g in self.gamma)
        return MooreAutomaton(self.n, self.alphabet, dict(self.delta), self.init,
                              out, DFA_OUTPUTS, self.state_names)


@dataclass(frozen=True)
class TraceFormula:
    """<a1>...<ak> obs: a modality word followed by one observation."""

    word: tuple[str, ...]
    obs: str

    def __str__(self):
        return "".join(f"<{a}>" for a in self.word) + self.obs


def eval_trace(k: Dkm, formula: TraceFormula) -> frozenset[int]:
    """Extension of a trace formula, evaluated right to left by preimages."""
    if formula.obs not in k.obs:
        raise ValueError(f"unknown observation {formula.obs!r}")
    current = frozenset(s for s in range(k.n) if formula.obs in k.gamma[s])
    for a in reversed(formula.word):
        if a not in k.delta:
            raise ValueError(f"unknown letter {a!r}")
        row = k.delta[a]
        current = frozenset(s for s in range(k.n) if row[s] in current)
    return current


def definable_closure(k: Dkm) -> frozenset[frozenset[int]]:
    """Least family containing every observation extension and closed under
    transition preimages; equals the set of all trace-formula extensions."""
    family: set[frozenset[int]] = set()
    queue: deque[frozenset[int]] = deque()
    for w in k.obs:
        base = frozenset(s for s in range(k.n) if w in k.gamma[s])
        if base not in family:
            family.add(base)
            queue.append(base)
    while queue:
        cur = queue.popleft()
        for a in k.alphabet:
            row = k.delta[a]
            pre = frozenset(s for s in range(k.n) if row[s] in cur)
            if pre not in family:
                family.add(pre)
                queue.append(pre)
    return frozenset(family)


def boolean_atoms(family: frozenset[frozenset[int]], n: int) -> Partition:
    """Atoms of the Boolean algebra generated by the family, as a state partition.

    Two states share an atom iff they have the same membership signature
    across every set of the family.
    """
    ordered = sorted(family, key=sorted)
    for subset in ordered:
        if any(not 0 <= s < n for s in subset):
            raise ValueError("family mentions a state out of range")
    return Partition.from_signatures(
        tuple(s in subset for subset in ordered) for s in range(n))


def quotient_dkm(k: Dkm, part: Partition) -> Dkm:
    """Quotient model on the blocks of a congruence partition."""
    if len(part.block_of) != k.n:
        raise ValueError("partition is over the wrong state count")
    reps = [min(b) for b in part.blocks()]
    for block in part.blocks():
        rep = block[0]
        for s in block[1:]:
            if k.gamma[s] != k.gamma[rep]:
                raise NonCongruenceError(
                    f"states {rep} and {s} share a block but observe differently",
                    witness=(rep, s))
            for a in k.alphabet:
                if part.block_of[k.delta[a][s]] != part.block_of[k.delta[a][rep]]:
                    raise NonCongruenceError(
                        f"states {rep} and {s} share a block but step to different blocks on {a!r}",
                        witness=(rep, s))
    delta = {a: tuple(part.block_of[k.delta[a][reps[b]]] for b in range(part.n_blocks))
             for a in k.alphabet}
    gamma = tuple(k.gamma[reps[b]] for b in range(part.n_blocks))
    init = part.block_of[k.init] if k.init is not None else None
    return Dkm(part.n_blocks, k.alphabet, k.obs, gamma, delta, init)


def minimise_dkm(k: Dkm) -> Dkm:
    """Bisimulation quotient via duality: atoms of the definable closure."""
    return quotient_dkm(k, boolean_atoms(definable_closure(k), k.n))


def bisimulation_oracle(k: Dkm) -> Partition:
    """Coarsest partition refining the observation partition and stable under
    every transition (standard partition refinement; independent oracle)."""
    part = Partition.from_signatures(tuple(sorted(g)) for g in k.gamma)
    while True:
        sigs = [(part.block_of[s],) + tuple(part.block_of[k.delta[a][s]] for a in k.alphabet)
                for s in range(k.n)]
        refined = Partition.from_signatures(sigs)
        if refined.n_blocks == part.n_blocks:
            return part
        part = refined
