"""Minimising a weighted automaton over the rationals.

Over a field the minimal dimension of an automaton recognising a power series
is the rank of the series' Hankel matrix.  The pipeline below reverses
(transposes), restricts to the reachable subspace, and repeats; the resulting
dimension matches the rank computed from scratch on a truncated Hankel block.
"""

import random
from fractions import Fraction

from dualmin import (RATIONAL, WeightedAutomaton, eval_series, hankel_rank_oracle,
                     minimise_wa, words_up_to)

# Three states, but the series only depends on a two-dimensional part: state
# q2 duplicates a mix of q0 and q1.
wa = WeightedAutomaton.build(
    ("a", "b"), RATIONAL,
    {
        "a": [[1, 0, 1], [0, "1/2", 1], [0, 0, 0]],
        "b": [[0, 1, 1], [1, 0, 1], [0, 0, 0]],
    },
    init=[1, 1, 0],
    final=[1, "1/2", "3/2"],
)

print("A 3-state automaton over Q; first few series values:")
for w in [(), ("a",), ("b",), ("a", "b"), ("b", "a"), ("a", "a", "b")]:
    print(f"  series({''.join(w) or 'empty':>6}) = {eval_series(wa, w)}")

rank = hankel_rank_oracle(wa, 3)
print(f"\nHankel rank of the series (block up to length 3): {rank}")

minimal = minimise_wa(wa)
print(f"Minimised dimension: {minimal.dimension}")
print("Restricted matrices:")
for a in minimal.automaton.alphabet:
    print(f"  t_{a} = {[[str(v) for v in r] for r in minimal.automaton.mats[a].entries]}")
print(f"  init = {[str(v) for v in minimal.automaton.init]}, "
      f"final = {[str(v) for v in minimal.automaton.final]}")

print("\nSeries preserved on every word up to length 5:",
      all(eval_series(minimal.automaton, w) == eval_series(wa, w)
          for w in words_up_to(wa.alphabet, 5)))

# The same holds on random automata.
rng = random.Random(0)
print("\nRandom check (20 automata, n <= 4):")
agreements = 0
for _ in range(20):
    n = rng.randint(1, 4)
    raw = lambda: Fraction(rng.randint(-2, 2), rng.randint(1, 2))
    w = WeightedAutomaton.build(
        ("a", "b"), RATIONAL,
        {ltr: [[raw() for _ in range(n)] for _ in range(n)] for ltr in ("a", "b")},
        [raw() for _ in range(n)], [raw() for _ in range(n)])
    m = minimise_wa(w)
    agreements += m.dimension == hankel_rank_oracle(w, n)
print(f"  dimension == Hankel rank in {agreements}/20 cases")
