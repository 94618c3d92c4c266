"""Minimising weighted automata over the integers, where exactness matters.

Z is not a field, so reachable state sets are sublattices rather than
subspaces, and their canonical bases are Hermite normal forms.  Divisibility
is real here: the lattice generated by (2,0) does not contain (1,0), and an
integer automaton can need coefficients no rational-rank argument reveals.
"""

from dualmin import (INT, IntegerBasis, Matrix, WeightedAutomaton, eval_series,
                     hankel_rank_oracle, hnf, mat_mul, minimise_wa, reach_restrict,
                     words_up_to)

print("Hermite normal form of the rows (2,4) and (6,8):")
a = Matrix.from_rows(INT, [[2, 4], [6, 8]])
h, u = hnf(a)
print(f"  H = {[list(r) for r in h.entries]}")
print(f"  U = {[list(r) for r in u.entries]}, and U*A == H: {mat_mul(u, a) == h}")

basis = IntegerBasis.from_rows(2, [(2, 0), (0, 4)])
print(f"\nLattice basis {basis.rows}:")
print(f"  (2,4) has coordinates {basis.coordinates((2, 4))}")
print(f"  (1,2) is outside the lattice: {basis.coordinates((1, 2)) is None}")

# An automaton whose reachable lattice is a proper sublattice: the initial
# vector (2,0) under the identity action generates 2Z x 0.
wa = WeightedAutomaton.build(("a",), INT, {"a": [[1, 0], [0, 1]]}, [2, 0], [1, 1])
restricted = reach_restrict(wa)
print(f"\nReachable lattice of the doubled automaton: basis {restricted.basis.rows}")
print(f"  restricted init {restricted.automaton.init}, final {restricted.automaton.final}")
print(f"  every word evaluates to "
      f"{eval_series(restricted.automaton, ())} (same as the original:"
      f" {eval_series(wa, ())})")

# Minimisation over Z: dimension can only shrink, the series is untouched,
# and the rational Hankel rank is a lower bound.  Here two of the three
# states carry the same behaviour, and the reachable lattice on the dual
# side is the index-4 sublattice 2Z x 2Z.
wa2 = WeightedAutomaton.build(
    ("a", "b"), INT,
    {"a": [[0, 2, 0], [2, 0, 0], [0, 0, 2]],
     "b": [[1, 1, 0], [1, 1, 0], [0, 0, 1]]},
    [2, 0, 2], [1, 1, -1])
minimal = minimise_wa(wa2)
print(f"\n3-state integer automaton minimises to dimension {minimal.dimension}")
print(f"  rational Hankel rank: {hankel_rank_oracle(wa2, 3)}")
print(f"  final reach basis: {minimal.basis.rows}")
print(f"  matrices: ", {a: [list(r) for r in m.entries]
                        for a, m in minimal.automaton.mats.items()})
print(f"  init {list(minimal.automaton.init)}, final {list(minimal.automaton.final)}")
print("  series preserved up to length 6:",
      all(eval_series(minimal.automaton, w) == eval_series(wa2, w)
          for w in words_up_to(wa2.alphabet, 6)))
print("  minimising again keeps the dimension:",
      minimise_wa(minimal.automaton).dimension == minimal.dimension)
