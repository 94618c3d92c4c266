"""Differential property suites behind the `selftest` CLI verb.

Each suite draws seeded random instances and checks an implementation against
an independent route: double reversal against partition refinement, dual
evaluation against reversed words, minimised dimensions against Hankel ranks,
Hermite forms against their defining equations, and the definable-subset
atoms against plain partition refinement.
"""

from __future__ import annotations

import random
from typing import Callable

from . import sampling
from .alternating import afa_accepts, minimal_dfa_for_afa, reverse_dfa
from .automata import (determinise, equiv_exact, iso_check, partition_refinement_minimise,
                       reverse, run, words_up_to)
from .brzozowski import brzozowski_minimise, dual_automaton, dual_state_sets
from .dkm import Dkm, bisimulation_oracle, boolean_atoms, definable_closure, minimise_dkm
from .linalg import IntegerBasis, det_int, hnf, is_hnf_shape
from .semiring import INT, RATIONAL, mat_mul
from .weighted import eval_series, hankel_rank_oracle, minimise_wa


def _check_moore(rng, failures):
    m = sampling.random_moore(rng)
    brz = brzozowski_minimise(m)
    ref = partition_refinement_minimise(m)
    if not iso_check(brz, ref):
        failures.append(f"double reversal vs refinement differ on {m}")
    elif not equiv_exact(brz, m):
        failures.append(f"double reversal changed the language of {m}")


def _check_reversal(rng, failures):
    m = sampling.random_moore(rng, max_n=6)
    dual = dual_automaton(m)
    for w in words_up_to(m.alphabet, 6):
        if run(dual, w) != run(m, tuple(reversed(w))):
            failures.append(f"dual disagrees on {w} for {m}")
            return


def _check_weighted_field(rng, failures):
    w = sampling.random_wa(rng, RATIONAL)
    minimal = minimise_wa(w)
    if minimal.dimension != hankel_rank_oracle(w, w.n):
        failures.append(f"field dimension is not the Hankel rank for {w}")
        return
    for word in words_up_to(w.alphabet, 4):
        if eval_series(minimal.automaton, word) != eval_series(w, word):
            failures.append(f"field minimisation changed the series at {word} for {w}")
            return


def _check_weighted_int(rng, failures):
    w = sampling.random_wa(rng, INT)
    minimal = minimise_wa(w)
    if minimal.dimension > w.n:
        failures.append(f"integer minimisation grew {w}")
        return
    if hankel_rank_oracle(w, w.n) > minimal.dimension:
        failures.append(f"integer dimension below the rational rank for {w}")
        return
    again = minimise_wa(minimal.automaton)
    if again.dimension != minimal.dimension:
        failures.append(f"integer minimisation is not idempotent in dimension for {w}")
        return
    for word in words_up_to(w.alphabet, 4):
        if eval_series(minimal.automaton, word) != eval_series(w, word):
            failures.append(f"integer minimisation changed the series at {word} for {w}")
            return


def _check_hnf(rng, failures):
    a = sampling.random_int_matrix(rng, 4, 4)
    h, u = hnf(a)
    if mat_mul(u, a) != h:
        failures.append(f"u*a != h for {a.entries}")
    elif abs(det_int(u)) != 1:
        failures.append(f"u not unimodular for {a.entries}")
    elif not is_hnf_shape(tuple(r for r in h.entries if any(r))):
        failures.append(f"h not canonical for {a.entries}")
    else:
        basis = IntegerBasis(4, tuple(r for r in h.entries if any(r)))
        if any(basis.coordinates(row) is None for row in a.entries):
            failures.append(f"row of a outside the lattice of h for {a.entries}")


def _check_afa(rng, failures):
    a = sampling.random_afa(rng)
    rev = reverse_dfa(a)
    for w in words_up_to(a.alphabet, 6):
        if (run(rev, w) == 1) != afa_accepts(a, tuple(reversed(w))):
            failures.append(f"reversal theorem fails at {w} for {a}")
            return
    oracle = partition_refinement_minimise(determinise(reverse(reverse_dfa(a))))
    if not iso_check(minimal_dfa_for_afa(a), oracle):
        failures.append(f"afa minimisation differs from the oracle for {a}")


def _check_dkm(rng, failures):
    k = sampling.random_dkm(rng)
    atoms = boolean_atoms(definable_closure(k), k.n)
    if atoms != bisimulation_oracle(k):
        failures.append(f"definable atoms differ from bisimulation on {k}")
        return
    minimal = minimise_dkm(k)
    if minimise_dkm(minimal) != minimal:
        failures.append(f"dkm minimisation not idempotent on {k}")


def _check_cross(rng, failures):
    m = sampling.random_dfa(rng, max_n=6)
    closure = definable_closure(Dkm.from_dfa(m))
    if closure != dual_state_sets(m):
        failures.append(f"definable closure differs from dual states on {m}")


SUITES: dict[str, Callable] = {
    "moore-minimise": _check_moore,
    "language-reversal": _check_reversal,
    "weighted-rational": _check_weighted_field,
    "weighted-integer": _check_weighted_int,
    "hermite-normal-form": _check_hnf,
    "alternating": _check_afa,
    "kripke-quotient": _check_dkm,
    "closure-vs-dual": _check_cross,
}


def run_selftest(seed: int = 0, cases: int = 50, report=print) -> bool:
    """Run every suite on `cases` fresh instances; report one line per suite."""
    all_ok = True
    for name, check in SUITES.items():
        rng = random.Random(f"{seed}:{name}")
        failures: list[str] = []
        for _ in range(cases):
            check(rng, failures)
            if failures:
                break
        if failures:
            all_ok = False
            report(f"FAIL {name}: {failures[0]}")
        else:
            report(f"PASS {name} ({cases} cases)")
    return all_ok
