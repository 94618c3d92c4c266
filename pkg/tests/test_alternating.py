import random

import pytest

from dualmin import (AlternatingAutomaton, BoolFun, StateGuardError, afa_accepts,
                     all_subsets, compile_formula, determinise, iso_check,
                     minimal_dfa_for_afa, partition_refinement_minimise, reach,
                     reverse, reverse_dfa, run)
from dualmin.sampling import random_afa

from oracles import afa_accepts_recursive, ends_with_a_dfa, words


def conjunctive_afa() -> AlternatingAutomaton:
    # delta_a(0) asks both states to report 1, delta_a(1) asks state 1 only
    n = 2
    delta = {"a": (BoolFun.from_subsets(n, [{0, 1}]),
                   BoolFun.from_subsets(n, [{1}, {0, 1}]))}
    iota = BoolFun.from_subsets(n, [{0}, {0, 1}])
    return AlternatingAutomaton(n, ("a",), delta, iota, frozenset({1}))


def test_empty_word_acceptance_is_iota_of_finals():
    rng = random.Random(0)
    for _ in range(30):
        a = random_afa(rng)
        assert afa_accepts(a, ()) == a.iota(a.finals)


def test_conjunctive_example_by_brute_force():
    a = conjunctive_afa()
    for w in words(("a",), 6):
        assert afa_accepts(a, w) == afa_accepts_recursive(a, w)
    # delta'_a({1}) = {1} since state 0 needs both reports; iota needs state 0
    assert not afa_accepts(a, ("a",))


def test_dfa_embedding_agrees_with_run():
    m = ends_with_a_dfa()
    a = AlternatingAutomaton.from_dfa(m)
    for w in words(m.alphabet, 6):
        assert afa_accepts(a, w) == (run(m, w) == 1)


def test_dfa_embedding_agrees_on_random_dfas():
    from dualmin.sampling import random_dfa
    rng = random.Random(9)
    for _ in range(25):
        m = random_dfa(rng, max_n=4, max_letters=2)
        a = AlternatingAutomaton.from_dfa(m)
        for w in words(m.alphabet, 5):
            assert afa_accepts(a, w) == (run(m, w) == 1)


def test_afa_accepts_unknown_letter():
    with pytest.raises(ValueError):
        afa_accepts(conjunctive_afa(), ("b",))


def test_reverse_dfa_one_state_embedding():
    from dualmin import MooreAutomaton
    one = AlternatingAutomaton.from_dfa(MooreAutomaton.dfa(1, ("a",), {"a": (0,)}, 0, [0]))
    rev = reverse_dfa(one)
    assert rev.n == 2
    assert reach(rev).n == 1


def test_reverse_dfa_state_count_is_powerset():
    rng = random.Random(1)
    for _ in range(20):
        a = random_afa(rng)
        assert reverse_dfa(a).n == 2 ** a.n


def test_reversal_theorem_differential():
    rng = random.Random(2)
    for _ in range(60):
        a = random_afa(rng)
        rev = reverse_dfa(a)
        for w in words(a.alphabet, 6):
            assert (run(rev, w) == 1) == afa_accepts(a, tuple(reversed(w)))


def test_transpose_identity_pointwise():
    rng = random.Random(3)
    for _ in range(20):
        a = random_afa(rng)
        for letter in a.alphabet:
            row = a.delta[letter]
            for subset in all_subsets(a.n):
                transposed = frozenset(s for s in range(a.n) if row[s](subset))
                for s in range(a.n):
                    assert (s in transposed) == row[s](subset)


def test_minimal_dfa_for_embedded_dfa():
    a = AlternatingAutomaton.from_dfa(ends_with_a_dfa())
    minimal = minimal_dfa_for_afa(a)
    assert minimal.n == 2
    assert iso_check(minimal, partition_refinement_minimise(ends_with_a_dfa()))


def test_minimal_dfa_reject_all():
    a = AlternatingAutomaton(2, ("a",),
                             {"a": (BoolFun.always(2, True), BoolFun.always(2, False))},
                             BoolFun.always(2, False), frozenset({0}))
    minimal = minimal_dfa_for_afa(a)
    assert minimal.n == 1
    assert minimal.out == (0,)


def test_minimal_dfa_matches_oracle_route():
    rng = random.Random(4)
    for _ in range(60):
        a = random_afa(rng)
        oracle = partition_refinement_minimise(determinise(reverse(reverse_dfa(a))))
        assert iso_check(minimal_dfa_for_afa(a), oracle)


def test_formula_compilation():
    names = ("x", "y", "z")
    f = compile_formula("x and (y or not z)", names)
    assert f({0, 1}) and f({0, 1, 2}) and f({0})
    assert not f({0, 2}) and not f({1, 2}) and not f(set())
    assert compile_formula("true", names).sats == frozenset(all_subsets(3))
    assert compile_formula("false", names).sats == frozenset()


def test_formula_rejects_bad_syntax():
    with pytest.raises(ValueError):
        compile_formula("x + y", ("x", "y"))
    with pytest.raises(ValueError):
        compile_formula("w", ("x", "y"))
    with pytest.raises(ValueError):
        compile_formula("__import__('os')", ("x",))


def test_guard_refuses_large_powersets():
    n = 25
    empty = BoolFun(n, frozenset())
    a = AlternatingAutomaton(n, ("a",), {"a": (empty,) * n}, empty, frozenset())
    with pytest.raises(StateGuardError):
        reverse_dfa(a)
    with pytest.raises(StateGuardError):
        minimal_dfa_for_afa(a)
