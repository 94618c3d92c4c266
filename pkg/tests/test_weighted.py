import random
from fractions import Fraction

import pytest

from dualmin import (BOOL, INT, RATIONAL, TROPICAL, SemiringError,
                     WeightedAutomaton, bool_wa_to_nfa, dual_wa, eval_series,
                     hankel_rank_oracle, mat_vec, minimise_wa, nfa_to_bool_wa,
                     reach_restrict, vec_mat)
from dualmin.sampling import random_nfa, random_wa

from oracles import gauss_rank, nfa_accepts_paths, wa_eval_paths, words


def swap_wa() -> WeightedAutomaton:
    return WeightedAutomaton.build(("a",), INT, {"a": [[0, 1], [1, 0]]}, [1, 0], [1, 1])


def test_eval_empty_word_is_f_dot_i():
    rng = random.Random(1)
    for _ in range(20):
        w = random_wa(rng, INT)
        assert eval_series(w, ()) == w.semiring.dot(w.final, w.init)


def test_eval_swap_example():
    assert eval_series(swap_wa(), ("a", "a")) == 1
    assert eval_series(swap_wa(), ("a",)) == 1  # f is all ones


def test_eval_matches_path_sum():
    rng = random.Random(2)
    for sr in (INT, RATIONAL, BOOL, TROPICAL):
        for _ in range(15):
            w = random_wa(rng, sr, max_n=3, max_letters=2, lo=0 if sr is TROPICAL else -2, hi=2)
            for word in words(w.alphabet, 3):
                assert w.semiring.eq(eval_series(w, word), wa_eval_paths(w, word))


def test_boolean_wa_encodes_nfa_acceptance():
    rng = random.Random(3)
    for _ in range(40):
        n = random_nfa(rng, max_n=5)
        w = nfa_to_bool_wa(n)
        for word in words(n.alphabet, 4):
            assert (eval_series(w, word) == 1) == nfa_accepts_paths(n, word)
        assert bool_wa_to_nfa(w) == n


def test_eval_unknown_letter():
    with pytest.raises(ValueError):
        eval_series(swap_wa(), ("b",))


def test_dual_symmetric_self_dual():
    sym = WeightedAutomaton.build(("a",), INT, {"a": [[1, 2], [2, 3]]}, [4, 5], [4, 5])
    assert dual_wa(sym) == sym


def test_dual_is_involution():
    rng = random.Random(4)
    for sr in (INT, RATIONAL):
        for _ in range(20):
            w = random_wa(rng, sr)
            assert dual_wa(dual_wa(w)) == w


def test_dual_reverses_series():
    rng = random.Random(5)
    for sr in (INT, RATIONAL):
        for _ in range(30):
            w = random_wa(rng, sr)
            d = dual_wa(w)
            for word in words(w.alphabet, 6):
                assert eval_series(d, word) == eval_series(w, tuple(reversed(word)))


def test_dual_two_letter_hand_example():
    w = WeightedAutomaton.build(("a", "b"), INT,
                                {"a": [[0, 1], [1, 0]], "b": [[1, 1], [0, 1]]},
                                [1, 0], [1, -1])
    d = dual_wa(w)
    assert eval_series(d, ("a", "b")) == wa_eval_paths(w, ("b", "a"))


def test_dual_rejects_non_rings():
    with pytest.raises(SemiringError):
        dual_wa(nfa_to_bool_wa(random_nfa(random.Random(0))))
    trop = WeightedAutomaton.build(("a",), TROPICAL, {"a": [[1]]}, [0], [0])
    with pytest.raises(SemiringError):
        dual_wa(trop)


def test_reach_restrict_full_rank_keeps_dimension():
    w = swap_wa()
    r = reach_restrict(w)
    assert r.dimension == 2  # (1,0) and (0,1) are both reached


def test_reach_restrict_sublattice_example():
    w = WeightedAutomaton.build(("a",), INT, {"a": [[1, 0], [0, 1]]}, [2, 0], [1, 1])
    r = reach_restrict(w)
    assert r.basis.rows == ((2, 0),)
    assert r.automaton.init == (1,)
    assert r.automaton.final == (2,)
    for word in words(("a",), 4):
        assert eval_series(r.automaton, word) == eval_series(w, word) == 2


def test_reach_restrict_preserves_series():
    rng = random.Random(6)
    for sr in (INT, RATIONAL):
        for _ in range(40):
            w = random_wa(rng, sr)
            r = reach_restrict(w)
            assert r.dimension <= w.n
            for word in words(w.alphabet, 4):
                assert eval_series(r.automaton, word) == eval_series(w, word)


def test_reach_restrict_embedding_consistency():
    # basis rows carry restricted state vectors back into the ambient space
    rng = random.Random(7)
    for sr in (INT, RATIONAL):
        for _ in range(30):
            w = random_wa(rng, sr)
            r = reach_restrict(w)
            for word in words(w.alphabet, 3):
                ambient = w.init
                small = r.automaton.init
                for a in word:
                    ambient = mat_vec(w.mats[a], ambient)
                    small = mat_vec(r.automaton.mats[a], small)
                assert vec_mat(small, r.embedding) == ambient


def test_minimise_swap_example():
    m = minimise_wa(swap_wa())
    assert m.dimension == 1
    assert m.automaton.init == (1,)
    assert m.automaton.final == (1,)
    assert m.automaton.mats["a"].entries == ((1,),)


def test_minimise_zero_series():
    w = WeightedAutomaton.build(("a",), INT, {"a": [[1, 1], [0, 1]]}, [1, 2], [0, 0])
    m = minimise_wa(w)
    assert m.dimension == 0
    for word in words(("a",), 4):
        assert eval_series(m.automaton, word) == 0


def test_hankel_examples():
    zero = WeightedAutomaton.build(("a",), INT, {"a": [[1]]}, [1], [0])
    assert hankel_rank_oracle(zero, 3) == 0
    const = WeightedAutomaton.build(("a",), INT, {"a": [[1]]}, [1], [1])
    assert hankel_rank_oracle(const, 3) == 1
    assert hankel_rank_oracle(swap_wa(), 2) == 1


def test_hankel_matches_gauss_on_explicit_blocks():
    rng = random.Random(8)
    for _ in range(25):
        w = random_wa(rng, RATIONAL, max_n=3)
        level = 3
        ws = words(w.alphabet, level)
        block = [[Fraction(eval_series(w, u + v)) for v in ws] for u in ws]
        assert hankel_rank_oracle(w, level) == gauss_rank(block)


def test_hankel_rejects_tropical():
    trop = WeightedAutomaton.build(("a",), TROPICAL, {"a": [[1]]}, [0], [0])
    with pytest.raises(SemiringError):
        hankel_rank_oracle(trop, 2)


def test_minimise_field_dimension_is_hankel_rank():
    rng = random.Random(9)
    for _ in range(60):
        w = random_wa(rng, RATIONAL)
        m = minimise_wa(w)
        assert m.dimension == hankel_rank_oracle(w, w.n)
        for word in words(w.alphabet, 5):
            assert eval_series(m.automaton, word) == eval_series(w, word)


def test_minimise_integer_properties():
    rng = random.Random(10)
    for _ in range(60):
        w = random_wa(rng, INT)
        m = minimise_wa(w)
        assert m.dimension <= w.n
        assert hankel_rank_oracle(w, w.n) <= m.dimension
        assert minimise_wa(m.automaton).dimension == m.dimension
        for word in words(w.alphabet, 5):
            assert eval_series(m.automaton, word) == eval_series(w, word)


def test_minimise_integer_can_need_strictly_more_than_rational():
    # series 2^|w| from a doubled state: over Z the lattice 2Z forces dimension 1
    # with the same rank as over Q, but a nontrivial basis
    w = WeightedAutomaton.build(("a",), INT, {"a": [[2]]}, [2], [1])
    m = minimise_wa(w)
    assert m.dimension == 1
    for word in words(("a",), 5):
        assert eval_series(m.automaton, word) == eval_series(w, word)


def test_minimise_rejects_unsupported_semirings():
    with pytest.raises(SemiringError):
        minimise_wa(nfa_to_bool_wa(random_nfa(random.Random(1))))


def test_build_validates_shapes():
    with pytest.raises(Exception):
        WeightedAutomaton.build(("a",), INT, {"a": [[1, 2], [3, 4]]}, [1], [1])
