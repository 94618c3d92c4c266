from fractions import Fraction

import pytest

from dualmin import (BOOL, INT, RATIONAL, TROPICAL, TROPICAL_INF,
                     AlternatingAutomaton, Dkm, FormatError, MooreAutomaton, Nfa,
                     WeightedAutomaton, emit, parse, run)

from oracles import ends_with_a_dfa


def test_parse_ends_with_a_dfa(data_dir):
    m = parse((data_dir / "ends_with_a.json").read_bytes())
    assert isinstance(m, MooreAutomaton)
    assert m == ends_with_a_dfa()
    assert m.state_names == ("x", "y", "z")
    assert m.outputs == ("reject", "accept")


def test_roundtrip_every_fixture(data_dir):
    for name in ("ends_with_a.json", "ends_with_a_min.json", "moore3.json", "nfa_small.json",
                 "wa_swap.json", "wa_rational.json", "wa_bool.json", "wa_tropical.json",
                 "afa_ends_with_a.json", "afa_conj.json", "dkm_ends_with_a.json"):
        obj = parse((data_dir / name).read_bytes())
        again = parse(emit(obj))
        assert again == obj, name
        assert emit(again) == emit(obj), name


def test_weighted_dimension_error_names_letter(data_dir):
    with pytest.raises(FormatError) as exc:
        parse((data_dir / "bad_wa_dims.json").read_bytes())
    assert "transitions.a" in str(exc.value)


def test_unknown_semiring():
    doc = """{"type":"weighted","semiring":"octonion","alphabet":["a"],"states":["q"],
              "initial":[1],"final":[1],"transitions":{"a":[[1]]}}"""
    with pytest.raises(ValueError):
        parse(doc)


def test_parse_errors_carry_paths():
    bad_target = """{"type":"dfa","alphabet":["a"],"states":["x"],"initial":"x",
                     "transitions":{"a":{"x":"nope"}},"finals":[]}"""
    with pytest.raises(FormatError) as exc:
        parse(bad_target)
    assert exc.value.path == "transitions.a.x"
    bad_init = """{"type":"dfa","alphabet":["a"],"states":["x"],"initial":"q",
                   "transitions":{"a":{"x":"x"}},"finals":[]}"""
    with pytest.raises(FormatError) as exc:
        parse(bad_init)
    assert exc.value.path == "initial"
    with pytest.raises(FormatError):
        parse("{not json")
    with pytest.raises(FormatError):
        parse('{"type":"teleporter"}')


def test_rational_values_parse_and_emit(data_dir):
    w = parse((data_dir / "wa_rational.json").read_bytes())
    assert w.semiring is RATIONAL
    assert w.init == (Fraction(1, 2), Fraction(0))
    assert w.final == (Fraction(2), Fraction(-1, 3))
    text = emit(w)
    assert '"1/2"' in text and '"-1/3"' in text


def test_tropical_values(data_dir):
    w = parse((data_dir / "wa_tropical.json").read_bytes())
    assert w.semiring is TROPICAL
    assert w.init == (0, TROPICAL_INF)
    assert '"inf"' in emit(w)


def test_big_integers_become_strings():
    big = 2 ** 60
    w = WeightedAutomaton.build(("a",), INT, {"a": [[big]]}, [1], [1])
    text = emit(w)
    assert f'"{big}"' in text
    assert parse(text) == w


def test_afa_formula_and_subset_forms_agree(data_dir):
    by_formula = parse((data_dir / "afa_ends_with_a.json").read_bytes())
    assert isinstance(by_formula, AlternatingAutomaton)
    from dualmin import AlternatingAutomaton as AA
    embedded = AA.from_dfa(ends_with_a_dfa())
    assert by_formula.delta == embedded.delta
    assert by_formula.iota == embedded.iota
    assert by_formula.finals == embedded.finals


def test_nfa_parse_defaults_missing_rows(data_dir):
    n = parse((data_dir / "nfa_small.json").read_bytes())
    assert isinstance(n, Nfa)
    assert n.trans["a"][2] == frozenset()  # r has no a-arcs in the file
    assert n.inits == frozenset({0})


def test_dkm_parse(data_dir):
    k = parse((data_dir / "dkm_ends_with_a.json").read_bytes())
    assert isinstance(k, Dkm)
    assert k == Dkm.from_dfa(ends_with_a_dfa())


def test_moore_parse(data_dir):
    m = parse((data_dir / "moore3.json").read_bytes())
    assert m.outputs == ("low", "mid", "high")
    assert run(m, ("a",)) == 1


def test_bool_weighted_values(data_dir):
    w = parse((data_dir / "wa_bool.json").read_bytes())
    assert w.semiring is BOOL
    bad = """{"type":"weighted","semiring":"bool","alphabet":["a"],"states":["q"],
              "initial":[7],"final":[1],"transitions":{"a":[[1]]}}"""
    with pytest.raises(FormatError) as exc:
        parse(bad)
    assert exc.value.path == "initial[0]"


def test_emitted_states_keep_index_order():
    m = ends_with_a_dfa()
    assert parse(emit(m)).state_names == ("x", "y", "z")
