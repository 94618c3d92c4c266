import json

import pytest

from dualmin import iso_check, parse
from dualmin.cli import main, parse_trace_formula


def invoke(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_minimize_brzozowski(capsys, data_dir):
    rc, out, _ = invoke(capsys, "minimize", str(data_dir / "ends_with_a.json"))
    assert rc == 0
    result = parse(out)
    assert result.n == 2
    assert iso_check(result, parse((data_dir / "ends_with_a_min.json").read_bytes()))


def test_minimize_methods_agree(capsys, data_dir):
    results = []
    for method in ("brzozowski", "refine", "duality"):
        rc, out, _ = invoke(capsys, "minimize", str(data_dir / "ends_with_a.json"),
                            "--method", method)
        assert rc == 0
        results.append(parse(out))
    assert iso_check(results[0], results[1])
    assert iso_check(results[0], results[2])


def test_minimize_methods_agree_on_moore(capsys, data_dir):
    outputs = []
    for method in ("brzozowski", "refine"):
        rc, out, _ = invoke(capsys, "minimize", str(data_dir / "moore3.json"),
                            "--method", method)
        assert rc == 0
        outputs.append(parse(out))
    assert iso_check(outputs[0], outputs[1])


def test_equiv_verdicts(capsys, data_dir):
    rc, out, _ = invoke(capsys, "equiv", str(data_dir / "ends_with_a.json"),
                        str(data_dir / "ends_with_a_min.json"))
    assert rc == 0 and out.strip() == "equivalent"
    rc, out, _ = invoke(capsys, "equiv", str(data_dir / "ends_with_a.json"),
                        str(data_dir / "moore3.json"))
    assert rc == 1  # output sets differ: reported as an error verdict


def test_run_words(capsys, data_dir):
    rc, out, _ = invoke(capsys, "run", str(data_dir / "ends_with_a.json"), "-w", "ba")
    assert rc == 0 and out.strip() == "accept"
    rc, out, _ = invoke(capsys, "run", str(data_dir / "ends_with_a.json"), "-w", "")
    assert rc == 0 and out.strip() == "reject"
    rc, out, _ = invoke(capsys, "run", str(data_dir / "ends_with_a.json"), "-w", "b,a")
    assert rc == 0 and out.strip() == "accept"
    rc, out, _ = invoke(capsys, "run", str(data_dir / "wa_swap.json"), "-w", "aa")
    assert rc == 0 and out.strip() == "1"


def test_reverse_and_determinize(capsys, data_dir):
    rc, out, _ = invoke(capsys, "reverse", str(data_dir / "ends_with_a.json"))
    assert rc == 0
    doc = json.loads(out)
    assert doc["type"] == "nfa"
    assert sorted(doc["initial"]) == ["y", "z"]
    rc, out2, _ = invoke(capsys, "determinize", str(data_dir / "nfa_small.json"))
    assert rc == 0
    assert json.loads(out2)["type"] == "dfa"


def test_dual_weighted_and_reach(capsys, data_dir):
    rc, out, _ = invoke(capsys, "dual", str(data_dir / "wa_swap.json"))
    assert rc == 0
    doc = json.loads(out)
    assert doc["initial"] == [1, 1] and doc["final"] == [1, 0]
    rc, out, _ = invoke(capsys, "reach", str(data_dir / "wa_swap.json"))
    assert rc == 0
    assert len(json.loads(out)["states"]) == 2


def test_minimize_weighted_duality(capsys, data_dir):
    rc, out, _ = invoke(capsys, "minimize", str(data_dir / "wa_swap.json"),
                        "--method", "duality")
    assert rc == 0
    doc = json.loads(out)
    assert doc["type"] == "weighted"
    assert doc["states"] == ["s0"]
    assert doc["initial"] == [1] and doc["final"] == [1]


def test_minimize_boolean_weighted_routes_through_determinisation(capsys, data_dir):
    rc, out, _ = invoke(capsys, "minimize", str(data_dir / "wa_bool.json"))
    assert rc == 0
    assert json.loads(out)["type"] == "dfa"


def test_hankel(capsys, data_dir):
    rc, out, _ = invoke(capsys, "hankel", str(data_dir / "wa_swap.json"), "-L", "2")
    assert rc == 0 and out.strip() == "1"


def test_equiv_weighted_bounded(capsys, data_dir, tmp_path):
    rc, out, _ = invoke(capsys, "minimize", str(data_dir / "wa_swap.json"))
    assert rc == 0
    small = tmp_path / "minimal.json"
    small.write_text(out)
    rc, out, _ = invoke(capsys, "equiv", str(data_dir / "wa_swap.json"), str(small),
                        "--max-len", "8")
    assert rc == 0 and out.strip() == "equivalent"
    rc, out, _ = invoke(capsys, "equiv", str(data_dir / "wa_swap.json"),
                        str(data_dir / "wa_rational.json"))
    assert rc == 1  # different alphabets and semirings: data error


def test_trace_eval_and_closure(capsys, data_dir):
    rc, out, _ = invoke(capsys, "trace-eval", str(data_dir / "dkm_ends_with_a.json"),
                        "-f", "<a>p")
    assert rc == 0 and out.split() == ["x", "y", "z"]
    rc, out, _ = invoke(capsys, "trace-eval", str(data_dir / "dkm_ends_with_a.json"),
                        "-f", "p")
    assert rc == 0 and out.split() == ["y", "z"]
    rc, out, _ = invoke(capsys, "closure", str(data_dir / "dkm_ends_with_a.json"))
    assert rc == 0
    assert out.splitlines() == ["{}", "{y,z}", "{x,y,z}"]


def test_stats(capsys, data_dir):
    rc, out, _ = invoke(capsys, "stats", str(data_dir / "ends_with_a.json"))
    assert rc == 0 and "states=3" in out and "reachable=3" in out


def test_usage_error_exit_code(capsys):
    assert main(["minimize"]) == 2
    assert main(["no-such-verb"]) == 2


def test_guard_exit_code(capsys, data_dir):
    rc, _, err = invoke(capsys, "minimize", str(data_dir / "ends_with_a.json"),
                        "--max-states", "2")
    assert rc == 3
    assert "max-states" in err


def test_data_error_exit_code(capsys, data_dir):
    rc, _, err = invoke(capsys, "stats", str(data_dir / "bad_wa_dims.json"))
    assert rc == 1 and "transitions.a" in err
    rc, _, err = invoke(capsys, "run", str(data_dir / "ends_with_a.json"), "-w", "q")
    assert rc == 1


def test_max_states_env(monkeypatch, capsys, data_dir):
    monkeypatch.setenv("DUALMIN_MAX_STATES", "2")
    rc, _, _ = invoke(capsys, "minimize", str(data_dir / "ends_with_a.json"))
    assert rc == 3


def test_semiring_override(capsys, data_dir):
    rc, out, _ = invoke(capsys, "run", str(data_dir / "wa_swap.json"),
                        "-w", "a", "--semiring", "rational")
    assert rc == 0 and out.strip() == "1/1"


def test_selftest_small(capsys):
    rc, out, _ = invoke(capsys, "selftest", "--seed", "3", "--cases", "4")
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8 and all(line.startswith("PASS") for line in lines)


def test_parse_trace_formula():
    f = parse_trace_formula("<a><b>p")
    assert f.word == ("a", "b") and f.obs == "p"
    assert parse_trace_formula("p").word == ()
    with pytest.raises(ValueError):
        parse_trace_formula("<a>")
