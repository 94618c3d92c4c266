"""JSON serialization for every automaton kind and the shared file schema.

A file is one JSON object with a "type" of dfa, moore, nfa, weighted, afa or
dkm, an "alphabet", a list of "states" (names fix the index order), and
type-specific fields.  Parse errors carry the path of the offending field.
Emission is canonical: keys are sorted and states are listed in index order,
so parse(emit(x)) reproduces x exactly.

Number forms: rationals are "p/q" strings, integers are JSON numbers within
the 53-bit safe range and strings beyond it, tropical infinity is "inf".
"""

from __future__ import annotations

import json

from .alternating import AlternatingAutomaton, BoolFun, compile_formula
from .automata import DFA_OUTPUTS, MooreAutomaton, Nfa
from .dkm import Dkm
from .errors import FormatError
from .semiring import INT, RATIONAL, TROPICAL, TROPICAL_INF, semiring_by_name
from .weighted import RestrictedWA, WeightedAutomaton

KNOWN_TYPES = ("dfa", "moore", "nfa", "weighted", "afa", "dkm")


def _require(doc: dict, key: str, kind, path: str):
    if key not in doc:
        raise FormatError(f"missing field {key!r}", path)
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise FormatError(f"expected {kind.__name__}, got {type(value).__name__}",
                          f"{path}.{key}" if path else key)
    return value


def _name_list(raw, path: str) -> tuple[str, ...]:
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        raise FormatError("expected a list of strings", path)
    if len(set(raw)) != len(raw):
        raise FormatError("names must be distinct", path)
    return tuple(raw)


def _state_index(name, states: dict[str, int], path: str) -> int:
    if not isinstance(name, str) or name not in states:
        raise FormatError(f"unknown state {name!r}", path)
    return states[name]


def _det_transitions(doc, alphabet, states, path="transitions"):
    raw = _require(doc, "transitions", dict, "")
    if set(raw) != set(alphabet):
        raise FormatError("letters must match the alphabet exactly", path)
    trans = {}
    for a, row in raw.items():
        if not isinstance(row, dict):
            raise FormatError("expected a state-to-state map", f"{path}.{a}")
        if set(row) != set(states):
            raise FormatError("every state needs a successor", f"{path}.{a}")
        trans[a] = tuple(_state_index(row[name], states, f"{path}.{a}.{name}")
                         for name in states)
    return trans


def parse(data: bytes | str):
    """Decode one automaton file into its typed in-memory form."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    kind = _require(doc, "type", str, "")
    if kind not in KNOWN_TYPES:
        raise FormatError(f"unknown type {kind!r} (expected one of {', '.join(KNOWN_TYPES)})",
                          "type")
    alphabet = _name_list(_require(doc, "alphabet", list, ""), "alphabet")
    names = _name_list(_require(doc, "states", list, ""), "states")
    states = {name: i for i, name in enumerate(names)}
    parser = {"dfa": _parse_dfa, "moore": _parse_moore, "nfa": _parse_nfa,
              "weighted": _parse_weighted, "afa": _parse_afa, "dkm": _parse_dkm}[kind]
    return parser(doc, alphabet, names, states)


def _parse_dfa(doc, alphabet, names, states):
    trans = _det_transitions(doc, alphabet, states)
    init = _state_index(_require(doc, "initial", str, ""), states, "initial")
    finals = [_state_index(f, states, "finals") for f in _require(doc, "finals", list, "")]
    return MooreAutomaton.dfa(len(names), alphabet, trans, init, finals, names)


def _parse_moore(doc, alphabet, names, states):
    trans = _det_transitions(doc, alphabet, states)
    init = _state_index(_require(doc, "initial", str, ""), states, "initial")
    outputs = _name_list(_require(doc, "outputs", list, ""), "outputs")
    if not outputs:
        raise FormatError("output set must be nonempty", "outputs")
    raw_out = _require(doc, "out", dict, "")
    if set(raw_out) != set(names):
        raise FormatError("every state needs an output", "out")
    out = []
    for name in names:
        label = raw_out[name]
        if label not in outputs:
            raise FormatError(f"unknown output {label!r}", f"out.{name}")
        out.append(outputs.index(label))
    return MooreAutomaton(len(names), alphabet, trans, init, tuple(out), outputs, names)


def _parse_nfa(doc, alphabet, names, states):
    raw = _require(doc, "transitions", dict, "")
    if set(raw) != set(alphabet):
        raise FormatError("letters must match the alphabet exactly", "transitions")
    trans = {}
    for a, row in raw.items():
        if not isinstance(row, dict):
            raise FormatError("expected a state-to-targets map", f"transitions.{a}")
        per_state = []
        for name in names:
            targets = row.get(name, [])
            if not isinstance(targets, list):
                raise FormatError("expected a list of targets", f"transitions.{a}.{name}")
            per_state.append(frozenset(_state_index(t, states, f"transitions.{a}.{name}")
                                       for t in targets))
        trans[a] = tuple(per_state)
    raw_init = _require(doc, "initial", list, "")
    inits = frozenset(_state_index(s, states, "initial") for s in raw_init)
    finals = frozenset(_state_index(s, states, "finals")
                       for s in _require(doc, "finals", list, ""))
    return Nfa(len(names), alphabet, trans, inits, finals, names)


def _parse_value(semiring, raw, path):
    try:
        return semiring.coerce(raw)
    except (ValueError, TypeError) as exc:
        raise FormatError(str(exc), path) from None


def _parse_weighted(doc, alphabet, names, states):
    semiring = semiring_by_name(_require(doc, "semiring", str, ""))
    n = len(names)
    raw = _require(doc, "transitions", dict, "")
    if set(raw) != set(alphabet):
        raise FormatError("letters must match the alphabet exactly", "transitions")
    mats = {}
    for a, rows in raw.items():
        if not isinstance(rows, list) or len(rows) != n \
                or any(not isinstance(r, list) or len(r) != n for r in rows):
            raise FormatError(f"matrix must be {n}x{n}", f"transitions.{a}")
        mats[a] = [[_parse_value(semiring, v, f"transitions.{a}[{y}][{x}]")
                    for x, v in enumerate(row)] for y, row in enumerate(rows)]
    raw_init = _require(doc, "initial", list, "")
    raw_final = _require(doc, "final", list, "")
    if len(raw_init) != n:
        raise FormatError(f"initial vector must have length {n}", "initial")
    if len(raw_final) != n:
        raise FormatError(f"final vector must have length {n}", "final")
    init = [_parse_value(semiring, v, f"initial[{i}]") for i, v in enumerate(raw_init)]
    final = [_parse_value(semiring, v, f"final[{i}]") for i, v in enumerate(raw_final)]
    return WeightedAutomaton.build(alphabet, semiring, mats, init, final, names)


def _parse_boolfun(raw, names, path) -> BoolFun:
    n = len(names)
    if isinstance(raw, str):
        try:
            return compile_formula(raw, names)
        except ValueError as exc:
            raise FormatError(str(exc), path) from None
    if isinstance(raw, list):
        states = {name: i for i, name in enumerate(names)}
        subsets = []
        for i, subset in enumerate(raw):
            if not isinstance(subset, list):
                raise FormatError("expected a list of state lists", f"{path}[{i}]")
            subsets.append(frozenset(_state_index(s, states, f"{path}[{i}]") for s in subset))
        return BoolFun.from_subsets(n, subsets)
    raise FormatError("expected a formula string or a list of subsets", path)


def _parse_afa(doc, alphabet, names, states):
    raw = _require(doc, "transitions", dict, "")
    if set(raw) != set(alphabet):
        raise FormatError("letters must match the alphabet exactly", "transitions")
    delta = {}
    for a, row in raw.items():
        if not isinstance(row, dict) or set(row) != set(names):
            raise FormatError("every state needs a transition condition", f"transitions.{a}")
        delta[a] = tuple(_parse_boolfun(row[name], names, f"transitions.{a}.{name}")
                         for name in names)
    iota = _parse_boolfun(_require(doc, "iota", None, ""), names, "iota")
    finals = frozenset(_state_index(s, states, "finals")
                       for s in _require(doc, "finals", list, ""))
    return AlternatingAutomaton(len(names), alphabet, delta, iota, finals, names)


def _parse_dkm(doc, alphabet, names, states):
    obs = _name_list(_require(doc, "obs", list, ""), "obs")
    raw_gamma = _require(doc, "gamma", dict, "")
    gamma = []
    for name in names:
        seen = raw_gamma.get(name, [])
        if not isinstance(seen, list):
            raise FormatError("expected a list of observations", f"gamma.{name}")
        for w in seen:
            if w not in obs:
                raise FormatError(f"unknown observation {w!r}", f"gamma.{name}")
        gamma.append(frozenset(seen))
    delta = _det_transitions(doc, alphabet, states)
    init = None
    if doc.get("initial") is not None:
        init = _state_index(doc["initial"], states, "initial")
    return Dkm(len(names), alphabet, obs, tuple(gamma), delta, init, names)


def _state_names(obj) -> tuple[str, ...]:
    if obj.state_names is not None:
        return obj.state_names
    return tuple(f"s{i}" for i in range(obj.n))


def emit_value(semiring, v):
    if semiring is RATIONAL:
        return f"{v.numerator}/{v.denominator}"
    if semiring is TROPICAL:
        return "inf" if v == TROPICAL_INF else v
    if semiring is INT and not -2**53 <= v <= 2**53:
        return str(v)
    return v


def emit(obj) -> str:
    """Canonical JSON for any supported automaton (sorted keys, index order)."""
    if isinstance(obj, RestrictedWA):
        obj = obj.automaton
    if isinstance(obj, MooreAutomaton):
        doc = _emit_moore(obj)
    elif isinstance(obj, Nfa):
        doc = _emit_nfa(obj)
    elif isinstance(obj, WeightedAutomaton):
        doc = _emit_weighted(obj)
    elif isinstance(obj, AlternatingAutomaton):
        doc = _emit_afa(obj)
    elif isinstance(obj, Dkm):
        doc = _emit_dkm(obj)
    else:
        raise TypeError(f"cannot emit {type(obj).__name__}")
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _emit_moore(m: MooreAutomaton) -> dict:
    names = _state_names(m)
    trans = {a: {names[s]: names[m.trans[a][s]] for s in range(m.n)} for a in m.alphabet}
    if m.outputs == DFA_OUTPUTS:
        return {"type": "dfa", "alphabet": list(m.alphabet), "states": list(names),
                "initial": names[m.init], "transitions": trans,
                "finals": [names[s] for s in range(m.n) if m.out[s] == 1]}
    return {"type": "moore", "alphabet": list(m.alphabet), "states": list(names),
            "initial": names[m.init], "transitions": trans,
            "outputs": list(m.outputs),
            "out": {names[s]: m.outputs[m.out[s]] for s in range(m.n)}}


def _emit_nfa(n: Nfa) -> dict:
    names = _state_names(n)
    trans = {a: {names[s]: sorted(names[t] for t in n.trans[a][s])
                 for s in range(n.n) if n.trans[a][s]}
             for a in n.alphabet}
    return {"type": "nfa", "alphabet": list(n.alphabet), "states": list(names),
            "initial": sorted(names[s] for s in n.inits), "transitions": trans,
            "finals": sorted(names[s] for s in n.finals)}


def _emit_weighted(w: WeightedAutomaton) -> dict:
    names = _state_names(w)
    return {"type": "weighted", "semiring": w.semiring.name,
            "alphabet": list(w.alphabet), "states": list(names),
            "initial": [emit_value(w.semiring, v) for v in w.init],
            "final": [emit_value(w.semiring, v) for v in w.final],
            "transitions": {a: [[emit_value(w.semiring, v) for v in row]
                                for row in w.mats[a].entries]
                            for a in w.alphabet}}


def _emit_boolfun(f: BoolFun, names) -> list:
    return sorted(([names[s] for s in sorted(subset)] for subset in f.sats),
                  key=lambda xs: (len(xs), xs))


def _emit_afa(a: AlternatingAutomaton) -> dict:
    names = _state_names(a)
    return {"type": "afa", "alphabet": list(a.alphabet), "states": list(names),
            "finals": sorted(names[s] for s in a.finals),
            "iota": _emit_boolfun(a.iota, names),
            "transitions": {letter: {names[s]: _emit_boolfun(a.delta[letter][s], names)
                                     for s in range(a.n)}
                            for letter in a.alphabet}}


def _emit_dkm(k: Dkm) -> dict:
    names = _state_names(k)
    doc = {"type": "dkm", "alphabet": list(k.alphabet), "states": list(names),
           "obs": list(k.obs),
           "gamma": {names[s]: sorted(k.gamma[s]) for s in range(k.n)},
           "transitions": {a: {names[s]: names[k.delta[a][s]] for s in range(k.n)}
                           for a in k.alphabet}}
    if k.init is not None:
        doc["initial"] = names[k.init]
    return doc
