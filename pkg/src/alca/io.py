"""Machine file format, canonical serialization and DOT export.

A machine file is a JSON object::

    {"kind": "fsm" | "tfsm",
     "alphabet": [...], "states": [...], "initial": [...],
     "transitions": [{"from": x, "symbol": s, "to": y,
                      "times": {"explicit": [...], "from": n, "period": p, "residues": [...]}}]}

``times`` is optional and means all times when absent; it is forbidden when
``kind`` is ``"fsm"``. The empty-word state is spelled ``lambda`` in files.
"""

import json

from .errors import ParseError, SchemaError
from .machine import LAMBDA, Machine
from .timeset import TimeSet

FILE_LAMBDA = "lambda"

_TOP_KEYS = {"kind", "alphabet", "states", "initial", "transitions"}
_TRANSITION_KEYS = {"from", "symbol", "to", "times"}
_TIMES_KEYS = {"explicit", "from", "period", "residues"}


def _state_in(name):
    return LAMBDA if name == FILE_LAMBDA else name


def _state_out(name):
    return FILE_LAMBDA if name == LAMBDA else name


def _str_list(doc, key):
    value = doc.get(key)
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise SchemaError(f"{key!r} must be a list of strings")
    return value


def _nat(value, what):
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise SchemaError(f"{what} must be a natural number, got {value!r}")
    return value


def _nat_list(value, what):
    if not isinstance(value, list):
        raise SchemaError(f"{what} must be a list of natural numbers")
    return [_nat(v, what) for v in value]


def timeset_from_json(obj):
    if not isinstance(obj, dict):
        raise SchemaError("'times' must be an object")
    extra = set(obj) - _TIMES_KEYS
    if extra:
        raise SchemaError(f"unknown keys in 'times': {sorted(extra)}")
    period = _nat(obj.get("period", 1), "'period'")
    if period == 0:
        raise SchemaError("'period' must be positive")
    return TimeSet.make(
        explicit=_nat_list(obj.get("explicit", []), "'explicit'"),
        start=_nat(obj.get("from", 0), "'from'"),
        period=period,
        residues=_nat_list(obj.get("residues", []), "'residues'"),
    )


def timeset_to_json(ts):
    return {
        "explicit": sorted(ts.explicit),
        "from": ts.start,
        "period": ts.period,
        "residues": sorted(ts.residues),
    }


def machine_from_json(doc):
    if not isinstance(doc, dict):
        raise SchemaError("machine document must be a JSON object")
    missing = _TOP_KEYS - set(doc)
    if missing:
        raise SchemaError(f"missing keys: {sorted(missing)}")
    extra = set(doc) - _TOP_KEYS
    if extra:
        raise SchemaError(f"unknown keys: {sorted(extra)}")
    kind = doc["kind"]
    if kind not in ("fsm", "tfsm"):
        raise SchemaError(f"'kind' must be 'fsm' or 'tfsm', got {kind!r}")
    alphabet = _str_list(doc, "alphabet")
    states = [_state_in(x) for x in _str_list(doc, "states")]
    initial = [_state_in(x) for x in _str_list(doc, "initial")]
    if not isinstance(doc["transitions"], list):
        raise SchemaError("'transitions' must be a list")
    transitions = []
    for i, tr in enumerate(doc["transitions"]):
        if not isinstance(tr, dict):
            raise SchemaError(f"transition {i} must be an object")
        extra = set(tr) - _TRANSITION_KEYS
        if extra:
            raise SchemaError(f"unknown keys in transition {i}: {sorted(extra)}")
        for key in ("from", "symbol", "to"):
            if not isinstance(tr.get(key), str):
                raise SchemaError(f"transition {i} needs a string {key!r}")
        guard = None
        if "times" in tr:
            if kind == "fsm":
                raise SchemaError(f"transition {i} has 'times' but kind is 'fsm'")
            guard = timeset_from_json(tr["times"])
        transitions.append((_state_in(tr["from"]), tr["symbol"], _state_in(tr["to"]), guard))
    return Machine.create(alphabet, states, initial, transitions)


def machine_to_json(m):
    transitions = []
    for tr in m.transitions:
        item = {"from": _state_out(tr.src), "symbol": tr.symbol, "to": _state_out(tr.dst)}
        if not tr.guard.is_all:
            item["times"] = timeset_to_json(tr.guard)
        transitions.append(item)
    return {
        "kind": m.kind,
        "alphabet": list(m.alphabet),
        "states": [_state_out(x) for x in m.states],
        "initial": [_state_out(x) for x in m.initial],
        "transitions": transitions,
    }


def parse_machine(text):
    """Parse and validate a machine document given as bytes or str."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return machine_from_json(doc)


def serialize_machine(m):
    return (json.dumps(machine_to_json(m), indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def read_machine(path):
    with open(path, "rb") as f:
        return parse_machine(f.read())


def write_machine(m, path):
    with open(path, "wb") as f:
        f.write(serialize_machine(m))


def _quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(m):
    """Graphviz rendering; guarded edges are labelled ``symbol [times]``."""
    lines = ["digraph machine {", "  rankdir=LR;", "  node [shape=circle];"]
    for x in m.states:
        lines.append(f"  {_quote(x)};")
    if m.initial:
        lines.append('  "__start" [shape=point, label=""];')
        for x in m.initial:
            lines.append(f'  "__start" -> {_quote(x)};')
    for tr in m.transitions:
        label = tr.symbol if tr.guard.is_all else f"{tr.symbol} [{tr.guard}]"
        lines.append(f"  {_quote(tr.src)} -> {_quote(tr.dst)} [label={_quote(label)}];")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")
