"""Bundled example machines from the running example."""

from dataclasses import dataclass
from importlib import resources

from ..io import parse_machine
from ..machine import Machine

DESCRIPTIONS = {
    "fig5": "FSM realizing {aaab(aab)^w, aab(aab)^w, ab(aab)^w, b(aab)^w}",
    "q1": "tFSM of the strongest 1-complete approximation (reduces to an FSM)",
    "q2": "tFSM of the strongest 2-complete approximation; aa self-loop guarded at t=2",
    "fig6_left": "FSM of the strongest asynchronous 1-complete approximation",
    "fig6_right": "FSM of the strongest asynchronous 2-complete approximation",
    "example5_p": "FSM with behavior {ab^w} (time variant)",
    "example5_q": "tFSM with behavior {ab^w, b^w}: a allowed only at t=0 (time invariant)",
}

NAMES = tuple(DESCRIPTIONS)


@dataclass(frozen=True)
class Fixture:
    name: str
    machine: Machine
    description: str


def fixture_bytes(name):
    if name not in DESCRIPTIONS:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(NAMES)}")
    return resources.files(__name__).joinpath(f"{name}.json").read_bytes()


def load_fixture(name):
    return Fixture(name, parse_machine(fixture_bytes(name)), DESCRIPTIONS[name])


def load(name):
    """Shortcut returning just the machine."""
    return load_fixture(name).machine
