"""Tri-state verdicts carrying the rule that decided them."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class State(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    OPEN = "open"


@dataclass(frozen=True)
class Verdict:
    state: State
    rule: str
    citation: str
    witness: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.rule:
            raise ValueError("every verdict needs a rule id")
        if self.state is State.OPEN and not self.citation:
            raise ValueError("an open verdict must say why it is open")

    @property
    def holds(self) -> bool:
        return self.state is State.HOLDS

    @property
    def fails(self) -> bool:
        return self.state is State.FAILS

    @property
    def is_open(self) -> bool:
        return self.state is State.OPEN

    def to_json(self) -> dict[str, Any]:
        return {
            "state": self.state.value,
            "rule": self.rule,
            "citation": self.citation,
            "witness": dict(self.witness),
        }


def holds(rule: str, citation: str, **witness: Any) -> Verdict:
    return Verdict(State.HOLDS, rule, citation, witness)


def fails(rule: str, citation: str, **witness: Any) -> Verdict:
    return Verdict(State.FAILS, rule, citation, witness)


def open_(rule: str, citation: str, **witness: Any) -> Verdict:
    return Verdict(State.OPEN, rule, citation, witness)
