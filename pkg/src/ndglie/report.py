"""Verification reports: one entry per checked claim."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, List

PASS, FAIL, BUDGET = "pass", "fail", "budget-exceeded"


@dataclass
class Entry:
    id: str
    anchor: str
    expected: Any
    computed: Any
    status: str


@dataclass
class VerificationReport:
    entries: List[Entry] = field(default_factory=list)

    def add(self, id: str, anchor: str, expected: Any, computed: Any, ok=None) -> Entry:
        """Record a check; ``ok`` None means compare expected == computed."""
        if ok is None:
            ok = expected == computed
        status = BUDGET if ok == BUDGET else (PASS if ok else FAIL)
        e = Entry(id, anchor, _plain(expected), _plain(computed), status)
        self.entries.append(e)
        return e

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.entries.extend(other.entries)
        return self

    @property
    def passed(self) -> bool:
        return all(e.status == PASS for e in self.entries)

    @property
    def failures(self) -> List[Entry]:
        return [e for e in self.entries if e.status == FAIL]

    @property
    def budget_exceeded(self) -> List[Entry]:
        return [e for e in self.entries if e.status == BUDGET]

    def exit_code(self) -> int:
        if self.failures:
            return 1
        if self.budget_exceeded:
            return 2
        return 0

    def sorted(self) -> "VerificationReport":
        return VerificationReport(sorted(self.entries, key=lambda e: e.id))

    def to_json(self) -> str:
        return json.dumps([asdict(e) for e in self.entries], indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            lines.append(f"{e.status.upper():<15} {e.id:<48} expected={e.expected} computed={e.computed}")
            lines.append(f"{'':<15} {e.anchor}")
        n = len(self.entries)
        lines.append(f"{n - len(self.failures) - len(self.budget_exceeded)}/{n} pass, "
                     f"{len(self.failures)} fail, {len(self.budget_exceeded)} budget-exceeded")
        return "\n".join(lines)


def _plain(x):
    """JSON-friendly rendering of tuples, fractions and nested lists."""
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return str(x)
