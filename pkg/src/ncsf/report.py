"""Verification reports shared by the checkers and the CLI."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
DISCREPANCY = "discrepancy"


@dataclass
class Report:
    suite: str
    status: str = PASS
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    checked: int = 0
    seconds: float = 0.0
    data: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def record(self, identity: str, lhs, rhs, ok: bool, *, discrepancy: bool = False, limit: int = 20):
        """Count one comparison; failing ones become witnesses (at most ``limit`` kept)."""
        self.checked += 1
        if ok:
            return
        if discrepancy:
            if self.status == PASS:
                self.status = DISCREPANCY
        else:
            self.status = FAIL
        if len(self.witnesses) < limit:
            self.witnesses.append({"identity": identity, "lhs": str(lhs), "rhs": str(rhs)})

    def fail(self, identity: str, lhs, rhs):
        self.record(identity, lhs, rhs, False)

    def note(self, text: str):
        self.notes.append(text)

    def merge(self, other: "Report"):
        self.checked += other.checked
        self.witnesses.extend(other.witnesses)
        self.notes.extend(other.notes)
        if other.status == FAIL or (other.status == DISCREPANCY and self.status == PASS):
            self.status = other.status

    @contextmanager
    def timed(self):
        start = time.perf_counter()
        try:
            yield self
        finally:
            self.seconds += time.perf_counter() - start

    def to_json(self, with_timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "status": self.status,
            "checked": self.checked,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }
        if self.data:
            out["data"] = self.data
        if with_timing:
            out["seconds"] = round(self.seconds, 3)
        return out

    def __str__(self):
        head = f"[{self.status.upper()}] {self.suite} ({self.checked} checks)"
        lines = [head]
        lines += [f"  witness: {w['identity']}: {w['lhs']} != {w['rhs']}" for w in self.witnesses]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)
