"""Verification reports shared by the operator and relation suites."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"


@dataclass(frozen=True, order=True)
class Counterexample:
    relation: str
    witness: tuple
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {"relation": self.relation, "witness": list(self.witness), "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    check: str
    params: dict
    status: str = VACUOUS
    relations_checked: int = 0
    counterexamples: list = field(default_factory=list)
    elapsed: float = 0.0

    def record(self, relation: str, counterexample: Counterexample | None = None):
        self.relations_checked += 1
        if counterexample is not None:
            self.counterexamples.append(counterexample)

    def finish(self) -> "VerificationReport":
        self.counterexamples.sort(key=lambda c: (c.relation, c.witness))
        if self.counterexamples:
            self.status = FAIL
        elif self.relations_checked > 0:
            self.status = PASS
        else:
            self.status = VACUOUS
        return self

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self, timing: bool = True) -> dict:
        return {
            "check": self.check,
            "n": int(self.params.get("n", 0)),
            "status": self.status,
            "relations_checked": self.relations_checked,
            "counterexamples": [c.to_json() for c in self.counterexamples],
            "elapsed_ms": int(round(self.elapsed * 1000)) if timing else 0,
        }

    def to_text(self, timing: bool = True) -> str:
        extra = "".join(f" {k}={v}" for k, v in sorted(self.params.items()) if k != "n")
        head = (
            f"{self.check} n={self.params.get('n')}{extra}: {self.status.upper()} "
            f"({self.relations_checked} relations"
        )
        head += f", {int(round(self.elapsed * 1000))} ms)" if timing else ")"
        lines = [head]
        for c in self.counterexamples:
            lines.append(f"  {c.relation} at {list(c.witness)}: lhs={c.lhs} rhs={c.rhs}")
        return "\n".join(lines)


@contextmanager
def timed(report: VerificationReport):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed = time.perf_counter() - start
        report.finish()
