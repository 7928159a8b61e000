"""Deterministic check reports shared by the verification suites and the CLI.

Reports serialize to JSON with sorted keys and no volatile fields, so the
same run configuration always produces byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json_obj(self):
        return {"name": self.name, "passed": self.passed, "details": self.details}


@dataclass
class Report:
    title: str
    config: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def add(self, name, passed, **details):
        self.checks.append(CheckResult(name, bool(passed), details))

    def extend(self, other):
        self.checks.extend(other.checks)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def summary(self):
        good = sum(1 for c in self.checks if c.passed)
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {good}/{len(self.checks)} checks: {self.title}"

    def to_json_obj(self):
        return {
            "title": self.title,
            "config": self.config,
            "passed": self.passed,
            "checks": [c.to_json_obj() for c in sorted(self.checks, key=lambda c: c.name)],
        }

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    def render_text(self):
        lines = [self.summary()]
        for c in sorted(self.checks, key=lambda c: c.name):
            mark = "ok " if c.passed else "FAIL"
            detail = ""
            if not c.passed and c.details:
                detail = "  " + json.dumps(c.details, sort_keys=True, default=str)
            lines.append(f"  [{mark}] {c.name}{detail}")
        return "\n".join(lines)
