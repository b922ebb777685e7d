"""Structured pass/fail reports shared by the verification routines and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Site:
    """One verified claim, with a witness when it fails."""

    name: str
    passed: bool
    detail: str = ""
    witness: Any = None

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail,
                "witness": self.witness}


@dataclass
class Report:
    title: str
    sites: list[Site] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.sites)

    def add(self, name: str, passed: bool, detail: str = "", witness: Any = None) -> Site:
        site = Site(name, bool(passed), detail, witness)
        self.sites.append(site)
        return site

    def site(self, name: str) -> Site:
        for s in self.sites:
            if s.name == name:
                return s
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "sites": [s.to_dict() for s in self.sites], "data": self.data}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def format_text(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for k in sorted(self.data):
            lines.append(f"  {k}: {self.data[k]}")
        for s in self.sites:
            line = f"  [{'pass' if s.passed else 'FAIL'}] {s.name}"
            if s.detail:
                line += f": {s.detail}"
            lines.append(line)
            if not s.passed and s.witness is not None:
                lines.append(f"         witness: {json.dumps(s.witness, sort_keys=True)}")
        return "\n".join(lines)
