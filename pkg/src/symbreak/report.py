"""JSON reports emitted by the command-line tool, one object per input graph."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from importlib import resources
from typing import Any

SCHEMA_VERSION = 1


class Report:
    def __init__(self, command: str, graph6: str):
        self.command = command
        self.graph6 = graph6
        self.results: dict[str, Any] = {}
        self.witnesses: dict[str, Any] = {}
        self.verdicts: list[dict[str, Any]] = []
        self.timing: dict[str, float] = {}

    def verdict(self, name: str, ok: bool, **details) -> None:
        if any(v["name"] == name for v in self.verdicts):
            raise ValueError(f"duplicate verdict {name!r}")
        self.verdicts.append({"name": name, "ok": bool(ok), "details": details})

    @contextmanager
    def timed(self, phase: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timing[phase] = self.timing.get(phase, 0.0) + time.perf_counter() - t0

    @property
    def ok(self) -> bool:
        return all(v["ok"] for v in self.verdicts)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "input": {"graph6": self.graph6},
            "results": self.results,
            "witnesses": self.witnesses,
            "verdicts": self.verdicts,
            "timing": self.timing,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def load_schema() -> dict:
    text = resources.files("symbreak").joinpath("report.schema.json").read_text()
    return json.loads(text)
