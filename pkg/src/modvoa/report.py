"""Verification reports shared by every verify_* routine and the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS = "PASS"
FAIL = "FAIL"


@dataclass
class Check:
    name: str
    params: dict
    status: str
    witness: Any = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "params": self.params, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Check":
        return cls(data["name"], data["params"], data["status"], data.get("witness"))


@dataclass
class Report:
    suite: str
    params: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, witness: Any = None, **params) -> Check:
        check = Check(name, _jsonable(params), PASS if ok else FAIL,
                      None if ok and witness is None else _jsonable(witness))
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if c.status != PASS]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {"total": len(self.checks),
                "passed": len(self.checks) - len(self.failures),
                "failed": len(self.failures)}

    def to_dict(self) -> dict:
        return {"suite": self.suite, "params": _jsonable(self.params),
                "checks": [c.to_dict() for c in self.checks],
                "summary": self.summary()}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(data["suite"], data["params"],
                   [Check.from_dict(c) for c in data["checks"]])

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}  params: {json.dumps(self.params, ensure_ascii=False)}"]
        for c in self.checks:
            line = f"{c.status}  {c.name}  {json.dumps(c.params, ensure_ascii=False)}"
            if c.witness is not None:
                line += f"  witness: {json.dumps(c.witness, ensure_ascii=False)}"
            lines.append(line)
        s = self.summary()
        lines.append(f"summary: {s['passed']}/{s['total']} passed, {s['failed']} failed")
        return "\n".join(lines)


def _jsonable(obj: Any) -> Any:
    """Coerce nested values to plain JSON types (tuples become lists, keys become strings)."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return int(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "to_json_value"):
        return obj.to_json_value()
    return str(obj)
