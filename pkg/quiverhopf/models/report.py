# quiverhopf/models/report.py
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from quiverhopf import config

SCHEMA_VERSION = 1


@dataclass
class CheckResult:
    """Outcome of one verified identity."""

    name: str
    passed: bool
    message: str = ""
    witness: Optional[Any] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {"name": self.name, "passed": self.passed, "message": self.message}
        if self.witness is not None:
            data["witness"] = self.witness if isinstance(self.witness, (int, bool)) else str(self.witness)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckResult":
        return cls(name=data["name"], passed=data["passed"],
                   message=data.get("message", ""), witness=data.get("witness"))


@dataclass
class Report:
    """Result of a command: per-check status, free-form results and optional timing."""

    command: str
    checks: List[CheckResult] = field(default_factory=list)
    results: Dict[str, Any] = field(default_factory=dict)
    timing: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, passed: bool, message: str = "", witness: Any = None) -> CheckResult:
        check = CheckResult(name=name, passed=bool(passed), message=message, witness=witness)
        self.checks.append(check)
        return check

    def extend(self, other: "Report", prefix: str = "") -> None:
        """Merges the checks of another report, optionally prefixing their names."""
        for check in other.checks:
            self.checks.append(CheckResult(name=f"{prefix}{check.name}", passed=check.passed,
                                           message=check.message, witness=check.witness))

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def check(self, name: str) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.name == name), None)

    def to_dict(self, include_timing: Optional[bool] = None) -> Dict[str, Any]:
        """Versioned machine-readable form; timing only when enabled so output stays stable."""
        include_timing = config.REPORT_TIMING if include_timing is None else include_timing
        data = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
            "results": self.results,
        }
        if include_timing and self.timing is not None:
            data["timing"] = round(self.timing, 6)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        return cls(
            command=data["command"],
            checks=[CheckResult.from_dict(c) for c in data.get("checks", [])],
            results=data.get("results", {}),
            timing=data.get("timing"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, default=str)

    def to_text(self) -> str:
        lines = [f"== {self.command} =="]
        for key in sorted(self.results):
            value = self.results[key]
            if isinstance(value, list):
                lines.append(f"{key}:")
                lines.extend(f"  {item}" for item in value)
            else:
                lines.append(f"{key}: {value}")
        for check in self.checks:
            status = "pass" if check.passed else "FAIL"
            line = f"{check.name}: {status}"
            if check.message:
                line += f" ({check.message})"
            lines.append(line)
            if not check.passed and check.witness is not None:
                lines.append(f"  witness: {check.witness}")
        if self.checks:
            lines.append(f"result: {'pass' if self.passed else 'FAIL'}")
        if config.REPORT_TIMING and self.timing is not None:
            lines.append(f"time: {self.timing:.3f}s")
        return "\n".join(lines)
