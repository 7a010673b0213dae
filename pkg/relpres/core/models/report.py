"""
Report models for the relpres toolkit.

Audits never raise on bad diagrams; they collect findings and values into a
Report that the CLI serializes and maps to an exit code.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .enums import Severity


@dataclass(frozen=True)
class Finding:
    """
    One audit finding.

    Attributes:
        code: Stable identifier such as ``IllegalFace``
        severity: Error or warning
        message: Human readable explanation
        location: Optional object reference, e.g. ``face 3``
    """
    code: str
    severity: Severity
    message: str
    location: Optional[str] = None

    @classmethod
    def error(cls, code: str, message: str, location: Optional[str] = None) -> "Finding":
        return cls(code, Severity.ERROR, message, location)

    @classmethod
    def warning(cls, code: str, message: str, location: Optional[str] = None) -> "Finding":
        return cls(code, Severity.WARNING, message, location)

    def to_dict(self) -> dict:
        data = {"code": self.code, "severity": self.severity.value, "message": self.message}
        if self.location is not None:
            data["location"] = self.location
        return data

    def __str__(self) -> str:
        """User-friendly representation."""
        where = f" ({self.location})" if self.location else ""
        return f"{self.code}{where}: {self.message}"


@dataclass
class Report:
    """
    Findings plus named values of one audit step.

    Attributes:
        name: Step name used as the JSON key
        findings: Collected findings
        values: JSON-ready values (verdicts, inequality sides, tables)
    """
    name: str
    findings: List[Finding] = field(default_factory=list)
    values: Dict[str, Any] = field(default_factory=dict)

    def add(self, finding: Finding) -> None:
        self.findings.append(finding)

    def extend(self, findings: List[Finding]) -> None:
        self.findings.extend(findings)

    @property
    def errors(self) -> List[Finding]:
        return [f for f in self.findings if f.severity == Severity.ERROR]

    @property
    def warnings(self) -> List[Finding]:
        return [f for f in self.findings if f.severity == Severity.WARNING]

    @property
    def ok(self) -> bool:
        """True when no finding has error severity."""
        return not self.errors

    def codes(self) -> List[str]:
        return [f.code for f in self.findings]

    def to_dict(self) -> dict:
        data = dict(self.values)
        data["ok"] = self.ok
        data["findings"] = [f.to_dict() for f in self.findings]
        return data
