"""Verification records and their JSON-ready form."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

import numpy as np


def to_jsonable(value: Any) -> Any:
    """Convert report values to JSON types.

    Fractions become ``"p/q"`` strings (integers stay ``"p"``), sets become
    sorted lists, numpy scalars and arrays become Python numbers and lists.
    """
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, np.ndarray):
        return [to_jsonable(x) for x in value.tolist()]
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(x) for x in value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(x) for x in value]
    return value


@dataclass
class CheckRecord:
    """Outcome of one statement checked on one tree.

    Attributes
    ----------
    theorem : str
        Identifier such as ``"multiplicity"`` or ``"sign_transversal"``.
    passed : bool
        Verdict.
    witnesses : dict
        What was used: covers, eigenvector indices, counts.
    slack : dict[str, float]
        Numeric margins, e.g. the largest ``|f(c)|`` over cover vertices.
    tolerances : dict[str, float]
        Thresholds the verdict depended on.
    flags : list[str]
        Conditions a reader should know about (truncation, ambiguity).
    notes : list[str]
        Free-text details of failures.

    """

    theorem: str
    passed: bool = True
    witnesses: dict[str, Any] = field(default_factory=dict)
    slack: dict[str, float] = field(default_factory=dict)
    tolerances: dict[str, float] = field(default_factory=dict)
    flags: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def fail(self, note: str) -> None:
        self.passed = False
        self.notes.append(note)

    def require(self, condition: bool, note: str) -> None:
        """Record ``note`` as a failure unless ``condition`` holds."""
        if not condition:
            self.fail(note)

    def to_dict(self) -> dict:
        return to_jsonable(
            {
                "theorem": self.theorem,
                "passed": self.passed,
                "witnesses": self.witnesses,
                "slack": self.slack,
                "tolerances": self.tolerances,
                "flags": self.flags,
                "notes": self.notes,
            }
        )


@dataclass
class VerificationReport:
    """All check records for one tree."""

    n: int
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def flagged(self) -> list[CheckRecord]:
        return [r for r in self.records if r.flags]

    def record(self, theorem: str) -> Optional[CheckRecord]:
        """The record for ``theorem``, or None if it was not checked."""
        return next((r for r in self.records if r.theorem == theorem), None)

    def to_dict(self) -> dict:
        return {"n": self.n, "passed": self.passed, "records": [r.to_dict() for r in self.records]}
