from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

STATUSES = ("verified", "violated", "evidence-only")


@dataclass
class VerificationReport:
    """Outcome of one identity check or inequality sweep.

    ``first_violation`` holds ``L``, ``n``, ``lhs`` and ``rhs`` (the two
    compared values as strings) of the first disagreement found.
    ``elapsed`` is wall-clock seconds and is excluded from equality.
    """

    target: str
    params: dict[str, Any]
    status: str
    first_violation: Optional[dict[str, Any]] = None
    details: dict[str, Any] = field(default_factory=dict)
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != "violated"

    def to_dict(self) -> dict[str, Any]:
        return {
            "target": self.target,
            "params": self.params,
            "status": self.status,
            "first_violation": self.first_violation,
            "details": self.details,
            "elapsed": round(self.elapsed, 6),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def summary(self) -> str:
        line = f"{self.target:<10} {self.status:<13} {json.dumps(self.params, sort_keys=True)}"
        if self.first_violation:
            line += f"  first violation: {self.first_violation}"
        return line
