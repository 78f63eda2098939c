"""Verification reports printed by the command-line front end."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Witness:
    key: str
    lhs: str
    rhs: str


@dataclass
class VerifyReport:
    check: str
    target: str
    mode: str
    passed: bool
    witness: Witness | None = None
    wall_time: float | None = None
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("failing reports must carry a witness")

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_text(self, timing: bool = False) -> str:
        label = self.mode if self.mode == "exact" else f"{self.mode} (probabilistic)"
        lines = [
            f"check: {self.check}",
            f"target: {self.target}",
            f"mode: {label}",
            f"verdict: {self.verdict}",
        ]
        if self.witness is not None:
            lines += [
                f"witness: {self.witness.key}",
                f"  lhs: {self.witness.lhs}",
                f"  rhs: {self.witness.rhs}",
            ]
        lines += [f"note: {n}" for n in self.notes]
        if timing and self.wall_time is not None:
            lines.append(f"wall_time: {self.wall_time:.3f}s")
        return "\n".join(lines) + "\n"

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "check": self.check,
            "target": self.target,
            "mode": self.mode,
            "probabilistic": self.mode != "exact",
            "verdict": self.verdict,
            "witness": None if self.witness is None else vars(self.witness).copy(),
            "notes": list(self.notes),
        }
        if timing:
            d["wall_time"] = self.wall_time
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2) + "\n"
