"""Pass/fail bookkeeping shared by the verification reports."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PropertyCheck:
    passed: bool
    counterexample: str = ""

    @staticmethod
    def ok() -> "PropertyCheck":
        return PropertyCheck(True, "")

    @staticmethod
    def fail(counterexample: str) -> "PropertyCheck":
        return PropertyCheck(False, counterexample)

    def as_json(self) -> dict:
        return {"passed": self.passed, "counterexample": self.counterexample}
