"""Check reports: verdict plus the exhaustive list of failing witnesses.

Every predicate in this package returns a CheckReport rather than a bare
boolean, so that a failing check always carries the basis tuple and the
exact defect that violated the identity being tested.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .linalg import Matrix, Vector


@dataclass(frozen=True)
class Witness:
    """One violated instance of a checked identity.

    condition: short label of the identity that failed.
    indices:   basis indices the identity was instantiated at.
    defect:    lhs - rhs, exactly; zero would mean no violation.
    """

    condition: str
    indices: tuple[int, ...]
    defect: Union[Vector, Matrix]

    def to_json(self):
        return {
            "condition": self.condition,
            "indices": list(self.indices),
            "defect": self.defect.to_json(),
        }


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    witnesses: tuple[Witness, ...] = field(default_factory=tuple)
    checked: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def merge(self, other: "CheckReport", checked: str = "") -> "CheckReport":
        return CheckReport(
            ok=self.ok and other.ok,
            witnesses=self.witnesses + other.witnesses,
            checked=checked or self.checked or other.checked,
        )

    def to_json(self):
        return {
            "verdict": "pass" if self.ok else "fail",
            "checked": self.checked,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def report_from_witnesses(witnesses, checked: str = "") -> CheckReport:
    ws = tuple(witnesses)
    return CheckReport(ok=not ws, witnesses=ws, checked=checked)
