"""Per-equation verdicts collected into a report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .gvec import Mor


@dataclass(frozen=True)
class Witness:
    """First coordinate (canonical bases) where two sides of an equation differ."""

    row: int
    col: int
    lhs: object
    rhs: object

    def to_json(self, fmt: Callable = str) -> dict:
        return {"row": self.row, "col": self.col, "lhs": fmt(self.lhs), "rhs": fmt(self.rhs)}


@dataclass(frozen=True)
class CheckEntry:
    label: str
    passed: bool
    witness: Witness | None = None
    note: str = ""


@dataclass
class CheckReport:
    """Ordered verdicts keyed by unique equation labels.

    A report passes when every entry passes; an empty report passes.
    """

    entries: list[CheckEntry] = field(default_factory=list)

    def add(self, entry: CheckEntry) -> CheckEntry:
        if entry.label in self.labels:
            raise ValueError(f"duplicate label {entry.label!r} in report")
        self.entries.append(entry)
        return entry

    def record(self, label: str, passed: bool, note: str = "") -> CheckEntry:
        return self.add(CheckEntry(label, bool(passed), None, note))

    def equation(self, label: str, lhs: Mor, rhs: Mor) -> CheckEntry:
        """Compare two morphisms and record the verdict with a witness."""
        diff = lhs.first_difference(rhs)
        if diff is None:
            return self.add(CheckEntry(label, True))
        return self.add(CheckEntry(label, False, Witness(*diff)))

    def extend(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for e in other.entries:
            self.add(CheckEntry(prefix + e.label, e.passed, e.witness, e.note))
        return self

    @property
    def labels(self) -> list[str]:
        return [e.label for e in self.entries]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def __bool__(self) -> bool:
        return self.passed

    def __getitem__(self, label: str) -> CheckEntry:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)

    def __contains__(self, label: str) -> bool:
        return any(e.label == label for e in self.entries)

    def verdict(self, label: str) -> bool:
        return self[label].passed

    @property
    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed]

    @property
    def first_failure(self) -> CheckEntry | None:
        for e in self.entries:
            if not e.passed:
                return e
        return None

    def subset(self, labels: Iterable[str]) -> "CheckReport":
        wanted = list(labels)
        return CheckReport([self[label] for label in wanted])

    def to_json(self, fmt: Callable = str) -> dict:
        return {
            "passed": self.passed,
            "entries": [
                {
                    "label": e.label,
                    "passed": e.passed,
                    **({"witness": e.witness.to_json(fmt)} if e.witness else {}),
                    **({"note": e.note} if e.note else {}),
                }
                for e in self.entries
            ],
        }

    def summary(self) -> str:
        lines = []
        for e in self.entries:
            mark = "ok  " if e.passed else "FAIL"
            extra = ""
            if e.witness is not None:
                w = e.witness
                extra = f"  at ({w.row}, {w.col}): {w.lhs} != {w.rhs}"
            if e.note:
                extra += f"  [{e.note}]"
            lines.append(f"{mark} {e.label}{extra}")
        return "\n".join(lines)
