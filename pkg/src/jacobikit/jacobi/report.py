"""Check reports: a status plus the printed residuals that failed to vanish."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
ERROR = "error"


def _is_zero(value) -> bool:
    if isinstance(value, (int, float)):
        return value == 0
    if hasattr(value, "is_zero"):
        return value.is_zero()
    raise TypeError(f"cannot test {type(value).__name__} for zero")


class Residuals:
    """Collects labelled expressions that are expected to vanish."""

    __slots__ = ("items",)

    def __init__(self):
        self.items: list[str] = []

    def check(self, label: str, value) -> bool:
        """Record ``value`` if nonzero; return whether it vanished."""
        if _is_zero(value):
            return True
        self.items.append(f"{label}: {value}" if label else str(value))
        return False

    def __bool__(self):
        return bool(self.items)

    def __len__(self):
        return len(self.items)


@dataclass
class CheckReport:
    """Outcome of one check.

    ``status`` is ``pass`` exactly when ``residuals`` is empty, except for
    ``error`` reports, which carry the error message in ``notes``.  Composite
    checks keep their parts in ``clauses``; clause names are stable strings.
    """

    name: str
    status: str
    residuals: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    clauses: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @classmethod
    def from_residuals(cls, name, residuals, notes=(), clauses=None) -> "CheckReport":
        items = list(residuals.items if isinstance(residuals, Residuals) else residuals)
        return cls(name, FAIL if items else PASS, items, list(notes), dict(clauses or {}))

    @classmethod
    def combine(cls, name, clauses: dict, notes=(), informational=()) -> "CheckReport":
        """Aggregate clause reports; clauses named in ``informational`` do not count."""
        residuals = []
        status = PASS
        for key, rep in clauses.items():
            if key in informational:
                continue
            if rep.status == ERROR:
                status = ERROR
            elif rep.status == FAIL and status == PASS:
                status = FAIL
            residuals.extend(f"{key} | {r}" for r in rep.residuals)
            if rep.status == ERROR and not rep.residuals:
                residuals.append(f"{key} | error: {'; '.join(rep.notes)}")
        return cls(name, status, residuals, list(notes), dict(clauses))

    @classmethod
    def error(cls, name, message, clauses=None) -> "CheckReport":
        return cls(name, ERROR, [], [message], dict(clauses or {}))

    @classmethod
    def skipped(cls, name, reason) -> "CheckReport":
        return cls(name, FAIL, [f"not evaluated: {reason}"], [reason])

    def clause(self, key) -> "CheckReport":
        return self.clauses[key]

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "residuals": list(self.residuals)}
        if self.notes:
            out["notes"] = list(self.notes)
        if self.clauses:
            out["clauses"] = {k: v.to_dict() for k, v in self.clauses.items()}
        return out

    def summary(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [f"{pad}{self.name}: {self.status}"]
        for r in self.residuals if not self.clauses else ():
            lines.append(f"{pad}  residual {r}")
        for note in self.notes:
            lines.append(f"{pad}  note: {note}")
        for rep in self.clauses.values():
            lines.append(rep.summary(indent + 1))
        return "\n".join(lines)

    def __str__(self):
        return self.summary()
