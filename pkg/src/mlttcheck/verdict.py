"""Three-valued outcomes for fuel-bounded algorithms, plus the shared fuel budget.

Every partial algorithm in this package answers Accept (optionally with a
payload), Reject (with a structured reason), or OutOfFuel.  OutOfFuel is never
conflated with Reject: running out of budget says nothing about the query.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True, slots=True)
class Accept:
    payload: Any = None


@dataclass(frozen=True, slots=True)
class Reject:
    reason: "Reason"


@dataclass(frozen=True, slots=True)
class OutOfFuel:
    pass


OUT_OF_FUEL = OutOfFuel()

Outcome = Accept | Reject | OutOfFuel


@dataclass(frozen=True, slots=True)
class Reason:
    """Structured mismatch: the two offending heads and the rule path leading there."""

    heads: tuple[str, str]
    path: tuple[str, ...]
    detail: str = ""

    def __str__(self) -> str:
        where = " > ".join(self.path) if self.path else "(root)"
        msg = f"{self.heads[0]} vs {self.heads[1]} at {where}"
        if self.detail:
            msg += f" ({self.detail})"
        return msg


@dataclass(slots=True)
class Budget:
    """Single global fuel budget shared down a query's call tree.

    One unit is spent per rule application and per one-step reduction, which
    makes OutOfFuel monotone in the initial allowance and lets the same flag
    drive both conversion and reduction.  An optional trace sink receives
    (rule_name, depth) events in pre-order.
    """

    left: int
    trace: Optional[list[tuple[str, int]]] = None
    spent: int = field(default=0)

    def spend(self) -> bool:
        if self.left <= 0:
            return False
        self.left -= 1
        self.spent += 1
        return True

    def emit(self, rule: str, depth: int) -> None:
        if self.trace is not None:
            self.trace.append((rule, depth))

    def fire(self, rule: str, depth: int) -> bool:
        """Spend one unit for applying `rule`; emit it to the trace on success."""
        if not self.spend():
            return False
        self.emit(rule, depth)
        return True
