"""Outcome records shared by all the check_* routines."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable, List

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class CheckReport:
    name: str
    status: str
    detail: str = ""
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        tail = f" ({self.detail})" if self.detail else ""
        return f"[{self.status.upper():>12}] {self.name}{tail}"


def summarize(reports: Iterable[CheckReport]) -> dict:
    reports = list(reports)
    counts = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    return counts


def first_difference(lhs, rhs) -> str:
    """Describe the first monomial where two polynomials disagree."""
    keys = sorted(set(lhs.terms) | set(rhs.terms))
    for k in keys:
        a, b = lhs.coefficient(k), rhs.coefficient(k)
        if a != b:
            return f"monomial {k}: {a} != {b}"
    return "polynomials agree"


def failures(reports: Iterable[CheckReport]) -> List[CheckReport]:
    return [r for r in reports if r.status == FAIL]
