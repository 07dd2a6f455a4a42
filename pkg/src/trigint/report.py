"""Uniform pass/fail reporting for identity checkers and verification sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    exact: str
    numeric: float | None
    oracle: float | None
    abs_err: float
    tol: float
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.case_id}: |err|={self.abs_err:.3e} (tol={self.tol:.1e})"

    def to_dict(self) -> dict:
        return {
            "id": self.case_id,
            "exact": self.exact,
            "numeric": self.numeric,
            "oracle": self.oracle,
            "abs_err": self.abs_err,
            "tol": self.tol,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    cases: list[CaseResult] = field(default_factory=list)

    def add(
        self,
        case_id: str,
        *,
        exact: str = "",
        numeric: float | None = None,
        oracle: float | None = None,
        abs_err: float,
        tol: float,
    ) -> CaseResult:
        case = CaseResult(
            case_id=case_id,
            exact=exact,
            numeric=numeric,
            oracle=oracle,
            abs_err=abs_err,
            tol=tol,
            passed=abs_err <= tol,
        )
        self.cases.append(case)
        return case

    def add_exact(self, case_id: str, holds: bool, *, exact: str = "", detail: float = 1.0) -> CaseResult:
        """Record an exact (zero-tolerance) equality check."""
        case = CaseResult(
            case_id=case_id,
            exact=exact,
            numeric=None,
            oracle=None,
            abs_err=0.0 if holds else abs(detail),
            tol=0.0,
            passed=holds,
        )
        self.cases.append(case)
        return case

    @property
    def summary(self) -> dict:
        passed = sum(1 for c in self.cases if c.passed)
        return {"total": len(self.cases), "passed": passed, "failed": len(self.cases) - passed}

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.passed]

    def extend(self, other: "VerificationReport") -> None:
        self.cases.extend(other.cases)

    def to_dict(self) -> dict:
        return {"cases": [c.to_dict() for c in self.cases], "summary": self.summary}

    def lines(self, failures_only: bool = False) -> list[str]:
        out = []
        for c in self.cases:
            if failures_only and c.passed:
                continue
            out.append(c.line())
        s = self.summary
        out.append(f"total={s['total']} passed={s['passed']} failed={s['failed']}")
        return out
