"""Check results and reports produced by the law suites."""
from collections.abc import Callable
from typing import Literal

from pydantic import BaseModel, Field

Status = Literal["pass", "fail", "skip"]


class CheckResult(BaseModel):
    """Outcome of one named check."""
    check: str = Field(..., description="Check id, e.g. 'algebra.plus-monotone' or 'dynamic.additive'")
    status: Status = Field(..., description="pass, fail or skip")
    cases: int = Field(0, description="Number of instances examined")
    sampled: bool = Field(False, description="Whether the instances were sampled rather than enumerated")
    witness: str | None = Field(None, description="First counterexample, if the check failed")
    note: str | None = Field(None, description="Free-form remark, e.g. why a check was skipped")


class Report(BaseModel):
    """
    An ordered collection of check results.

    Attributes:
        title: Name of the suite (or merged suites)
        results: Check results in the order they were run
    """
    title: str = Field(..., description="Suite name")
    results: list[CheckResult] = Field(default_factory=list, description="Results in run order")

    @property
    def passed(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == "fail"]

    def add(self, result: CheckResult) -> None:
        self.results.append(result)

    def extend(self, other: "Report") -> None:
        """Append all results of another report."""
        self.results.extend(other.results)

    def counts(self) -> dict[str, int]:
        """Number of results per status."""
        tally = {"pass": 0, "fail": 0, "skip": 0}
        for r in self.results:
            tally[r.status] += 1
        return tally

    def to_text(self) -> str:
        """
        Render the report as plain text, one line per check plus a summary line.

        Returns:
            Report text ending with a newline
        """
        lines = [f"# {self.title}"]
        for r in self.results:
            detail = f"{r.cases} cases" + (", sampled" if r.sampled else "")
            line = f"{r.status.upper():<4}  {r.check}  ({detail})"
            if r.note:
                line += f"  {r.note}"
            lines.append(line)
            if r.witness:
                lines.append(f"      witness: {r.witness}")
        tally = self.counts()
        lines.append(f"{tally['pass']} passed, {tally['fail']} failed, {tally['skip']} skipped")
        return "\n".join(lines) + "\n"

    def to_lines(self) -> str:
        """Render the report as JSON lines, one object per check."""
        return "".join(r.model_dump_json() + "\n" for r in self.results)


class CheckCounter:
    """
    Accumulates instances of one check and keeps the first counterexample.

    Example:
        counter = CheckCounter("arrow.top")
        for a, b in pairs:
            counter.record(holds(a, b), lambda: f"a={a} b={b}")
        report.add(counter.result())
    """

    def __init__(self, check: str, sampled: bool = False, note: str | None = None):
        self.check = check
        self.sampled = sampled
        self.note = note
        self.cases = 0
        self.witness: str | None = None
        self.failed = False

    def record(self, ok: bool, witness: Callable[[], str] | str = "") -> bool:
        """
        Record one instance.

        Args:
            ok: Whether the instance satisfies the check
            witness: Description of the instance, or a callable producing it lazily

        Returns:
            ok, unchanged
        """
        self.cases += 1
        if not ok and not self.failed:
            self.failed = True
            self.witness = witness() if callable(witness) else witness
        return ok

    def result(self) -> CheckResult:
        return CheckResult(
            check=self.check,
            status="fail" if self.failed else "pass",
            cases=self.cases,
            sampled=self.sampled,
            witness=self.witness,
            note=self.note,
        )


def skipped(check: str, note: str) -> CheckResult:
    """A skip result carrying the reason."""
    return CheckResult(check=check, status="skip", note=note)
