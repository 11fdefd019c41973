"""
Pydantic models for verification reports
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """Outcome of one named check"""

    name: str = Field(description="Stable check identifier, e.g. 'hom.d11'")
    passed: bool
    witness: Optional[Tuple[int, ...]] = Field(default=None, description="Least failing tuple")
    detail: str = Field(default="", description="Certification regime or failure message")

    def line(self) -> str:
        if self.passed:
            return f"{self.name}: PASS {self.detail}" if self.detail else f"{self.name}: PASS"
        text = f"{self.name}: FAIL"
        if self.witness is not None:
            text += " (" + ", ".join(str(v) for v in self.witness) + ")"
        if self.detail:
            text += f" {self.detail}"
        return text


class CheckReport(BaseModel):
    """An ordered collection of check results"""

    title: str
    results: List[CheckResult] = Field(default_factory=list)

    def record(self, name: str, witness: Optional[Tuple[int, ...]] = None, passed: Optional[bool] = None, detail: str = "") -> CheckResult:
        """Append a result; a check passes when no witness is given unless `passed` says otherwise"""
        ok = witness is None if passed is None else passed
        result = CheckResult(name=name, passed=ok, witness=witness, detail=detail)
        self.results.append(result)
        return result

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for result in other.results:
            self.results.append(result.model_copy(update={"name": prefix + result.name}))

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def sorted(self) -> "CheckReport":
        """Results ordered by check name, then witness"""
        ordered = sorted(self.results, key=lambda r: (r.name, r.witness or ()))
        return CheckReport(title=self.title, results=ordered)

    def lines(self) -> List[str]:
        return [result.line() for result in self.results]
