"""JSON report of a verification run."""

import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

SCHEMA = "assoform/1"


class SuiteResult(BaseModel):
    """Outcome of one suite; ``details`` holds suite-specific exact values."""
    name: str
    passed: bool = True
    cases: int = 0
    seconds: float = 0.0
    details: Dict[str, Any] = Field(default_factory=dict)
    counterexample: Optional[Dict[str, Any]] = None
    message: Optional[str] = None


class VerifyReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default=SCHEMA, alias="schema")
    suite: str
    seed: int
    n: Optional[int] = None
    d: Optional[int] = None
    suites: List[SuiteResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    @property
    def total_cases(self) -> int:
        return sum(s.cases for s in self.suites)

    def first_failure(self) -> Optional[SuiteResult]:
        return next((s for s in self.suites if not s.passed), None)

    def to_json(self, timings: bool = True) -> str:
        """Serialized report; ``timings=False`` drops wall-clock fields for byte-stable output."""
        data = self.model_dump(by_alias=True)
        data["passed"] = self.passed
        data["total_cases"] = self.total_cases
        if not timings:
            for s in data["suites"]:
                s.pop("seconds", None)
        return json.dumps(data, indent=2, sort_keys=False)
