from enum import Enum
from typing import Any, Dict, List

from pydantic import BaseModel, Field, model_validator


class PermutationClass(str, Enum):
    ALL = "all"
    SIMSUN = "simsun"
    DOUBLE_SIMSUN = "double-simsun"


class Provenance(str, Enum):
    PUBLISHED = "published"    # value stated in the literature
    RECURRENCE = "recurrence"  # closed formula or recurrence
    DERIVED = "derived"        # independent computation (second route, brute force)
    COMPUTED = "computed"      # no expectation available, observed value recorded


class VerificationReport(BaseModel):
    claim: str = Field(..., description="Claim id, e.g. rs-total or table1-drs-123")
    description: str = Field(default="", description="What the claim asserts")
    n_values: List[int] = Field(default_factory=list, description="Sizes checked")
    expected: List[int] = Field(default_factory=list, description="Expected value per size")
    observed: List[int] = Field(default_factory=list, description="Observed value per size")
    provenance: List[Provenance] = Field(default_factory=list, description="Source of each expected value")
    passed: bool = Field(default=True, description="Elementwise equality of expected and observed")
    millis: float = Field(default=0.0, ge=0, description="Wall time in milliseconds")
    exploratory: bool = Field(default=False, description="Reported only, never fails a suite")

    @model_validator(mode="after")
    def _aligned(self) -> "VerificationReport":
        sizes = {len(self.n_values), len(self.expected), len(self.observed), len(self.provenance)}
        if len(sizes) != 1:
            raise ValueError("n_values, expected, observed and provenance must have equal length")
        self.passed = self.expected == self.observed
        return self

    def rows(self) -> List[Dict[str, Any]]:
        return [
            {
                "claim": self.claim,
                "n": n,
                "expected": expected,
                "observed": observed,
                "provenance": provenance.value,
                "pass": expected == observed,
                "millis": round(self.millis, 1),
                "exploratory": self.exploratory,
            }
            for n, expected, observed, provenance in zip(
                self.n_values, self.expected, self.observed, self.provenance
            )
        ]


class MapRequest(BaseModel):
    input: str = Field(..., description="Object in its text format (permutation, composition, path or tree)")


class MapResponse(BaseModel):
    map: str = Field(..., description="Registered map name")
    input: str = Field(..., description="Input as received")
    output: str = Field(..., description="Image in canonical text format")
    source: str = Field(..., description="Input kind")
    target: str = Field(..., description="Output kind")


class CheckResponse(BaseModel):
    predicate: str = Field(..., description="Registered predicate name")
    input: str = Field(..., description="Input as received")
    value: bool = Field(..., description="Predicate value")
    detail: Dict[str, Any] = Field(default_factory=dict, description="Witnesses, e.g. a double descent")


class EnumerateResponse(BaseModel):
    n: int = Field(..., ge=0, description="Permutation length")
    cls: PermutationClass = Field(..., description="Permutation class")
    avoid: List[str] = Field(default_factory=list, description="Avoided patterns")
    inverse_avoid: bool = Field(default=False, description="Inverse must avoid the patterns too")
    count: int = Field(..., ge=0, description="Class size")
    items: List[str] = Field(default_factory=list, description="Members, lexicographic")
    truncated: bool = Field(default=False, description="Items cut off by the limit")


class SequenceResponse(BaseModel):
    name: str = Field(..., description="Sequence name")
    offset: int = Field(..., description="Index of the first value")
    values: List[int] = Field(..., description="Exact values from the offset on")


class VerifyResponse(BaseModel):
    suite: str = Field(..., description="table1, a claim id or all")
    n_max: int = Field(..., ge=1, description="Largest size requested")
    passed: bool = Field(..., description="Every non-exploratory report passed")
    reports: List[VerificationReport] = Field(default_factory=list)


class HealthResponse(BaseModel):
    status: str = Field(default="healthy")
    service: str
    version: str
    debug: bool
    workers: int

