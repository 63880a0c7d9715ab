# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Defines Pydantic models for run configuration, trace reports and check results.
"""
from typing import Dict, List, Literal, Optional

from pydantic import Field, field_validator

from siegel_traces.config import CACHE_DIR, KAPPA, OUTPUT_FORMAT, SHARDS, WEIGHT_CAP
from siegel_traces.models.base import BaseExactModel, DecimalInt


class RunConfig(BaseExactModel):
    """Every command line flag, also readable from a JSON run configuration file."""
    q: List[int] = Field(default_factory=list, description="Field sizes (prime powers).")
    weight_cap: int = Field(WEIGHT_CAP, ge=0)
    shards: int = Field(SHARDS, ge=1)
    kappa: Literal["calibrated", "literal", "double"] = KAPPA
    normalization: Literal["calibrated", "plain", "alpha"] = "calibrated"
    cache_dir: str = CACHE_DIR
    output_format: Literal["json", "csv"] = OUTPUT_FORMAT
    long_run: bool = False

    @field_validator("q")
    @classmethod
    def _sorted_unique(cls, value: List[int]) -> List[int]:
        return sorted(set(value))


class VariantFlags(BaseExactModel):
    """The normalization choices behind every number in a report."""
    kappa: str
    normalization: str
    exponent: str


class TraceRow(BaseExactModel):
    """One isotypic component (or the full trace) of V_{l,m} at one q."""
    target: str
    assembled: DecimalInt
    eisenstein: DecimalInt
    endoscopy: DecimalInt
    lift_leading: DecimalInt
    residual: DecimalInt


class TraceReport(BaseExactModel):
    q: int
    l: int
    m: int
    rows: List[TraceRow]
    variant_flags: VariantFlags

    def row(self, target: str) -> TraceRow:
        for row in self.rows:
            if row.target == target:
                return row
        raise KeyError(target)


class CheckResult(BaseExactModel):
    name: str
    passed: bool
    gated: bool = True
    expected: Optional[DecimalInt] = None
    actual: Optional[DecimalInt] = None
    details: str = ""


class RunReport(BaseExactModel):
    """What verify, eigenvalues, congruence and calibrate print."""
    command: str
    tool_version: str
    variant_flags: VariantFlags
    cache_hashes: Dict[str, str]
    results: List[CheckResult] = Field(default_factory=list)
    traces: List[TraceReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results if r.gated)
