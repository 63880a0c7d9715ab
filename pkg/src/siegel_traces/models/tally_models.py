# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Defines Pydantic models for census tally files.
"""
from typing import Dict, List, Literal

from pydantic import Field

from siegel_traces.models.base import BaseExactModel, DecimalInt


class TallyHeader(BaseExactModel):
    p: int
    n: int
    stratum: Literal["genus2", "genus1-base", "genus1-quadratic-ext"]
    weight_cap: int = Field(..., ge=0, description="Largest n1 + 2*n2 stored.")
    variant_flags: Dict[str, str]
    tool_version: str


class CurveRecord(BaseExactModel):
    """Number of monic curves with cycle type nu and traces (a1, a2)."""
    nu: List[int]
    a1: int
    a2: int
    count: DecimalInt


class TallyEntryRecord(BaseExactModel):
    """Twist-expanded raw power sum, not yet divided by any group order."""
    nu: List[int]
    n1: int
    n2: int
    raw: DecimalInt


class TallyDocument(BaseExactModel):
    header: TallyHeader
    curves: List[CurveRecord]
    entries: List[TallyEntryRecord]
