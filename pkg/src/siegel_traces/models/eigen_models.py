# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Defines Pydantic models for Hecke eigensystems of elliptic newforms and their cache files.
"""
from typing import Dict, List, Optional

from pydantic import Field, field_validator

from siegel_traces.models.base import BaseExactModel, DecimalInt


class NewformSystem(BaseExactModel):
    level: int = Field(..., description="1, 2 or 4")
    weight: int
    ap: Dict[int, DecimalInt] = Field(..., description="Hecke eigenvalues a_p for primes p <= the prime cap.")
    w2: Optional[int] = Field(None, description="Atkin-Lehner sign at level 2.")

    @field_validator("w2")
    @classmethod
    def _check_sign(cls, value: Optional[int]) -> Optional[int]:
        if value not in (None, 1, -1):
            raise ValueError("w2 must be +1, -1 or absent")
        return value

    @property
    def prime_cap(self) -> int:
        return max(self.ap) if self.ap else 0

    def hecke_coefficient(self, p: int, r: int = 1) -> int:
        """a_{p^r}."""
        a = self.ap[p]
        if self.level % p == 0:
            return a ** r
        previous, current = 1, a
        if r == 0:
            return 1
        for _ in range(r - 1):
            previous, current = current, a * current - p ** (self.weight - 1) * previous
        return current

    def frobenius_trace(self, p: int, r: int = 1) -> int:
        """alpha^r + beta^r for the roots of X^2 - a_p X + p^(k-1)."""
        a = self.ap[p]
        previous, current = 2, a
        if r == 0:
            return 2
        for _ in range(r - 1):
            previous, current = current, a * current - p ** (self.weight - 1) * previous
        return current


class EigenDocument(BaseExactModel):
    """Cache file for the rational newforms of one S_k(Gamma_0(N))."""
    level: int
    weight: int
    prime_cap: int
    tool_version: str
    newforms: List[NewformSystem]
