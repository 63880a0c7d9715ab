# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Cache of elliptic newform data, used by every motive evaluation.

Rational eigensystems are computed once per (N, k), kept in memory and written
to <cache_dir>/eigen/N{N}_k{k}.json. Spaces with irrational eigenvalues are
traced through Hecke matrices instead.
"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Set, Tuple

from pydantic import ValidationError

from siegel_traces.config import HECKE_PRIME_CAP, TOOL_VERSION
from siegel_traces.errors import CorruptFile, IrrationalEigenvalue, MissingEigenData
from siegel_traces.models.eigen_models import EigenDocument, NewformSystem
from siegel_traces.modforms.dimensions import dim_new
from siegel_traces.modforms.spaces import FormSpace, hecke_eigen, newspace_part, precision_for

logger = logging.getLogger(__name__)

_SIGN_OF_PART = {"plus": 1, "minus": -1}


class EigenStore:
    """Newform eigensystems per (N, k): memory first, then the JSON cache, then computation."""

    def __init__(self, cache_dir: Optional[Path] = None, prime_cap: int = HECKE_PRIME_CAP):
        self.cache_dir = Path(cache_dir) if cache_dir is not None else None
        self.prime_cap = prime_cap
        self._systems: Dict[Tuple[int, int], Tuple[int, List[NewformSystem]]] = {}
        self._irrational: Set[Tuple[int, int]] = set()

    def path_for(self, N: int, k: int) -> Optional[Path]:
        if self.cache_dir is None:
            return None
        return self.cache_dir / "eigen" / f"N{N}_k{k}.json"

    def systems(self, N: int, k: int, P: Optional[int] = None) -> List[NewformSystem]:
        """Rational newforms of S_k(Gamma_0(N)) with a_p known for every prime p <= P."""
        P = max(P or 0, self.prime_cap)
        key = (N, k)
        if key in self._irrational:
            raise IrrationalEigenvalue(f"S_{k}(Gamma_0({N}))^new has irrational eigenvalues.")
        cached = self._systems.get(key) or self._load(N, k)
        if cached is not None and cached[0] >= P:
            self._systems[key] = cached
            return cached[1]

        logger.info(f"Computing Hecke eigensystems of S_{k}(Gamma_0({N}))^new up to p = {P}.")
        try:
            systems = hecke_eigen(N, k, P)
        except IrrationalEigenvalue:
            self._irrational.add(key)
            raise
        self._systems[key] = (P, systems)
        self._save(N, k, P, systems)
        return systems

    def part_dimension(self, N: int, k: int, part: str) -> int:
        """tau_{N,k} for part "new", tau^+ / tau^- for "plus" / "minus" at level 2."""
        if part == "new" or dim_new(N, k) == 0:
            return dim_new(N, k)
        try:
            sign = _SIGN_OF_PART[part]
            return sum(1 for f in self.systems(N, k) if f.w2 == sign)
        except IrrationalEigenvalue:
            return self.space(N, k, part, 7).dim

    def space(self, N: int, k: int, part: str, p: int) -> FormSpace:
        return newspace_part(N, k, part, precision_for(N, k, max(p, self.prime_cap)))

    def frobenius_trace(self, N: int, k: int, part: str, p: int, r: int = 1) -> int:
        """Sum of alpha^r + beta^r over the newforms in the given part."""
        if dim_new(N, k) == 0:
            return 0
        try:
            systems = self.systems(N, k, p)
        except IrrationalEigenvalue:
            return self.space(N, k, part, p).frobenius_trace(p, r)
        sign = _SIGN_OF_PART.get(part)
        return sum(f.frobenius_trace(p, r) for f in systems if sign is None or f.w2 == sign)

    def hecke_trace(self, N: int, k: int, part: str, p: int, r: int = 1) -> int:
        """Sum of a(p^r) over the newforms in the given part."""
        if dim_new(N, k) == 0:
            return 0
        try:
            systems = self.systems(N, k, p)
        except IrrationalEigenvalue:
            return self.space(N, k, part, p).hecke_trace(p, r)
        sign = _SIGN_OF_PART.get(part)
        return sum(f.hecke_coefficient(p, r) for f in systems if sign is None or f.w2 == sign)

    def eigenvalue(self, N: int, k: int, p: int, part: str = "new") -> int:
        """a_p of the unique newform in a one-dimensional part."""
        sign = _SIGN_OF_PART.get(part)
        forms = [f for f in self.systems(N, k, p) if sign is None or f.w2 == sign]
        if len(forms) != 1:
            raise MissingEigenData(
                f"S_{k}(Gamma_0({N}))^{part} holds {len(forms)} newforms; a single one is needed."
            )
        return forms[0].ap[p]

    def _load(self, N: int, k: int) -> Optional[Tuple[int, List[NewformSystem]]]:
        path = self.path_for(N, k)
        if path is None or not path.is_file():
            return None
        try:
            document = EigenDocument.model_validate(json.loads(path.read_text(encoding="utf-8")))
        except (json.JSONDecodeError, ValidationError) as e:
            raise CorruptFile(f"Eigen cache {path} is unreadable: {e}") from e
        if (document.level, document.weight) != (N, k):
            raise CorruptFile(f"Eigen cache {path} holds S_{document.weight}(Gamma_0({document.level})).")
        return document.prime_cap, document.newforms

    def _save(self, N: int, k: int, P: int, systems: List[NewformSystem]) -> None:
        path = self.path_for(N, k)
        if path is None:
            return
        path.parent.mkdir(parents=True, exist_ok=True)
        document = EigenDocument(level=N, weight=k, prime_cap=P, tool_version=TOOL_VERSION, newforms=systems)
        path.write_text(json.dumps(document.model_dump(mode="json"), sort_keys=True, indent=1) + "\n",
                        encoding="utf-8")
        logger.debug(f"Saved eigen data for S_{k}(Gamma_0({N})) to {path}.")


_DEFAULT_STORE: Optional[EigenStore] = None


def default_store() -> EigenStore:
    """Process-wide in-memory store, for callers that do not pass their own."""
    global _DEFAULT_STORE
    if _DEFAULT_STORE is None:
        _DEFAULT_STORE = EigenStore()
    return _DEFAULT_STORE
