# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Saving, loading and caching census tallies as JSON documents.
"""
import hashlib
import json
import logging
from collections import Counter
from pathlib import Path
from typing import Dict, Optional, Tuple

from pydantic import ValidationError

from siegel_traces.config import TOOL_VERSION
from siegel_traces.counting.census import ENUMERATION_FLAGS, GENUS1_EXT, CensusTally
from siegel_traces.errors import CorruptFile, MissingCache, StratumMismatch, VariantMismatch
from siegel_traces.models.tally_models import CurveRecord, TallyDocument, TallyEntryRecord, TallyHeader

logger = logging.getLogger(__name__)


def tally_to_document(tally: CensusTally) -> TallyDocument:
    header = TallyHeader(
        p=tally.p, n=tally.n, stratum=tally.stratum, weight_cap=tally.weight_cap,
        variant_flags=tally.variant_flags, tool_version=TOOL_VERSION,
    )
    curves = [CurveRecord(nu=list(nu), a1=a1, a2=a2, count=count)
              for (nu, a1, a2), count in sorted(tally.curves.items())]
    entries = [TallyEntryRecord(nu=list(nu), n1=n1, n2=n2, raw=raw)
               for (nu, n1, n2), raw in sorted(tally.entries.items())]
    return TallyDocument(header=header, curves=curves, entries=entries)


def save_tally(tally: CensusTally, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    document = tally_to_document(tally)
    text = json.dumps(document.model_dump(mode="json"), sort_keys=True, indent=1)
    path.write_text(text + "\n", encoding="utf-8")
    logger.info(f"Saved {tally.stratum} tally over F_{tally.q} to {path}.")
    return path


def load_tally(path: Path, stratum: Optional[str] = None) -> CensusTally:
    """Loads a tally, refusing files of another stratum or other enumeration flags."""
    path = Path(path)
    try:
        document = TallyDocument.model_validate(json.loads(path.read_text(encoding="utf-8")))
    except FileNotFoundError:
        raise MissingCache(f"No tally file at {path}.") from None
    except (json.JSONDecodeError, ValidationError, UnicodeDecodeError) as e:
        raise CorruptFile(f"Tally file {path} is unreadable: {e}") from e

    header = document.header
    if stratum is not None and header.stratum != stratum:
        raise StratumMismatch(stratum, header.stratum)
    if header.variant_flags != ENUMERATION_FLAGS:
        raise VariantMismatch(
            f"Tally {path} was built with {header.variant_flags}, expected {ENUMERATION_FLAGS}."
        )

    curves = Counter({(tuple(c.nu), c.a1, c.a2): c.count for c in document.curves})
    entries = {(tuple(e.nu), e.n1, e.n2): e.raw for e in document.entries}
    return CensusTally(header.p, header.n, header.stratum, header.weight_cap,
                       curves=curves, entries=entries, variant_flags=dict(header.variant_flags))


def base_field(tally: CensusTally) -> Tuple[int, int]:
    """(p, n) of the base field a tally belongs to; extension tallies live over F_{p^(2n)}."""
    if tally.stratum == GENUS1_EXT:
        return tally.p, tally.n // 2
    return tally.p, tally.n


def file_hash(path: Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


class TallyStore:
    """Directory of tally files, one per (base field, stratum)."""

    def __init__(self, cache_dir: Path):
        self.cache_dir = Path(cache_dir)
        self._loaded: Dict[Tuple[int, int, str], CensusTally] = {}

    def path_for(self, p: int, n: int, stratum: str) -> Path:
        return self.cache_dir / "tallies" / f"{stratum}_p{p}_n{n}.json"

    def has(self, p: int, n: int, stratum: str) -> bool:
        return self.path_for(p, n, stratum).is_file()

    def put(self, tally: CensusTally) -> Path:
        p, n = base_field(tally)
        self._loaded[(p, n, tally.stratum)] = tally
        return save_tally(tally, self.path_for(p, n, tally.stratum))

    def get(self, p: int, n: int, stratum: str, weight_cap: Optional[int] = None) -> CensusTally:
        """Cached tally, re-expanded from its curve histogram when a larger weight cap is asked for."""
        key = (p, n, stratum)
        tally = self._loaded.get(key)
        if tally is None:
            tally = load_tally(self.path_for(p, n, stratum), stratum=stratum)
            self._loaded[key] = tally
        if weight_cap is not None and tally.weight_cap < weight_cap:
            logger.info(f"Re-expanding {stratum} tally over F_{tally.q} to weight cap {weight_cap}.")
            tally.expand(weight_cap)
        return tally

    def hashes(self) -> Dict[str, str]:
        folder = self.cache_dir / "tallies"
        if not folder.is_dir():
            return {}
        return {path.name: file_hash(path) for path in sorted(folder.glob("*.json"))}
