# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Defines the AppServices container class to centralize service initialization.
Every command line entry point works through one instance.
"""
import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from siegel_traces.checks import ALL_CHECK_PROVIDERS
from siegel_traces.checks.registry import CheckRegistry
from siegel_traces.cohomology.calibrate import CALIBRATION_FIELDS, VariantSelection, calibrate, candidates
from siegel_traces.cohomology.motive import MotiveTracer
from siegel_traces.cohomology.traces import NORMALIZATION_ALPHA, NORMALIZATION_PLAIN, Normalization
from siegel_traces.config import CENSUS_CAP, LONG_RUN_CAP
from siegel_traces.counting.census import GENUS1_BASE, GENUS1_EXT, GENUS2, STRATA, CensusTally, census_genus1, \
    census_genus2, merge_tallies
from siegel_traces.counting.ffield import build_field, field_from_order, quadratic_extension
from siegel_traces.counting.masses import KAPPA_DOUBLE, KAPPA_LITERAL, StackCounts
from siegel_traces.counting.tally_store import TallyStore
from siegel_traces.errors import CapExceeded, MissingCache
from siegel_traces.modforms.eigen_store import EigenStore
from siegel_traces.models.report_models import RunConfig, VariantFlags

logger = logging.getLogger(__name__)


def census_shard(p: int, n: int, stratum: str, weight_cap: int, shard: int, shards: int,
                 cap: int) -> CensusTally:
    """One shard of one stratum; runs in a worker process, so it rebuilds its fields."""
    F = build_field(p, n)
    if stratum == GENUS2:
        return census_genus2(F, weight_cap, shard, shards, cap=cap)
    if stratum == GENUS1_BASE:
        return census_genus1(F, weight_cap, GENUS1_BASE, shard, shards, cap=cap)
    F2, _ = quadratic_extension(F)
    return census_genus1(F2, weight_cap, GENUS1_EXT, shard, shards)


class AppServices:
    """
    A container class to encapsulate the shared state of one run: configuration,
    tally and eigen caches, the motive tracer and the normalization variants.
    """

    def __init__(
            self,
            config: RunConfig,
            tally_store: TallyStore,
            eigen_store: EigenStore,
            tracer: MotiveTracer,
    ):
        self.config = config
        self.tally_store = tally_store
        self.eigen_store = eigen_store
        self.tracer = tracer
        self._selection: Optional[VariantSelection] = None
        self._counts: Dict[Tuple[int, str], StackCounts] = {}
        self.check_registry: Optional[CheckRegistry] = None

    @classmethod
    async def create(cls, config: RunConfig) -> "AppServices":
        """
        Creates and initializes all services for a run.
        This is the single source of truth for service setup.
        """
        logger.info("Initializing application services...")
        try:
            # --- 1. Cache directory ---
            cache_dir = cls._initialize_cache_dir(config)

            # --- 2. Tally and eigen stores ---
            tally_store, eigen_store = cls._initialize_stores(cache_dir)

            # --- 3. Motive tracer ---
            tracer = MotiveTracer(eigen_store)

            # --- 4. Create and return the container instance ---
            return cls(config=config, tally_store=tally_store, eigen_store=eigen_store, tracer=tracer)

        except Exception as e:
            logger.critical(f"Failed to initialize application services: {e}", exc_info=True)
            raise

    @staticmethod
    def _initialize_cache_dir(config: RunConfig) -> Path:
        cache_dir = Path(config.cache_dir)
        cache_dir.mkdir(parents=True, exist_ok=True)
        logger.info(f"Using cache directory {cache_dir.resolve()}.")
        return cache_dir

    @staticmethod
    def _initialize_stores(cache_dir: Path) -> Tuple[TallyStore, EigenStore]:
        logger.info("Opening tally and eigen stores...")
        return TallyStore(cache_dir), EigenStore(cache_dir)

    def initialize_check_registry(self) -> CheckRegistry:
        """Creates the check registry and dynamically registers all providers."""
        logger.info("Initializing and populating check registry...")
        registry = CheckRegistry(services=self)
        for provider_class in ALL_CHECK_PROVIDERS:
            registry.register_provider(provider_class)
            logger.info(f"-> Registered check provider: {provider_class.__name__}")
        logger.info(f"Check registry populated with {len(ALL_CHECK_PROVIDERS)} providers.")
        self.check_registry = registry
        return registry

    # --- Census ---

    def census_cap(self) -> int:
        return LONG_RUN_CAP if self.config.long_run else CENSUS_CAP

    async def run_census(self, q: int, weight_cap: Optional[int] = None,
                         shards: Optional[int] = None) -> List[Path]:
        """Tallies of all three strata for F_q, fanned out over shards; cached tallies are reused."""
        weight_cap = self.config.weight_cap if weight_cap is None else weight_cap
        shards = self.config.shards if shards is None else shards
        F = field_from_order(q)
        if F.q > self.census_cap():
            raise CapExceeded(F.q, self.census_cap(), what="census field size")

        paths = []
        for stratum in STRATA:
            if self.tally_store.has(F.p, F.n, stratum):
                cached = self.tally_store.get(F.p, F.n, stratum)
                if cached.weight_cap < weight_cap:
                    self.tally_store.put(self.tally_store.get(F.p, F.n, stratum, weight_cap))
                    logger.info(f"{stratum} tally over F_{q} re-expanded to weight cap {weight_cap} and saved.")
                else:
                    logger.info(f"{stratum} tally over F_{q} is cached.")
            else:
                tally = await self._sharded_census(F.p, F.n, stratum, weight_cap, shards)
                self.tally_store.put(tally)
            paths.append(self.tally_store.path_for(F.p, F.n, stratum))
        logger.info(f"Census over F_{q} complete.")
        return paths

    async def _sharded_census(self, p: int, n: int, stratum: str, weight_cap: int, shards: int) -> CensusTally:
        cap = self.census_cap()
        if shards == 1:
            return census_shard(p, n, stratum, weight_cap, 0, 1, cap)
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=shards) as pool:
            parts = await asyncio.gather(*(
                loop.run_in_executor(pool, census_shard, p, n, stratum, weight_cap, shard, shards, cap)
                for shard in range(shards)
            ))
        logger.info(f"Merging {shards} shards of the {stratum} tally over F_{p ** n}.")
        return merge_tallies(parts)

    def ensure_census(self, q: int, weight_cap: int) -> None:
        """Small calibration fields are counted on demand."""
        F = field_from_order(q)
        if all(self.tally_store.has(F.p, F.n, stratum) for stratum in STRATA):
            return
        logger.info(f"No cached census over F_{q}; counting it now.")
        asyncio.run(self.run_census(q, max(weight_cap, self.config.weight_cap), shards=1))

    def cached_fields(self) -> List[int]:
        """Field sizes with all three tallies on disk, restricted to the configured ones if any."""
        found = []
        folder = self.tally_store.cache_dir / "tallies"
        if folder.is_dir():
            for path in folder.glob(f"{GENUS2}_p*_n*.json"):
                p, n = (int(part[1:]) for part in path.stem.split("_")[1:3])
                if all(self.tally_store.has(p, n, stratum) for stratum in STRATA):
                    found.append(p ** n)
        if self.config.q:
            found = [q for q in found if q in self.config.q]
        return sorted(found)

    def counts(self, q: int, weight: int, kappa: Optional[str] = None) -> StackCounts:
        """Stack counts over F_q with every tally expanded to at least the given weight."""
        kappa = kappa or self.selection.kappa
        key = (q, kappa)
        cached = self._counts.get(key)
        if cached is not None and cached.weight_cap >= weight:
            return cached
        F = field_from_order(q)
        if not all(self.tally_store.has(F.p, F.n, stratum) for stratum in STRATA):
            raise MissingCache(f"No census over F_{q} in {self.tally_store.cache_dir}; run `census --q {q}` first.")
        cap = max(weight, self.config.weight_cap)
        counts = StackCounts(
            F,
            self.tally_store.get(F.p, F.n, GENUS2, cap),
            self.tally_store.get(F.p, F.n, GENUS1_BASE, cap),
            self.tally_store.get(F.p, F.n, GENUS1_EXT, cap),
            kappa=kappa,
        )
        self._counts[key] = counts
        return counts

    # --- Variants ---

    @property
    def selection(self) -> VariantSelection:
        if self._selection is None:
            self._selection = self._select_variants()
        return self._selection

    @property
    def normalization(self) -> Normalization:
        return self.selection.normalization

    def _select_variants(self) -> VariantSelection:
        kappa, characters = self.config.kappa, self.config.normalization
        if kappa != "calibrated" and characters != "calibrated":
            logger.info(f"Using fixed variants kappa={kappa}, characters={characters}.")
            return VariantSelection(kappa, Normalization(characters))

        for q in CALIBRATION_FIELDS:
            self.ensure_census(q, 6)
        kappas = (KAPPA_LITERAL, KAPPA_DOUBLE) if kappa == "calibrated" else (kappa,)
        chars = (NORMALIZATION_PLAIN, NORMALIZATION_ALPHA) if characters == "calibrated" else (characters,)
        logger.info("Calibrating normalization variants...")
        selection = calibrate(lambda q, k: self.counts(q, 6, kappa=k), self.tracer, CALIBRATION_FIELDS,
                              candidates(kappas, chars))
        flags = selection.flags()
        logger.info(f"Selected kappa={flags.kappa}, characters={flags.normalization}, exponent={flags.exponent}.")
        return selection

    def flags(self) -> VariantFlags:
        return self.selection.flags()
