# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Census runs through the service container: sharding and reproducible files.
"""
import asyncio

from siegel_traces.app_services import AppServices
from siegel_traces.counting.census import STRATA
from siegel_traces.models.report_models import RunConfig


def _services(cache_dir) -> AppServices:
    return asyncio.run(AppServices.create(RunConfig(cache_dir=str(cache_dir), weight_cap=6)))


def test_eight_shards_match_one(tmp_path):
    whole = _services(tmp_path / "whole")
    sharded = _services(tmp_path / "sharded")
    asyncio.run(whole.run_census(5, shards=1))
    asyncio.run(sharded.run_census(5, shards=8))
    for stratum in STRATA:
        a, b = whole.tally_store.get(5, 1, stratum), sharded.tally_store.get(5, 1, stratum)
        assert a.curves == b.curves
        assert a.entries == b.entries
    assert whole.tally_store.hashes() == sharded.tally_store.hashes()


def test_rerun_writes_identical_files(tmp_path):
    first = _services(tmp_path / "first")
    second = _services(tmp_path / "second")
    asyncio.run(first.run_census(3))
    asyncio.run(second.run_census(3))
    paths = [path.name for path in (tmp_path / "first" / "tallies").glob("*.json")]
    assert len(paths) == 3
    for name in paths:
        assert (tmp_path / "first" / "tallies" / name).read_bytes() == \
               (tmp_path / "second" / "tallies" / name).read_bytes()
