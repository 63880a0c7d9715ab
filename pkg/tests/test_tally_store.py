# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
import json

import pytest

from siegel_traces.counting.census import GENUS1_BASE, GENUS1_EXT, GENUS2, census_genus1
from siegel_traces.counting.ffield import field_from_order, quadratic_extension
from siegel_traces.counting.tally_store import TallyStore, load_tally
from siegel_traces.errors import CorruptFile, MissingCache, StratumMismatch, VariantMismatch


@pytest.fixture
def store(tmp_path):
    return TallyStore(tmp_path)


@pytest.fixture
def tally():
    return census_genus1(field_from_order(3), 6, GENUS1_BASE)


def test_put_and_reload(store, tally, tmp_path):
    path = store.put(tally)
    assert path == tmp_path / "tallies" / "genus1-base_p3_n1.json"
    reloaded = TallyStore(tmp_path).get(3, 1, GENUS1_BASE)
    assert reloaded.curves == tally.curves
    assert reloaded.entries == tally.entries


def test_numbers_are_decimal_strings(store, tally):
    document = json.loads(store.put(tally).read_text())
    assert all(isinstance(entry["raw"], str) for entry in document["entries"])


def test_get_re_expands_to_larger_weight(store, tally, tmp_path):
    store.put(tally)
    bigger = TallyStore(tmp_path).get(3, 1, GENUS1_BASE, weight_cap=10)
    assert bigger.weight_cap == 10
    assert ((1, 1, 1), 10, 0) in bigger.entries


def test_hashes_are_stable(store, tally):
    store.put(tally)
    first = store.hashes()
    store.put(tally)
    assert store.hashes() == first
    assert list(first) == ["genus1-base_p3_n1.json"]


def test_missing_and_corrupt_files(store, tmp_path):
    with pytest.raises(MissingCache):
        store.get(5, 1, GENUS2)
    path = store.path_for(5, 1, GENUS2)
    path.parent.mkdir(parents=True)
    path.write_text("{not json")
    with pytest.raises(CorruptFile):
        load_tally(path)


def test_wrong_stratum_and_flags(store, tally):
    path = store.put(tally)
    with pytest.raises(StratumMismatch):
        load_tally(path, stratum=GENUS2)
    document = json.loads(path.read_text())
    document["header"]["variant_flags"] = {"twists": "other"}
    path.write_text(json.dumps(document))
    with pytest.raises(VariantMismatch):
        load_tally(path)


def test_extension_tally_is_keyed_by_its_base_field(store, tmp_path):
    F9, _ = quadratic_extension(field_from_order(3))
    ext = census_genus1(F9, 4, GENUS1_EXT)
    path = store.put(ext)
    assert path == tmp_path / "tallies" / "genus1-quadratic-ext_p3_n1.json"
    assert store.has(3, 1, GENUS1_EXT)
    assert TallyStore(tmp_path).get(3, 1, GENUS1_EXT).q == 9
