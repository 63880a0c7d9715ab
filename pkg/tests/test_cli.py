# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
End to end runs of the command line front end against a temporary cache.
"""
import json
from pathlib import Path

import pytest

from siegel_traces.cli import EXIT_ERROR, EXIT_OK, build_parser, load_config, run
from siegel_traces.errors import UsageError
from siegel_traces.models.report_models import CheckResult, RunReport, VariantFlags
from siegel_traces.utils.formatting import factored, render_report


@pytest.fixture(scope="module")
def cache_dir(tmp_path_factory):
    path = tmp_path_factory.mktemp("cache")
    assert run(["census", "--q", "3", "--weight", "8", "--cache-dir", str(path)]) == EXIT_OK
    return path


def test_census_writes_three_tallies(cache_dir, capsys):
    written = sorted(p.name for p in (cache_dir / "tallies").glob("*_p3_n1.json"))
    assert written == ["genus1-base_p3_n1.json", "genus1-quadratic-ext_p3_n1.json", "genus2_p3_n1.json"]
    assert run(["census", "--q", "3", "--weight", "8", "--cache-dir", str(cache_dir)]) == EXIT_OK
    printed = capsys.readouterr().out.split()
    assert len(printed) == 3
    assert all(Path(path).is_file() for path in printed)


def test_census_saves_a_larger_weight_cap(tmp_path):
    assert run(["census", "--q", "3", "--weight", "4", "--cache-dir", str(tmp_path)]) == EXIT_OK
    assert run(["census", "--q", "3", "--weight", "8", "--cache-dir", str(tmp_path)]) == EXIT_OK
    for path in (tmp_path / "tallies").glob("*.json"):
        assert json.loads(path.read_text())["header"]["weight_cap"] == 8


def test_eigenvalues_after_census(cache_dir, capsys):
    code = run(["eigenvalues", "--space", "2,5", "--mu", "2,2,1,1", "--q", "3", "--weight", "8",
                "--cache-dir", str(cache_dir)])
    report = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert report["results"][0]["name"] == "lambda(3) on S_2,5^[2,2,1,1]"
    assert report["results"][0]["actual"] == "-40"


def test_census_refuses_even_fields(tmp_path, capsys):
    assert run(["census", "--q", "2", "--cache-dir", str(tmp_path)]) == EXIT_ERROR
    assert "error:" in capsys.readouterr().err


def test_unknown_congruence_case(tmp_path):
    assert run(["congruence", "--case", "13", "--cache-dir", str(tmp_path)]) == EXIT_ERROR


def test_verify_without_census(tmp_path):
    assert run(["verify", "--cache-dir", str(tmp_path)]) == EXIT_ERROR


def test_verify_rows(cache_dir, capsys):
    code = run(["verify", "--rows", "0,0", "2,0", "3,1", "--weight", "8", "--cache-dir", str(cache_dir)])
    report = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert report["tool_version"] == "0.3.0"
    assert report["variant_flags"]["kappa"] == "double"
    names = [result["name"] for result in report["results"]]
    assert "e_c(0,0) at q=3" in names
    assert any(name.startswith("residual(2,0)") for name in names)
    assert all(result["passed"] for result in report["results"])


def test_report_csv(cache_dir, capsys):
    code = run(["report", "--rows", "2,0", "--q", "3", "--format", "csv", "--weight", "8",
                "--cache-dir", str(cache_dir)])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert out.startswith("# report 0.3.0 kappa=double")
    assert "q,l,m,target,assembled" in out


def test_config_file_and_flags(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"q": [5, 3, 5], "shards": 2}))
    args = build_parser().parse_args(["census", "--config", str(config), "--shards", "3"])
    loaded = load_config(args)
    assert loaded.q == [3, 5]
    assert loaded.shards == 3

    config.write_text(json.dumps({"shards": 0}))
    with pytest.raises(UsageError):
        load_config(build_parser().parse_args(["census", "--config", str(config)]))
    config.write_text("{")
    with pytest.raises(UsageError):
        load_config(build_parser().parse_args(["census", "--config", str(config)]))


def test_factored():
    assert factored(-40) == "-2^3*5"
    assert factored(216) == "2^3*3^3"
    assert factored(1) == "1"


def test_mismatch_makes_the_report_fail():
    flags = VariantFlags(kappa="literal", normalization="plain", exponent="corrected")
    report = RunReport(command="verify", tool_version="0.3.0", variant_flags=flags, cache_hashes={},
                       results=[CheckResult(name="a", passed=False, expected=1, actual=2),
                                CheckResult(name="b", passed=False, gated=False)])
    assert not report.passed
    assert json.loads(render_report(report))["results"][0]["expected"] == "1"
    assert render_report(report, "csv").splitlines()[1] == "name,passed,gated,expected,actual,details"
