"""Command-line interface, caching, manifests, and exports."""

import json

import numpy as np
import pytest

from nearoct import incidence, workbench
from nearoct.errors import Malformed, MissingCache
from nearoct.workbench import Workbench


def test_build_command_prints_summary(tmp_path, capsys):
    rc = workbench.main(["--cache-dir", str(tmp_path / "cache"), "build"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "points=4095 lines=15015 spread=1365 quads=1365" in out
    assert (tmp_path / "cache" / "octagon.geom").is_file()
    assert (tmp_path / "cache" / "manifest-build.json").is_file()


def test_missing_generator_file_is_an_input_error(tmp_path, capsys):
    rc = workbench.main(
        ["--generators", str(tmp_path / "missing.txt"), "build"]
    )
    assert rc == 2
    assert "input error" in capsys.readouterr().err


def test_verify_exit_code_on_failure(wb, capsys, monkeypatch):
    monkeypatch.setitem(
        workbench.VERIFIERS, "near-octagon",
        lambda _: {"verdict": "FAIL", "reason": "forced for the test"},
    )
    assert workbench.cmd_verify(wb, "near-octagon") == 1
    assert "near-octagon: FAIL" in capsys.readouterr().out


def test_verify_single_target(wb, capsys):
    assert workbench.cmd_verify(wb, "near-octagon") == 0
    out = capsys.readouterr().out
    assert "near-octagon: pass" in out
    manifest = json.loads(
        (wb.cache_dir / "manifest-verify-near-octagon.json").read_text()
    )
    assert manifest["results"]["near-octagon"]["verdict"] == "pass"
    assert manifest["kernel_path"] in ("numba", "numpy")


def test_export_geometry_roundtrip(wb, tmp_path, capsys):
    path = tmp_path / "hexagon.geom"
    assert workbench.cmd_export(wb, "hexagon", str(path)) == 0
    assert incidence.load_geometry(path) == wb.hexagon.geometry


def test_cache_reuse_is_faithful(wb, tmp_path):
    """A second workbench on the same cache directory reloads the
    suboctagon family identically instead of recomputing it."""
    wb.hjs  # ensure the cache file exists
    other = Workbench(cache_dir=wb.cache_dir)
    assert (wb.cache_dir / "suboctagons.txt").is_file()
    rows = [s.points for s in other.hjs]
    assert len(rows) == 416
    for a, b in zip(rows, (s.points for s in wb.hjs)):
        assert np.array_equal(a, b)
    assert other.timings["suboctagons"] < 5.0


def test_stale_cache_is_ignored(tmp_path):
    """Caches stamped for a different generator file must not be loaded."""
    cache = tmp_path / "cache"
    cache.mkdir()
    (cache / "cache-key.txt").write_text("0" * 64 + "\n")
    (cache / "suboctagons.txt").write_text("1 2 3\n")
    wb2 = Workbench(cache_dir=cache)
    assert not wb2._cache_ok()


def test_malformed_cache_raises(tmp_path):
    cache = tmp_path / "cache"
    cache.mkdir()
    (cache / "bad.txt").write_text("1 2 3\n4 5\n")
    with pytest.raises(MissingCache):
        workbench._load_rows(cache / "bad.txt", 3)


def test_env_defaults_feed_the_parser(monkeypatch):
    monkeypatch.setenv("NEAROCT_CACHE_DIR", "/some/cache")
    monkeypatch.setenv("NEAROCT_BUDGET", "12345")
    args = workbench.make_parser().parse_args(["build"])
    assert args.cache_dir == "/some/cache"
    assert args.budget == 12345


def test_flag_plumbing():
    wb2 = Workbench(cache_dir="unused", budget=123, seed=5)
    assert wb2.budget == 123
    assert wb2.seed == 5


def test_jsonable_handles_numpy_values():
    out = workbench._jsonable(
        {"a": np.int64(3), ("t", 1): np.array([1, 2]), "d": {"x": np.bool_(True)}}
    )
    assert json.dumps(out, sort_keys=True)
