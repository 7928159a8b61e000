import argparse
import json

import pytest

from bosonfermion.cli import (
    EXIT_CAP_EXCEEDED,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    main,
    parse_module_spec,
)
from bosonfermion.config import RunConfig, parse_window


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestWindowParsing:
    def test_explicit_range(self):
        assert parse_window("-1:3") == (-1, 3)
        assert parse_window("0:0") == (0, 0)

    def test_single_integer_is_symmetric(self):
        assert parse_window("2") == (-2, 2)
        assert parse_window("-2") == (-2, 2)

    def test_rejects_junk(self):
        with pytest.raises(ValueError):
            parse_window("1:2:3")
        with pytest.raises(ValueError):
            parse_window("a:b")


class TestRunConfig:
    def test_defaults(self):
        cfg = RunConfig.resolve("cat", argparse.Namespace(), env={})
        assert cfg.max_degree == 6
        assert cfg.charge_window == (-2, 2)
        assert cfg.index_window == (-4, 4)
        assert cfg.use_cache and not cfg.json_output and cfg.jobs == 1

    def test_env_overrides_default(self):
        env = {"BOSONFERMION_MAX_DEGREE": "3",
               "BOSONFERMION_CHARGE_WINDOW": "0:1",
               "BOSONFERMION_NO_CACHE": "1",
               "BOSONFERMION_JSON": "true",
               "BOSONFERMION_JOBS": "2"}
        cfg = RunConfig.resolve("cat", argparse.Namespace(), env=env)
        assert cfg.max_degree == 3
        assert cfg.charge_window == (0, 1)
        assert not cfg.use_cache
        assert cfg.json_output
        assert cfg.jobs == 2

    def test_flag_overrides_env(self):
        env = {"BOSONFERMION_MAX_DEGREE": "3"}
        args = argparse.Namespace(max_degree=7)
        cfg = RunConfig.resolve("cat", args, env=env)
        assert cfg.max_degree == 7

    def test_invariants(self):
        with pytest.raises(ValueError):
            RunConfig("cat", max_degree=0)
        with pytest.raises(ValueError):
            RunConfig("cat", jobs=0)

    def test_cache_dir_only_active_with_use_cache(self):
        on = RunConfig("cat", cache_dir="/tmp/x", use_cache=True)
        off = RunConfig("cat", cache_dir="/tmp/x", use_cache=False)
        assert on.effective_cache_dir == "/tmp/x"
        assert off.effective_cache_dir is None


class TestModuleSpecs:
    def test_grammar(self):
        assert parse_module_spec("trivial:3").degree == 3
        assert parse_module_spec("S:2,1").dim == 2
        assert parse_module_spec("reg:2").dim == 2

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            parse_module_spec("foo:3")
        with pytest.raises(ValueError):
            parse_module_spec("trivial")
        with pytest.raises(ValueError):
            parse_module_spec("S:1,2")


class TestSchurCommand:
    def test_partition_passes(self, capsys):
        code, out, _ = run(capsys, "schur", "3,1")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "s[3,1]"

    def test_empty_partition_prints_one(self, capsys):
        code, out, _ = run(capsys, "schur", "0")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "1"

    def test_non_partition_is_parse_error(self, capsys):
        code, _, err = run(capsys, "schur", "1,2")
        assert code == EXIT_PARSE_ERROR
        assert "error" in err

    def test_cap_exceeded(self, capsys):
        code, _, err = run(capsys, "schur", "4,4", "--max-degree", "6")
        assert code == EXIT_CAP_EXCEEDED
        assert "cap exceeded" in err


class TestCliffordCommand:
    def test_small_window_passes(self, capsys):
        code, out, _ = run(capsys, "clifford", "--max-degree", "2",
                           "--charge-window", "1", "--index-window", "2")
        assert code == EXIT_OK
        assert "clifford anticommutators" in out

    def test_sign_flip_hook_fails(self, capsys):
        code, _, _ = run(capsys, "clifford", "--max-degree", "2",
                         "--charge-window", "1", "--index-window", "2",
                         "--inject-sign-flip")
        assert code == EXIT_CHECK_FAILED

    def test_empty_window_gives_empty_report(self, capsys):
        code, out, _ = run(capsys, "clifford", "--max-degree", "2",
                           "--charge-window=1:-1", "--index-window", "2",
                           "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        for rep in doc["reports"]:
            for check in rep["checks"]:
                assert check["details"].get("checked", 0) == 0 or \
                    check["details"].get("vectors", 0) == 0


class TestCatCommand:
    def test_specht_example(self, capsys):
        code, out, _ = run(capsys, "cat", "specht", "2,1")
        assert code == EXIT_OK
        assert "categorified creation word" in out

    def test_sigma_example(self, capsys):
        code, _, _ = run(capsys, "cat", "sigma", "--module", "trivial:0")
        assert code == EXIT_OK

    def test_bb_example(self, capsys):
        code, _, _ = run(capsys, "cat", "bb", "--a", "1", "--b", "1",
                         "--module", "S:1")
        assert code == EXIT_OK

    def test_bbstar_triangle(self, capsys):
        code, _, _ = run(capsys, "cat", "bbstar", "--a", "0", "--b", "0",
                         "--module", "S:1")
        assert code == EXIT_OK

    def test_missing_partition_is_parse_error(self, capsys):
        code, _, _ = run(capsys, "cat", "specht")
        assert code == EXIT_PARSE_ERROR

    def test_bad_module_spec_is_parse_error(self, capsys):
        code, _, _ = run(capsys, "cat", "sigma", "--module", "foo:1")
        assert code == EXIT_PARSE_ERROR

    def test_degree_cap_exceeded(self, capsys):
        code, _, err = run(capsys, "cat", "specht", "3", "--max-degree", "2")
        assert code == EXIT_CAP_EXCEEDED
        assert "cap exceeded" in err

    def test_bb_reach_cap(self, capsys):
        code, _, _ = run(capsys, "cat", "bb", "--a", "3", "--b", "1",
                         "--module", "S:2", "--max-degree", "4")
        assert code == EXIT_CAP_EXCEEDED

    def test_unknown_flag_is_parse_error(self, capsys):
        code = main(["cat", "specht", "2", "--frobnicate"])
        capsys.readouterr()
        assert code == EXIT_PARSE_ERROR


class TestDeterminismAndCache:
    def test_identical_config_byte_identical_json(self, capsys):
        _, out1, _ = run(capsys, "cat", "specht", "2,1", "--json")
        _, out2, _ = run(capsys, "cat", "specht", "2,1", "--json")
        assert out1 == out2

    def test_worker_count_does_not_change_output(self, capsys):
        args = ["cat", "suite", "--max-degree", "2", "--json"]
        _, serial, _ = run(capsys, *args, "--jobs", "1")
        _, parallel, _ = run(capsys, *args, "--jobs", "3")
        assert serial == parallel

    def test_cache_on_off_identical(self, capsys, tmp_path):
        cache = str(tmp_path / "cache")
        args = ["cat", "specht", "2,1", "--json"]
        _, cold, _ = run(capsys, *args, "--cache-dir", cache)
        _, warm, _ = run(capsys, *args, "--cache-dir", cache)
        _, off, _ = run(capsys, *args, "--no-cache", "--cache-dir", cache)
        assert cold == warm == off
        assert list((tmp_path / "cache").iterdir())

    def test_env_json_switch(self, capsys, monkeypatch):
        monkeypatch.setenv("BOSONFERMION_JSON", "1")
        code, out, _ = run(capsys, "schur", "2")
        assert code == EXIT_OK
        assert json.loads(out)["passed"] is True

    def test_env_cap_applies(self, capsys, monkeypatch):
        monkeypatch.setenv("BOSONFERMION_MAX_DEGREE", "2")
        code, _, _ = run(capsys, "cat", "specht", "3")
        assert code == EXIT_CAP_EXCEEDED
        code, _, _ = run(capsys, "cat", "specht", "3", "--max-degree", "5")
        assert code == EXIT_OK
