"""INT-013: Test configuration, integer math, output and timing helpers.

This test verifies that:
1. Config merges defaults, the JSON file and CARDCNF_* variables
2. Invalid config values are ignored
3. Integer roots and logs are exact at boundaries
4. Response envelopes carry the documented keys
"""

import json
import time
from pathlib import Path

import pytest

from cardcnf.utils import (
    Config,
    Stopwatch,
    ceil_div,
    ceil_log,
    ceil_root,
    ceil_sqrt,
    error_response,
    floor_root,
    format_pairs,
    get_config,
    load_config,
    reset_config,
    success_response,
)


def write_config_file(data):
    """Write ~/.cardcnf/config.json under the isolated home."""
    path = Path.home() / ".cardcnf" / "config.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(data if isinstance(data, str) else json.dumps(data))
    return path


class TestConfig:
    """Test configuration loading."""

    def test_defaults(self):
        """Test values without file or environment."""
        config = load_config()
        assert config.solver_command == ""
        assert config.timeout_ms == 60_000
        assert config.repeats == 1
        assert config.hall_retries == 32
        assert config.window_limit == 50_000
        assert config.log_level == "WARNING"

    def test_file(self):
        """Test values from the config file; unknown keys are ignored."""
        write_config_file({"solver_command": "kissat", "timeout_ms": 5000, "colour": "blue"})
        config = load_config()
        assert config.solver_command == "kissat"
        assert config.timeout_ms == 5000

    def test_environment_wins(self, monkeypatch):
        """Test that CARDCNF_* variables override the file."""
        write_config_file({"solver_command": "kissat", "repeats": 3})
        monkeypatch.setenv("CARDCNF_SOLVER", "cadical -q")
        monkeypatch.setenv("CARDCNF_COVER_FREE_CONSTANT", "0.5")
        config = load_config()
        assert config.solver_command == "cadical -q"
        assert config.cover_free_constant == 0.5
        assert config.repeats == 3

    def test_invalid_values_ignored(self, monkeypatch):
        """Test a broken file and an unparsable variable."""
        write_config_file("{not json")
        monkeypatch.setenv("CARDCNF_TIMEOUT_MS", "soon")
        assert load_config().timeout_ms == 60_000

    def test_cached(self, monkeypatch):
        """Test that get_config caches until reset."""
        first = get_config()
        monkeypatch.setenv("CARDCNF_REPEATS", "4")
        assert get_config() is first
        reset_config()
        assert get_config().repeats == 4

    def test_from_dict(self):
        """Test construction from a partial dict."""
        config = Config.from_dict({"pc_prefixes": 10, "bogus": 1})
        assert config.pc_prefixes == 10
        assert config.random_samples == 1000


class TestIntMath:
    """Test exact integer helpers."""

    @pytest.mark.parametrize(
        "n,r,expected",
        [(0, 3, 0), (1, 5, 1), (10**6, 3, 100), (10**6 - 1, 3, 99), (99, 2, 9), (7, 1, 7)],
    )
    def test_floor_root(self, n, r, expected):
        """Test floor roots around perfect powers."""
        assert floor_root(n, r) == expected

    @pytest.mark.parametrize(
        "n,r,expected",
        [(10**6, 3, 100), (10**6 + 1, 3, 101), (2**60, 6, 1024), (2**60 + 1, 6, 1025)],
    )
    def test_ceil_root(self, n, r, expected):
        """Test ceiling roots around perfect powers."""
        assert ceil_root(n, r) == expected

    def test_small_helpers(self):
        """Test ceil_sqrt, ceil_div and ceil_log."""
        assert ceil_sqrt(10) == 4
        assert ceil_sqrt(16) == 4
        assert ceil_div(7, 2) == 4
        assert ceil_div(8, 2) == 4
        assert ceil_log(1, 2) == 1
        assert ceil_log(8, 2) == 3
        assert ceil_log(9, 2) == 4

    def test_invalid(self):
        """Test argument checks."""
        with pytest.raises(ValueError):
            floor_root(-1, 2)
        with pytest.raises(ValueError):
            floor_root(4, 0)
        with pytest.raises(ValueError):
            ceil_log(4, 1)


class TestOutput:
    """Test response helpers."""

    def test_success(self):
        """Test the success envelope."""
        response = success_response("encode", {"clauses": 3})
        assert response["success"] is True
        assert response["action"] == "encode"
        assert response["result"] == {"clauses": 3}
        assert "timestamp" in response
        assert "result" not in success_response("encode")

    def test_error(self):
        """Test the error envelope."""
        response = error_response("usage", "bad n", 2, suggestion="use --n")
        assert response["success"] is False
        assert response["error"] == {
            "type": "usage",
            "message": "bad n",
            "exit_code": 2,
            "suggestion": "use --n",
        }
        assert "suggestion" not in error_response("io", "disk full")["error"]

    def test_format_pairs(self):
        """Test key=value rendering in insertion order."""
        assert format_pairs({"clauses": 5, "aux": 0}) == "clauses=5 aux=0"


class TestTiming:
    """Test the stopwatch."""

    def test_stopwatch(self):
        """Test that a stopped watch keeps its reading."""
        with Stopwatch() as watch:
            time.sleep(0.01)
        reading = watch.elapsed_ms
        assert reading >= 10
        assert watch.elapsed_ms == reading

    def test_unstarted(self):
        """Test a watch that never ran."""
        assert Stopwatch().elapsed_ms == 0.0
