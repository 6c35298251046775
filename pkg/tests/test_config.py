"""
Tests for the packaged configuration and its environment overrides.

Run with:
    pytest tests/test_config.py -v
"""

import dataclasses  # noqa: E402
import json  # noqa: E402
import logging  # noqa: E402
import os  # noqa: E402
import sys  # noqa: E402

sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))  # noqa: E402

import pytest  # noqa: E402

from storient.config import (
    CENSUS_WORKERS_ENV,
    NODE_BUDGET_ENV,
    SolverConfig,
    load_config,
)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in (NODE_BUDGET_ENV, CENSUS_WORKERS_ENV):
        monkeypatch.delenv(name, raising=False)


class TestSolverConfig:
    def test_packaged_defaults(self):
        config = SolverConfig.from_file()
        assert config.node_budget == 100_000_000
        assert config.filter_min_degree == 5
        assert config.census_workers == 1

    def test_env_names(self):
        assert NODE_BUDGET_ENV == "STORIENT_NODE_BUDGET"
        assert CENSUS_WORKERS_ENV == "STORIENT_CENSUS_WORKERS"

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv(NODE_BUDGET_ENV, "5000")
        monkeypatch.setenv(CENSUS_WORKERS_ENV, "3")
        config = load_config()
        assert config.node_budget == 5000
        assert config.census_workers == 3

    def test_malformed_override_keeps_default(self, monkeypatch, caplog):
        monkeypatch.setenv(NODE_BUDGET_ENV, "lots")
        logger = logging.getLogger("storient.test.config")
        with caplog.at_level(logging.WARNING, logger="storient.test.config"):
            config = load_config(logger)
        assert config.node_budget == 100_000_000
        assert NODE_BUDGET_ENV in caplog.text

    def test_non_positive_override_ignored(self, monkeypatch):
        monkeypatch.setenv(NODE_BUDGET_ENV, "0")
        assert load_config().node_budget == 100_000_000

    def test_custom_file(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(
            json.dumps(
                {
                    "solver": {"node_budget": 7, "filter_min_degree": 6},
                    "census": {"chunk_size": 10, "workers": 2},
                }
            )
        )
        config = SolverConfig.from_file(path)
        assert config.node_budget == 7
        assert config.census_chunk_size == 10

    def test_frozen(self):
        config = SolverConfig.from_file()
        with pytest.raises(dataclasses.FrozenInstanceError):
            config.node_budget = 1
