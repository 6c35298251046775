"""
Runtime configuration of the solver and the census.

Defaults are loaded from ``resources/config/defaults.json``.  Environment
variables prefixed with ``STORIENT_`` override the JSON values when set:

* ``STORIENT_NODE_BUDGET``    – node cap of one orientation search,
* ``STORIENT_CENSUS_CHUNK``   – labeled-graph indices per census work unit,
* ``STORIENT_CENSUS_WORKERS`` – default number of census worker processes.
"""

import os
import json
import logging
import pathlib

from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

from storient.constants import _DontChangeMe


_CONFIG_PATH = (
    pathlib.Path(__file__).resolve().parent / "resources" / "config" / "defaults.json"
)

NODE_BUDGET_ENV = f"{_DontChangeMe.MAIN_ENV_PREFIX}NODE_BUDGET"
CENSUS_CHUNK_ENV = f"{_DontChangeMe.MAIN_ENV_PREFIX}CENSUS_CHUNK"
CENSUS_WORKERS_ENV = f"{_DontChangeMe.MAIN_ENV_PREFIX}CENSUS_WORKERS"


@dataclass(frozen=True)
class SolverConfig:
    """
    Immutable snapshot of the solver and census settings.

    JSON structure::

        {
          "solver": {"node_budget": 100000000, "filter_min_degree": 5},
          "census": {"chunk_size": 4096, "workers": 1}
        }

    ``filter_min_degree`` is the smallest vertex degree the neighbourhood
    prefilter looks at; every graph on at most four vertices is a
    comparability graph, so lower degrees can never certify anything.
    """

    node_budget: int
    filter_min_degree: int
    census_chunk_size: int
    census_workers: int

    @classmethod
    def from_file(cls, path: pathlib.Path = _CONFIG_PATH) -> "SolverConfig":
        """
        Load configuration from *path* and return a new :class:`SolverConfig`.
        """
        raw = cls._load_config_json(path)
        return cls(
            node_budget=int(raw["solver"]["node_budget"]),
            filter_min_degree=int(raw["solver"]["filter_min_degree"]),
            census_chunk_size=int(raw["census"]["chunk_size"]),
            census_workers=int(raw["census"]["workers"]),
        )

    @classmethod
    def from_env(
        cls,
        path: pathlib.Path = _CONFIG_PATH,
        logger: Optional[logging.Logger] = None,
    ) -> "SolverConfig":
        """
        Load the JSON defaults and apply the ``STORIENT_*`` overrides.

        Malformed or non-positive override values are reported through
        *logger* and the JSON default is kept.
        """
        config = cls.from_file(path)
        overrides: Dict[str, int] = {}
        for env_name, field_name in (
            (NODE_BUDGET_ENV, "node_budget"),
            (CENSUS_CHUNK_ENV, "census_chunk_size"),
            (CENSUS_WORKERS_ENV, "census_workers"),
        ):
            value = _positive_int_from_env(env_name, logger)
            if value is not None:
                overrides[field_name] = value
        return replace(config, **overrides) if overrides else config

    @staticmethod
    def _load_config_json(path: pathlib.Path) -> Dict[str, Any]:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)


def _positive_int_from_env(
    env_name: str, logger: Optional[logging.Logger]
) -> Optional[int]:
    raw = os.getenv(env_name, "").strip()
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        if logger:
            logger.warning("Malformed %s=%r, using default", env_name, raw)
        return None
    if value <= 0:
        if logger:
            logger.warning("%s must be positive, using default", env_name)
        return None
    return value


def load_config(logger: Optional[logging.Logger] = None) -> SolverConfig:
    """Shortcut for :meth:`SolverConfig.from_env` with the packaged defaults."""
    return SolverConfig.from_env(logger=logger)
