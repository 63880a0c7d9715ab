# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
This module sets and manages configuration settings for siegel-traces.

Values come from the environment (optionally seeded from a .env file by
local_config). Command line flags and run configuration files override them.
"""
import os
import logging

from siegel_traces import local_config  # noqa: F401  (loads .env before the getenv calls below)

logger = logging.getLogger(__name__)

TOOL_VERSION = "0.3.0"


def _int_setting(name: str, default: int) -> int:
    raw = os.getenv(name, str(default))
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Invalid integer '{raw}' for {name}. Defaulting to {default}.")
        return default


# --- Logging Configuration ---

# Standard levels: DEBUG, INFO, WARNING, ERROR, CRITICAL
log_level_str = os.getenv('LOG_LEVEL', 'info').upper()
LOG_LEVEL = logging.getLevelName(log_level_str)

if not isinstance(LOG_LEVEL, int):
    logger.warning(f"Invalid log level '{log_level_str}'. Defaulting to INFO.")
    LOG_LEVEL = logging.INFO

LOG_CONFIG_PATH = os.getenv("SIEGEL_LOG_CONFIG", "log_config.json")

# --- Finite field and census limits ---

# Largest field that may be tabulated (37**2: the quadratic extension of F_37).
FIELD_CAP = _int_setting("SIEGEL_FIELD_CAP", 37 ** 2)
# Largest base field for a census without --long-run.
CENSUS_CAP = _int_setting("SIEGEL_CENSUS_CAP", 13)
# Largest base field for a census with --long-run.
LONG_RUN_CAP = _int_setting("SIEGEL_LONG_RUN_CAP", 37)
# Default weight cap: l+m = 18 is the largest weight the congruence table needs.
WEIGHT_CAP = _int_setting("SIEGEL_WEIGHT_CAP", 18)
SHARDS = _int_setting("SIEGEL_SHARDS", 1)
# Number of (polynomial, point, digit) cells evaluated in one numpy batch.
BATCH_CELLS = _int_setting("SIEGEL_BATCH_CELLS", 2 ** 22)

# --- Caches and output ---

CACHE_DIR = os.getenv("SIEGEL_CACHE_DIR", ".siegel_cache")
OUTPUT_FORMAT = os.getenv("SIEGEL_OUTPUT_FORMAT", "json").lower()
if OUTPUT_FORMAT not in ("json", "csv"):
    logger.warning(f"Invalid output format '{OUTPUT_FORMAT}'. Defaulting to json.")
    OUTPUT_FORMAT = "json"

# --- Normalization variants ---

# "calibrated" selects the conjugate-pair variant with the calibration oracles.
KAPPA = os.getenv("SIEGEL_KAPPA", "calibrated").lower()
if KAPPA not in ("calibrated", "literal", "double"):
    logger.warning(f"Invalid kappa variant '{KAPPA}'. Defaulting to calibrated.")
    KAPPA = "calibrated"

# Largest prime for which Hecke data is prepared when nothing larger is requested.
HECKE_PRIME_CAP = _int_setting("SIEGEL_HECKE_PRIME_CAP", 13)
