# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Process entry point: logging bootstrap, then the command line.
"""
import json
import logging
import logging.config
import sys

from siegel_traces.config import LOG_CONFIG_PATH, LOG_LEVEL

logger = logging.getLogger(__name__)


def setup_logging(config_path=LOG_CONFIG_PATH, level=LOG_LEVEL):
    """Loads logging configuration from a JSON file; LOG_LEVEL then sets every siegel_traces logger."""
    try:
        with open(config_path, 'rt') as f:
            config = json.load(f)

        # Apply the configuration
        logging.config.dictConfig(config)
        for name in config.get("loggers", {}):
            if name.startswith("siegel_traces"):
                logging.getLogger(name).setLevel(level)

    except FileNotFoundError:
        print(f"Error: Config file '{config_path}' not found. Using basic config.", file=sys.stderr)
        logging.basicConfig(level=level)
    except json.JSONDecodeError:
        print(f"Error: Could not parse '{config_path}'. Using basic config.", file=sys.stderr)
        logging.basicConfig(level=level)
    except Exception as e:
        print(f"An error occurred during logging setup: {e}", file=sys.stderr)
        logging.basicConfig(level=level)


def main(argv=None) -> int:
    setup_logging()
    from siegel_traces.cli import run

    logger.info("siegel-traces startup...")
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
