'''
    Load environment variables from a local .env file, if there is one.
    Imported by siegel_traces.config before any setting is read.
'''
import os
from pathlib import Path

from dotenv import load_dotenv

env_file = Path(os.getenv("SIEGEL_ENV_FILE", ".env"))
if env_file.is_file() and not load_dotenv(env_file):
    print(f"Failed to load environment variables from {env_file}.")
