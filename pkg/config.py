import os
import logging
from dotenv import load_dotenv

# Load environment variables from .env file if present
load_dotenv()


def _optional_float(name):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return None
    return float(raw)


class Config:
    """Base configuration class."""
    # Solver resource budget
    BUDGET = int(os.environ.get('BDNCG_BUDGET', 10_000_000))
    TIMEOUT = _optional_float('BDNCG_TIMEOUT')

    # Per-player parallelism for check / analyze
    JOBS = int(os.environ.get('BDNCG_JOBS', 1))

    # Common Settings
    LOG_LEVEL = os.environ.get('BDNCG_LOG_LEVEL', 'INFO').upper()
    OUTPUT_DIR = os.environ.get('BDNCG_OUTPUT_DIR', '')

    @classmethod
    def validate(cls):
        """Validate critical configuration."""
        if cls.BUDGET <= 0:
            raise ValueError("BDNCG_BUDGET must be a positive number of node expansions.")
        if cls.JOBS <= 0:
            raise ValueError("BDNCG_JOBS must be at least 1.")
        if cls.TIMEOUT is not None and cls.TIMEOUT < 0:
            raise ValueError("BDNCG_TIMEOUT must not be negative.")

        if cls.BUDGET < 1000:
            logging.warning(f"Solver budget is very low ({cls.BUDGET}); exact checks may hit the resource limit.")
