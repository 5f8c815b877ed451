"""
Runtime settings for bracketfix

Guards and logging level come from the environment (a .env file is merged first).
"""

import os
import logging
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


class Settings(BaseModel):
    """Solver guards and logging configuration"""
    oracle_max_n: int = Field(default=8, ge=1, description="Largest n the brute-force oracle accepts")
    dp_max_n: int = Field(default=24, ge=1, description="Largest n the subset DP accepts (table is 2^n * n)")
    fixer_max_n: int = Field(default=64, ge=1, description="Largest n the feedback-arc-set fixer accepts")
    fixer_max_k: int = Field(default=4, ge=0, description="Largest feedback arc set the fixer enumerates guesses for")
    weight_cap: int = Field(default=10000, ge=0, description="Largest demand weight dp_max_weight accepts")
    gen_max_k: int = Field(default=16, ge=0, description="Largest number of reversed arcs gen_instance accepts")
    log_level: str = Field(default="WARNING", description="Level used by the CLI and the tool server")


_ENV_FIELDS = {
    "oracle_max_n": "BRACKETFIX_ORACLE_MAX_N",
    "dp_max_n": "BRACKETFIX_DP_MAX_N",
    "fixer_max_n": "BRACKETFIX_FIXER_MAX_N",
    "fixer_max_k": "BRACKETFIX_FIXER_MAX_K",
    "weight_cap": "BRACKETFIX_WEIGHT_CAP",
    "gen_max_k": "BRACKETFIX_GEN_MAX_K",
    "log_level": "BRACKETFIX_LOG_LEVEL",
}


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Build settings from the environment once per process"""
    load_dotenv()
    values = {}
    for field, env_var in _ENV_FIELDS.items():
        raw = os.getenv(env_var)
        if raw is not None and raw.strip():
            values[field] = raw.strip()
    settings = Settings(**values)
    logger.debug(f"Loaded settings: {settings.model_dump()}")
    return settings
