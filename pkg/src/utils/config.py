"""
Runtime settings read from the environment (and a local .env file).
"""

import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

DEFAULT_NODE_BUDGET = 10_000_000
DEFAULT_MAX_N = 9


class Settings(BaseModel):
    """Knobs shared by the CLI and the library entry points."""
    node_budget: int = Field(default=DEFAULT_NODE_BUDGET, ge=1, description="Canonical search node budget")
    max_n: int = Field(default=DEFAULT_MAX_N, ge=1, description="Largest n accepted by enumerate_connected")
    threads: int = Field(default=1, ge=1, description="Census worker processes")
    log_level: str = Field(default="INFO", description="Log level for the command line")

    @classmethod
    def from_env(cls, dotenv: bool = False) -> "Settings":
        """
        Build settings from PK_* environment variables.

        Args:
            dotenv: Load a .env file from the working directory first

        Returns:
            Settings instance
        """
        if dotenv:
            load_dotenv()
        return cls(
            node_budget=int(os.getenv("PK_NODE_BUDGET", str(DEFAULT_NODE_BUDGET))),
            max_n=int(os.getenv("PK_MAX_N", str(DEFAULT_MAX_N))),
            threads=int(os.getenv("PK_THREADS", str(os.cpu_count() or 1))),
            log_level=os.getenv("PK_LOG_LEVEL", "INFO"),
        )


def resolve_node_budget(node_budget: Optional[int]) -> int:
    """Explicit budget wins; otherwise PK_NODE_BUDGET or the default."""
    if node_budget is not None:
        return node_budget
    return int(os.getenv("PK_NODE_BUDGET", str(DEFAULT_NODE_BUDGET)))
