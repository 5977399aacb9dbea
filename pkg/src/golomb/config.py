"""Run-scale configuration: search budgets, parallelism, output routing."""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_NODE_BUDGET = 10**9
BUDGET_ENV_VAR = "GOLOMB_BUDGET"
OUTPUT_FORMATS = ("text", "json", "csv")


def resolve_budget(explicit: int | None = None) -> int:
    """Explicit value if given, else the GOLOMB_BUDGET environment variable,
    else the built-in default."""
    if explicit is not None:
        if explicit <= 0:
            raise ValueError("budget must be positive")
        return explicit
    env = os.environ.get(BUDGET_ENV_VAR)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {env!r}") from None
        if value <= 0:
            raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
        return value
    return DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class RunConfig:
    budget: int = DEFAULT_NODE_BUDGET
    jobs: int = 1
    fmt: str = "text"
    output: str | None = None

    def __post_init__(self):
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.fmt not in OUTPUT_FORMATS:
            raise ValueError(f"format must be one of {OUTPUT_FORMATS}")
