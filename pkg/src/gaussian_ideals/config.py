from __future__ import annotations

import os
from dataclasses import dataclass

from dotenv import load_dotenv


@dataclass(frozen=True)
class AppConfig:
    default_field: str
    max_reductions: int
    scenario_timeout_seconds: float
    enumeration_limit: int
    workers: int


def _int_env(name: str, default: str) -> int:
    raw = os.getenv(name, default)
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value


def load_config() -> AppConfig:
    load_dotenv(override=False)

    field = os.getenv("GAUSS_FIELD", "gf:32003").strip()
    if not field:
        raise ValueError("GAUSS_FIELD is empty.")

    timeout_raw = os.getenv("GAUSS_SCENARIO_TIMEOUT", "120")
    try:
        timeout = float(timeout_raw)
    except ValueError as exc:
        raise ValueError(f"GAUSS_SCENARIO_TIMEOUT must be a number, got {timeout_raw!r}") from exc

    workers = _int_env("GAUSS_WORKERS", "1")
    if workers == 0:
        raise ValueError("GAUSS_WORKERS must be at least 1")

    return AppConfig(
        default_field=field,
        max_reductions=_int_env("GAUSS_MAX_REDUCTIONS", "10000000"),
        scenario_timeout_seconds=timeout,
        enumeration_limit=_int_env("GAUSS_ENUMERATION_LIMIT", "2000000"),
        workers=workers,
    )
