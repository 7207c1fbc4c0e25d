"""Run configuration shared by the command line and the scripts."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

CACHE_ENV = "BLOCKDEPTH_CACHE_DIR"
OUTPUT_FORMATS = ("json", "csv", "text")


def default_cache_dir() -> Optional[Path]:
    env = os.environ.get(CACHE_ENV)
    if env is not None:
        return Path(env) if env else None
    return Path.home() / ".cache" / "blockdepth"


@dataclass
class Config:
    weight_max: int = 34
    degree_max: int = 5
    cache_dir: Optional[Path] = field(default_factory=default_cache_dir)
    output_format: str = "text"
    jobs: int = 1
    max_rows: int = 5000

    def __post_init__(self):
        for name in ("weight_max", "degree_max", "jobs", "max_rows"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        if self.cache_dir is not None:
            self.cache_dir = Path(self.cache_dir)
