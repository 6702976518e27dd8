"""
Load the defaults table from configs/defaults.yaml.

The YAML file is the single place where numerical defaults live; the
pydantic model below carries the same values so the package still works
when the file is absent (e.g. an installed wheel without configs/).
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import List, Optional

import yaml
from pydantic import BaseModel, Field

DEFAULTS_PATH = Path(__file__).resolve().parents[3] / "configs" / "defaults.yaml"


class Defaults(BaseModel):
    """Numerical and I/O defaults shared by the library and the CLI."""

    tol: float = Field(default=1e-12, gt=0)
    r_max: float = Field(default=1e3, gt=0)
    r0: float = Field(default=1e-4, gt=0, le=0.01)
    r_switch: float = Field(default=1.0, gt=0)
    s_horizon: float = Field(default=60.0, gt=0)
    blow_up_threshold: float = Field(default=1e8, gt=0)
    derivative_threshold: float = Field(default=1e12, gt=0)
    norm_threshold: float = Field(default=1e8, gt=0)
    offsets: str = "1e-2..1e-8"
    epsilons: List[float] = Field(default_factory=lambda: [1e-6, 1e-7, 1e-8])
    cone_epsilon: float = Field(default=1e-6, gt=0, le=1e-4)
    cone_s_span: float = Field(default=5.0, ge=1.0)
    reliable_fraction: float = Field(default=0.5, gt=0, lt=1)
    profile_points: int = Field(default=512, ge=2)
    workers: int = Field(default=1, ge=1)
    output_dir: str = "runs"
    log_level: str = "INFO"


@lru_cache(maxsize=None)
def _load(path: Path) -> Defaults:
    if not path.exists():
        return Defaults()
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    return Defaults.model_validate(data)


def load_defaults(path: Optional[Path] = None) -> Defaults:
    """Return the (cached) defaults table."""
    return _load(Path(path) if path is not None else DEFAULTS_PATH)
