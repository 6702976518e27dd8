"""
CSV and JSON artifacts.

Floats are written with 17 significant digits so identical runs give
byte-identical files.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple

from ..schemas.branches import Branch, DirichletProfile
from ..schemas.trajectories import Orbit, Trajectory
from ..utils.constants import (
    BRANCH_CSV_HEADER,
    ORBIT_CSV_HEADER,
    PROFILE_CSV_HEADER,
    RADIAL_CSV_HEADER,
)
from ..utils.errors import DomainError


@dataclass
class Table:
    """Header plus numeric rows, as read back from an artifact CSV."""

    header: Tuple[str, ...]
    rows: List[Tuple[float, ...]]

    def column(self, name: str) -> List[float]:
        if name not in self.header:
            raise DomainError(f"column {name!r} not in {self.header}")
        k = self.header.index(name)
        return [row[k] for row in self.rows]


def _fmt(value: Any) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def write_csv(path: Path, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(float(v)) for v in row])
    return path


def read_csv(path: Path) -> Table:
    path = Path(path)
    if not path.exists():
        raise DomainError(f"input file not found: {path}")
    with open(path, "r", newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        try:
            header = tuple(next(reader))
        except StopIteration:
            raise DomainError(f"empty CSV file: {path}") from None
        rows = [tuple(float(v) for v in row) for row in reader if row]
    return Table(header=header, rows=rows)


def write_json(path: Path, payload: Dict[str, Any]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")
    return path


def write_trajectory(path: Path, trajectory: Trajectory) -> Path:
    """Radial samples as `r,U,U1,U2,U3` plus a `<name>.event.json` sidecar."""
    path = write_csv(path, RADIAL_CSV_HEADER, trajectory.rows())
    write_json(path.with_suffix(".event.json"), trajectory.terminal_event.model_dump())
    return path


def write_orbit(path: Path, orbit: Orbit) -> Path:
    return write_csv(path, ORBIT_CSV_HEADER, orbit.rows())


def write_branch(path: Path, branch: Branch) -> Path:
    return write_csv(path, BRANCH_CSV_HEADER, [pt.to_row() for pt in branch.points])


def write_profile(path: Path, profile: DirichletProfile) -> Path:
    return write_csv(path, PROFILE_CSV_HEADER, profile.rows())
