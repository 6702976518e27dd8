"""Artifact writers: CSV, JSON and SVG."""

from .artifacts import (
    Table,
    read_csv,
    write_branch,
    write_csv,
    write_json,
    write_orbit,
    write_profile,
    write_trajectory,
)
from .svg import emit_svg

__all__ = [
    "Table",
    "read_csv",
    "write_csv",
    "write_json",
    "write_trajectory",
    "write_orbit",
    "write_branch",
    "write_profile",
    "emit_svg",
]
