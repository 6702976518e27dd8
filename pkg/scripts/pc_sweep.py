"""p_c sweep runner.

Computes the Sobolev exponent, p_c(n) and the residual
|p_c K0(p_c) - n^2 (n-4)^2 / 16| / hardy for a range of dimensions and
writes the table as JSON.

# Example usage (from repo root):
python3 scripts/pc_sweep.py --n-min 13 --n-max 30 --out runs/pc_sweep.json
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Dict, List


def _ensure_import_path() -> None:
    repo_root = Path(__file__).resolve().parents[1]
    src_path = repo_root / "src"
    if str(src_path) not in sys.path:
        sys.path.insert(0, str(src_path))


def _parse_args() -> argparse.Namespace:
    p = argparse.ArgumentParser(description="p_c(n) sweep")
    p.add_argument("--n-min", type=int, default=13)
    p.add_argument("--n-max", type=int, default=30)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--out", type=str, default="runs/pc_sweep.json")
    return p.parse_args()


def _write_json(path: Path, obj: Any) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def main() -> int:
    _ensure_import_path()
    from sbe_backend.theory import critical_exponent_pc, critical_sobolev_exponent, hardy_constant, k0_times_p_minus_hardy
    from sbe_backend.utils import NumericalError, get_logger

    logger = get_logger("pc_sweep")
    args = _parse_args()
    rows: List[Dict[str, Any]] = []
    started = time.perf_counter()
    for n in range(args.n_min, args.n_max + 1):
        try:
            p_c = critical_exponent_pc(n, tol=args.tol)
        except NumericalError as exc:
            logger.error(f"n={n}: {exc}")
            return 3
        residual = None
        if p_c is not None:
            residual = abs(k0_times_p_minus_hardy(n, p_c)) / hardy_constant(n)
        rows.append({"n": n, "p_sobolev": critical_sobolev_exponent(n), "p_c": p_c, "rel_residual": residual})
        logger.info(f"n={n}: p_c={p_c}")
    elapsed = time.perf_counter() - started

    _write_json(Path(args.out), {"tol": args.tol, "elapsed_s": elapsed, "rows": rows})
    print(f"wrote {len(rows)} rows to {args.out} in {elapsed:.3f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
