#!/usr/bin/env python3
"""Run the standard parameter grids on the public contact datasets.

Expects the raw files in ``$DGCLIQUE_DATA`` (default ``./data``) and writes
one output directory per dataset under ``--out``.  Missing files are skipped.

    python3 scripts/dataset_sweeps.py --out runs --jobs 4
"""
import argparse
import os
import sys
from pathlib import Path

from dgclique import SweepConfig, read_edge_file, run_sweep
from dgclique.sweep import AUTO, parse_int_list

GRIDS = {
    # name: (file, format, dt, deltas, gammas)
    "infectious": ("out.sociopatterns-infectious", "4col", 20, "60:60:600", AUTO),
    "haggle": ("out.contact", "4col", 20, "60:60:600", AUTO),
    "college_message": (
        "CollegeMsg.txt", "3col", 1,
        "3600,43200,86400,259200,604800", "2,5,10,15,20,30,40,50",
    ),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--data", type=Path, default=Path(os.environ.get("DGCLIQUE_DATA", "data")))
    ap.add_argument("--out", type=Path, default=Path("runs"))
    ap.add_argument("--only", choices=sorted(GRIDS), action="append")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    for name in args.only or sorted(GRIDS):
        fname, fmt, dt, deltas, gammas = GRIDS[name]
        path = args.data / fname
        if not path.exists():
            print(f"{name}: {path} missing, skipped", file=sys.stderr)
            continue
        net = read_edge_file(path, fmt, dt=dt)
        print(f"{name}: {len(net.vertices)} vertices, {len(net.edges)} links, dt={net.dt}", file=sys.stderr)
        config = SweepConfig(
            deltas=parse_int_list(deltas),
            gammas=gammas if gammas == AUTO else parse_int_list(gammas),
            out_dir=args.out / name,
            jobs=args.jobs,
            record_wall_time=True,
        )
        for row in run_sweep(net, config):
            print(f"  delta={row.delta} gamma={row.gamma} maximal={row.maximal_count}", file=sys.stderr)


if __name__ == "__main__":
    main()
