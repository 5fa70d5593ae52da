#!/usr/bin/env python3
"""Regenerate the reference value tables as CSV files.

Writes one file per function tag into the output directory (default
./tables).  The first six rows of f, fk(k=2), mbar and mbark(k=2) are the
classically tabulated values; everything beyond is fresh exact computation.
"""

import argparse
import pathlib

from menon_subsets import MemoCache, build_sieve
from menon_subsets.cli import SequenceTable, _compute_one


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=60)
    parser.add_argument("--out-dir", default="tables")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    sieve = build_sieve(max(args.n_max, 1))
    cache = MemoCache()

    jobs = [
        ("f", None),
        ("fk", 2),
        ("phi", None),
        ("phik", 2),
        ("menon", None),
        ("mbar", None),
        ("mbark", 2),
    ]
    for tag, k in jobs:
        rows = [
            (n, _compute_one(tag, n, k, "auto", sieve, cache))
            for n in range(1, args.n_max + 1)
        ]
        table = SequenceTable(function=tag, k=k, rows=rows)
        name = tag if k is None else f"{tag}{k}"
        path = out_dir / f"{name}.csv"
        path.write_text(table.to_csv(), encoding="utf-8", newline="\n")
        print(f"wrote {path} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
