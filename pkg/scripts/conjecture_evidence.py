"""Rank tables for the even, depth and block components against the series predictions.

    python3 scripts/conjecture_evidence.py --smax 33 --degree 3 --out results/
"""

import argparse
import logging
from pathlib import Path

from blockdepth.cache import ComponentCache, set_default_cache
from blockdepth.config import default_cache_dir
from blockdepth.series import compare_dimensions, rows_to_csv

logging.basicConfig(level=logging.INFO, format="%(message)s")
log = logging.getLogger("evidence")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--smax", type=int, default=33)
    ap.add_argument("--degree", type=int, default=3)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    set_default_cache(ComponentCache(default_cache_dir()))
    args.out.mkdir(parents=True, exist_ok=True)

    ranks = {}
    for algebra in ("even", "depth", "block"):
        rows = compare_dimensions(algebra, args.smax, args.degree)
        (args.out / f"compare-{algebra}.csv").write_text(rows_to_csv(rows))
        ranks[algebra] = {(r.weight, r.degree): r.computed for r in rows}
        bad = [r for r in rows if r.mismatch]
        log.info("%s: %d components, %d mismatches", algebra, len(rows), len(bad))
        for r in bad:
            log.info("  weight %d degree %d: predicted %d, computed %d", r.weight, r.degree, r.predicted, r.computed)

    diff = [k for k in ranks["even"] if ranks["even"][k] != ranks["depth"][k]]
    log.info("even vs depth rank differences: %s", diff or "none")


if __name__ == "__main__":
    main()
