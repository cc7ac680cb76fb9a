#!/usr/bin/env python3
"""Run the end-to-end fuzz driver from the command line.

Thin wrapper over ambicalc.harness.fuzz for experiment sweeps; prints the
deterministic report and exits nonzero if any property failed.
"""

import argparse
import sys

from ambicalc import GenConfig, fuzz


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--atoms", type=int, default=5)
    ap.add_argument("--situations", type=int, default=10)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--selectors", type=int, default=5)
    ap.add_argument("--fault-injection", action="store_true")
    ap.add_argument("--focal-bias", type=float, default=None)
    ap.add_argument("--zero-weights", action="store_true")
    args = ap.parse_args()
    cfg = GenConfig(
        m=args.atoms,
        n=args.situations,
        seed=args.seed,
        trials=args.trials,
        seeded_selectors=args.selectors,
        fault_injection=args.fault_injection,
        focal_bias=args.focal_bias,
        zero_weights=args.zero_weights,
    )
    report = fuzz(cfg)
    print(report.render())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
