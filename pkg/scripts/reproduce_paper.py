#!/usr/bin/env python3
"""Re-derive the published counting and identity results from scratch.

Usage: python3 scripts/reproduce_paper.py [--only {growth,algebra,identities}]
Exit status 1 if any target fails.
"""

import argparse
import sys
import time

from adequa.reproduce import run_targets


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", choices=["growth", "algebra", "identities"], default=None)
    args = ap.parse_args()

    t0 = time.time()
    results = run_targets(only=args.only)
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        failed += 0 if r.passed else 1
        print("%-*s  [%-10s]  %s  %s" % (width, r.name, r.group, mark, r.detail))
    print(
        "%d/%d targets passed in %.1fs"
        % (len(results) - failed, len(results), time.time() - t0)
    )
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
