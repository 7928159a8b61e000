#!/usr/bin/env python3
"""Run every verification suite and print one combined summary.

This is the "is everything still true?" entry point: the fermionic
anticommutators, the correspondence window, the homology-invariance fuzz
battery, and the full categorified-operator suite, all at the configured
caps.  Exits nonzero if any check fails.

Usage:
    python3 scripts/run_all_checks.py [--max-degree N] [--json] [--jobs K]
"""

import argparse
import json
import sys
import time

from bosonfermion.cli import _default_suite, run_tasks
from bosonfermion.config import RunConfig
from bosonfermion.fock import clifford_relation_report, verify_correspondence
from bosonfermion.homalg import elimination_fuzz_report


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-degree", dest="max_degree", type=int,
                        default=None)
    parser.add_argument("--charge-window", dest="charge_window", default=None)
    parser.add_argument("--index-window", dest="index_window", default=None)
    parser.add_argument("--cache-dir", dest="cache_dir", default=None)
    parser.add_argument("--no-cache", dest="no_cache", action="store_true")
    parser.add_argument("--json", dest="json", action="store_true")
    parser.add_argument("--jobs", dest="jobs", type=int, default=None)
    parser.add_argument("--fuzz", type=int, default=100,
                        help="number of fuzzed complexes for the "
                             "elimination battery")
    args = parser.parse_args(argv)
    cfg = RunConfig.resolve("all", args)

    t0 = time.time()
    reports = [
        clifford_relation_report(cfg.max_degree, cfg.charge_window,
                                 cfg.index_window),
        verify_correspondence(cfg.max_degree, cfg.charge_window,
                              cfg.index_window),
        elimination_fuzz_report(instances=args.fuzz),
    ]
    reports.extend(run_tasks(_default_suite(cfg, cfg.effective_cache_dir),
                             jobs=cfg.jobs))
    elapsed = time.time() - t0

    passed = all(r.passed for r in reports)
    if cfg.json_output:
        doc = {"config": cfg.to_json_obj(), "passed": passed,
               "reports": [r.to_json_obj() for r in reports]}
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    else:
        for r in reports:
            print(r.summary())
        checks = sum(len(r.checks) for r in reports)
        verdict = "PASS" if passed else "FAIL"
        print(f"{verdict}: {len(reports)} reports, {checks} checks, "
              f"{elapsed:.1f}s")
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
