"""Run every registered check over all lattices up to a size; print the text report.

Exits with the report's exit code (1 if any always-holds check has a violation).
"""
import argparse
import sys
import time
from dataclasses import dataclass

from lattika.enumerate import enumerate_up_to
from lattika.harness.runner import emit_report, run_suite


@dataclass
class Config:
    max_n: int = 7
    checks: str = "all"
    jobs: int = 1


def main(cfg: Config) -> int:
    start = time.perf_counter()
    report = run_suite(enumerate_up_to(cfg.max_n), cfg.checks, jobs=cfg.jobs)
    print(emit_report(report, timing=True))
    print(f"total {time.perf_counter() - start:.1f}s")
    return report.exit_code


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--checks", default=Config.checks)
    p.add_argument("--jobs", type=int, default=Config.jobs)
    sys.exit(main(Config(**vars(p.parse_args()))))
