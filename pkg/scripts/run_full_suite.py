"""Run the whole registry and write CSV and markdown reports.

    python3 scripts/run_full_suite.py [--out-dir reports] [--seed N]
"""
import argparse
import time
from pathlib import Path

from qident.verify import REGISTRY, SuiteConfig, emit_report, run_suite


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out-dir", default="reports")
    parser.add_argument("--seed", type=int)
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    t = time.perf_counter()
    report = run_suite(list(REGISTRY), SuiteConfig(seed=args.seed))
    elapsed = time.perf_counter() - t
    (out / "report.csv").write_bytes(emit_report(report, "csv"))
    (out / "report.md").write_bytes(emit_report(report, "markdown"))
    for s in report.summaries:
        print(f"{'PASS' if s.ok else 'FAIL'} {s.case_id:>4} {s.passed:>4}/{s.total:<4} {s.description}")
        for note in s.notes:
            print(f"           {note}")
    print(f"{len(report.results)} points in {elapsed:.1f}s; reports in {out}/")


if __name__ == "__main__":
    main()
