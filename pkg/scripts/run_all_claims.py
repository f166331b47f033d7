"""Run every claim check at its default scope and write one combined JSON report.

    python scripts/run_all_claims.py --out results/claims.json --workers 4
"""

import argparse
import time
from pathlib import Path

from c4spectra import verify as V


def all_reports(workers: int) -> list:
    reports = [V.verify_thm31(n, k, "q", workers) for n, k in V.THM31_CASES]
    reports += [V.verify_thm32(n, "q", workers=workers) for n in range(6, 10)]
    reports += [V.verify_thm33(n, "q", workers=workers) for n in (8, 9)]
    reports.append(V.verify_lemma21_random(500, (5, 9), 42))
    reports += V.verify_bounds_corpus(7)
    reports.append(V.verify_polynomial_agreement())
    reports.append(V.verify_F_positivity())
    reports.append(V.verify_remark34(10, workers=workers))
    return reports


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results/claims.json")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    start = time.perf_counter()
    reports = all_reports(args.workers)
    for r in reports:
        print(f"{r.summary():70s} {r.timing:7.2f}s")
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(V.reports_to_json(reports) + "\n")
    status = V.combine(r.status for r in reports)
    print(f"overall: {status.upper()} in {time.perf_counter() - start:.1f}s -> {out}")
    return 0 if status == V.PASS else 1


if __name__ == "__main__":
    raise SystemExit(main())
