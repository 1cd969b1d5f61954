#!/usr/bin/env python3
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from datetime import datetime, timezone
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from mertens_ec.isogeny import admissible_classes, admissible_traces, classify, prime_powers_up_to
from mertens_ec.mertens import (
    conjecture_check_exact,
    limsup_ratio,
    residue_table,
    theorem_condition,
    verdict,
)
from mertens_ec.mobius import closed_form_ratio, mertens_sums, mobius_coefficients
from mertens_ec.oracle import product_oracle, trace_census

CLOSED_FORM_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]
CENSUS_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13]


def check_closed_forms() -> bool:
    for q in CLOSED_FORM_ORDERS:
        for cls in admissible_classes(q):
            traj = mertens_sums(cls, 300)
            for x, exact in enumerate(traj.ratios, start=1):
                if not math.isclose(closed_form_ratio(cls, x), exact, rel_tol=1e-9, abs_tol=1e-9):
                    print(f"[acceptance] closed form mismatch {cls.label()} X={x}")
                    return False
    return True


def check_product_oracle() -> bool:
    for q in prime_powers_up_to(9):
        for cls in admissible_classes(q):
            if product_oracle(cls, 12) != mobius_coefficients(cls, 12).coeffs:
                print(f"[acceptance] product oracle mismatch {cls.label()}")
                return False
    return True


def check_census() -> bool:
    return all(trace_census(q).realized_traces == admissible_traces(q) for q in CENSUS_ORDERS)


def check_theorem() -> bool:
    for q in prime_powers_up_to(64):
        for cls in admissible_classes(q):
            v = verdict(q, cls.a)
            if v.holds != (theorem_condition(cls) is not None):
                return False
            if v.holds and conjecture_check_exact(cls, 500) is not None:
                return False
            if not v.holds and cls.case.is_rational and not cls.case.is_double_zero:
                if conjecture_check_exact(cls, 3 * cls.period) is None:
                    return False
    return True


def check_tables() -> bool:
    return (
        math.isclose(limsup_ratio(classify(9, -3)), 4 / 3, abs_tol=1e-12)
        and math.isclose(limsup_ratio(classify(8, -4)), math.sqrt(2) + 2 ** -1.5, abs_tol=1e-12)
        and [str(v) for v in residue_table(classify(9, 0)).values] == ["1", "1/3", "-1", "-1/3"]
    )


def check_erratum() -> bool:
    traj = mertens_sums(classify(3, 3), 6)
    far = mertens_sums(classify(27, 9), 4)
    return (
        traj.sums == [1, 0, -3, -9, -18, -27]
        and math.isclose(limsup_ratio(classify(3, 3)), 2 / math.sqrt(3), abs_tol=1e-12)
        and far.sums[3] == -1215
    )


def check_equality() -> bool:
    for q, a in [(9, 3), (2, 2), (49, 0)]:
        cls = classify(q, a)
        profile = residue_table(cls)
        hits = {r for r, v in enumerate(profile.values) if v.square == 1}
        traj = mertens_sums(cls, 120)
        for x, m in enumerate(traj.sums, start=1):
            if (x % profile.period in hits) != (m * m == q ** x):
                return False
    return True


def check_irrational() -> bool:
    cls = classify(2, -1)
    target = 4 / math.sqrt(7)
    running = max(abs(r) for r in mertens_sums(cls, 10_000).ratios)
    return target - 0.05 <= running <= target + 1e-9 and conjecture_check_exact(cls, 10_000) is not None


CHECKS = [
    ("Closed form vs exact ratios", check_closed_forms),
    ("Euler-product oracle", check_product_oracle),
    ("Waterhouse census", check_census),
    ("Verdict holds iff a bound condition matches", check_theorem),
    ("Residue table fixtures", check_tables),
    ("Char-3 table regression", check_erratum),
    ("Equality infinitely often", check_equality),
    ("Irrational-angle behaviour", check_irrational),
]


def main(out: Path, skip_census: bool = False):
    tests = []
    for name, fn in CHECKS:
        if skip_census and fn is check_census:
            tests.append({"name": name, "pass": None, "skipped": True})
            continue
        t0 = time.time()
        entry = {"name": name}
        try:
            ok = bool(fn())
        except Exception as e:
            # a crashing check fails on its own; the rest still run
            ok = False
            entry["error"] = f"{type(e).__name__}: {e}"
        entry.update({"pass": ok, "seconds": round(time.time() - t0, 2)})
        tests.append(entry)
        print(f"[acceptance] {name}: {'OK' if ok else 'FAIL'}")

    pass_n = sum(1 for x in tests if x["pass"])
    run_n = sum(1 for x in tests if x["pass"] is not None)
    payload = {
        "generated_utc": datetime.now(timezone.utc).isoformat(),
        "tests": tests,
        "pass_count": pass_n,
        "total_tests": run_n,
        "status": "ok" if pass_n == run_n else "degraded",
    }
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(payload, indent=2), encoding="utf-8")
    print("DONE ✅ wrote:", out)
    return 0 if payload["status"] == "ok" else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description="Run the acceptance checks and write a JSON report.")
    ap.add_argument("--out", type=Path, default=ROOT / "outputs" / "acceptance_report.json")
    ap.add_argument("--skip-census", action="store_true", help="skip the curve enumeration (slowest check)")
    args = ap.parse_args()
    raise SystemExit(main(args.out, args.skip_census))
