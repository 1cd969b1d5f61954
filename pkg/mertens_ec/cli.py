"""Command-line front end: python -m mertens_ec.cli <command> [flags]."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

import pandas as pd

from .config import RunConfig, load_run_config
from .errors import MertensError, RangeExceeded
from .finite_field import prime_power
from .isogeny import IsogenyClass, admissible_traces, classify
from .mertens import (
    SWEEP_COLUMNS,
    conjecture_scan,
    equality_residues,
    limsup_ratio,
    limsup_squared,
    residue_table,
    sweep,
    verdict,
    witness_search,
)
from .mobius import amplitude_and_phase, mertens_sums, mobius_coefficients
from .oracle import product_oracle, trace_census
from .schema import OutputRecord
from .units import fmt, fmt_ratio

log = logging.getLogger("mertens.cli")

COMMANDS = [
    "classify", "traces", "series", "sums", "verdict", "limsup", "table",
    "check", "witnesses", "sweep", "verify-product", "census",
]

Result = Tuple[List[OutputRecord], Optional[pd.DataFrame]]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _theta_text(cls: IsogenyClass, cfg: RunConfig) -> str:
    if cls.case.is_rational:
        return str(cls.case.theta_kind)
    return fmt_ratio(cls.theta, cfg.precision.ratio_digits)


def _inputs(args, *names: str) -> Dict[str, str]:
    return {n: str(getattr(args, n)) for n in names}


def _record(args, cfg: RunConfig, payload: dict, *inputs: str) -> OutputRecord:
    payload = fmt(payload, cfg.precision.ratio_digits)
    return OutputRecord(command=args.command, inputs=_inputs(args, *inputs), payload=payload)


def _frame(cfg: RunConfig, rows: List[dict], columns: Optional[List[str]] = None) -> pd.DataFrame:
    df = pd.DataFrame([fmt(r, cfg.precision.ratio_digits) for r in rows], columns=columns)
    return df.astype(object).where(df.notna(), None)


# --- commands ---

def cmd_classify(args, cfg: RunConfig) -> Result:
    cls = classify(args.q, args.a)
    payload = {
        "q": cls.q.q,
        "p": cls.p,
        "m": cls.m,
        "a": cls.a,
        "case": cls.case.tag.value,
        "theta": _theta_text(cls, cfg),
        "theta_radians": cls.theta,
        "discriminant": cls.discriminant,
    }
    return [_record(args, cfg, payload, "q", "a")], None


def cmd_traces(args, cfg: RunConfig) -> Result:
    rows = []
    for a in admissible_traces(args.q):
        cls = classify(args.q, a)
        rows.append({"a": a, "case": cls.case.tag.value, "theta": _theta_text(cls, cfg)})
    payload = {"traces": [r["a"] for r in rows]}
    return [_record(args, cfg, payload, "q")], _frame(cfg, rows)


def cmd_series(args, cfg: RunConfig) -> Result:
    series = mobius_coefficients(classify(args.q, args.a), args.nmax)
    rows = [{"N": n, "c": c} for n, c in enumerate(series.coeffs)]
    return [_record(args, cfg, {"coefficients": series.coeffs}, "q", "a", "nmax")], _frame(cfg, rows)


def cmd_sums(args, cfg: RunConfig) -> Result:
    traj = mertens_sums(classify(args.q, args.a), args.xmax)
    payload = {"sums": traj.sums, "ratios": traj.ratios}
    return [_record(args, cfg, payload, "q", "a", "xmax")], _frame(cfg, traj.rows())


def cmd_verdict(args, cfg: RunConfig) -> Result:
    v = verdict(args.q, args.a, dps=cfg.precision.dps)
    payload = {
        "case": v.cls.case.tag.value,
        "holds": v.holds,
        "condition": v.matched_condition,
        "limsup": v.limsup,
        "limsup_squared": v.limsup_squared,
    }
    return [_record(args, cfg, payload, "q", "a")], None


def cmd_limsup(args, cfg: RunConfig) -> Result:
    cls = classify(args.q, args.a)
    sq = limsup_squared(cls, cfg.precision.dps)
    payload = {
        "case": cls.case.tag.value,
        "limsup": limsup_ratio(cls, cfg.precision.dps),
        "limsup_squared": sq,
    }
    if not cls.case.is_double_zero:
        amplitude, omega = amplitude_and_phase(cls)
        payload["amplitude"] = amplitude
        payload["omega"] = omega
    return [_record(args, cfg, payload, "q", "a")], None


def cmd_table(args, cfg: RunConfig) -> Result:
    cls = classify(args.q, args.a)
    profile = residue_table(cls, dps=cfg.precision.dps)
    equal = set(equality_residues(cls, cfg.precision.dps))
    rows = [
        {"residue": r, "value": v, "numeric": float(v), "equality": r in equal}
        for r, v in enumerate(profile.values)
    ]
    payload = {
        "period": profile.period,
        "values": profile.values,
        "max_abs": profile.max_abs,
        "max_abs_squared": profile.max_abs_squared,
        "argmax_residues": profile.argmax_residues,
    }
    return [_record(args, cfg, payload, "q", "a")], _frame(cfg, rows)


def cmd_check(args, cfg: RunConfig) -> Result:
    scan = conjecture_scan(classify(args.q, args.a), args.xmax)
    payload = {
        "first_violation": scan.first_violation,
        "last_violation": scan.last_violation,
        "violation_count": scan.violation_count,
        "recurs": scan.recurs,
    }
    return [_record(args, cfg, payload, "q", "a", "xmax")], None


def cmd_witnesses(args, cfg: RunConfig) -> Result:
    found = witness_search(classify(args.q, args.a), args.epsilon, args.xmax)
    payload = {"witnesses": found, "count": len(found)}
    return [_record(args, cfg, payload, "q", "a", "epsilon", "xmax")], _frame(cfg, [{"X": x} for x in found])


def cmd_sweep(args, cfg: RunConfig) -> Result:
    df = sweep(args.qmax, args.xmax, threads=args.threads, dps=cfg.precision.dps)
    rows = df.astype(object).where(df.notna(), None).to_dict(orient="records")
    records = []
    for row in rows:
        row["theta"] = _theta_text(classify(row["q"], row["a"]), cfg)
        records.append(
            OutputRecord(
                command=args.command,
                inputs={"q": str(row["q"]), "a": str(row["a"]), "xmax": str(args.xmax)},
                payload=fmt(row, cfg.precision.ratio_digits),
            )
        )
    return records, _frame(cfg, rows, columns=SWEEP_COLUMNS)


def cmd_verify_product(args, cfg: RunConfig) -> Result:
    cls = classify(args.q, args.a)
    oracle = product_oracle(cls, args.nmax, max_degree=cfg.limits.product_max_degree)
    recurrence = mobius_coefficients(cls, args.nmax).coeffs
    match = oracle == recurrence
    if not match:
        log.warning("%s: product oracle disagrees with the recurrence", cls.label())
    rows = [{"N": n, "product": o, "recurrence": r} for n, (o, r) in enumerate(zip(oracle, recurrence))]
    payload = {"match": match, "product": oracle, "recurrence": recurrence}
    return [_record(args, cfg, payload, "q", "a", "nmax")], _frame(cfg, rows)


def cmd_census(args, cfg: RunConfig) -> Result:
    census = trace_census(
        args.q,
        force=args.force_large,
        threads=args.threads,
        max_order=cfg.limits.census_max_order,
        field_max_order=cfg.limits.field_max_order,
    )
    admissible = admissible_traces(args.q)
    payload = {
        "realized_traces": census.realized_traces,
        "admissible_traces": admissible,
        "match": census.realized_traces == admissible,
        "counts": census.counts,
        "curves": census.curve_count,
    }
    return [_record(args, cfg, payload, "q")], _frame(cfg, census.to_frame().to_dict(orient="records"))


HANDLERS: Dict[str, Callable[..., Result]] = {
    "classify": cmd_classify,
    "traces": cmd_traces,
    "series": cmd_series,
    "sums": cmd_sums,
    "verdict": cmd_verdict,
    "limsup": cmd_limsup,
    "table": cmd_table,
    "check": cmd_check,
    "witnesses": cmd_witnesses,
    "sweep": cmd_sweep,
    "verify-product": cmd_verify_product,
    "census": cmd_census,
}


# --- parsing / output ---

def _scalars(payload: dict) -> dict:
    return {k: v for k, v in payload.items() if not isinstance(v, (list, dict))}


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    fmt_group = common.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", action="store_true", help="one JSON record per line")
    fmt_group.add_argument("--csv", action="store_true", help="CSV table on standard out")
    common.add_argument("--verbose", action="store_true", help="debug progress on standard error")
    common.add_argument("--config", type=Path, default=None, help="run.yaml to read defaults from")

    ap = _Parser(prog="mertens", description="Mertens conjecture for elliptic curves over finite fields.")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help_text: str, *flags: str) -> _Parser:
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if "q" in flags:
            sp.add_argument("--q", type=int, required=True, help="field order p^m")
        if "a" in flags:
            sp.add_argument("--a", type=int, required=True, help="Frobenius trace")
        if "nmax" in flags:
            sp.add_argument("--nmax", type=int, default=None, help="truncation degree")
        if "xmax" in flags:
            sp.add_argument("--xmax", type=int, default=None, help="largest X scanned")
        if "epsilon" in flags:
            sp.add_argument("--epsilon", type=str, default=None, help="decimal in (0, 1)")
        if "qmax" in flags:
            sp.add_argument("--qmax", type=int, default=None, help="largest field order swept")
        if "threads" in flags:
            sp.add_argument("--threads", type=int, default=None, help="worker threads")
        if "force" in flags:
            sp.add_argument("--force-large", action="store_true", help="lift the census field-size cap")
        return sp

    add("classify", "Waterhouse case and Frobenius angle", "q", "a")
    add("traces", "admissible traces for q", "q")
    add("series", "Moebius coefficients c_0..c_nmax", "q", "a", "nmax")
    add("sums", "exact M(1..xmax) and normalised ratios", "q", "a", "xmax")
    add("verdict", "bounded-or-not verdict with the matched condition", "q", "a")
    add("limsup", "limsup of |M(X)| / q^{X/2}", "q", "a")
    add("table", "exact residue table for a rational-angle class", "q", "a")
    add("check", "exact conjecture check up to xmax", "q", "a", "xmax")
    add("witnesses", "X with |M(X)| > (1 - epsilon) q^{X/2}", "q", "a", "epsilon", "xmax")
    add("sweep", "verdicts for every admissible (q, a) with q <= qmax", "qmax", "xmax", "threads")
    add("verify-product", "compare the Euler-product oracle with the recurrence", "q", "a", "nmax")
    add("census", "traces realised by enumerating Weierstrass curves", "q", "threads", "force")
    return ap


def _apply_defaults(args, cfg: RunConfig) -> None:
    for name in ("nmax", "xmax", "epsilon", "qmax"):
        if hasattr(args, name) and getattr(args, name) is None:
            setattr(args, name, getattr(cfg.defaults, name))
    if hasattr(args, "threads") and args.threads is None:
        args.threads = cfg.threads or os.cpu_count() or 1
    for name in ("nmax", "xmax", "qmax", "threads"):
        value = getattr(args, name, None)
        if value is not None and value < (0 if name == "nmax" else 1):
            raise UsageError(f"--{name} must be positive")


def _check_limits(args, cfg: RunConfig) -> None:
    cap = cfg.limits.prime_power_max
    if getattr(args, "q", None) is not None:
        prime_power(args.q, max_q=cap)
    if getattr(args, "qmax", None) is not None and args.qmax > cap:
        raise RangeExceeded(f"qmax = {args.qmax} exceeds the supported range q <= {cap}")


def _emit(args, records: List[OutputRecord], table: Optional[pd.DataFrame]) -> None:
    out = sys.stdout
    if args.json:
        for rec in records:
            out.write(json.dumps(rec.to_dict(), ensure_ascii=False) + "\n")
        return
    if args.csv:
        if table is None:
            table = pd.DataFrame([_scalars(r.payload) for r in records])
        table.to_csv(out, index=False, lineterminator="\n")
        return
    if len(records) == 1:
        for key, value in _scalars(records[0].payload).items():
            out.write(f"{key}: {'-' if value is None else value}\n")
        if table is not None and not table.empty:
            out.write("\n")
    if table is not None and not table.empty:
        out.write(table.to_string(index=False, na_rep="-") + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = load_run_config(args.config)
        _apply_defaults(args, cfg)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="[%(name)s] %(message)s",
        stream=sys.stderr,
    )

    try:
        _check_limits(args, cfg)
        records, table = HANDLERS[args.command](args, cfg)
    except MertensError as e:
        print(f"{e.kind}: {e}", file=sys.stderr)
        return 2
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1

    _emit(args, records, table)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
