"""Command-line front end.

Subcommands
-----------
classify       classify one circulant graph, emit a JSON report
verify-family  check a member of the n = 3*2^m family end to end
shed           replay a shedding order and print per-step link summaries
survey         classify all (n, sbar) up to a bound into a CSV

Exit codes: 0 success/verified, 1 verification failed, 2 bad arguments,
3 output I/O failure.  The environment variable CIRC_FIELD chooses the
default coefficient field; an explicit --field flag wins.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import signal
import sys
import time
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import ClassificationReport, classify
from .circulant import build, family_graph
from .complexes import fh_profile, independence_complex
from .homology import RATIONALS, FieldSpec, field_key
from .vd import SheddingCertificate, SheddingFailure, theorem1_sequence, verify_shedding_sequence

CSV_HEADER = [
    "n", "sbar", "dim", "pure", "vd", "cm", "buchsbaum",
    "chi", "type", "level", "gorenstein", "elapsed_ms",
]


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _parse_int_set(text: str) -> List[int]:
    if text.strip() == "":
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"malformed integer list {text!r}") from exc


def _resolve_field(flag: Optional[str]) -> FieldSpec:
    raw = flag if flag is not None else os.environ.get("CIRC_FIELD")
    if raw is None:
        return RATIONALS
    fk = field_key(raw)   # raises ValueError on nonsense
    return RATIONALS if fk == "Q" else fk


def _graph_from_args(n: int, values: List[int], use_complement: bool):
    half = frozenset(range(1, n // 2 + 1))
    given = frozenset(values)
    for s in given:
        if not 1 <= s <= n // 2:
            raise ValueError(f"set element {s} outside 1..{n // 2} for n={n}")
    conn = (half - given) if use_complement else given
    return build(n, conn)


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def report_to_dict(report: ClassificationReport) -> Dict:
    """Stable-key-order JSON form of a classification report."""
    out: Dict = {
        "graph": {
            "n": report.n,
            "conn": list(report.conn),
            "sbar": list(report.sbar),
        },
        "complex": {
            "dim": report.dim,
            "pure": report.pure,
            "f": list(report.f),
            "h": list(report.h),
            "chi": report.chi,
        },
        "verdicts": {
            "vd": report.vd,
            "cm": report.cm,
            "buchsbaum": report.buchsbaum,
            "level": report.level,
            "gorenstein": report.gorenstein,
            "type": report.cm_type,
            "reg_theory": report.reg_theory,
        },
    }
    if report.certificate is not None:
        out["certificate"] = {
            "order": list(report.certificate.order),
            "terminal": list(report.certificate.terminal),
        }
    return out


# ---------------------------------------------------------------------------
# per-instance timeout (survey)
# ---------------------------------------------------------------------------

class _Timeout(Exception):
    pass


def _raise_timeout(signum, frame):
    raise _Timeout()


class _alarm:
    """SIGALRM-based wall-clock limit; no-op when seconds is None or 0."""

    def __init__(self, seconds: Optional[float]):
        self.seconds = seconds

    def __enter__(self):
        if self.seconds:
            self.old = signal.signal(signal.SIGALRM, _raise_timeout)
            signal.setitimer(signal.ITIMER_REAL, self.seconds)
        return self

    def __exit__(self, *exc):
        if self.seconds:
            signal.setitimer(signal.ITIMER_REAL, 0.0)
            signal.signal(signal.SIGALRM, self.old)
        return False


# ---------------------------------------------------------------------------
# subcommand: classify
# ---------------------------------------------------------------------------

def _cmd_classify(args) -> int:
    try:
        field_spec = _resolve_field(args.field)
        values = _parse_int_set(args.set)
        g = _graph_from_args(args.n, values, args.complement)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = classify(g, field_spec)
    payload = json.dumps(report_to_dict(report), indent=2)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload + "\n")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 3
    else:
        print(payload)
    return 0


# ---------------------------------------------------------------------------
# subcommand: verify-family
# ---------------------------------------------------------------------------

def _cmd_verify_family(args) -> int:
    m = args.m
    if m < 3:
        print("error: the family needs m >= 3", file=sys.stderr)
        return 2
    g = family_graph(m)
    n = g.n
    delta = independence_complex(g)
    ok = True
    if not (delta.is_pure and delta.dim == 2):
        print(f"FAIL: complex not pure 2-dimensional (dim={delta.dim}, pure={delta.is_pure})")
        ok = False
    fh = fh_profile(delta)
    expected_f = (1, n, n * (m + 2), n * (m + 2) + 2 ** m)
    if fh.f != expected_f:
        print(f"FAIL: f-vector {fh.f} != expected {expected_f}")
        ok = False
    else:
        print(f"f-vector {fh.f} matches the closed form")
    order = theorem1_sequence(m)
    outcome = verify_shedding_sequence(delta, order)
    if isinstance(outcome, SheddingCertificate):
        print(
            f"shedding order valid: {len(outcome.steps)} steps, "
            f"terminal {{{', '.join(map(str, outcome.terminal))}}}"
        )
    else:
        print(f"FAIL: shedding order invalid at step {outcome.step} ({outcome.reason})")
        ok = False
    print(f"verify-family m={m} n={n}: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# subcommand: shed
# ---------------------------------------------------------------------------

def _cmd_shed(args) -> int:
    try:
        field_unused = _resolve_field(args.field)  # validated for symmetry with classify
        values = _parse_int_set(args.set)
        g = _graph_from_args(args.n, values, args.complement)
        sequence = _parse_int_set(args.sequence) if args.sequence is not None else []
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    delta = independence_complex(g)
    try:
        outcome = verify_shedding_sequence(delta, sequence)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    steps = outcome.steps
    for i, st in enumerate(steps, start=1):
        print(
            f"step {i}: v={st.vertex} link_vertices={st.link_vertices} "
            f"link_edges={st.link_edges} connected={_fmt(st.connected)}"
        )
    if isinstance(outcome, SheddingCertificate):
        print(f"valid: terminal {{{', '.join(map(str, outcome.terminal))}}}")
        return 0
    print(f"invalid at step {outcome.step}: {outcome.reason}")
    return 1


# ---------------------------------------------------------------------------
# subcommand: survey
# ---------------------------------------------------------------------------

def _enumerate_tasks(max_n: int) -> List[Tuple[int, Tuple[int, ...]]]:
    tasks = []
    for n in range(3, max_n + 1):
        half = list(range(1, n // 2 + 1))
        subsets: List[Tuple[int, ...]] = []
        for mask in range(1, 1 << len(half)):
            subsets.append(tuple(half[i] for i in range(len(half)) if (mask >> i) & 1))
        for sbar in sorted(subsets):
            tasks.append((n, sbar))
    return tasks


def _survey_one(job) -> Optional[Tuple[int, Tuple[int, ...], Dict[str, object], int]]:
    n, sbar, field_spec, timeout_s, only_dim3 = job
    conn = frozenset(range(1, n // 2 + 1)) - frozenset(sbar)
    g = build(n, conn)
    started = time.perf_counter()
    try:
        with _alarm(timeout_s):
            delta = independence_complex(g)
            if only_dim3 and delta.dim != 2:
                return None
            report = classify(g, field_spec, want_certificate=False)
    except _Timeout:
        elapsed = int(1000 * (time.perf_counter() - started))
        row = {k: None for k in ("dim", "pure", "vd", "cm", "buchsbaum", "chi", "type", "level", "gorenstein")}
        return (n, sbar, row, elapsed)
    elapsed = int(1000 * (time.perf_counter() - started))
    row = {
        "dim": report.dim,
        "pure": report.pure,
        "vd": report.vd,
        "cm": report.cm,
        "buchsbaum": report.buchsbaum,
        "chi": report.chi,
        "type": report.cm_type,
        "level": report.level,
        "gorenstein": report.gorenstein,
    }
    return (n, sbar, row, elapsed)


def _cmd_survey(args) -> int:
    try:
        field_spec = _resolve_field(args.field)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.max_n < 3:
        print("error: --max-n must be at least 3", file=sys.stderr)
        return 2
    jobs = max(1, args.jobs)
    timeout_s = args.timeout if args.timeout > 0 else None
    tasks = [(n, sbar, field_spec, timeout_s, args.only_dim3) for n, sbar in _enumerate_tasks(args.max_n)]

    if jobs == 1:
        results = [_survey_one(t) for t in tasks]
    else:
        with Pool(processes=jobs) as pool:
            results = list(pool.imap_unordered(_survey_one, tasks, chunksize=4))
    rows = sorted((r for r in results if r is not None), key=lambda r: (r[0], r[1]))

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for n, sbar, row, elapsed in rows:
        writer.writerow([
            n,
            ",".join(map(str, sbar)),
            _fmt(row["dim"]),
            _fmt(row["pure"]),
            _fmt(row["vd"]),
            _fmt(row["cm"]),
            _fmt(row["buchsbaum"]),
            _fmt(row["chi"]),
            _fmt(row["type"]),
            _fmt(row["level"]),
            _fmt(row["gorenstein"]),
            str(elapsed) if args.timings else "-",
        ])
    body = buf.getvalue()

    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(body)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 3
    else:
        sys.stdout.write(body)

    def count(pred) -> int:
        return sum(1 for _, _, row, _ in rows if pred(row))

    print(f"instances: {len(tasks)} examined, {len(rows)} rows", file=sys.stderr)
    print(
        "pure-2dim: {0}  vd: {1}  cm: {2}  level: {3}  gorenstein: {4}".format(
            count(lambda r: r["pure"] is True and r["dim"] == 2),
            count(lambda r: r["vd"] is True),
            count(lambda r: r["cm"] is True),
            count(lambda r: r["level"] is True),
            count(lambda r: r["gorenstein"] is True),
        ),
        file=sys.stderr,
    )
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circix",
        description="Exact classification of circulant graph independence complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cls = sub.add_parser("classify", help="classify one circulant graph")
    p_cls.add_argument("--n", type=int, required=True)
    p_cls.add_argument("--set", required=True, help="comma-separated distances")
    p_cls.add_argument("--complement", action="store_true",
                       help="interpret --set as the complement set sbar")
    p_cls.add_argument("--field", default=None, help="q (rationals) or a prime")
    p_cls.add_argument("--out", default=None, help="write the JSON report here")
    p_cls.set_defaults(func=_cmd_classify)

    p_fam = sub.add_parser("verify-family", help="verify a member of the 3*2^m family")
    p_fam.add_argument("--m", type=int, required=True)
    p_fam.set_defaults(func=_cmd_verify_family)

    p_shed = sub.add_parser("shed", help="verify a shedding order")
    p_shed.add_argument("--n", type=int, required=True)
    p_shed.add_argument("--set", required=True)
    p_shed.add_argument("--complement", action="store_true")
    p_shed.add_argument("--sequence", default="", help="comma-separated vertex order")
    p_shed.add_argument("--field", default=None)
    p_shed.set_defaults(func=_cmd_shed)

    p_sur = sub.add_parser("survey", help="exhaustive scan over (n, sbar)")
    p_sur.add_argument("--max-n", type=int, default=16)
    p_sur.add_argument("--only-dim3", action="store_true",
                       help="keep only instances with 2-dimensional complex")
    p_sur.add_argument("--out", default=None, help="CSV output path")
    p_sur.add_argument("--jobs", type=int, default=1)
    p_sur.add_argument("--timeout", type=float, default=60.0,
                       help="per-instance wall-clock limit in seconds; 0 disables")
    p_sur.add_argument("--timings", action="store_true",
                       help="record wall-clock per row (breaks byte-determinism)")
    p_sur.add_argument("--field", default=None)
    p_sur.set_defaults(func=_cmd_survey)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
