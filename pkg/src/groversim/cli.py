"""Command-line front end: build, run, sample, compare, export, and diagnose
Grover circuits, emitting histograms and tables as JSON, CSV, or text.

Exit codes: 0 success, 1 check failure (compare deviation), 2 usage error,
3 resource limit, 4 I/O failure.
"""

import argparse
import csv
import io
import json
import os
import sys

from .analytic import marked_probability_after, probability_table
from .circuit import export_qasm
from .errors import ResourceLimitError
from .grover import (
    OracleStyle,
    Pattern,
    build_grover,
    build_phase_check,
    optimal_rotations,
    phase_flip_detected,
)

DEFAULT_SHOTS = 1024  # shot count used throughout the reference tables
DEFAULT_SEED = 42
SEED_ENV_VAR = "GROVERSIM_SEED"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_IO = 4

COMPARE_TOLERANCE = 1e-9  # exact simulation vs recurrence

_SEED_MASK = (1 << 64) - 1
_STYLES = {"v": OracleStyle.V_ORACLE, "cnz": OracleStyle.CNZ}


def _resolve_seed(value: int | None) -> int:
    if value is not None:
        return value & _SEED_MASK
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env) & _SEED_MASK
        except ValueError:
            raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _resolve_rotations(text: str, n: int) -> int:
    if text == "auto":
        return optimal_rotations(n)
    try:
        k = int(text)
    except ValueError:
        raise ValueError(f"--rotations must be a positive integer or 'auto', got {text!r}") from None
    if k < 1:
        raise ValueError(f"--rotations must be >= 1, got {k}")
    return k


def _check_shots(shots: int) -> int:
    if shots < 0:
        raise ValueError(f"--shots must be >= 0, got {shots}")
    return shots


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _render_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _render_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------

def cmd_run(args) -> int:
    pattern = Pattern(args.pattern)
    shots = _check_shots(args.shots)
    seed = _resolve_seed(args.seed)
    rotations = _resolve_rotations(args.rotations, pattern.n)
    circuit = build_grover(pattern, rotations, _STYLES[args.oracle])
    state = circuit.run()
    exact = state.probabilities(measured=pattern.n)
    counts: dict[str, int] = {}
    if shots > 0:
        counts = state.sample(shots, seed, measured=pattern.n).counts
    payload = {
        "pattern": pattern.bits,
        "qubits": pattern.n,
        "rotations": rotations,
        "style": args.oracle,
        "seed": seed,
        "exact": exact,
        "counts": counts,
    }
    if args.format == "json":
        text = _render_json(payload)
    elif args.format == "csv":
        # exact mode lists every state; sampled mode omits zero-count states
        states = exact if shots == 0 else counts
        rows = [
            [pattern.bits, pattern.n, rotations, args.oracle, seed,
             s, repr(exact[s]), "" if shots == 0 else counts.get(s, 0)]
            for s in states
        ]
        text = _render_csv(
            ["pattern", "qubits", "rotations", "style", "seed", "state", "exact", "count"], rows
        )
    else:
        lines = [
            f"pattern={pattern.bits} qubits={pattern.n} rotations={rotations} "
            f"style={args.oracle} seed={seed} shots={shots}",
            "state  exact  count" if shots else "state  exact",
        ]
        states = exact if shots == 0 else counts
        for s in states:
            row = f"{s}  {exact[s]:.6f}"
            if shots:
                row += f"  {counts.get(s, 0)}"
            lines.append(row)
        text = "\n".join(lines) + "\n"
    _write_output(text, args.out)
    return EXIT_OK


def cmd_analytic(args) -> int:
    if args.rotations < 1:
        raise ValueError(f"--rotations must be >= 1, got {args.rotations}")
    rows = probability_table(args.qubits, args.rotations)
    if args.format == "json":
        payload = {
            "qubits": args.qubits,
            "rows": [{"rotations": k, "probability": p} for k, p in rows],
        }
        text = _render_json(payload)
    elif args.format == "csv":
        text = _render_csv(["rotations", "probability"], [[k, repr(p)] for k, p in rows])
    else:
        lines = [f"qubits={args.qubits}", "rotations  probability"]
        lines += [f"{k:>9}  {p:.4f}" for k, p in rows]
        text = "\n".join(lines) + "\n"
    _write_output(text, args.out)
    return EXIT_OK


def cmd_compare(args) -> int:
    if args.rotations < 1:
        raise ValueError(f"--rotations must be >= 1, got {args.rotations}")
    shots = _check_shots(args.shots)
    seed = _resolve_seed(args.seed)
    pattern = Pattern("1" * args.qubits)
    style = _STYLES[args.oracle]
    rows = []
    max_dev = 0.0
    for k in range(1, args.rotations + 1):
        derived = marked_probability_after(args.qubits, k)
        state = build_grover(pattern, k, style).run()
        exact = state.probability(pattern.bits)
        sampled = None
        if shots > 0:
            hist = state.sample(shots, seed, measured=pattern.n)
            sampled = hist.counts.get(pattern.bits, 0) / shots
        dev = abs(exact - derived)
        max_dev = max(max_dev, dev)
        rows.append(
            {
                "rotations": k,
                "derived": derived,
                "exact": exact,
                "sampled": sampled,
                "exact_abs_dev": dev,
                "sampled_abs_dev": None if sampled is None else abs(sampled - derived),
            }
        )
    ok = max_dev <= COMPARE_TOLERANCE
    if args.format == "json":
        payload = {
            "qubits": args.qubits,
            "style": args.oracle,
            "shots": shots,
            "seed": seed,
            "rows": rows,
            "max_abs_deviation": max_dev,
            "within_tolerance": ok,
        }
        text = _render_json(payload)
    elif args.format == "csv":
        text = _render_csv(
            ["rotations", "derived", "exact", "sampled", "exact_abs_dev", "sampled_abs_dev"],
            [
                [r["rotations"], repr(r["derived"]), repr(r["exact"]),
                 "" if r["sampled"] is None else repr(r["sampled"]),
                 repr(r["exact_abs_dev"]),
                 "" if r["sampled_abs_dev"] is None else repr(r["sampled_abs_dev"])]
                for r in rows
            ],
        )
    else:
        lines = [
            f"qubits={args.qubits} style={args.oracle} shots={shots} seed={seed}",
            "rotations  derived  exact   sampled",
        ]
        for r in rows:
            sampled = "-" if r["sampled"] is None else f"{r['sampled']:.4f}"
            lines.append(f"{r['rotations']:>9}  {r['derived']:.4f}   {r['exact']:.4f}  {sampled}")
        lines.append(f"max |exact - derived| = {max_dev:.3e} -> {'OK' if ok else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    _write_output(text, args.out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_export(args) -> int:
    pattern = Pattern(args.pattern)
    rotations = _resolve_rotations(args.rotations, pattern.n)
    circuit = build_grover(pattern, rotations, _STYLES[args.oracle])
    _write_output(export_qasm(circuit), args.out)
    return EXIT_OK


def cmd_phase_check(args) -> int:
    pattern = Pattern(args.pattern)
    style = None if args.oracle == "none" else _STYLES[args.oracle]
    state = build_phase_check(pattern, style).run()
    exact = state.probabilities(measured=pattern.n)
    detected = phase_flip_detected(exact)
    modal = max(exact, key=exact.get)
    verdict = "phase flip detected" if detected else "no phase flip detected"
    if args.format == "json":
        payload = {
            "pattern": pattern.bits,
            "qubits": pattern.n,
            "style": args.oracle,
            "exact": exact,
            "modal": modal,
            "detected": detected,
            "verdict": verdict,
        }
        text = _render_json(payload)
    elif args.format == "csv":
        rows = [[pattern.bits, args.oracle, s, repr(p), modal, detected] for s, p in exact.items()]
        text = _render_csv(["pattern", "style", "state", "exact", "modal", "detected"], rows)
    else:
        lines = [f"pattern={pattern.bits} style={args.oracle}", "state  exact"]
        lines += [f"{s}  {p:.6f}" for s, p in exact.items()]
        lines.append(f"modal={modal}")
        lines.append(verdict)
        text = "\n".join(lines) + "\n"
    _write_output(text, args.out)
    return EXIT_OK


# ----------------------------------------------------------------------
# parser / entry point
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groversim",
        description="Dense-statevector Grover search: simulate, compare, export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--out", default=None, metavar="PATH", help="write to PATH instead of stdout")

    p = sub.add_parser("run", help="simulate a search and emit its histogram")
    p.add_argument("--pattern", required=True, help="marked bit string, qubit 0 leftmost")
    p.add_argument("--rotations", default="auto", help="rotation count, or 'auto' for the optimum")
    p.add_argument("--shots", type=int, default=DEFAULT_SHOTS, help="0 = exact probabilities only")
    p.add_argument("--seed", type=int, default=None, help=f"sampling seed (default: ${SEED_ENV_VAR} or {DEFAULT_SEED})")
    p.add_argument("--oracle", choices=("v", "cnz"), default="v")
    output_flags(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("analytic", help="derived probability table from the recurrence")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--rotations", type=int, required=True, help="table rows 1..k")
    output_flags(p)
    p.set_defaults(func=cmd_analytic)

    p = sub.add_parser("compare", help="derived vs simulated vs sampled probabilities")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--rotations", type=int, required=True, help="table rows 1..k")
    p.add_argument("--shots", type=int, default=DEFAULT_SHOTS)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--oracle", choices=("v", "cnz"), default="v")
    output_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("export", help="write the circuit as OpenQASM 2.0")
    p.add_argument("--pattern", required=True)
    p.add_argument("--rotations", default="auto")
    p.add_argument("--oracle", choices=("v", "cnz"), default="v")
    p.add_argument("--out", default=None, metavar="PATH")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("phase-check", help="oracle phase-flip diagnostic")
    p.add_argument("--pattern", required=True)
    p.add_argument("--oracle", choices=("v", "cnz", "none"), default="v",
                   help="'none' substitutes the identity (null case)")
    output_flags(p)
    p.set_defaults(func=cmd_phase_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:  # bad pattern/rotations/shots, inexpressible export
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
