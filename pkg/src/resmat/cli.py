"""Command-line interface.

Three subcommands::

    resmat compute INPUT WHAT [--format text|json|csv] [--pair I J]
    resmat verify  INPUT [--check ID ...] [--all] [--format text|json]
    resmat verify  --corpus SPECS [--format text|json]
    resmat gen     OUTPUT --n N --s S --model MODEL [--p P] --seed SEED

``compute`` surfaces one derived object per invocation (``laplacian``,
``pinv``, ``resistance``, ``tau``, ``det``, ``inverse``, ``inertia``,
``chi``, ``interlace``); ``verify`` runs registry checks and emits a suite
report; ``gen`` writes a seeded random graph in the JSON interchange form.

Exit codes: 0 success; 1 parse/validation/usage failure; 2 numeric or
generation failure; 3 verification check failure (verify only, report
still emitted).  Matrices print with 12 significant digits, one row per
line, with blank lines between block-row boundaries.  All randomness
comes from the explicit ``--seed``; identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import linalg
from .graph import GenerationError, GraphError, parse_graph, random_graph, serialize
from .laplacian import build_laplacian, laplacian_cofactor, laplacian_cofactor_slog
from .resistance import ResistanceWorkspace
from .verify import CHECK_IDS, GraphSpec, run_corpus, run_suite

__all__ = ["main", "entry", "UsageError"]

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERIC = 2
EXIT_CHECK = 3

_FMT = "{:.11e}"

_MATRIX_OBJECTS = ("laplacian", "pinv", "resistance", "tau", "inverse")
_WHAT_CHOICES = _MATRIX_OBJECTS + ("det", "inertia", "chi", "interlace")


class UsageError(Exception):
    """Invalid command line or invalid option combination."""


class _Parser(argparse.ArgumentParser):
    """argparse parser that reports usage problems as exceptions instead
    of exiting the process (the library maps them to exit code 1)."""

    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="resmat", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)

    compute = commands.add_parser(
        "compute", help="compute one derived object of a graph"
    )
    compute.add_argument("input", help="graph JSON file")
    compute.add_argument("what", choices=_WHAT_CHOICES)
    compute.add_argument(
        "--format", choices=("text", "json", "csv"), default="text"
    )
    compute.add_argument(
        "--pair",
        nargs=2,
        type=int,
        metavar=("I", "J"),
        help="restrict resistance output to the (I, J) block (1-based)",
    )

    verify = commands.add_parser("verify", help="run verification checks")
    verify.add_argument("input", nargs="?", help="graph JSON file")
    verify.add_argument(
        "--check",
        action="append",
        metavar="ID",
        help="run one registry check (repeatable)",
    )
    verify.add_argument(
        "--all", action="store_true", help="run every registry check (default)"
    )
    verify.add_argument(
        "--corpus",
        metavar="FILE",
        help="run the full registry over a JSON list of generation specs "
        '(entries {"model", "n", "s", "seed", "p"?}) instead of one graph',
    )
    verify.add_argument("--format", choices=("text", "json"), default="text")

    gen = commands.add_parser("gen", help="generate a seeded random graph")
    gen.add_argument("output", help="destination file")
    gen.add_argument("--n", type=int, required=True, help="vertex count")
    gen.add_argument("--s", type=int, required=True, help="weight block size")
    gen.add_argument(
        "--model",
        required=True,
        choices=("tree", "cycle", "complete", "gnp"),
    )
    gen.add_argument("--p", type=float, help="edge probability (gnp only)")
    gen.add_argument("--seed", type=int, required=True)

    return parser


def _matrix_lines(a: np.ndarray, s: int, sep: str, block_gaps: bool) -> str:
    lines = []
    for r in range(a.shape[0]):
        lines.append(sep.join(_FMT.format(x) for x in a[r]))
        if block_gaps and (r + 1) % s == 0 and r + 1 < a.shape[0]:
            lines.append("")
    return "\n".join(lines) + "\n"


def _matrix_output(a: np.ndarray, s: int, fmt: str) -> str:
    if fmt == "text":
        # Block gaps only when there is real block structure to mark.
        return _matrix_lines(a, s, " ", block_gaps=s > 1)
    if fmt == "csv":
        return _matrix_lines(a, s, ",", block_gaps=False)
    payload = {
        "block_size": s,
        "rows": a.shape[0],
        "cols": a.shape[1],
        "entries": a.tolist(),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _scalar_output(value: float, sign: float, log_abs: float, fmt: str) -> str:
    if fmt == "text":
        return _FMT.format(value) + "\n"
    payload = {"value": value, "sign": sign, "log_abs": log_abs}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _interlace_output(rows, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "rows": [
                {
                    "index": r.index,
                    "lower": r.lower,
                    "bound": r.bound,
                    "upper": r.upper,
                    "holds": r.holds,
                }
                for r in rows
            ]
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        lines = ["index,lower,bound,upper,holds"]
        for r in rows:
            lines.append(
                f"{r.index},{_FMT.format(r.lower)},{_FMT.format(r.bound)},"
                f"{_FMT.format(r.upper)},{str(r.holds).lower()}"
            )
        return "\n".join(lines) + "\n"
    header = f"{'i':>4} {'lower':>18} {'bound':>18} {'upper':>18}  holds"
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.index:>4} {_FMT.format(r.lower):>18} {_FMT.format(r.bound):>18} "
            f"{_FMT.format(r.upper):>18}  {'yes' if r.holds else 'NO'}"
        )
    return "\n".join(lines) + "\n"


def _cmd_compute(args) -> int:
    g = parse_graph(Path(args.input).read_bytes())
    what = args.what
    fmt = args.format

    if fmt == "csv" and what not in _MATRIX_OBJECTS + ("interlace",):
        raise UsageError("csv format only applies to matrix and interlace output")
    if args.pair is not None and what != "resistance":
        raise UsageError("--pair only applies to resistance output")

    if what == "laplacian":
        sys.stdout.write(_matrix_output(build_laplacian(g).body, g.s, fmt))
        return EXIT_OK
    if what == "chi":
        value = laplacian_cofactor(g)
        sign, log_abs = laplacian_cofactor_slog(g)
        sys.stdout.write(_scalar_output(value, sign, log_abs, fmt))
        return EXIT_OK

    ws = ResistanceWorkspace(g)
    if what == "resistance" and args.pair is not None:
        i, j = args.pair
        if not (1 <= i <= g.n and 1 <= j <= g.n):
            raise UsageError(f"--pair indices must be in 1..{g.n}")
        sys.stdout.write(_matrix_output(ws.resistance_block(i - 1, j - 1), g.s, fmt))
    elif what == "resistance":
        sys.stdout.write(_matrix_output(ws.resistance.body, g.s, fmt))
    elif what == "pinv":
        sys.stdout.write(_matrix_output(ws.pseudoinverse.body, g.s, fmt))
    elif what == "tau":
        sys.stdout.write(_matrix_output(ws.deficit, g.s, fmt))
    elif what == "inverse":
        sys.stdout.write(_matrix_output(ws.inverse(), g.s, fmt))
    elif what == "det":
        sign, log_abs = ws.determinant_slog()
        sys.stdout.write(_scalar_output(ws.determinant(), sign, log_abs, fmt))
    elif what == "inertia":
        inertia = ws.inertia()
        if fmt == "json":
            payload = {
                "positive": inertia.positive,
                "negative": inertia.negative,
                "zero": inertia.zero,
            }
            sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        else:
            sys.stdout.write(
                f"positive {inertia.positive}\n"
                f"negative {inertia.negative}\n"
                f"zero {inertia.zero}\n"
            )
    elif what == "interlace":
        sys.stdout.write(_interlace_output(ws.interlacing(), fmt))
    return EXIT_OK


def _suite_text(report) -> str:
    g = report.graph
    lines = [
        f"graph: n={g['n']} s={g['s']} m={g['m']}"
        + (f" model={g['model']}" if g["model"] else "")
        + (f" seed={g['seed']}" if g["seed"] is not None else "")
        + (" LOW-CONFIDENCE" if g["low_confidence"] else "")
    ]
    for c in report.checks:
        status = "SKIP" if c.skipped else ("PASS" if c.passed else "FAIL")
        lines.append(
            f"{c.check_id:<16} {status:<4} residual {c.residual:.5e} "
            f"tolerance {c.tolerance:.5e}  {c.details}"
        )
    lines.append(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _parse_corpus_file(path: str) -> list[GraphSpec]:
    try:
        entries = json.loads(Path(path).read_bytes())
    except json.JSONDecodeError as exc:
        raise UsageError(f"corpus file is not valid JSON: {exc}") from exc
    if not isinstance(entries, list):
        raise UsageError("corpus file must hold a JSON list of generation specs")
    specs = []
    for position, entry in enumerate(entries, start=1):
        if not isinstance(entry, dict) or not {"model", "n", "s", "seed"} <= set(
            entry
        ):
            raise UsageError(
                f"corpus entry #{position} must be an object with at least "
                "the keys model, n, s, seed"
            )
        unknown = set(entry) - {"model", "n", "s", "seed", "p"}
        if unknown:
            raise UsageError(
                f"corpus entry #{position} has unknown key(s): "
                f"{', '.join(sorted(unknown))}"
            )
        specs.append(GraphSpec(**entry))
    return specs


def _corpus_text(entries) -> str:
    lines = []
    for e in entries:
        spec = e.spec
        label = f"model={spec.model} n={spec.n} s={spec.s} seed={spec.seed}"
        if spec.p is not None:
            label += f" p={spec.p}"
        if e.error is not None:
            lines.append(f"{label}: GENERATION FAILURE ({e.error})")
        else:
            status = "PASS" if e.report.passed else "FAIL"
            ran = sum(1 for c in e.report.checks if not c.skipped)
            skipped = sum(1 for c in e.report.checks if c.skipped)
            lines.append(f"{label}: {status} ({ran} checks, {skipped} skipped)")
    overall = all(e.passed for e in entries)
    lines.append(f"overall: {'PASS' if overall else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _cmd_verify_corpus(args) -> int:
    if args.check:
        raise UsageError("--corpus runs the full registry; --check does not apply")
    entries = run_corpus(_parse_corpus_file(args.corpus))
    if args.format == "json":
        payload = {
            "entries": [
                {
                    "spec": e.spec.as_dict(),
                    "error": e.error,
                    "report": None if e.report is None else e.report.as_dict(),
                }
                for e in entries
            ],
            "passed": all(e.passed for e in entries),
        }
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(_corpus_text(entries))
    return EXIT_OK if all(e.passed for e in entries) else EXIT_CHECK


def _cmd_verify(args) -> int:
    if args.corpus is not None:
        if args.input is not None:
            raise UsageError("give either a graph file or --corpus, not both")
        return _cmd_verify_corpus(args)
    if args.input is None:
        raise UsageError("a graph file (or --corpus) is required")
    g = parse_graph(Path(args.input).read_bytes())
    if args.check and not args.all:
        unknown = [c for c in args.check if c not in CHECK_IDS]
        if unknown:
            raise UsageError(
                f"unknown check id(s): {', '.join(unknown)}; "
                f"known: {', '.join(CHECK_IDS)}"
            )
        selection = args.check
    else:
        selection = None
    report = run_suite(g, selection)
    if args.format == "json":
        sys.stdout.write(report.to_json() + "\n")
    else:
        sys.stdout.write(_suite_text(report))
    return EXIT_OK if report.passed else EXIT_CHECK


def _cmd_gen(args) -> int:
    g = random_graph(args.n, args.s, args.model, args.seed, args.p)
    Path(args.output).write_text(serialize(g) + "\n")
    return EXIT_OK


def main(argv=None) -> int:
    """Run the CLI; returns the exit code instead of raising SystemExit."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: compute, verify, or gen")
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_gen(args)
    except (UsageError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (linalg.NumericError, linalg.DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def entry() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    entry()
