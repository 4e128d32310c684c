"""Command-line front end.

Subcommands: `numbers <expr>`, `genus <ahat|L> <expr>`, `verify <k>`,
`matrix <k>`; global flags `--format text|json` and `--max-k <n>`.
Rationals are always printed as "numerator/denominator" and partitions as
bracketed part lists, so output is exact and byte-deterministic.  Exit
codes: 0 success, 1 usage or parse error, 2 mathematical check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .cobordism import (
    DEFAULT_CAP,
    OutOfRangeError,
    ahat_polynomial,
    basis_matrix,
    l_polynomial,
    verify_basis_sequence,
    verify_characterization,
)
from .expressions import ParseError, parse_manifold, to_cobordism_class
from .linalg import determinant
from .partitions import Partition, partitions_of
from .symfunc import GenusPolynomial, evaluate_genus


class UnknownSeriesError(ValueError):
    """Raised for a genus name other than ahat or L."""


def fmt_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def fmt_partition(p: Partition) -> str:
    return str(p)


@dataclass(frozen=True)
class OutputDocument:
    """One command's worth of output, renderable as text or JSON."""

    command: str
    input: object
    result: dict
    text_lines: list = field(repr=False)
    version: str = __version__

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "input": self.input,
            "version": self.version,
            "result": self.result,
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_text(self) -> str:
        return "\n".join(self.text_lines) + "\n"

    def render(self, format: str) -> str:
        return self.to_json() if format == "json" else self.to_text()


def _polynomial_payload(g: GenusPolynomial) -> dict:
    return {fmt_partition(lam): fmt_rational(c) for lam, c in g.items()}


def cmd_numbers(expr_text: str, *, cap: int = DEFAULT_CAP) -> OutputDocument:
    """All Pontrjagin numbers of the class an expression denotes."""
    cls = to_cobordism_class(parse_manifold(expr_text), cap=cap)
    parts = partitions_of(cls.weight)
    numbers = {fmt_partition(lam): fmt_rational(cls.p_number(lam)) for lam in parts}
    lines = [f"numbers: {expr_text}", f"weight: {cls.weight}", "p-numbers:"]
    lines += [f"  {fmt_partition(lam)} = {numbers[fmt_partition(lam)]}" for lam in parts]
    return OutputDocument(
        command="numbers",
        input=expr_text,
        result={"weight": cls.weight, "p_numbers": numbers},
        text_lines=lines,
    )


def _genus_polynomial(series: str, k: int, cap: int) -> tuple[str, GenusPolynomial]:
    name = series.lower()
    if name == "ahat":
        return "ahat", ahat_polynomial(k, cap=cap)
    if name == "l":
        return "L", l_polynomial(k, cap=cap)
    raise UnknownSeriesError(f"unknown series {series!r}, expected 'ahat' or 'L'")


def cmd_genus(series: str, expr_text: str, *, cap: int = DEFAULT_CAP) -> OutputDocument:
    """Evaluate the named genus on the class an expression denotes."""
    cls = to_cobordism_class(parse_manifold(expr_text), cap=cap)
    canonical, polynomial = _genus_polynomial(series, cls.weight, cap)
    value = evaluate_genus(polynomial, cls)
    poly_payload = _polynomial_payload(polynomial)
    lines = [f"genus: {canonical} on {expr_text}", f"weight: {cls.weight}", "polynomial:"]
    lines += [f"  {key} = {val}" for key, val in poly_payload.items()]
    lines.append(f"value: {fmt_rational(value)}")
    return OutputDocument(
        command="genus",
        input={"series": canonical, "expr": expr_text},
        result={
            "weight": cls.weight,
            "polynomial": poly_payload,
            "value": fmt_rational(value),
        },
        text_lines=lines,
    )


def cmd_verify(k: int, *, cap: int = DEFAULT_CAP) -> tuple[OutputDocument, int]:
    """Run the basis certificates and the kernel characterization at weight k."""
    report = verify_characterization(k, cap=cap)
    expected_value = fmt_rational(2**k)
    generator_values = {
        str(j): fmt_rational(v) for j, v in sorted(report.generator_ahat_values.items())
    }
    result = {
        "k": k,
        "basis_sequence_ok": report.basis_ok,
        "kernel_dimension": report.kernel_dimension,
        "kernel_matches_ahat": report.kernel_matches_ahat,
        "ahat_on_kummer_power": fmt_rational(report.ahat_value_on_kummer_power),
        "expected_on_kummer_power": expected_value,
        "generator_ahat_values": generator_values,
        "passed": report.passed,
    }
    lines = [
        f"verify: k = {k}",
        f"basis sequence ok: {'yes' if report.basis_ok else 'no'}",
        f"kernel dimension: {report.kernel_dimension} (expected 1)",
        f"kernel matches ahat: {'yes' if report.kernel_matches_ahat else 'no'}",
        f"ahat on (K3)^{k}: {result['ahat_on_kummer_power']} (expected {expected_value})",
        "ahat on generators:",
    ]
    for j, value in sorted(report.generator_ahat_values.items()):
        expected = fmt_rational(2 if j == 1 else 0)
        lines.append(f"  k={j}: {fmt_rational(value)} (expected {expected})")
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    doc = OutputDocument(command="verify", input={"k": k}, result=result, text_lines=lines)
    return doc, 0 if report.passed else 2


def cmd_matrix(k: int, *, cap: int = DEFAULT_CAP) -> OutputDocument:
    """Print the basis evaluation matrix at weight k plus its determinant."""
    matrix = basis_matrix(k, cap=cap)
    parts = partitions_of(k)
    labels = [fmt_partition(lam) for lam in parts]
    rows = [[fmt_rational(matrix.entry(i, j)) for j in range(matrix.cols)]
            for i in range(matrix.rows)]
    det = fmt_rational(determinant(matrix))
    width = max(len(label) for label in labels)
    lines = [
        f"matrix: k = {k}",
        "rows are basis classes, columns are p-monomials",
        f"columns: {' '.join(labels)}",
    ]
    lines += [f"  {label.ljust(width)} | {' '.join(row)}" for label, row in zip(labels, rows)]
    lines.append(f"determinant: {det}")
    return OutputDocument(
        command="matrix",
        input={"k": k},
        result={
            "k": k,
            "row_labels": labels,
            "column_labels": labels,
            "rows": rows,
            "determinant": det,
        },
        text_lines=lines,
    )


class _ArgumentParser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default=argparse.SUPPRESS,
        help="output format (default: text)",
    )
    common.add_argument(
        "--max-k", type=int, dest="max_k", default=argparse.SUPPRESS, metavar="N",
        help=f"largest admissible weight (default: {DEFAULT_CAP})",
    )
    parser = _ArgumentParser(
        prog="ahat",
        description="Exact Pontrjagin numbers and Hirzebruch genera of "
                    "products of K3 and HP^k, with a kernel-based check "
                    "that only multiples of the A-hat combination vanish "
                    "on every basis class except (K3)^k.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    parser.add_argument("--max-k", type=int, dest="max_k", default=DEFAULT_CAP,
                        metavar="N", help=f"largest admissible weight (default: {DEFAULT_CAP})")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_numbers = sub.add_parser(
        "numbers", parents=[common], help="Pontrjagin numbers of a product expression",
    )
    p_numbers.add_argument("expr", help="manifold expression, e.g. 'K3^2 x HP3'")

    p_genus = sub.add_parser(
        "genus", parents=[common], help="evaluate the A-hat or L genus on an expression",
    )
    p_genus.add_argument("series", help="'ahat' or 'L'")
    p_genus.add_argument("expr", help="manifold expression")

    p_verify = sub.add_parser(
        "verify", parents=[common], help="check the characterization at weight k",
    )
    p_verify.add_argument("k", type=int, help="weight (dimension/4)")

    p_matrix = sub.add_parser(
        "matrix", parents=[common], help="print the basis evaluation matrix at weight k",
    )
    p_matrix.add_argument("k", type=int, help="weight (dimension/4)")

    return parser


def _error_document(command: str, input_echo, exc: Exception) -> str:
    payload = {
        "command": command,
        "input": input_echo,
        "version": __version__,
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }
    return json.dumps(payload, indent=2) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cap = args.max_k
    if cap < 1:
        print("ahat: error: --max-k must be at least 1", file=sys.stderr)
        return 1

    if args.command == "numbers":
        input_echo: object = args.expr
    elif args.command == "genus":
        input_echo = {"series": args.series, "expr": args.expr}
    else:
        input_echo = {"k": args.k}

    exit_code = 0
    try:
        if args.command == "numbers":
            doc = cmd_numbers(args.expr, cap=cap)
        elif args.command == "genus":
            doc = cmd_genus(args.series, args.expr, cap=cap)
        elif args.command == "verify":
            doc, exit_code = cmd_verify(args.k, cap=cap)
        else:
            doc = cmd_matrix(args.k, cap=cap)
    except (ParseError, OutOfRangeError, UnknownSeriesError) as exc:
        print(f"ahat: error: {exc}", file=sys.stderr)
        if args.format == "json":
            sys.stdout.write(_error_document(args.command, input_echo, exc))
        return 1

    sys.stdout.write(doc.render(args.format))
    return exit_code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
