"""Command-line front end.

Subcommands: ``generate`` (rooted/unrooted trivalent diagrams), ``maps``
(regular diagrams = triangular maps), ``census`` (genus tables), ``check``
(self-check against published series and the brute-force oracle) and
``stats`` (generation counters and the amortized-cost ratio).

Diagrams stream out in the shared line format; counts and census tables
are TSV.  Identical invocations produce byte-identical output.  Exit
codes: 0 success, 1 usage error, 2 self-check mismatch, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from typing import IO

from . import oracle, series
from .canonical import CanonicalCode
from .diagram import format_line
from .generator import count_by_size, generate
from .quotient import _min_root_scan, census_tsv, genus_census, unrooted_count_by_size

SERIES_CHOICES = ("rooted", "unrooted", "maps-rooted", "maps-unrooted")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Validated parameters of one invocation."""

    command: str
    max_size: int | None = None
    size: int | None = None
    faces: int | None = None
    unrooted: bool = False
    counts: bool = False
    genus_table: bool = False
    regular: bool = False
    series: str | None = None
    upto: int | None = None
    output: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="trivalent",
        description="Generate, count and classify trivalent diagrams "
        "and triangular maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument(
            "--output", metavar="PATH", default=None,
            help="write to PATH instead of standard output",
        )

    def add_rooting(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument(
            "--rooted", action="store_true",
            help="rooted classes (default)",
        )
        g.add_argument(
            "--unrooted", action="store_true",
            help="one representative per unrooted class",
        )

    p = sub.add_parser("generate", help="rooted/unrooted trivalent diagrams")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--max-size", type=int, metavar="N", help="all sizes up to N")
    g.add_argument("--size", type=int, metavar="N", help="size exactly N")
    add_rooting(p)
    p.add_argument("--counts", action="store_true",
                   help="per-size counts TSV instead of diagram lines")
    add_output(p)

    p = sub.add_parser("maps", help="regular diagrams = triangular maps")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--faces", type=int, metavar="F",
                   help="maps with exactly F faces (size 3F)")
    g.add_argument("--max-size", type=int, metavar="N", help="all sizes up to N")
    g.add_argument("--size", type=int, metavar="N",
                   help="size exactly N (N must be divisible by 6)")
    add_rooting(p)
    p.add_argument("--counts", action="store_true",
                   help="per-size counts TSV instead of diagram lines")
    p.add_argument("--genus-table", action="store_true",
                   help="genus census TSV for the selected face counts")
    add_output(p)

    p = sub.add_parser("census", help="genus census of triangular maps")
    p.add_argument("--faces", type=int, metavar="F", required=True,
                   help="face counts 2, 4, ..., F")
    add_rooting(p)
    add_output(p)

    p = sub.add_parser("check", help="compare counts against published series")
    p.add_argument("--series", choices=SERIES_CHOICES, required=True)
    p.add_argument("--upto", type=int, metavar="N", required=True,
                   help="check sizes 1..N")
    add_output(p)

    p = sub.add_parser("stats", help="generation counters and CAT ratio")
    p.add_argument("--max-size", type=int, metavar="N", required=True)
    p.add_argument("--regular", action="store_true",
                   help="count the regular-mode run instead of the full one")
    add_output(p)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        max_size=getattr(args, "max_size", None),
        size=getattr(args, "size", None),
        faces=getattr(args, "faces", None),
        unrooted=getattr(args, "unrooted", False),
        counts=getattr(args, "counts", False),
        genus_table=getattr(args, "genus_table", False),
        regular=getattr(args, "regular", False),
        series=getattr(args, "series", None),
        upto=getattr(args, "upto", None),
        output=getattr(args, "output", None),
    )


@contextmanager
def _open_output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        f = open(path, "w", newline="\n")
        try:
            yield f
        finally:
            f.close()


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


def _emit_diagrams(out: IO[str], n: int, mode: str, exact: bool,
                   unrooted: bool) -> None:
    if unrooted:
        def visit(size, s0, s1):
            code = CanonicalCode(
                size, tuple(s0[1:size + 1]), tuple(s1[1:size + 1])
            )
            if _min_root_scan(code)[0]:
                out.write(code.to_line())
    else:
        def visit(size, s0, s1):
            out.write(format_line(size, s0[1:size + 1], s1[1:size + 1]))

    generate(n, mode, visit, exact_size=exact)


def _emit_counts(out: IO[str], n: int, mode: str, sizes: list[int],
                 unrooted: bool) -> None:
    counts = (unrooted_count_by_size if unrooted else count_by_size)(n, mode)
    for size in sizes:
        out.write(f"{size}\t{counts.get(size, 0)}\n")


def _cmd_generate(cfg: RunConfig, out: IO[str]) -> int:
    exact = cfg.size is not None
    n = cfg.size if exact else cfg.max_size
    _require(n >= 1, "size must be >= 1")
    if cfg.counts:
        _emit_counts(out, n, "all", [n] if exact else list(range(1, n + 1)),
                     cfg.unrooted)
    else:
        _emit_diagrams(out, n, "all", exact, cfg.unrooted)
    return 0


def _cmd_maps(cfg: RunConfig, out: IO[str]) -> int:
    if cfg.faces is not None:
        _require(cfg.faces >= 2 and cfg.faces % 2 == 0,
                 "--faces must be even and >= 2")
        n, exact = 3 * cfg.faces, True
    elif cfg.size is not None:
        _require(cfg.size >= 6 and cfg.size % 6 == 0,
                 "--size must be a positive multiple of 6 for maps")
        n, exact = cfg.size, True
    else:
        _require(cfg.max_size >= 1, "size must be >= 1")
        n, exact = cfg.max_size, False

    if cfg.genus_table:
        faces_cols = [n // 3] if exact else list(range(2, n // 6 * 2 + 1, 2))
        _require(bool(faces_cols), "size bound too small for any map")
        census = genus_census(max(faces_cols))
        table = census.unrooted if cfg.unrooted else census.rooted
        out.write(census_tsv(table, faces_cols))
    elif cfg.counts:
        sizes = [n] if exact else list(range(6, n + 1, 6))
        _emit_counts(out, n, "regular", sizes, cfg.unrooted)
    else:
        _emit_diagrams(out, n, "regular", exact, cfg.unrooted)
    return 0


def _cmd_census(cfg: RunConfig, out: IO[str]) -> int:
    _require(cfg.faces >= 2 and cfg.faces % 2 == 0,
             "--faces must be even and >= 2")
    census = genus_census(cfg.faces)
    table = census.unrooted if cfg.unrooted else census.rooted
    out.write(census_tsv(table, census.faces()))
    return 0


def _cmd_check(cfg: RunConfig, out: IO[str]) -> int:
    upto = cfg.upto
    rows: list[tuple[str, int, int, int]] = []
    if cfg.series in ("rooted", "unrooted"):
        _require(1 <= upto <= len(series.ROOTED_DIAGRAMS),
                 f"--upto must be in 1..{len(series.ROOTED_DIAGRAMS)} "
                 f"for series {cfg.series}")
        if cfg.series == "rooted":
            actual = count_by_size(upto, "all")
            for k in range(1, upto + 1):
                rows.append(("series", k, series.expected_rooted(k),
                             actual.get(k, 0)))
            for k in range(1, min(upto, oracle.BRUTE_FORCE_LIMIT) + 1):
                rows.append(("oracle", k,
                             oracle.brute_force_counts(k).rooted_classes,
                             actual.get(k, 0)))
        else:
            actual = unrooted_count_by_size(upto, "all")
            for k in range(1, upto + 1):
                rows.append(("series", k, series.expected_unrooted(k),
                             actual.get(k, 0)))
    else:
        _require(6 <= upto <= 6 * len(series.ROOTED_MAPS),
                 f"--upto must be in 6..{6 * len(series.ROOTED_MAPS)} "
                 f"for series {cfg.series}")
        if cfg.series == "maps-rooted":
            actual = count_by_size(upto, "regular")
            for k in range(6, upto + 1, 6):
                rows.append(("series", k, series.expected_rooted_maps(k),
                             actual.get(k, 0)))
                rows.append(("recurrence", k,
                             oracle.regular_rooted_recurrence(k // 6),
                             actual.get(k, 0)))
        else:
            actual = unrooted_count_by_size(upto, "regular")
            for k in range(6, upto + 1, 6):
                rows.append(("series", k, series.expected_unrooted_maps(k),
                             actual.get(k, 0)))

    failures = 0
    for source, size, expected, actual_value in rows:
        ok = expected == actual_value
        failures += not ok
        out.write(f"{source}\t{size}\t{expected}\t{actual_value}\t"
                  f"{'ok' if ok else 'MISMATCH'}\n")
    if failures:
        print(f"check failed: {failures} mismatch(es) for series "
              f"{cfg.series} up to {upto}", file=sys.stderr)
        return 2
    return 0


def _cmd_stats(cfg: RunConfig, out: IO[str]) -> int:
    _require(cfg.max_size >= 1, "size must be >= 1")
    st = generate(cfg.max_size, "regular" if cfg.regular else "all")
    for name in ("generate", "dispatch", "try_closed_white", "try_forward",
                 "try_closed_black", "try_backward", "recurse", "output"):
        out.write(f"{name}\t{getattr(st, name)}\n")
    out.write(f"calls\t{st.calls}\n")
    ratio = st.calls_per_output
    out.write(f"calls_per_output\t"
              f"{'inf' if ratio == float('inf') else format(ratio, '.4f')}\n")
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "maps": _cmd_maps,
    "census": _cmd_census,
    "check": _cmd_check,
    "stats": _cmd_stats,
}


def run(config: RunConfig) -> int:
    """Execute one validated configuration; returns the exit status."""
    try:
        with _open_output(config.output) as out:
            status = _COMMANDS[config.command](config, out)
            out.flush()
            return status
    except UsageError as exc:
        print(f"trivalent: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"trivalent: i/o error: {exc}", file=sys.stderr)
        return 3


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return run(_config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
