"""``kroc`` command line.

Subcommands::

    kroc eval <file> [--curves out.csv] [--out report.json] [--figures DIR]
    kroc average <file> <file>... [--grid N] [--out band.csv] [--figures DIR]
    kroc reorder <file> [--out table.csv]
    kroc synth ideal N N_TARGET [--out file]
    kroc synth random N N_TARGET --seed S [--out file]
    kroc synth binormal N PREVALENCE SEPARATION --seed S [--out file]

Exit codes: 0 ok, 2 malformed input, 3 degenerate data (single class,
too few rows), 4 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import IO, Iterator, Sequence

from kroc.averaging import DEFAULT_GRID_SIZE, average_ks_curves, project_average_to_roc
from kroc.csvio import read_sample, write_rows, write_sample
from kroc.curves import ClassCounts, KsCurve, LabeledSample, RocCurve, build_curves
from kroc.errors import DegenerateDataError, KrocError, ParseError
from kroc.metrics import (
    PointMetric,
    auc_ks,
    auc_roc,
    gini,
    max_ks2,
    max_ks2_projection,
    mvd,
)
from kroc.segopt import reorder_for_max_ks
from kroc.synth import BinormalSpec, gen_binormal, gen_ideal, gen_random

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_USAGE = 4

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class EvalReport:
    counts: ClassCounts
    auc_roc: float
    auc_ks: float
    gini: float
    identity_residual: float
    max_ks2: PointMetric
    mvd: PointMetric
    max_ks2_projection: PointMetric
    roc: RocCurve
    ks: KsCurve

    def to_dict(self, vertices: bool = True) -> dict:
        c = self.counts
        out = {
            "schema": SCHEMA_VERSION,
            "counts": {
                "n": c.n,
                "n_target": c.n_target,
                "n_complement": c.n_complement,
                "prevalence": c.prevalence,
            },
            "auc_roc": self.auc_roc,
            "auc_ks": self.auc_ks,
            "gini": self.gini,
            "identity_residual": self.identity_residual,
            "max_ks2": asdict(self.max_ks2),
            "mvd": asdict(self.mvd),
            "max_ks2_projection": asdict(self.max_ks2_projection),
        }
        if vertices:
            out["roc_vertices"] = [
                [u, v, r] for u, v, r in zip(self.roc.u.tolist(), self.roc.v.tolist(), self.roc.rank.tolist())
            ]
            out["ks_vertices"] = [
                [x, y, r] for x, y, r in zip(self.ks.x.tolist(), self.ks.y.tolist(), self.ks.rank.tolist())
            ]
        return out


def evaluate(sample: LabeledSample) -> EvalReport:
    roc, ks = build_curves(sample)
    a_roc = auc_roc(roc)
    a_ks = auc_ks(ks)
    return EvalReport(
        counts=roc.counts,
        auc_roc=a_roc,
        auc_ks=a_ks,
        gini=gini(a_roc),
        identity_residual=a_roc - 0.5 - a_ks,
        max_ks2=max_ks2(ks),
        mvd=mvd(roc),
        max_ks2_projection=max_ks2_projection(roc),
        roc=roc,
        ks=ks,
    )


@contextlib.contextmanager
def _output(path: str | None) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _render(kind: str, out_dir: str, *args) -> None:
    # matplotlib is only imported when figures are requested
    from kroc import plotting

    getattr(plotting, kind)(*args, out_dir)


def cmd_eval(args: argparse.Namespace) -> int:
    report = evaluate(read_sample(args.file))
    with _output(args.out) as fh:
        json.dump(report.to_dict(vertices=not args.summary_only), fh, indent=2)
        fh.write("\n")
    if args.curves:
        roc, ks = report.roc, report.ks
        with open(args.curves, "w", encoding="utf-8", newline="") as fh:
            write_rows(
                fh,
                ["rank", "threshold", "x", "y", "u", "v"],
                [roc.rank, roc.threshold, ks.x, ks.y, roc.u, roc.v],
            )
    if args.figures:
        _render("plot_eval", args.figures, report.roc, report.ks)
    return EXIT_OK


def cmd_average(args: argparse.Namespace) -> int:
    if len(args.files) < 2:
        raise UsageError(f"average needs at least 2 files, got {len(args.files)}")
    if args.grid < 2:
        raise UsageError(f"--grid must be >= 2, got {args.grid}")
    curves = [build_curves(read_sample(f))[1] for f in args.files]
    avg = average_ks_curves(curves, args.grid)
    band = project_average_to_roc(avg)
    with _output(args.out) as fh:
        write_rows(
            fh,
            ["x", "mean_y", "stderr_y", "u", "v", "du", "dv"],
            [avg.grid, avg.mean_y, avg.stderr_y, band.u, band.v, band.du, band.dv],
        )
    if args.figures:
        _render("plot_average", args.figures, avg, band)
    return EXIT_OK


def cmd_reorder(args: argparse.Namespace) -> int:
    result = reorder_for_max_ks(read_sample(args.file))
    table = result.table
    with _output(args.out) as fh:
        write_rows(
            fh,
            ["value_low", "value_high", "new_position"],
            [
                [r.value_low for r in table],
                [r.value_high for r in table],
                [r.new_position for r in table],
            ],
        )
        footer = {
            "achieved_max_ks2": result.achieved_max_ks2,
            "original_max_ks2": result.original_max_ks2,
            "segments": len(table),
        }
        fh.write(json.dumps(footer) + "\n")
    return EXIT_OK


def _synth_sample(args: argparse.Namespace) -> LabeledSample:
    p = args.params
    try:
        if args.kind in ("ideal", "random"):
            if len(p) != 2:
                raise UsageError(f"synth {args.kind} takes N N_TARGET, got {len(p)} values")
            n, n_target = int(p[0]), int(p[1])
            if args.kind == "ideal":
                return gen_ideal(n, n_target)
            return gen_random(n, n_target, args.seed)
        if len(p) != 3:
            raise UsageError(f"synth binormal takes N PREVALENCE SEPARATION, got {len(p)} values")
        spec = BinormalSpec(int(p[0]), float(p[1]), float(p[2]), args.seed)
        return gen_binormal(spec)
    except (UsageError, KrocError):
        raise
    except ValueError as exc:
        raise ParseError(f"bad synth parameters: {exc}") from None


def cmd_synth(args: argparse.Namespace) -> int:
    sample = _synth_sample(args)
    with _output(args.out) as fh:
        write_sample(sample, fh)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kroc", description="ROC / KS curve evaluation of binary classifiers")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="metrics, curves and identity residual for one file")
    p.add_argument("file")
    p.add_argument("--out", help="JSON report path (default stdout)")
    p.add_argument("--curves", help="write both polylines to this CSV")
    p.add_argument("--summary-only", action="store_true", help="omit vertex lists from the JSON")
    p.add_argument("--figures", metavar="DIR", help="also render curves.png into DIR")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("average", help="average KS curves of several folds")
    p.add_argument("files", nargs="*")
    p.add_argument("--grid", type=int, default=DEFAULT_GRID_SIZE, help="number of quantiles")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.add_argument("--figures", metavar="DIR", help="also render average.png into DIR")
    p.set_defaults(func=cmd_average)

    p = sub.add_parser("reorder", help="segment reordering table maximising Max KS")
    p.add_argument("file")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_reorder)

    p = sub.add_parser("synth", help="write a synthetic dataset")
    p.add_argument("kind", choices=["ideal", "random", "binormal"])
    p.add_argument("params", nargs="+")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_synth)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"kroc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateDataError as exc:
        print(f"kroc: degenerate data: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ParseError, UnicodeDecodeError) as exc:
        print(f"kroc: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"kroc: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
