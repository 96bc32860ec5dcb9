"""Command-line front end.

Every subcommand writes a table (CSV by default, JSON on request) to stdout
or ``--out``.  CSV output ends with a ``# config: {...}`` line holding the
full run configuration, so re-running a recorded config reproduces the file
byte for byte.

Exit codes: 0 success, 2 validation error, 3 singular torus point,
4 scale guard exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence

from . import characters, limitlaw, measure, multiplicities
from .errors import InvalidWeightError, ScaleGuardError, SingularPointError
from .exactalg import torus_point
from .rootsys import is_dominant, lambda_from_s, validate_s

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_SINGULAR = 3
EXIT_SCALE = 4


@dataclass
class RunConfig:
    command: str
    n: int
    N: int | None = None
    N_list: list[int] = field(default_factory=list)
    s: list[list[int]] = field(default_factory=list)
    s_max: int | None = None
    lam: list[int] | None = None
    y: list[str] | None = None
    theta: list[float] | None = None
    seed: int = 0
    count: int = 10000
    out: str | None = None
    format: str = "csv"
    mode: str = "exact"
    dps: int = measure.DEFAULT_DPS
    force: bool = False

    def validate(self) -> None:
        if self.n < 1:
            raise InvalidWeightError(f"--n must be >= 1, got {self.n}")
        if self.theta is not None and self.command not in ("limit", "converge"):
            raise InvalidWeightError("--theta is only accepted by 'limit' and 'converge'")
        if self.command in ("limit", "converge"):
            if self.theta is None:
                raise InvalidWeightError(f"'{self.command}' requires --theta")
            if self.mode == "exact":
                raise InvalidWeightError("the limit law is float-only; exact mode refuses --theta")
            if len(self.theta) != self.n:
                raise InvalidWeightError(f"--theta needs {self.n} entries, got {len(self.theta)}")
        if self.y is not None and len(self.y) != self.n:
            raise InvalidWeightError(f"--y needs {self.n} entries, got {len(self.y)}")
        for s in self.s:
            if len(s) != self.n:
                raise InvalidWeightError(f"--s needs {self.n} entries, got {s}")
        if self.command in ("mult", "measure", "plancherel", "sample") and self.N is None:
            raise InvalidWeightError(f"'{self.command}' requires --N")
        if self.N is not None and self.N < 0:
            raise InvalidWeightError(f"--N must be >= 0, got {self.N}")
        if self.count < 0:
            raise InvalidWeightError("--count must be non-negative")

    def provenance(self) -> str:
        return "config: " + json.dumps(asdict(self), sort_keys=True)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _rationals(text: str) -> list[str]:
    parts = [x.strip() for x in text.split(",") if x.strip()]
    for p in parts:
        try:
            Fraction(p)
        except (ValueError, ZeroDivisionError) as exc:
            raise argparse.ArgumentTypeError(f"expected p/q rationals, got {p!r}") from exc
    return parts


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated decimals, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinorlaw",
        description="Spinor tensor powers of so(2n+1): multiplicities, characters, measures, limit law.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, power=True):
        p.add_argument("--n", type=int, required=True, help="rank of so(2n+1)")
        if power:
            p.add_argument("--N", type=int, help="tensor power")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--force", action="store_true", help="override scale guards")
        p.add_argument("--dps", type=int, default=measure.DEFAULT_DPS,
                       help="working decimal digits in float mode")
        return p

    p = common(sub.add_parser("mult", help="exact and asymptotic multiplicities"))
    p.add_argument("--s", type=_ints, action="append", default=[],
                   help="boundary offsets, e.g. 0,1 (repeatable; default: whole support)")

    p = common(sub.add_parser("char", help="character value at a torus point"))
    p.add_argument("--lambda", dest="lam", type=_ints, help="highest weight, doubled coordinates")
    p.add_argument("--s", type=_ints, action="append", default=[], help="highest weight as N - 2s")
    p.add_argument("--y", type=_rationals, required=True, help="torus point, e.g. 2,3/2")

    for name, hlp in (("measure", "character measure table"), ("plancherel", "Plancherel measure table")):
        p = common(sub.add_parser(name, help=hlp))
        if name == "measure":
            p.add_argument("--y", type=_rationals, help="torus point (omit for the dimension point)")
            p.add_argument("--mode", choices=("exact", "float"), default=None)

    p = common(sub.add_parser("limit", help="limit density over an s-box"), power=False)
    p.add_argument("--theta", type=_floats, required=True)
    p.add_argument("--s-max", type=int, default=5)
    p.add_argument("--mode", choices=("exact", "float"), default=None)

    p = common(sub.add_parser("converge", help="finite-N measure versus limit density"), power=False)
    p.add_argument("--theta", type=_floats, required=True)
    p.add_argument("--N-list", type=_ints, required=True)
    p.add_argument("--s", type=_ints, action="append", default=[])
    p.add_argument("--s-max", type=int, default=2, help="when no --s is given, use every s with s_n <= s-max")
    p.add_argument("--mode", choices=("exact", "float"), default=None)

    p = common(sub.add_parser("sample", help="draw from the exact character measure"))
    p.add_argument("--y", type=_rationals, help="torus point (omit for the dimension point)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10000)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    mode = getattr(args, "mode", None)
    if mode is None:
        mode = "float" if args.command in ("limit", "converge") else "exact"
    return RunConfig(
        command=args.command, n=args.n, N=getattr(args, "N", None),
        N_list=getattr(args, "N_list", None) or [], s=getattr(args, "s", None) or [],
        s_max=getattr(args, "s_max", None), lam=getattr(args, "lam", None),
        y=getattr(args, "y", None), theta=getattr(args, "theta", None),
        seed=getattr(args, "seed", 0), count=getattr(args, "count", 10000),
        out=args.out, format=args.format, mode=mode, dps=args.dps, force=args.force)


def _guard(cfg: RunConfig, N: int, mode: str) -> None:
    try:
        measure.check_scale(cfg.n, N, mode)
    except ScaleGuardError:
        if not cfg.force:
            raise
        print(f"warning: scale guard overridden for n={cfg.n}, N={N} ({mode} mode)", file=sys.stderr)


def _fmt(x) -> str:
    return str(x) if isinstance(x, (int, Fraction)) else repr(float(x))


def _run_mult(cfg: RunConfig):
    _guard(cfg, cfg.N, "float")
    s_list = [tuple(s) for s in cfg.s] or measure.support(cfg.n, cfg.N)
    fields = [f"s_{i + 1}" for i in range(cfg.n)] + [f"lambda_{i + 1}" for i in range(cfg.n)] + [
        "multiplicity_exact", "multiplicity_asymptotic", "ratio"]
    rows = []
    for s in s_list:
        lam = lambda_from_s(cfg.N, s)
        exact = multiplicities.multiplicity_exact(cfg.n, cfg.N, s)
        approx = multiplicities.multiplicity_asymptotic(cfg.n, cfg.N, s)
        row = {f"s_{i + 1}": v for i, v in enumerate(s)}
        row.update({f"lambda_{i + 1}": v for i, v in enumerate(lam)})
        row.update(multiplicity_exact=exact, multiplicity_asymptotic=repr(approx),
                   ratio=repr(exact / approx) if approx else "")
        rows.append(row)
    return fields, rows, []


def _run_char(cfg: RunConfig):
    pt = torus_point(cfg.y)
    if cfg.lam is not None:
        lam = tuple(cfg.lam)
    elif cfg.s:
        if cfg.N is None:
            raise InvalidWeightError("--s requires --N")
        lam = lambda_from_s(cfg.N, validate_s(cfg.N, cfg.s[0]))
    else:
        lam = (1,) * cfg.n
    if len(lam) != cfg.n or not is_dominant(lam):
        raise InvalidWeightError(f"highest weight {lam} must be dominant with {cfg.n} entries")
    if all(v == 1 for v in pt):
        value = Fraction(characters.dim_weyl(lam))
    elif lam == (1,) * cfg.n:
        value = characters.spinor_character(cfg.n).evaluate(pt)
    else:
        value = characters.character_Bn(lam, pt)
    fields = ([f"lambda_{i + 1}" for i in range(cfg.n)] + [f"y_{i + 1}" for i in range(cfg.n)]
              + ["value_num", "value_den", "value_float"])
    row = {f"lambda_{i + 1}": v for i, v in enumerate(lam)}
    row.update({f"y_{i + 1}": str(v) for i, v in enumerate(pt)})
    row.update(value_num=value.numerator, value_den=value.denominator, value_float=repr(float(value)))
    return fields, [row], []


def _run_measure(cfg: RunConfig):
    _guard(cfg, cfg.N, cfg.mode)
    pt = None
    if cfg.command == "measure" and cfg.y is not None:
        pt = torus_point(cfg.y)
    table = measure.measure_table(cfg.n, cfg.N, pt, cfg.mode, force=True, dps=cfg.dps)
    total = table.total()
    return table.fieldnames(), table.rows(), [f"normalization: {_fmt(total)}"]


def _run_limit(cfg: RunConfig):
    theta = cfg.theta
    fields = [f"s_{i + 1}" for i in range(cfg.n)] + [f"theta_{i + 1}" for i in range(cfg.n)] + ["p_limit"]
    rows = []
    for s in limitlaw.valid_s(cfg.n, cfg.s_max):
        row = {f"s_{i + 1}": v for i, v in enumerate(s)}
        row.update({f"theta_{i + 1}": repr(v) for i, v in enumerate(theta)})
        row["p_limit"] = repr(limitlaw.limit_density(cfg.n, s, theta))
        rows.append(row)
    total = limitlaw.limit_normalization(cfg.n, theta, cfg.s_max)
    return fields, rows, [f"truncated_mass: {total!r}"]


def _run_converge(cfg: RunConfig):
    for N in cfg.N_list:
        _guard(cfg, N, "float")
    s_list = [tuple(s) for s in cfg.s] or list(limitlaw.valid_s(cfg.n, cfg.s_max))
    records = limitlaw.convergence_table(cfg.n, cfg.theta, s_list, cfg.N_list, cfg.dps)
    return limitlaw.convergence_fieldnames(cfg.n), [r.row() for r in records], []


def _run_sample(cfg: RunConfig):
    _guard(cfg, cfg.N, "exact")
    pt = torus_point(cfg.y) if cfg.y is not None else None
    table = measure.measure_table(cfg.n, cfg.N, pt, "exact", force=True)
    draws = measure.sample(cfg.n, cfg.N, pt, cfg.seed, cfg.count, table=table)
    freq = measure.empirical_frequencies(draws)
    fields = [f"s_{i + 1}" for i in range(cfg.n)] + ["count", "empirical", "exact"]
    rows = []
    for p in table.points:
        row = {f"s_{i + 1}": v for i, v in enumerate(p.s)}
        f = freq.get(p.s, 0.0)
        row.update(count=round(f * cfg.count), empirical=repr(f), exact=repr(float(p.probability)))
        rows.append(row)
    tv = measure.total_variation(table, draws) if draws else 0.0
    return fields, rows, [f"total_variation: {tv!r}"]


RUNNERS = {
    "mult": _run_mult,
    "char": _run_char,
    "measure": _run_measure,
    "plancherel": _run_measure,
    "limit": _run_limit,
    "converge": _run_converge,
    "sample": _run_sample,
}


def render(cfg: RunConfig, fields: list[str], rows: list[dict], notes: list[str]) -> str:
    buf = io.StringIO()
    if cfg.format == "json":
        json.dump(rows, buf, indent=2)
        buf.write("\n")
    else:
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        for note in notes:
            buf.write(f"# {note}\n")
        buf.write(f"# {cfg.provenance()}\n")
    return buf.getvalue()


def run(cfg: RunConfig) -> int:
    """Execute one configured subcommand; returns the process exit code."""
    try:
        cfg.validate()
        if cfg.n > measure.MAX_RANK:
            if not cfg.force:
                raise ScaleGuardError(f"rank limited to n <= {measure.MAX_RANK}; got n={cfg.n}")
            print(f"warning: scale guard overridden for n={cfg.n}", file=sys.stderr)
        fields, rows, notes = RUNNERS[cfg.command](cfg)
    except ScaleGuardError as exc:
        print(f"error: scale guard: {exc} (use --force to override)", file=sys.stderr)
        return EXIT_SCALE
    except SingularPointError as exc:
        print(f"error: singular torus point: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except (InvalidWeightError, ValueError) as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    text = render(cfg, fields, rows, notes)
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
