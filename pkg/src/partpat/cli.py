"""Command-line harness: counting runs, containment queries, conjecture
scans, bound audits, graph conversion, and cache management.

Exit codes: 0 success, 1 invalid input, 2 hard assertion failure (a
desk-scale theorem check or internal identity broke), 3 resource ceiling
exceeded. Trend verdicts from the conjecture scans never change the exit
status; only exact claims do.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Any, Sequence

from .containment import find_occurrence
from .core import (
    IntervalCut,
    LayeredShape,
    ParseError,
    SetPartition,
    format_partition,
    parse,
    permeability,
    permeability_oracle,
)
from .dacp import DacpError, dacp_from_obj, dacp_to_obj, from_dacp, to_dacp
from .enumeration import (
    CeilingError,
    CountCache,
    CountRecord,
    all_partitions,
    count_avoiders,
    count_avoiders_oracle,
    f_ratio,
    uniform_count,
    uniform_partitions,
)
from .formulas import block_recursion, log_upper_bound_layered

__all__ = ["main"]

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ASSERTION = 2
EXIT_CEILING = 3

CACHE_ENV_VAR = "PARTPAT_CACHE"
DEFAULT_ENUM_CEILING = 13
DEFAULT_ORACLE_CEILING = 10
DEFAULT_K_CEILING = 5

SCAN_COLUMNS = ("tau", "n", "count", "f_ratio", "pm", "pm_target", "gap", "gap_times_log_n")
BOUND_COLUMNS = (
    "tau", "k", "r", "n", "count", "f_ratio",
    "ln_count", "lower_bound", "upper_bound", "within",
)


class FindingError(RuntimeError):
    """A hard assertion failed; details were already reported."""


class _UsageError(ValueError):
    pass


@dataclass(frozen=True)
class ScanConfig:
    """Validated knobs shared by the scanning subcommands."""

    patterns: tuple[SetPartition, ...]
    n_from: int
    n_to: int
    workers: int = 1
    oracle_ceiling: int = DEFAULT_ORACLE_CEILING
    enum_ceiling: int = DEFAULT_ENUM_CEILING
    use_oracle: bool = False
    cache_path: Path | None = None
    fmt: str = "csv"
    out: Path | None = None

    def __post_init__(self) -> None:
        if self.n_from < 0 or self.n_to < self.n_from:
            raise ValueError("n range is empty or negative")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")
        if self.oracle_ceiling > 12:
            raise ValueError("oracle ceiling must be <= 12")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"unknown format {self.fmt!r}")

    def check_ceiling(self) -> None:
        # one-block patterns are served by the closed recursion, which has no
        # practical depth limit; everything else walks the RGS tree
        needs_enumeration = any(len(p.blocks) > 1 for p in self.patterns)
        if self.use_oracle:
            if self.n_to > self.oracle_ceiling:
                raise CeilingError(
                    f"oracle ceiling {self.oracle_ceiling} exceeded by n={self.n_to}"
                )
        elif needs_enumeration and self.n_to > self.enum_ceiling:
            raise CeilingError(
                f"enumeration ceiling {self.enum_ceiling} exceeded by n={self.n_to}"
            )

    def ns(self) -> range:
        return range(self.n_from, self.n_to + 1)


@dataclass(frozen=True)
class ConjectureVerdict:
    """Outcome of one conjecture probe for one pattern (or the whole family).

    ``fail`` always carries a concrete counterexample; asymptotic probes
    only ever report a consistent or inconsistent trend, never a pass.
    """

    conjecture: str
    tau: str | None
    status: str
    summary: str
    rows: tuple[dict[str, Any], ...] = field(default=())
    counterexample: dict[str, Any] | None = None

    def __post_init__(self) -> None:
        if self.status == "fail" and self.counterexample is None:
            raise AssertionError("fail verdict requires a counterexample")

    def line(self) -> str:
        scope = f" tau={self.tau}" if self.tau else ""
        return f"conjecture {self.conjecture}{scope}: {self.status} ({self.summary})"


def _fmt(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return format(x, ".12g")
    return str(x)


def _counter(config: ScanConfig):
    """Cache-aware count function for the scan subcommands.

    One-block patterns route through the block recursion, which matches the
    enumerator exactly and stays fast far beyond the enumeration ceiling.
    """
    cache = CountCache(config.cache_path) if config.cache_path else None
    recursion: dict[int, list[int]] = {}

    def count(tau: SetPartition, n: int) -> CountRecord:
        text = format_partition(tau)
        if cache is not None:
            hit = cache.get(text, n)
            if hit is not None:
                return CountRecord(text, n, hit)
        if config.use_oracle:
            record = count_avoiders_oracle(tau, n, ceiling=config.oracle_ceiling)
        elif len(tau.blocks) == 1 and tau.n == 1:
            record = CountRecord(text, n, 1 if n == 0 else 0)
        elif len(tau.blocks) == 1:
            table = recursion.get(tau.n)
            if table is None or len(table) <= n:
                table = block_recursion(tau.n, max(n, config.n_to, 1))
                recursion[tau.n] = table
            record = CountRecord(text, n, table[n])
        else:
            record = count_avoiders(tau, n, workers=config.workers)
        if cache is not None:
            cache.add(record)
        return record

    return count


def _scan_rows(tau: SetPartition, records: Sequence[CountRecord]) -> list[dict[str, Any]]:
    pm, _ = permeability(tau)
    target = 1.0 - 1.0 / pm if pm >= 1 else None
    rows = []
    for rec in sorted(records, key=lambda r: r.n):
        f = f_ratio(rec) if rec.n >= 2 and rec.count > 0 else None
        gap = target - f if target is not None and f is not None else None
        rows.append(
            {
                "tau": rec.tau,
                "n": rec.n,
                "count": str(rec.count),
                "f_ratio": f,
                "pm": pm,
                "pm_target": target,
                "gap": gap,
                "gap_times_log_n": gap * math.log(rec.n) if gap is not None else None,
            }
        )
    return rows


def _emit_rows(rows: list[dict[str, Any]], columns: Sequence[str], config: ScanConfig) -> None:
    if config.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(row.get(c)) for c in columns])
        text = buf.getvalue()
    else:
        text = json.dumps(rows, indent=2) + "\n"
    if config.out is not None:
        config.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_document(doc: Any, text_lines: list[str], config: ScanConfig, columns: Sequence[str], rows: list[dict[str, Any]]) -> None:
    """Verdict-style output: text summary on stderr, data on stdout/file."""
    for line in text_lines:
        print(line, file=sys.stderr)
    if config.fmt == "json":
        text = json.dumps(doc, indent=2) + "\n"
        if config.out is not None:
            config.out.write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    else:
        _emit_rows(rows, columns, config)


# ---------------------------------------------------------------- count


def _cmd_count(args: argparse.Namespace) -> int:
    tau = parse(args.pattern)
    config = _scan_config(args, patterns=(tau,))
    config.check_ceiling()
    count = _counter(config)
    records = [count(tau, n) for n in config.ns()]
    _emit_rows(_scan_rows(tau, records), SCAN_COLUMNS, config)
    return EXIT_OK


# ---------------------------------------------------------------- check


def _cmd_check(args: argparse.Namespace) -> int:
    host = parse(args.host)
    pattern = parse(args.pattern)
    occ = find_occurrence(host, pattern)
    if args.format == "json":
        doc = {
            "host": format_partition(host),
            "pattern": format_partition(pattern),
            "contains": occ is not None,
            "witness": list(occ.map) if occ else None,
        }
        print(json.dumps(doc))
    elif occ is not None:
        print(f"contains: witness {json.dumps(list(occ.map))}")
    else:
        print("avoids")
    return EXIT_OK


# ---------------------------------------------------------------- conjectures


def _margin_blow_up(margins: list[float]) -> bool:
    """Sustained growth heuristic: the second half sits above everything in
    the first half and the final margin more than doubles the initial one."""
    if len(margins) < 4 or margins[0] <= 0:
        return False
    half = len(margins) // 2
    return min(margins[half:]) > max(margins[:half]) and margins[-1] > 2 * margins[0]


def _conjecture_one(
    k: int, counts: dict[str, list[CountRecord]], ns: range
) -> ConjectureVerdict:
    block = format_partition(SetPartition.from_blocks([range(1, k + 1)]))
    block_counts = {r.n: r.count for r in counts[block]}
    rows = []
    counterexample = None
    for tau_text, records in counts.items():
        if tau_text == block:
            continue
        n0 = None
        for rec in records:
            if block_counts[rec.n] < rec.count and counterexample is None:
                counterexample = {"tau": tau_text, "n": rec.n, "count": str(rec.count), "block_count": str(block_counts[rec.n])}
            if n0 is None and block_counts[rec.n] > rec.count:
                n0 = rec.n
        rows.append({"tau": tau_text, "first_strict_n": n0})
    if counterexample is not None:
        return ConjectureVerdict(
            "1", None, "fail",
            f"A_n(block) < A_n({counterexample['tau']}) at n={counterexample['n']}",
            tuple(rows), counterexample,
        )
    return ConjectureVerdict(
        "1", None, "pass",
        f"A_n({block}) >= A_n(tau) for all {len(counts) - 1} other patterns of [{k}], "
        f"n in {ns.start}..{ns.stop - 1}",
        tuple(rows),
    )


def _conjecture_probes(
    tau_text: str, records: list[CountRecord]
) -> list[ConjectureVerdict]:
    tau = parse(tau_text)
    pm, _ = permeability(tau)
    usable = [r for r in records if r.n >= 2 and r.count > 0]
    fs = [(r.n, f_ratio(r)) for r in usable]
    verdicts: list[ConjectureVerdict] = []

    if pm == 0:
        verdicts.append(
            ConjectureVerdict(
                "5", tau_text, "degenerate",
                "pm=0: target 1-1/pm undefined; growth is at most exponential so F tends to 0"
                + ("; observed F stays 0" if all(f == 0.0 for _, f in fs) else ""),
                tuple({"n": n, "f_ratio": f, "pm_target": None, "gap": None} for n, f in fs),
            )
        )
        verdicts.append(
            ConjectureVerdict("6", tau_text, "degenerate", "pm=0: no finite target to compare against")
        )
        return verdicts

    target = 1.0 - 1.0 / pm
    gaps = [(n, target - f) for n, f in fs]
    margins = [abs(g) * math.log(n) for n, g in gaps]
    rows5 = tuple(
        {"n": n, "f_ratio": f, "pm_target": target, "gap": g}
        for (n, f), (_, g) in zip(fs, gaps)
    )
    status5 = "inconsistent" if _margin_blow_up(margins) else "consistent"
    last_gap = gaps[-1][1] if gaps else None
    verdicts.append(
        ConjectureVerdict(
            "5", tau_text, status5,
            f"pm={pm}, target={_fmt(target)}, gap at n={gaps[-1][0] if gaps else '-'} is {_fmt(last_gap)}",
            rows5,
        )
    )

    rows6 = tuple({"n": n, "margin": m} for (n, _), m in zip(gaps, margins))
    status6 = "inconsistent" if _margin_blow_up(margins) else "consistent"
    summary6 = f"|F_n - (1-1/{pm})| * ln n stays within [{_fmt(min(margins, default=0.0))}, {_fmt(max(margins, default=0.0))}]"
    if fs:
        f_last = fs[-1][1]
        if f_last < 1.0:
            c_est = 1.0 / (1.0 - f_last)
            nearest = max(1, round(c_est))
            if nearest != pm:
                summary6 += (
                    f"; observed trend prefers c={nearest} (target {_fmt(1 - 1 / nearest)})"
                    f" over pm-based c={pm}"
                )
    verdicts.append(ConjectureVerdict("6", tau_text, status6, summary6, rows6))

    if fs:
        rows24 = []
        for n, f in fs:
            c_est = 1.0 / (1.0 - f) if f < 1.0 else None
            dist = abs(c_est - round(c_est)) if c_est is not None else None
            rows24.append({"n": n, "c_estimate": c_est, "distance_to_integer": dist})
        tail = rows24[-1]
        verdicts.append(
            ConjectureVerdict(
                "2-4", tau_text, "diagnostic",
                f"1/(1-F_n) at n={tail['n']} is {_fmt(tail['c_estimate'])}, "
                f"{_fmt(tail['distance_to_integer'])} from the nearest integer",
                tuple(rows24),
            )
        )
    return verdicts


def _cmd_conjectures(args: argparse.Namespace) -> int:
    if args.all_k is not None:
        if args.all_k > args.k_ceiling:
            raise CeilingError(f"pattern family ceiling k <= {args.k_ceiling} exceeded by k={args.all_k}")
        if args.all_k < 1:
            raise ValueError("--all-k must be >= 1")
        patterns = tuple(all_partitions(args.all_k))
    elif args.pattern:
        patterns = tuple(parse(t) for t in args.pattern)
    else:
        raise ValueError("supply --all-k or at least one --pattern")
    config = _scan_config(args, patterns=patterns)
    config.check_ceiling()
    count = _counter(config)

    counts: dict[str, list[CountRecord]] = {}
    for tau in patterns:
        counts[format_partition(tau)] = [count(tau, n) for n in config.ns()]

    verdicts: list[ConjectureVerdict] = []
    if args.all_k is not None:
        verdicts.append(_conjecture_one(args.all_k, counts, config.ns()))
    for tau_text, records in counts.items():
        verdicts.extend(_conjecture_probes(tau_text, records))

    scan_rows = []
    for tau in patterns:
        scan_rows.extend(_scan_rows(tau, counts[format_partition(tau)]))
    doc = {
        "verdicts": [
            {
                "conjecture": v.conjecture,
                "tau": v.tau,
                "status": v.status,
                "summary": v.summary,
                "rows": list(v.rows),
                "counterexample": v.counterexample,
            }
            for v in verdicts
        ],
        "rows": scan_rows,
    }
    _emit_document(doc, [v.line() for v in verdicts], config, SCAN_COLUMNS, scan_rows)
    return EXIT_OK


# ---------------------------------------------------------------- bounds


def _compositions(k: int):
    for r in range(1, k + 1):
        for cuts in combinations(range(1, k), r - 1):
            bounds = (0,) + cuts + (k,)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def _cmd_bounds(args: argparse.Namespace) -> int:
    shapes: list[LayeredShape] = []
    if args.shape:
        for text in args.shape:
            try:
                parts = tuple(int(x) for x in text.split(","))
            except ValueError:
                raise ValueError(f"malformed shape {text!r}; expected e.g. 2,2")
            shapes.append(LayeredShape(parts))
    elif args.all_k is not None:
        if args.all_k > args.k_ceiling:
            raise CeilingError(f"pattern family ceiling k <= {args.k_ceiling} exceeded by k={args.all_k}")
        shapes = [
            LayeredShape(c)
            for k in range(2, args.all_k + 1)
            for c in _compositions(k)
            if len(c) < k
        ]
    else:
        raise ValueError("supply --shape or --all-k")
    for shape in shapes:
        if shape.r >= shape.k:
            raise ValueError(f"shape {shape.parts} has no non-singleton layer (k must exceed r)")

    config = _scan_config(args, patterns=tuple(s.to_partition() for s in shapes))
    config.check_ceiling()
    count = _counter(config)

    rows = []
    findings = []
    for shape in shapes:
        tau = shape.to_partition()
        k, r, t = shape.k, shape.r, shape.k - shape.r
        for n in config.ns():
            if n < 1:
                continue
            rec = count(tau, n)
            ln_count = math.log(rec.count) if rec.count > 0 else None
            upper = log_upper_bound_layered(k, r, n).value
            lower = None
            if t == 1:
                lower = 0.0
            elif n % t == 0:
                lower = (t - 1) * math.log(math.factorial(n // t))
            within = (
                ln_count is not None
                and ln_count <= upper + 1e-9
                and (lower is None or lower <= ln_count + 1e-9)
            )
            if not within:
                findings.append(
                    f"bound violation: tau={rec.tau} n={n} ln_count={_fmt(ln_count)} "
                    f"lower={_fmt(lower)} upper={_fmt(upper)}"
                )
            rows.append(
                {
                    "tau": rec.tau,
                    "k": k,
                    "r": r,
                    "n": n,
                    "count": str(rec.count),
                    "f_ratio": f_ratio(rec) if n >= 2 and rec.count > 0 else None,
                    "ln_count": ln_count,
                    "lower_bound": lower,
                    "upper_bound": upper,
                    "within": within,
                }
            )
    _emit_rows(rows, BOUND_COLUMNS, config)
    if findings:
        for finding in findings:
            print(finding, file=sys.stderr)
        raise FindingError(f"{len(findings)} bound violations")
    return EXIT_OK


# ---------------------------------------------------------------- dacp


def _cmd_dacp(args: argparse.Namespace) -> int:
    if args.direction == "to":
        p = parse(args.input)
        graph = to_dacp(p)
        print(json.dumps(dacp_to_obj(graph)))
        if args.roundtrip and from_dacp(graph) != p:
            print("roundtrip mismatch", file=sys.stderr)
            raise FindingError("roundtrip mismatch")
    else:
        text = args.input
        if text.startswith("@"):
            text = Path(text[1:]).read_text(encoding="utf-8")
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DacpError(f"invalid graph JSON: {exc}")
        graph = dacp_from_obj(obj)
        p = from_dacp(graph)
        print(format_partition(p))
        if args.roundtrip and from_dacp(to_dacp(p)) != p:
            print("roundtrip mismatch", file=sys.stderr)
            raise FindingError("roundtrip mismatch")
    return EXIT_OK


# ---------------------------------------------------------------- permeability


def _cmd_permeability(args: argparse.Namespace) -> int:
    tau = parse(args.pattern)
    pm, witness = permeability(tau)
    intervals = witness.intervals(tau.n)
    oracle_value = permeability_oracle(tau) if args.oracle else None
    if args.format == "json":
        doc = {
            "tau": format_partition(tau),
            "pm": pm,
            "cuts": list(witness.cuts),
            "intervals": [list(iv) for iv in intervals],
        }
        if oracle_value is not None:
            doc["oracle"] = oracle_value
        print(json.dumps(doc))
    else:
        print(f"pm = {pm}")
        print(f"cuts = {json.dumps(list(witness.cuts))}")
        print(f"intervals = {json.dumps([list(iv) for iv in intervals])}")
        if oracle_value is not None:
            print(f"oracle = {oracle_value}")
    if oracle_value is not None and oracle_value != pm:
        print(f"greedy pm {pm} != oracle pm {oracle_value}", file=sys.stderr)
        raise FindingError("permeability mismatch")
    return EXIT_OK


# ---------------------------------------------------------------- uniform


def _cmd_uniform(args: argparse.Namespace) -> int:
    total = uniform_count(args.n, args.sections)
    print(f"count = {total}")
    if args.list:
        limit = args.limit if args.limit is not None else total
        shown = 0
        for p in uniform_partitions(args.n, args.sections):
            if shown >= limit:
                break
            print(format_partition(p))
            shown += 1
    return EXIT_OK


# ---------------------------------------------------------------- wiring


def _scan_config(args: argparse.Namespace, patterns: tuple[SetPartition, ...]) -> ScanConfig:
    if getattr(args, "no_cache", False):
        cache_path = None
    elif getattr(args, "cache", None):
        cache_path = Path(args.cache)
    else:
        env = os.environ.get(CACHE_ENV_VAR)
        cache_path = Path(env) if env else None
    return ScanConfig(
        patterns=patterns,
        n_from=args.n_from,
        n_to=args.n_to,
        workers=getattr(args, "workers", 1),
        oracle_ceiling=getattr(args, "oracle_ceiling", DEFAULT_ORACLE_CEILING),
        enum_ceiling=getattr(args, "enum_ceiling", DEFAULT_ENUM_CEILING),
        use_oracle=getattr(args, "oracle", False),
        cache_path=cache_path,
        fmt=getattr(args, "format", "csv"),
        out=Path(args.out) if getattr(args, "out", None) else None,
    )


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route argparse failures to exit code 1
        raise _UsageError(message)


def _add_scan_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n-from", type=int, required=True)
    sub.add_argument("--n-to", type=int, required=True)
    sub.add_argument("--workers", type=int, default=1)
    sub.add_argument("--cache", help=f"cache file path (default ${CACHE_ENV_VAR})")
    sub.add_argument("--no-cache", action="store_true", help="disable the count cache")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", help="write the report here instead of stdout")
    sub.add_argument("--oracle", action="store_true", help="force the unpruned oracle counter")
    sub.add_argument("--oracle-ceiling", type=int, default=DEFAULT_ORACLE_CEILING)
    sub.add_argument("--enum-ceiling", type=int, default=DEFAULT_ENUM_CEILING)
    sub.add_argument("--k-ceiling", type=int, default=DEFAULT_K_CEILING)


def _build_parser() -> _Parser:
    parser = _Parser(prog="partpat", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p_count = subs.add_parser("count", help="exact avoider counts over an n range")
    p_count.add_argument("--pattern", required=True)
    _add_scan_flags(p_count)
    p_count.set_defaults(func=_cmd_count)

    p_check = subs.add_parser("check", help="does HOST contain PATTERN?")
    p_check.add_argument("host")
    p_check.add_argument("pattern")
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.set_defaults(func=_cmd_check)

    p_conj = subs.add_parser("conjectures", help="probe the growth conjectures at desk scale")
    p_conj.add_argument("--all-k", type=int, help="scan every pattern of [k]")
    p_conj.add_argument("--pattern", action="append", help="explicit pattern (repeatable)")
    _add_scan_flags(p_conj)
    p_conj.set_defaults(func=_cmd_conjectures)

    p_bounds = subs.add_parser("bounds", help="audit the layered upper/lower bounds")
    p_bounds.add_argument("--shape", action="append", help='layer sizes, e.g. "2,2" (repeatable)')
    p_bounds.add_argument("--all-k", type=int, help="every layered shape with sum <= k and r < k")
    _add_scan_flags(p_bounds)
    p_bounds.set_defaults(func=_cmd_bounds)

    p_dacp = subs.add_parser("dacp", help="convert between partitions and their digraphs")
    p_dacp.add_argument("direction", choices=("to", "from"))
    p_dacp.add_argument("input", help="partition string, inline JSON, or @file")
    p_dacp.add_argument("--roundtrip", action="store_true", help="re-convert and assert identity")
    p_dacp.set_defaults(func=_cmd_dacp)

    p_pm = subs.add_parser("permeability", help="minimum interval cuts for a pattern")
    p_pm.add_argument("pattern")
    p_pm.add_argument("--oracle", action="store_true", help="cross-check against exhaustive search")
    p_pm.add_argument("--format", choices=("text", "json"), default="text")
    p_pm.set_defaults(func=_cmd_permeability)

    p_uni = subs.add_parser("uniform", help="stream the uniform partitions of [n]")
    p_uni.add_argument("--n", type=int, required=True)
    p_uni.add_argument("--sections", type=int, required=True)
    p_uni.add_argument("--list", action="store_true", help="print the members")
    p_uni.add_argument("--limit", type=int, help="print at most this many members")
    p_uni.set_defaults(func=_cmd_uniform)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ParseError, DacpError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CeilingError as exc:
        print(f"ceiling: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except FindingError as exc:
        print(f"assertion failure: {exc}", file=sys.stderr)
        return EXIT_ASSERTION


if __name__ == "__main__":
    sys.exit(main())
