"""Command-line surface.

Subcommands: series (named q-series), fgk (one multiplicity profile),
genus (aggregated count report), orbits (translation-orbit table), verify
(identity suites), cache (named-form JSON store).  Exit codes: 0 success,
1 verification failure, 2 usage error.

Configuration precedence is flags > environment > defaults; the recognized
environment variables are HYPCOUNT_ORDER and HYPCOUNT_CACHE_DIR.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import DomainError, HypcountError
from . import counting, kummer, qforms, verify

DEFAULT_ORDER = 32


def _canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ": "), indent=2) + "\n"


def _env_order() -> int:
    raw = os.environ.get("HYPCOUNT_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"HYPCOUNT_ORDER must be an integer, got {raw!r}")


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _series_text(series, var="q") -> str:
    return series.format(var=var) + "\n"


def _series_csv(series, var="q") -> str:
    lines = [f"{var}^n,coefficient"]
    from .fps import _rat_str

    for n, c in enumerate(series.coeffs):
        lines.append(f"{n},{_rat_str(c)}")
    return "\n".join(lines) + "\n"


def cmd_series(args) -> int:
    try:
        form = qforms.named_form(args.name, k=args.k, order=args.order)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        _emit(_canonical_json(form.to_json()), args.out)
    elif args.format == "csv":
        _emit(_series_csv(form.series), args.out)
    else:
        _emit(_series_text(form.series), args.out)
    return 0


def _parse_profile(raw: str):
    try:
        values = tuple(int(tok) for tok in raw.replace(" ", "").split(","))
    except ValueError:
        raise DomainError(f"profile must be 16 comma-separated integers, got {raw!r}")
    if len(values) != 16:
        raise DomainError(f"profile must list 16 values, got {len(values)}")
    return values


def cmd_fgk(args) -> int:
    try:
        config = _parse_profile(args.config)
        result = counting.f_gk(config, args.order)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        _emit(_canonical_json(result.to_json()), args.out)
        return 0
    if args.format == "csv":
        _emit(_series_csv(result.series, var="u"), args.out)
        return 0
    lines = [
        f"profile : {','.join(str(v) for v in config)}",
        f"total   : {sum(config)} (geometric genus {(sum(config) - 2) // 2})",
        f"coset   : {result.coset or 'none (inadmissible; series is 0)'}",
        f"shape   : {result.shape if result.coset else '0'}",
    ]
    if result.coset:
        lines.append(f"min h   : {counting.min_arith_genus(config)}")
    lines.append(f"series  : {result.series.format(var='u')}")
    lines.append("   n (=h-1)  h     count")
    for n, c in enumerate(result.series.coeffs):
        if c:
            lines.append(f"   {n:<9} {n + 1:<5} {c}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _report_table_text(report) -> str:
    cols = list(range(2, report.order + 1))
    rows = report.table_rows()
    name_w = max(len(r[0]) for r in rows)
    cells = []
    for shape, mult, coeffs in rows:
        cells.append(
            [shape, "" if mult is None else str(mult)]
            + [str(c) if c else "" for c in coeffs]
        )
    widths = [name_w, 4] + [
        max(4, *(len(row[i + 2]) for row in cells)) for i in range(len(cols))
    ]
    header = ["shape", "mult"] + [f"q^{n}" for n in cols]

    def line(row):
        first = row[0].ljust(widths[0])
        rest = "  ".join(c.rjust(w) for c, w in zip(row[1:], widths[1:]))
        return f"{first}  {rest}"

    return "\n".join([line(header)] + [line(row) for row in cells]) + "\n"


def cmd_genus(args) -> int:
    if not 1 <= args.g <= 6:
        print("error: genus must be between 1 and 6", file=sys.stderr)
        return 2
    report = counting.genus_total(args.g, args.order)
    if args.format == "json":
        _emit(_canonical_json(report.to_json()), args.out)
    elif args.format == "csv" or (args.table and args.format == "text"):
        if args.format == "csv":
            _emit(report.to_csv(), args.out)
        else:
            _emit(_report_table_text(report), args.out)
    else:
        lines = [
            f"genus {args.g}: {len(report.orbits)} orbit classes, "
            f"degree {2 * args.g + 2}, order {args.order}",
        ]
        for shape, mult in sorted(report.shape_multiplicities().items()):
            lines.append(f"  {mult} x {shape}")
        lines.append(f"total: {report.total.format(var='u')}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_orbits(args) -> int:
    try:
        orbits = kummer.translation_orbits(args.degree)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = [
        {**o.to_json(), "shape": counting.shape_label(o.rep)} for o in orbits
    ]
    if args.format == "json":
        _emit(_canonical_json(payload), args.out)
    elif args.format == "csv":
        lines = ["rep,orbit_size,coset,shape"]
        for row in payload:
            rep = " ".join(str(v) for v in row["rep"])
            lines.append(f"{rep},{row['orbit_size']},{row['coset']},{row['shape']}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"degree {args.degree}: {len(payload)} orbit classes"]
        for row in payload:
            rep = ",".join(str(v) for v in row["rep"])
            lines.append(
                f"  [{rep}] size {row['orbit_size']:>2} {row['coset']:<5} {row['shape']}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    results, ok = verify.run_suite([args.suite], args.order)
    print(verify.format_results(results))
    return 0 if ok else 1


CACHE_ROSTER = (
    [("A", k) for k in range(0, 6)]
    + [("C", k) for k in range(0, 6)]
    + [(name, None) for name in ("E", "delta_inv", "legendre", "theta2_4", "E2")]
)


def cmd_cache(args) -> int:
    cache_dir = args.dir or os.environ.get("HYPCOUNT_CACHE_DIR")
    if not cache_dir:
        print("error: cache needs --dir or HYPCOUNT_CACHE_DIR", file=sys.stderr)
        return 2
    try:
        if args.action == "write":
            os.makedirs(cache_dir, exist_ok=True)
            for name, k in CACHE_ROSTER:
                form = qforms.named_form(name, k=k, order=args.order)
                path = os.path.join(cache_dir, form.key() + ".json")
                with open(path, "w") as fh:
                    fh.write(_canonical_json(form.to_json()))
            print(f"wrote {len(CACHE_ROSTER)} forms to {cache_dir}")
            return 0
        if args.action == "check":
            if not os.path.isdir(cache_dir):
                print(f"error: no such directory {cache_dir}", file=sys.stderr)
                return 2
            failures = 0
            checked = 0
            for entry in sorted(os.listdir(cache_dir)):
                if not entry.endswith(".json"):
                    continue
                path = os.path.join(cache_dir, entry)
                with open(path) as fh:
                    stored = fh.read()
                data = json.loads(stored)
                form = qforms.named_form(
                    data["name"],
                    k=data["params"][0] if data["params"] else None,
                    order=data["order"],
                )
                fresh = _canonical_json(form.to_json())
                checked += 1
                if fresh != stored:
                    failures += 1
                    stored_coeffs = data["coeffs"]
                    fresh_coeffs = form.to_json()["coeffs"]
                    delta = next(
                        (
                            f"coefficient of q^{i}: stored {s}, recomputed {f}"
                            for i, (s, f) in enumerate(zip(stored_coeffs, fresh_coeffs))
                            if s != f
                        ),
                        "byte-level difference outside the coefficients",
                    )
                    print(f"MISMATCH {entry}: {delta}")
            print(f"checked {checked} cached forms, {failures} mismatched")
            return 1 if failures else 0
        if args.action == "clear":
            if os.path.isdir(cache_dir):
                for entry in os.listdir(cache_dir):
                    if entry.endswith(".json"):
                        os.remove(os.path.join(cache_dir, entry))
            print(f"cleared {cache_dir}")
            return 0
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypcount",
        description="Exact q-series calculus for hyperelliptic curve counts "
        "on polarized Abelian surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--order", type=int, default=None, help="truncation order")
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default="text"
        )
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("series", help="print a named q-series")
    p.add_argument("--name", required=True, help=f"one of {qforms.FORM_NAMES}")
    p.add_argument("--k", type=int, default=None, help="index for the A/C families")
    add_common(p)
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("fgk", help="counting series of one multiplicity profile")
    p.add_argument(
        "--config", required=True, help="16 comma-separated branch multiplicities"
    )
    add_common(p)
    p.set_defaults(fn=cmd_fgk)

    p = sub.add_parser("genus", help="aggregated count report for one genus")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--table", action="store_true", help="coefficient-table layout")
    add_common(p)
    p.set_defaults(fn=cmd_genus)

    p = sub.add_parser("orbits", help="translation-orbit table for one degree")
    p.add_argument("--degree", type=int, required=True)
    add_common(p)
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("verify", help="run the identity suites")
    p.add_argument(
        "--suite",
        choices=verify.SUITES + ("all",),
        default="all",
    )
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("cache", help="persist/validate named-form JSON files")
    p.add_argument("--action", choices=("write", "check", "clear"), required=True)
    p.add_argument("--dir", default=None)
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(fn=cmd_cache)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "order", None) is None:
            args.order = _env_order()
        if args.order < 0:
            print("error: order must be >= 0", file=sys.stderr)
            return 2
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HypcountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
