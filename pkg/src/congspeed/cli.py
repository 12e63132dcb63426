"""Command-line front end with text, JSON, and CSV output.

Big integers are always serialized as decimal strings in JSON so output
survives any consumer.  Exit codes: 0 success, 1 precision or budget
exhaustion, 2 usage error (argparse), 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import classes, decadic, primes, verify
from .arith import digit_length
from .primes import PrimeSpeedRecord
from .speed import (
    PrecisionError,
    UndefinedSpeedError,
    constant_speed,
    speed_at_height,
    speed_profile,
)

ENV_DIGITS = "TCS_DIGITS"
EXIT_OK = 0
EXIT_RESOURCE = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3


@dataclass
class Config:
    digits: int = 64
    cache_path: str | None = None
    output: str = "text"

    def __post_init__(self):
        if self.digits < 16:
            raise ValueError("working precision must be at least 16 digits")
        if self.output not in ("text", "json", "csv"):
            raise ValueError(f"unknown output format {self.output!r}")


def _default_digits() -> int:
    raw = os.environ.get(ENV_DIGITS)
    return int(raw) if raw else 64


def _dump_json(obj) -> str:
    return json.dumps(obj)


def _print_csv(rows, header):
    print(",".join(header))
    for row in rows:
        print(",".join("" if v is None else str(v) for v in row))


def _record_dict(rec: PrimeSpeedRecord) -> dict:
    return {
        "n": rec.n,
        "q": str(rec.q),
        "method": rec.method,
        "oracle_checked": rec.oracle_checked,
    }


def _load_cache(path: str) -> dict:
    cache = {}
    if not path or not os.path.exists(path):
        return cache
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            cache[int(obj["n"])] = PrimeSpeedRecord(
                int(obj["n"]), int(obj["q"]), obj["method"], bool(obj["oracle_checked"])
            )
    return cache


def _append_cache(path: str, rec: PrimeSpeedRecord) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(_dump_json(_record_dict(rec)) + "\n")
        fh.flush()


def _cached_search(n: int, cache_path: str | None, budget: int | None) -> PrimeSpeedRecord:
    cache = _load_cache(cache_path) if cache_path else {}
    rec = cache.get(n)
    if rec is not None:
        # Cache hits are verified, not recomputed.
        if not primes.is_prime(rec.q) or classes.speed_by_formula(rec.q) != n:
            raise RuntimeError(f"cache entry for n = {n} fails verification")
        return rec
    rec = primes.smallest_prime_with_speed(n, budget=budget)
    if cache_path:
        _append_cache(cache_path, rec)
    return rec


def _cmd_speed(args, config: Config) -> int:
    a = args.a
    digits = args.digits or config.digits
    if args.height is not None:
        v = speed_at_height(a, args.height, digits)
        heights = [[args.height, v]]
    else:
        v = constant_speed(a, start_digits=digits)
        profile = speed_profile(a, max(min(digit_length(a), 61) + 3, 4))
        heights = [[e.height, e.speed] for e in profile.entries]
    fmt = "json" if args.json else config.output
    if fmt == "json":
        print(_dump_json({"a": str(a), "V": v, "heights": heights}))
    elif fmt == "csv":
        _print_csv([[a, v]], ["a", "V"])
    else:
        print(v)
    return EXIT_OK


def _cmd_profile(args, config: Config) -> int:
    digits = args.digits or config.digits
    profile = speed_profile(args.a, args.max_height, digits)
    rows = [[e.height, e.frozen, e.speed] for e in profile.entries]
    if config.output == "json":
        print(
            _dump_json(
                {
                    "a": str(args.a),
                    "precision": profile.precision_digits,
                    "entries": rows,
                    "V": profile.constant_speed,
                }
            )
        )
    elif config.output == "csv":
        _print_csv(rows, ["height", "frozen", "speed"])
    else:
        print("# b frozen V")
        for b, nu, v in rows:
            print(f"{b} {'-' if nu is None else nu} {v}")
        print(f"# constant {profile.constant_speed}")
    return EXIT_OK


def _cmd_min_base(args, config: Config) -> int:
    if args.s1 is not None:
        value = classes.min_base_class(args.s1, args.n)
    else:
        value = classes.min_base(args.n)
    if config.output == "json":
        print(_dump_json({"n": args.n, "s1": args.s1, "value": str(value)}))
    elif config.output == "csv":
        _print_csv([[args.n, args.s1, value]], ["n", "s1", "value"])
    else:
        print(value)
    return EXIT_OK


def _cmd_class(args, config: Config) -> int:
    spec = classes.class_spec(args.s1, args.n)
    members = []
    for v in spec.members():
        members.append(v)
        if len(members) == args.count:
            break
    if config.output == "json":
        print(_dump_json({"s1": args.s1, "n": args.n, "members": [str(v) for v in members]}))
    elif config.output == "csv":
        _print_csv([[v] for v in members], ["member"])
    else:
        for v in members:
            print(v)
    return EXIT_OK


def _cmd_root(args, config: Config) -> int:
    res = decadic.root_residue(args.i, args.digits)
    text = f"{res.value:0{args.digits}d}"
    if config.output == "json":
        print(_dump_json({"root": args.i, "digits": args.digits, "value": text}))
    else:
        print(text)
    return EXIT_OK


def _cmd_q(args, config: Config) -> int:
    cache_path = args.cache or config.cache_path
    rec = _cached_search(args.n, cache_path, args.budget)
    if config.output == "json":
        print(_dump_json(_record_dict(rec)))
    elif config.output == "csv":
        _print_csv([[rec.n, rec.q, rec.method, rec.oracle_checked]],
                   ["n", "q", "method", "oracle_checked"])
    else:
        print(rec.q)
    return EXIT_OK


def _cmd_table1(args, config: Config) -> int:
    rows = classes.table1_rows(args.max)
    if config.output == "json":
        print(
            _dump_json(
                {
                    "rows": [
                        {"n": n, "class5": None if a5 is None else str(a5), "others": str(other)}
                        for n, a5, other in rows
                    ]
                }
            )
        )
    elif config.output == "csv":
        _print_csv(rows, ["n", "class5", "others"])
    else:
        for n, a5, other in rows:
            print(f"{n} {'-' if a5 is None else a5} {other}")
    return EXIT_OK


def _cmd_table2(args, config: Config) -> int:
    extra = tuple(int(x) for x in args.extra.split(",")) if args.extra else ()
    cache_path = args.cache or config.cache_path
    indices = sorted(set(range(1, args.max + 1)) | set(extra))
    records = [_cached_search(n, cache_path, args.budget) for n in indices]
    flags = primes.non_monotonic_flags(
        records, resolver=lambda n: _cached_search(n, cache_path, args.budget).q
    )
    if config.output == "json":
        rows = [dict(_record_dict(r), non_monotonic=r.n in flags) for r in records]
        print(_dump_json({"rows": rows}))
    elif config.output == "csv":
        _print_csv(
            [[r.n, r.q, r.method, r.oracle_checked, r.n in flags] for r in records],
            ["n", "q", "method", "oracle_checked", "non_monotonic"],
        )
    else:
        for r in records:
            mark = " *" if r.n in flags else ""
            print(f"{r.n} {r.q}{mark}")
    return EXIT_OK


def _cmd_verify(args, config: Config) -> int:
    digits = args.digits or max(40, config.digits)
    failures = []
    try:
        verify.phase_shift_fixture()
        fixture_ok = True
    except verify.FixtureMismatch as exc:
        fixture_ok = False
        failures.append(str(exc))
    report = verify.sweep(2, args.sweep, precision=max(40, digits))
    payload = dict(report.to_dict(), fixture_ok=fixture_ok)
    if config.output == "json":
        print(_dump_json(payload))
    else:
        print(f"phase-shift fixture: {'ok' if fixture_ok else 'MISMATCH'}")
        print(
            f"sweep 2..{args.sweep} @ {report.precision} digits: "
            f"{len(report.mismatches)} mismatches"
        )
        for m in report.mismatches[:20]:
            print(f"  mismatch a={m[0]} oracle={m[1]} formula={m[2]} membership={m[3]}")
    if failures or not report.ok:
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_oeis(args, config: Config) -> int:
    if not args.min_bases:
        raise UsageError("choose a sequence: --min-bases")
    for n in range(args.terms):
        print(f"{n} {classes.min_base(n)}")
    return EXIT_OK


class UsageError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="congspeed",
        description="Congruence speed of integer tetration in base 10.",
    )
    parser.add_argument(
        "--output",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("speed", help="constant speed V(a), or V(a, b) with --height")
    p.add_argument("a", type=int)
    p.add_argument("--height", type=int, default=None)
    p.add_argument("--digits", type=int, default=None)
    p.add_argument("--json", action="store_true", help="shorthand for --output json")
    p.set_defaults(func=_cmd_speed)

    p = sub.add_parser("profile", help="per-height frozen digits and speeds")
    p.add_argument("a", type=int)
    p.add_argument("--max-height", type=int, required=True)
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("min-base", help="smallest base with speed N")
    p.add_argument("n", type=int)
    p.add_argument("--class", dest="s1", type=int, default=None)
    p.set_defaults(func=_cmd_min_base)

    p = sub.add_parser("class", help="ascending members of a speed class")
    p.add_argument("s1", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("root", help="n-digit truncation of a y^5 = y root")
    p.add_argument("i", type=int)
    p.add_argument("--digits", type=int, required=True)
    p.set_defaults(func=_cmd_root)

    p = sub.add_parser("q", help="smallest prime with speed N")
    p.add_argument("n", type=int)
    p.add_argument("--cache", type=str, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_q)

    p = sub.add_parser("table1", help="smallest bases: class 5 vs the rest")
    p.add_argument("--max", type=int, default=19)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("table2", help="smallest primes per speed")
    p.add_argument("--max", type=int, default=21)
    p.add_argument("--extra", type=str, default=None)
    p.add_argument("--cache", type=str, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_table2)

    p = sub.add_parser("verify", help="oracle-vs-formula sweep plus fixtures")
    p.add_argument("--sweep", type=int, required=True)
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oeis", help="b-file export")
    p.add_argument("--min-bases", action="store_true")
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(func=_cmd_oeis)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = Config(digits=_default_digits(), output=args.output)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return args.func(args, config)
    except UsageError as exc:
        parser.error(str(exc))
    except (PrecisionError, primes.SearchBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UndefinedSpeedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except verify.FixtureMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
