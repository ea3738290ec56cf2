"""Command-line driver.

Exit codes: 0 when every check passes, 1 when any fails, 2 for usage errors
or when nothing could be checked because every record was skipped.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .finite_field import is_prime
from .gfunc import G
from .greene import greene_series
from .identities import IDENTITY_IDS, SweepGrid, field_from_q, sweep
from .report import FAIL, PASS, SKIP, summarize, to_csv, to_json, to_text
from .suites import selftest
from .varieties import CurveInstance, count_points

ALIASES = {
    "MT6": ("MT6_EVEN", "MT6_ODD"),
    "MT5": ("MT5_A", "MT5_B", "MT5_COR"),
    "SV1": ("SV1_SUM0", "SV1_PROD0", "SV1_EX1", "SV1_EX2"),
    "COR": ("COR_EVEN", "COR_ODD"),
    "EXAMPLE": ("EXAMPLE_D5", "EXAMPLE_D4"),
    "ALL": IDENTITY_IDS,
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Parsed command line."""

    command: str
    ids: tuple[str, ...] = ()
    ps: tuple[int, ...] = ()
    qs: tuple[int, ...] = ()
    ds: tuple[int, ...] = ()
    values: object = "all"
    k: int = 5
    fmt: str = "text"
    out: str | None = None
    seed: int = 0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.k < 2:
            raise UsageError("precision k must be at least 2")


def parse_ints(text: str | None) -> tuple[int, ...]:
    """'7,11' or '3..13' or a mix of both."""
    if not text:
        return ()
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            elif part:
                out.append(int(part))
        except ValueError as exc:
            raise UsageError(f"malformed integer range {text!r}") from exc
    return tuple(out)


def parse_fracs(text: str | None) -> tuple[Fraction, ...]:
    if not text:
        return ()
    try:
        return tuple(Fraction(s.strip()) for s in text.split(",") if s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed rational list {text!r}") from exc


def parse_policy(text: str | None):
    """'all', 'sample:N' or an explicit integer list."""
    if text is None or text == "all":
        return "all"
    if text.startswith("sample:"):
        try:
            n = int(text.split(":", 1)[1])
        except ValueError as exc:
            raise UsageError(f"malformed sample policy {text!r}") from exc
        if n < 1:
            raise UsageError("sample size must be positive")
        return f"sample:{n}"
    return list(parse_ints(text))


def resolve_ids(raw: list[str] | None) -> tuple[str, ...]:
    if not raw:
        raise UsageError("verify needs at least one --id")
    out: list[str] = []
    for chunk in raw:
        for name in chunk.split(","):
            key = name.strip().upper()
            if not key:
                continue
            targets = ALIASES.get(key, (key,))
            for t in targets:
                if t not in IDENTITY_IDS:
                    raise UsageError(f"unknown identity id {name!r}; known: {', '.join(IDENTITY_IDS)}")
                if t not in out:
                    out.append(t)
    return tuple(out)


def _primes(xs) -> tuple[int, ...]:
    bad = [x for x in xs if not is_prime(x) or x == 2]
    if bad:
        raise UsageError(f"not odd primes: {bad}")
    return tuple(xs)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _render_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return to_json(reports)
    if fmt == "csv":
        return to_csv(reports).rstrip("\n")
    return to_text(reports)


def _exit_code(reports) -> int:
    s = summarize(reports)
    if s[FAIL]:
        return 1
    if s[PASS] == 0:
        reasons = sorted({r.reason for r in reports if r.status == SKIP and r.reason})
        print("nothing checked; every record was skipped:", file=sys.stderr)
        for reason in reasons:
            print(f"  {reason}", file=sys.stderr)
        return 2
    return 0


# subcommands --------------------------------------------------------------------------


def cmd_verify(cfg: RunConfig) -> int:
    ps = cfg.ps or (5, 7, 11, 13)
    qs = cfg.qs or (cfg.ps if cfg.ps else (7, 13))
    ds = cfg.ds or (3, 4, 5, 6)
    grid = SweepGrid(ps=_primes(ps), qs=qs, ds=ds, values=cfg.values, k=cfg.k, seed=cfg.seed,
                     trials=cfg.extra.get("trials", 20))
    try:
        reports = sweep(cfg.ids, grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(_render_reports(reports, cfg.fmt), cfg.out)
    return _exit_code(reports)


def cmd_gfun(cfg: RunConfig) -> int:
    p = _single(cfg.ps, "--p")
    _primes((p,))
    a, b = cfg.extra["a"], cfg.extra["b"]
    if len(a) != len(b) or not a:
        raise UsageError("--a and --b need the same nonzero length")
    try:
        v = G(p, cfg.k, a, b, cfg.extra["t"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    small = v.as_small_int()
    if cfg.fmt == "json":
        _emit(json.dumps({"p": p, "k": cfg.k, "a": [str(x) for x in a], "b": [str(x) for x in b],
                          "t": str(cfg.extra["t"]), "value": v.render(cfg.k), "integer": small},
                         sort_keys=True, indent=1), cfg.out)
    else:
        _emit(v.render(cfg.k), cfg.out)
    return 0


def _char_exps(q: int, items: tuple[Fraction, ...]) -> tuple[int, ...]:
    """Integers are exponents of T; a fraction r stands for T^{r(q-1)}."""
    out = []
    for r in items:
        if r.denominator == 1:
            out.append(int(r))
        else:
            e = r * (q - 1)
            if e.denominator != 1:
                raise UsageError(f"character {r} does not exist over F_{q}")
            out.append(int(e))
    return tuple(out)


def cmd_greene(cfg: RunConfig) -> int:
    q = _single(cfg.qs or cfg.ps, "--q")
    try:
        ctx = field_from_q(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    upper, lower = _char_exps(q, cfg.extra["upper"]), _char_exps(q, cfg.extra["lower"])
    if len(upper) != len(lower) + 1:
        raise UsageError("need exactly one more --upper than --lower parameter")
    x = cfg.extra["x"]
    if not 0 <= x < q:
        raise UsageError(f"x must be a field element code in [0, {q})")
    val = greene_series(ctx, upper, lower)(x)
    if cfg.fmt == "json":
        _emit(json.dumps({"q": q, "upper": list(upper), "lower": list(lower), "x": x, "value": val.render(),
                          "rational": str(val.to_fraction()) if val.is_rational() else None},
                         sort_keys=True, indent=1), cfg.out)
    else:
        _emit(val.render(), cfg.out)
    return 0


def cmd_count(cfg: RunConfig) -> int:
    q = _single(cfg.qs or cfg.ps, "--p/--q")
    d = _single(cfg.ds, "--d")
    lam = cfg.extra["lambda"]
    try:
        ctx = field_from_q(q)
        if ctx.e == 1:
            lam %= q
        elif not 0 <= lam < q:
            raise UsageError(f"lambda must be a field element code in [0, {q})")
        res = count_points(CurveInstance(ctx, d, lam))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if cfg.fmt == "json":
        _emit(json.dumps({"p": ctx.p, "q": q, "d": d, "lambda": lam, **res.to_dict()}, sort_keys=True, indent=1),
              cfg.out)
    elif cfg.fmt == "csv":
        _emit("q,d,lambda,affine,projective,root_count\n"
              f"{q},{d},{lam},{res.affine},{res.projective},{'' if res.roots is None else res.roots}", cfg.out)
    else:
        _emit(f"q={q} d={d} lambda={lam}: affine={res.affine} projective={res.projective} "
              f"root_count={res.roots}", cfg.out)
    return 1 if res.agrees is False else 0


def cmd_selftest(cfg: RunConfig) -> int:
    reports = selftest()
    _emit(_render_reports(reports, cfg.fmt), cfg.out)
    return _exit_code(reports)


def _single(xs, flag: str) -> int:
    if len(xs) != 1:
        raise UsageError(f"{flag} needs exactly one value")
    return xs[0]


# argument parsing ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyperchar", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, grid=True):
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--k", type=int, default=5, help="p-adic precision")
        if grid:
            sp.add_argument("--p", help="primes, e.g. 7,11 or 5..13")
            sp.add_argument("--q", help="prime powers for Greene-series identities")
            sp.add_argument("--d", help="degrees, e.g. 3..6")

    v = sub.add_parser("verify", help="check named identities over a parameter grid")
    common(v)
    v.add_argument("--id", action="append", help="identity id or alias (repeatable, comma-separated)")
    v.add_argument("--lambda", "--x", dest="values", default="all", help="all | sample:N | list")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=20, help="random tuples per (q, n) for GREENE_SUM")

    g = sub.add_parser("gfun", help="print one nGn value")
    common(g)
    g.add_argument("--a", required=True, help="upper parameters, e.g. 1/3,2/3")
    g.add_argument("--b", required=True, help="lower parameters, e.g. 0,1/2")
    g.add_argument("--t", required=True, help="argument (p-integral rational)")

    f = sub.add_parser("greene", help="print one n+1Fn value")
    common(f)
    f.add_argument("--upper", required=True, help="exponents of T, or fractions r meaning T^{r(q-1)}")
    f.add_argument("--lower", default="", help="as --upper")
    f.add_argument("--x", type=int, required=True, help="field element code")

    c = sub.add_parser("count", help="point counts on one curve")
    common(c)
    c.add_argument("--lambda", dest="lam", type=int, required=True)

    s = sub.add_parser("selftest", help="lemma-level suites")
    common(s, grid=False)
    return ap


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    extra: dict = {}
    ids: tuple[str, ...] = ()
    values = "all"
    seed = 0
    if ns.command == "verify":
        ids = resolve_ids(ns.id)
        values = parse_policy(ns.values)
        seed = ns.seed
        extra["trials"] = ns.trials
    elif ns.command == "gfun":
        extra["a"], extra["b"] = parse_fracs(ns.a), parse_fracs(ns.b)
        ts = parse_fracs(ns.t)
        if len(ts) != 1:
            raise UsageError("--t needs exactly one value")
        extra["t"] = ts[0]
    elif ns.command == "greene":
        extra["upper"], extra["lower"], extra["x"] = parse_fracs(ns.upper), parse_fracs(ns.lower), ns.x
    elif ns.command == "count":
        extra["lambda"] = ns.lam
    grid = ns.command != "selftest"
    return RunConfig(
        command=ns.command, ids=ids,
        ps=parse_ints(ns.p) if grid else (), qs=parse_ints(ns.q) if grid else (),
        ds=parse_ints(ns.d) if grid else (), values=values, k=ns.k, fmt=ns.format,
        out=ns.out, seed=seed, extra=extra,
    )


COMMANDS = {"verify": cmd_verify, "gfun": cmd_gfun, "greene": cmd_greene, "count": cmd_count,
            "selftest": cmd_selftest}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
