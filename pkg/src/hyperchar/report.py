"""Verification outcomes and their JSON/CSV serialization."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass
from typing import Any

PASS, FAIL, SKIP = "pass", "fail", "skip"
PARAM_KEYS = ("p", "q", "d", "lambda", "x", "k")


@dataclass
class Report:
    """One identity check at one parameter tuple.

    p-adic checks fill ``diff_valuation``; exact cyclotomic checks fill
    ``exact_zero``.  ``ms`` is wall time and is the only field that varies
    between identical runs.
    """

    id: str
    params: dict[str, Any]
    status: str
    lhs: str = ""
    rhs: str = ""
    diff_valuation: int | None = None
    exact_zero: bool | None = None
    ms: float = 0.0
    reason: str | None = None
    variant: str | None = None

    @property
    def ok(self) -> bool:
        """Not a failure (skips count as ok)."""
        return self.status != FAIL

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out = {"id": self.id, "params": dict(self.params), "status": self.status,
               "lhs": self.lhs, "rhs": self.rhs}
        if self.diff_valuation is not None:
            out["diff_valuation"] = self.diff_valuation
        if self.exact_zero is not None:
            out["exact_zero"] = self.exact_zero
        if self.reason is not None:
            out["reason"] = self.reason
        if self.variant is not None:
            out["variant"] = self.variant
        if timing:
            out["ms"] = self.ms
        return out

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Report":
        return cls(id=d["id"], params=dict(d["params"]), status=d["status"],
                   lhs=d.get("lhs", ""), rhs=d.get("rhs", ""),
                   diff_valuation=d.get("diff_valuation"), exact_zero=d.get("exact_zero"),
                   ms=d.get("ms", 0.0), reason=d.get("reason"), variant=d.get("variant"))


class Timer:
    """Context manager recording elapsed milliseconds."""

    def __enter__(self):
        self._t0 = time.perf_counter()
        self.ms = 0.0
        return self

    def __exit__(self, *exc):
        self.ms = round((time.perf_counter() - self._t0) * 1000.0, 3)
        return False


def _render(v) -> str:
    if hasattr(v, "render"):
        return v.render()
    return str(v)


def exact_report(id_: str, params: dict, lhs, rhs, ms: float = 0.0, variant: str | None = None) -> Report:
    """Pass iff lhs - rhs is exactly zero (CycloNum, Fraction or int values)."""
    diff = lhs - rhs
    zero = diff.is_zero() if hasattr(diff, "is_zero") else diff == 0
    return Report(id_, params, PASS if zero else FAIL, _render(lhs), _render(rhs),
                  exact_zero=bool(zero), ms=ms, variant=variant)


def padic_report(id_: str, params: dict, lhs, rhs, k: int, ms: float = 0.0,
                 variant: str | None = None, need: int | None = None) -> Report:
    """Pass iff v_p(lhs - rhs) >= need, by default k - 1 (one digit of slack)."""
    from .padic.scalar import PadicScalar

    if not isinstance(lhs, PadicScalar):
        lhs, rhs = rhs, lhs
    v = lhs.diff_valuation(rhs)
    need = k - 1 if need is None else need
    return Report(id_, params, PASS if v >= need else FAIL, lhs.render(k), _render(rhs),
                  diff_valuation=v, ms=ms, variant=variant)


def skip_report(id_: str, params: dict, reason: str, variant: str | None = None) -> Report:
    return Report(id_, params, SKIP, reason=reason, variant=variant)


def bool_report(id_: str, params: dict, ok: bool, lhs="", rhs="", ms: float = 0.0,
                variant: str | None = None) -> Report:
    return Report(id_, params, PASS if ok else FAIL, str(lhs), str(rhs),
                  exact_zero=bool(ok), ms=ms, variant=variant)


# serialization -----------------------------------------------------------------


def to_json(reports, timing: bool = True) -> str:
    return json.dumps([r.to_dict(timing) for r in reports], indent=1, sort_keys=True)


def from_json(text: str) -> list[Report]:
    return [Report.from_dict(d) for d in json.loads(text)]


CSV_FIELDS = ("id", *(f"param_{k}" for k in PARAM_KEYS), "status", "lhs", "rhs",
              "diff_valuation", "exact_zero", "ms", "reason", "variant")


def to_csv(reports, timing: bool = True) -> str:
    buf = io.StringIO()
    fields = [f for f in CSV_FIELDS if timing or f != "ms"]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in reports:
        row = {"id": r.id, "status": r.status, "lhs": r.lhs, "rhs": r.rhs,
               "diff_valuation": "" if r.diff_valuation is None else r.diff_valuation,
               "exact_zero": "" if r.exact_zero is None else r.exact_zero,
               "reason": r.reason or "", "variant": r.variant or ""}
        if timing:
            row["ms"] = r.ms
        for k in PARAM_KEYS:
            v = r.params.get(k)
            row[f"param_{k}"] = "" if v is None else v
        w.writerow(row)
    return buf.getvalue()


def summarize(reports) -> dict[str, int]:
    out = {PASS: 0, FAIL: 0, SKIP: 0}
    for r in reports:
        out[r.status] += 1
    return out


def to_text(reports) -> str:
    lines = []
    for r in reports:
        ps = ", ".join(f"{k}={v}" for k, v in r.params.items() if v is not None)
        tag = r.id if r.variant is None else f"{r.id}/{r.variant}"
        line = f"{r.status.upper():4s} {tag} [{ps}]"
        if r.status == SKIP:
            line += f"  ({r.reason})"
        else:
            if r.diff_valuation is not None:
                line += f"  v(lhs-rhs)={r.diff_valuation}"
            line += f"  lhs={r.lhs}  rhs={r.rhs}"
        lines.append(line)
    s = summarize(reports)
    lines.append(f"total={len(reports)} pass={s[PASS]} fail={s[FAIL]} skip={s[SKIP]}")
    return "\n".join(lines)

