import csv
import io

from hypothesis import given, strategies as st

from hyperchar.padic import PadicScalar
from hyperchar.report import (
    CSV_FIELDS,
    Report,
    bool_report,
    exact_report,
    from_json,
    padic_report,
    skip_report,
    summarize,
    to_csv,
    to_json,
    to_text,
)


def _sample():
    a = PadicScalar.from_int(7, 5, 5)
    return [
        padic_report("MT1", {"p": 7, "q": 7, "d": 3, "x": 1, "k": 5}, a, 5, 5),
        padic_report("MT1", {"p": 7, "q": 7, "d": 3, "x": 2, "k": 5}, a, 5 + 7**3, 5),
        exact_report("MT4", {"q": 7, "lambda": 2}, 3, 3, variant="corrected"),
        skip_report("MT1", {"p": 5, "d": 5}, "requires p ∤ d(d-1); p = 5 divides 20"),
        bool_report("FLOOR_IDENTITY", {"p": 7, "d": 3}, False, lhs="x", rhs="y"),
    ]


def test_statuses():
    rs = _sample()
    assert [r.status for r in rs] == ["pass", "fail", "pass", "skip", "fail"]
    assert rs[1].diff_valuation == 3
    assert summarize(rs) == {"pass": 2, "fail": 2, "skip": 1}


def test_padic_threshold_override():
    a = PadicScalar.from_int(7, 1, 5)
    assert padic_report("X", {}, a, 1 + 7, 5).status == "fail"
    assert padic_report("X", {}, a, 1 + 7, 5, need=1).status == "pass"


def test_json_round_trip():
    rs = _sample()
    text = to_json(rs)
    back = from_json(text)
    assert [r.to_dict() for r in back] == [r.to_dict() for r in rs]
    assert to_json(back) == text


def test_json_without_timing_drops_ms():
    assert '"ms"' not in to_json(_sample(), timing=False)


def test_csv_has_fixed_columns():
    rows = list(csv.DictReader(io.StringIO(to_csv(_sample()))))
    assert tuple(rows[0]) == CSV_FIELDS
    assert rows[3]["reason"].startswith("requires")


def test_text_summary_line():
    assert to_text(_sample()).splitlines()[-1] == "total=5 pass=2 fail=2 skip=1"


@given(st.integers(0, 10), st.text(max_size=8), st.sampled_from(["pass", "fail", "skip"]))
def test_dict_round_trip(v, s, status):
    r = Report("ID", {"p": 7, "k": 5}, status, lhs=s, rhs=s, diff_valuation=v, reason=s or None)
    assert Report.from_dict(r.to_dict()).to_dict() == r.to_dict()
