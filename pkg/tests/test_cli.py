import json
import subprocess
import sys

import pytest

from hyperchar.cli import main, parse_ints, parse_policy, resolve_ids, UsageError
from hyperchar.report import from_json


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_mt1_passes(capsys):
    code, out, _ = run(["verify", "--id", "mt1", "--p", "7", "--d", "5", "--k", "5"], capsys)
    assert code == 0 and "fail=0" in out


def test_verify_all_skipped_is_exit_2(capsys):
    code, out, err = run(["verify", "--id", "mt1", "--p", "5", "--d", "5"], capsys)
    assert code == 2 and "p ∤ d(d-1)" in err


def test_count_json(capsys):
    code, out, _ = run(["count", "--p", "7", "--d", "3", "--lambda", "1", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert {"affine", "projective", "root_count"} <= set(data)
    assert data["projective"] == data["root_count"]


def test_gfun_and_greene(capsys):
    code, out, _ = run(["gfun", "--p", "7", "--a", "1/3,2/3", "--b", "0,1/2", "--t", "1"], capsys)
    assert code == 0 and "(= 1)" in out
    code, out, _ = run(["greene", "--q", "7", "--upper", "1/3,2/3", "--lower", "0", "--x", "0"], capsys)
    assert code == 0 and out.strip() == "zeta_6:[0, 0]"


def test_usage_errors(capsys):
    assert run(["verify", "--id", "bogus"], capsys)[0] == 2
    assert run(["verify", "--id", "mt1", "--p", "9"], capsys)[0] == 2
    assert run(["verify", "--id", "mt1", "--p", "7", "--k", "1"], capsys)[0] == 2
    assert run(["nonsense"], capsys)[0] == 2
    assert run(["gfun", "--p", "7", "--a", "1/3", "--b", "0,1/2", "--t", "1"], capsys)[0] == 2


def test_verify_json_round_trip(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(["verify", "--id", "mt6", "--p", "7", "--d", "3,4", "--format", "json",
                      "--out", str(out)], capsys)
    assert code == 0
    reports = from_json(out.read_text(encoding="utf-8"))
    assert {r.id for r in reports} == {"MT6_EVEN", "MT6_ODD"}


def test_seeded_output_is_reproducible(capsys):
    args = ["verify", "--id", "mt4", "--q", "25", "--d", "3", "--lambda", "sample:4", "--seed", "3",
            "--format", "json"]
    a = json.loads(run(args, capsys)[1])
    b = json.loads(run(args, capsys)[1])
    for r in a + b:
        r.pop("ms", None)
    assert a == b and len(a) == 4


def test_parsers():
    assert parse_ints("3..5,9") == (3, 4, 5, 9)
    assert parse_policy("sample:4") == "sample:4" and parse_policy("1,2") == [1, 2]
    assert resolve_ids(["mt6,sv2"]) == ("MT6_EVEN", "MT6_ODD", "SV2")
    with pytest.raises(UsageError):
        parse_ints("a..b")
    with pytest.raises(UsageError):
        parse_policy("sample:x")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hyperchar", "count", "--p", "7", "--d", "3", "--lambda", "2"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "projective=" in r.stdout
