import json

from ndglie.report import BUDGET, VerificationReport


def test_exit_codes():
    r = VerificationReport()
    r.add("a", "claim", 1, 1)
    assert r.exit_code() == 0
    r.add("b", "slow claim", True, None, ok=BUDGET)
    assert r.exit_code() == 2
    r.add("c", "false claim", 1, 2)
    assert r.exit_code() == 1


def test_json_schema():
    r = VerificationReport()
    r.add("x/y", "claim", (4, 2, 0), (4, 2, 0))
    (entry,) = json.loads(r.to_json())
    assert set(entry) == {"id", "anchor", "expected", "computed", "status"}
    assert entry["expected"] == [4, 2, 0] and entry["status"] == "pass"


def test_sorting_is_order_independent():
    a, b = VerificationReport(), VerificationReport()
    a.add("2", "", 1, 1)
    a.add("1", "", 1, 1)
    b.add("1", "", 1, 1)
    b.add("2", "", 1, 1)
    assert a.sorted().to_json() == b.sorted().to_json()
