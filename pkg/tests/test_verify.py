from quasicap.verify import DISCREPANCY, FAIL, PASS, Claim, report_json, run_claims


def test_no_failures_and_expected_discrepancies():
    claims = run_claims(seed=42)
    assert all(c.verdict in (PASS, DISCREPANCY) for c in claims)
    flagged = [c.label for c in claims if c.verdict == DISCREPANCY]
    for fragment in ("Eq. 29", "Eq. 59 printed matrix", "Eq. 80", "Eq. 18", "Eq. 28", "Eq. 66", "entanglement breaking"):
        assert any(fragment in label for label in flagged), fragment


def test_seed_independent_verdicts():
    assert [c.verdict for c in run_claims(1)] == [c.verdict for c in run_claims(2)]


def test_line_format():
    assert Claim("x", PASS).line() == "x: PASS"
    assert Claim("x", DISCREPANCY, delta=0.00138).line() == "x: DISCREPANCY(0.0014)"
    assert Claim("x", FAIL, delta=1.0).line() == "x: FAIL"


def test_report_summary():
    report = report_json([Claim("a", PASS), Claim("b", FAIL)])
    assert report["summary"] == {PASS: 1, FAIL: 1, DISCREPANCY: 0}
    assert not report["ok"]
    assert report["claims"][1]["line"] == "b: FAIL"
