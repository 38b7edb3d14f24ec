"""Published-value audit: agreement is PASS, disagreement is a FLAG."""

import json

from crsphere import audit


def test_audit_structure_and_verdicts():
    entries = audit.run_audit()
    by_name = {e.name: e for e in entries}
    assert all(e.verdict in ("PASS", "FLAG") for e in entries)
    # the printed bending closed forms match the oracle for both kinds
    assert by_name["kappa first(-5/6, 0.47343)"].verdict == "PASS"
    assert by_name["kappa second(-5/7, 0.7)"].verdict == "PASS"
    # the printed first-kind twist disagrees and must be flagged, not fixed
    tau_first = by_name["tau first(-5/6, 0.47343)"]
    assert tau_first.verdict == "FLAG"
    assert tau_first.oracle != tau_first.published
    assert "factor 3" in tau_first.note
    # the caption strain agrees to the quoted precision
    assert by_name["fig7 strain"].verdict == "PASS"
    # the printed critical-parameter formula is out of range and flagged
    assert by_name["critical rho(-5/7)"].verdict == "FLAG"
    # the numeric critical parameter satisfies the published polynomial
    assert by_name["quartic residual at rho*"].verdict == "PASS"


def test_report_json_is_machine_readable():
    report = json.loads(audit.report_json())
    assert isinstance(report, list) and report
    for item in report:
        assert {"name", "published", "oracle", "delta", "verdict", "note"} <= set(item)
