import json

from mirrorqm.report import CheckReport, judged, render_report


def test_empty_json_is_brackets():
    assert render_report([], "json") == b"[]"


def test_single_text_line():
    out = render_report([judged("x.y", "H Theta = -Theta H", 0.0)], "text").decode()
    assert out.count("\n") == 1
    assert "pass" in out and "H Theta = -Theta H" in out


def test_json_keys_in_field_order_and_utf8():
    r = CheckReport("a.b", "Δ anchor", "flagged", 1.5, "note")
    raw = render_report([r], "json")
    assert "Δ".encode() in raw
    obj = json.loads(raw)[0]
    assert list(obj) == ["check_id", "paper_anchor", "status", "max_abs_error", "convention_notes"]


def test_judged_thresholds():
    assert judged("a", "b", 1e-11, 1e-10).status == "pass"
    assert judged("a", "b", 1e-9, 1e-10).status == "fail"
    assert judged("a", "b", 5.0, ok=True).status == "pass"
