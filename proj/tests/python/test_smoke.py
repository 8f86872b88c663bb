import json
from fractions import Fraction

import pytest

import cenbm

SQUARE = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
DELTA0 = [(1, Fraction(1, 2)), (-1, Fraction(1, 2)), (0, -1)]


def test_version():
    assert cenbm.__version__.count(".") == 2


def test_certify_and_replay(tmp_path):
    ledger = cenbm.certify()
    assert ledger["verdict"] == "pass"
    assert [e["name"] for e in ledger["entries"]] == [
        "witness", "case1_cover", "case2_cover", "subcase_1_2", "subcase_2_2"]
    assert cenbm.replay(ledger)["verdict"] == "pass"

    path = tmp_path / "ledger.json"
    path.write_text(json.dumps(ledger))
    assert cenbm.replay(path)["verdict"] == "pass"


def test_tampered_ledger_fails_replay():
    ledger = cenbm.certify(tamper_case1=True)
    assert ledger["verdict"] == "fail"
    report = cenbm.replay(ledger)
    assert report["verdict"] == "fail"
    assert report["first_failure"].startswith("entries[1].certificate")


def test_corrupted_rational_fails_at_step():
    ledger = cenbm.certify()
    ledger["entries"][0]["certificate"]["steps"][2]["value"] = "5/3"
    report = cenbm.replay(ledger)
    assert report["first_failure"] == "entries[0].certificate.steps[2].value"


def test_empty_file_is_a_parse_error(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text("")
    with pytest.raises(RuntimeError, match="parse error"):
        cenbm.replay(path)


def test_exact_gauges():
    assert cenbm.gauge_factor(SQUARE, DELTA0) == Fraction(5, 2)
    second = [(1, "1/5"), ("-4/5", "4/5"), ("-1/5", -1)]
    assert cenbm.gauge_factor(SQUARE, second) == Fraction(5, 2)
    assert cenbm.gauge_factor(SQUARE, [(1, 1), (-1, 0), (0, -1)]) == 3
    assert cenbm.polygon_centroid(DELTA0) == (0, 0)


def test_invalid_polygon_raises_value_error():
    with pytest.raises(ValueError):
        cenbm.gauge_factor(SQUARE, [(0, 0), (1, 0), (2, 0)])
    with pytest.raises(TypeError):
        cenbm.gauge_factor(SQUARE, [(0.5, 0), (1, 0), (0, 1)])


def test_estimator_and_oracle():
    est = cenbm.estimate_distance(SQUARE, [(0, 0), (1, 0), (0, 1)])
    assert 2.495 <= est["lambda_hat"] <= 2.505
    assert est["estimate_kind"] == "upper_bound"
    oracle = cenbm.grid_oracle(4)
    assert oracle["min_gauge"] == "5/2"


def test_extensions(tmp_path):
    assert cenbm.claim_check([(1, 1), (-1, 0), (0, -1)])["verdict"] == "pass"
    assert Fraction(cenbm.claim_scan(SQUARE, 4)["max_gauge"]) == 3
    assert Fraction(cenbm.conjecture_scan([(0, 0), (6, 0), (0, 6)], 2)["max_gauge"]) == 4
    cube = cenbm.cube_simplex_check()
    assert cube["verdict"] == "pass"
    assert cube["steps"][-1]["value"] == "3/1"
    paths = cenbm.emit_figures(tmp_path / "figs")
    assert len(paths) == 6
    assert 'data-x="1/5" data-y="-1/5"' in (tmp_path / "figs" / "fig4.svg").read_text()
